"""Prompt templates for keyword extraction, clue generation, validation,
clue-from-keyword generation, and acceptability judging.

The six it/en extraction, generation, and check templates are fixed text
and must not be edited; downstream parsers are anchored on their output
format lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..core import CruxError, Language


class UnknownTemplate(CruxError):
    pass


class UnboundSlot(CruxError):
    pass


@dataclass(frozen=True)
class PromptTemplate:
    id: str
    body: str
    language: Language

    @property
    def slots(self) -> set[str]:
        return set(re.findall(r"\{(\w+)\}", self.body))


KW_IT = """
    Obiettivo: Il tuo compito è estrarre delle parole chiave, descritte nel testo proposto. Le parole chiave estratte saranno utilizzate per creare brevi definizioni di cruciverba riguardanti il testo da cui sono estratte le parole chiave. Le definizioni saranno d'aiuto per trovare la soluzione corrispondente e completare il cruciverba.

    Completa l'obiettivo attraverso i seguenti passaggi:

    1- Estrai le parole chiave più importanti del testo.

    2- Controlla le parole chiave: controlla se le parole chiave sono descritte e definite nel testo o non sono descritte e definite nel testo.

    3- Parole chiave finali : sulla base del passaggio precedente, rimuovi tutte le parole chiave che non sono definite nel testo.



    Utilizza il seguente formato di output:

    Parole chiave: <Parole chiave finali>


    Text: ```{text}```
    """

CLUE_IT = """
    Genera brevi definizioni di cruciverba per ciascuna delle parole chiave fornite: {keywords} sulla base del seguente testo: {text}.

    Completa l'obiettivo attraverso i seguenti passaggi:

    1- Per ciascuna delle parole chiave fornite, trova il passaggio del testo contentente l'informazione riguardante la parola chiave.
    2- Genera brevi definizioni: per tutte le parole chiave genera brevi definizioni riguardanti il testo. Nella definizione non deve essere presente la parola chiave.
    3- Non usare virgolette e apostrofi nell'output.

    Segui questo esempio per completare l'obiettivo:
    "Testo: La scienza è un sistema di conoscenze ottenute attraverso unattività di ricerca prevalentemente organizzata con procedimenti metodici e rigorosi, coniugando la sperimentazione con ragionamenti logici condotti a partire da un insieme di assiomi, tipici delle discipline formali. Uno dei primi esempi del loro utilizzo lo si può trovare negli Elementi di Euclide, mentre il metodo sperimentale, tipico della scienza moderna, venne introdotto da Galileo Galilei, e prevede di controllare continuamente che le osservazioni sperimentali siano coerenti con le ipotesi e i ragionamenti svolti.
    Parole chiave: conoscenze, ricerca, rigorosi, assiomi, ipotesi, Galileo
    Definizioni:
    Conoscenze: informazioni acquisite tramite ricerca organizzata con procedimenti metodici e rigorosi.
    Ricerca: attività organizzata prevalentemente con procedimenti metodici e rigorosi finalizzata allottenimento di conoscenze.
    Rigorosi: esatti e precisi nello svolgimento delle azioni.
    Assiomi: un insieme di verità accettate come base dei ragionamenti logici.
    Ipotesi: assunte per comprendere le osservazioni sperimentali e testare le conoscenze
    Galileo : egli introdusse il metodo sperimentale nel processo di scienza moderna.
    "


    """

CHECK_IT = """


    Obiettivo: il tuo obiettivo è controllare se il contenuto di ogni definizione è presente o no nel testo proposto Per ciascuna definizione scrivi "True" se il contenuto è presente nel testo e "False" se il contenuto non è contenuto nel testo.


    Sentences: ```{clue}```

    Text: ```{text}```
    """

KW_EN = """

    Objective: Your task is to extract described keywords in Italian from a given Italian text. These keywords will be used to create Italian crossword short definitions based on the extracted text. The clues will help Italian solvers to find the corresponding answers and complete the puzzle grid.

    Please follow these steps to achieve the objective:

    1- Extract the most important Italian keywords in the Italian text.

    2- Check keywords: check if the Italian keywords are well Explained in the given Italian text or not.

    3- Final keywords : Remove all the Italian keywords which are not well defined in the Italian text based on the last step.


    Use the following output format:

    Keywords: <Final keywords>


    Text: ```{text}```
    """

CLUE_EN = """


    Generate short crossword definitions in Italian for each provided Italian keyword: {keywords} based on the following Italian text: {text}.

    Follow these steps to achieve the objective:

    1- For each provided Italian keyword detect the part of the Italian text which contains the keyword information.
    2- Generate short definitions in Italian: For all the Italian keywords generate short definitions in Italian based on the Italian text, and place the correspondent keyword after each generated definition. Make sure that the Italian keyword is not present in the correspondent definition.
    3- Do not use quotation marks and apostrophes in the output.

    Follow this example to complete the task:
    "Text: La scienza è un sistema di conoscenze ottenute attraverso unattività di ricerca prevalentemente organizzata con procedimenti metodici e rigorosi, coniugando la sperimentazione con ragionamenti logici condotti a partire da un insieme di assiomi, tipici delle discipline formali. Uno dei primi esempi del loro utilizzo lo si può trovare negli Elementi di Euclide, mentre il metodo sperimentale, tipico della scienza moderna, venne introdotto da Galileo Galilei, e prevede di controllare continuamente che le osservazioni sperimentali siano coerenti con le ipotesi e i ragionamenti svolti.
    Keywords: conoscenze, ricerca, rigorosi, assiomi, ipotesi, Galileo
    Clues:
    Conoscenze: informazioni acquisite tramite ricerca organizzata con procedimenti metodici e rigorosi.
    Ricerca: attività organizzata prevalentemente con procedimenti metodici e rigorosi finalizzata allottenimento di conoscenze.
    Rigorosi: esatti e precisi nello svolgimento delle azioni.
    Assiomi: un insieme di verità accettate come base dei ragionamenti logici.
    Ipotesi: assunte per comprendere le osservazioni sperimentali e testare le conoscenze
    Galileo : egli introdusse il metodo sperimentale nel processo di scienza moderna.
    "

    """

CHECK_EN = """


    Objective: Your objective is to check whether each given Italian Sentence content is present in the provided Italian text or not. Print "True" if it is present in the provided Italian text and "False" if it is not present in the provided Italian text.

    Sentences: ```{clue}```

    Text: ```{text}```
    """

# Few-shot clue-from-keyword generator. Stands in for a fine-tuned
# generator behind the same interface: worked examples, then the target
# keyword. Swapping in a real fine-tuned model is a model_id change only.
PATHB_GEN = """
    Genera {n} brevi definizioni di cruciverba in italiano per la parola data. Ogni definizione su una riga separata, nel formato "parola: definizione". La parola non deve comparire nella definizione. Non usare virgolette e apostrofi nell'output.

    Esempi:
{examples}

    Parola: {keyword}
    """

# Zero-shot acceptability judge built on the five validation guideline
# criteria; the response must contain a single ACCEPT or REJECT token.
PATHB_JUDGE = """
    You are evaluating whether a crossword clue-answer pair is acceptable. Apply the following criteria:

    Relevance and Cohesion: the clue must have a meaningful connection to the answer, providing ample context or clever hints that lead solvers to the intended solution; the answer must be directly tied to the clue.

    Wordplay and Inventiveness: good clues encourage lateral thinking, incorporate witty twists, or conceal intriguing meanings.

    Clarity and Precision: the clue must be clear and unambiguous, with a single correct solution aligned with its intended meaning.

    Grammar and Language: both clue and answer must be grammatically correct, coherent, and appropriately complex for a crossword puzzle.

    General Knowledge and Fairness: the clue should rest on general knowledge or commonly known facts, avoiding overly obscure or specialized references.

    Pair to evaluate:
    Answer: {answer}
    Clue: {clue}

    Reply with exactly one token, ACCEPT or REJECT, followed by one line explaining why.
    """

TEMPLATES: dict[str, PromptTemplate] = {
    t.id: t
    for t in [
        PromptTemplate("kw_it", KW_IT, "it"),
        PromptTemplate("kw_en", KW_EN, "en"),
        PromptTemplate("clue_it", CLUE_IT, "it"),
        PromptTemplate("clue_en", CLUE_EN, "en"),
        PromptTemplate("check_it", CHECK_IT, "it"),
        PromptTemplate("check_en", CHECK_EN, "en"),
        PromptTemplate("pathb_gen", PATHB_GEN, "it"),
        PromptTemplate("pathb_judge", PATHB_JUDGE, "en"),
    ]
}


def render(template_id: str, bound_inputs: dict[str, str]) -> str:
    """Substitute slot values into a template; no other mutation."""
    template = TEMPLATES.get(template_id)
    if template is None:
        raise UnknownTemplate(template_id)
    missing = template.slots - set(bound_inputs)
    if missing:
        raise UnboundSlot(f"{template_id}: unbound {sorted(missing)}")
    text = template.body
    for slot in template.slots:
        text = text.replace("{" + slot + "}", str(bound_inputs[slot]))
    return text
