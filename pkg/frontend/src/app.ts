import { ApiClient, RequestFailed } from "./api.js";
import { buildRenderModel } from "./gridRender.js";
import { SessionStore } from "./state.js";
import type { Puzzle, Session, SessionPair } from "./types.js";

const api = new ApiClient();
const store = new SessionStore(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function showError(message: string): void {
  const banner = el<HTMLDivElement>("error-banner");
  banner.textContent = message;
  banner.hidden = message === "";
}

function reportFailure(err: unknown): void {
  if (err instanceof RequestFailed) {
    showError(`${err.errorCode}: ${err.message}`);
  } else {
    showError(String(err));
  }
}

function renderPairRow(session: Session, pair: SessionPair): HTMLLIElement {
  const row = document.createElement("li");
  row.className = `pair status-${pair.status}`;

  const answer = document.createElement("strong");
  answer.textContent = pair.answer_display;
  row.appendChild(answer);

  const clue = document.createElement("span");
  clue.textContent = ` ${pair.edited_clue ?? pair.clue} `;
  row.appendChild(clue);

  const status = document.createElement("em");
  status.textContent = `[${pair.status}${pair.preferred ? ", preferred" : ""}]`;
  row.appendChild(status);

  const settled = pair.status === "accepted" || pair.status === "rejected";
  const actions: Array<[string, () => Promise<unknown>]> = [
    ["Accept", () => store.setStatus(pair.pair_id, "accepted")],
    ["Reject", () => store.setStatus(pair.pair_id, "rejected")],
    [
      "Edit",
      () => {
        const next = window.prompt("Edit clue", pair.edited_clue ?? pair.clue);
        if (next === null) {
          return Promise.resolve();
        }
        return store.editClue(pair.pair_id, next);
      },
    ],
    ["Prefer", () => store.togglePreferred(pair.pair_id)],
  ];
  for (const [label, action] of actions) {
    const button = document.createElement("button");
    button.textContent = label;
    button.disabled = settled && label !== "Prefer";
    button.addEventListener("click", () => {
      showError("");
      action().catch(reportFailure);
    });
    row.appendChild(button);
  }
  return row;
}

function renderSession(session: Session): void {
  el<HTMLElement>("review-screen").hidden = false;
  el<HTMLSpanElement>("session-id").textContent = session.session_id;
  const list = el<HTMLUListElement>("pair-list");
  list.replaceChildren(
    ...session.pairs.map((pair) => renderPairRow(session, pair))
  );
  const curated = store.curatedPairs().length;
  el<HTMLSpanElement>("curated-count").textContent = String(curated);
  el<HTMLButtonElement>("generate-button").disabled = curated < 2;
}

function renderPuzzle(puzzle: Puzzle): void {
  el<HTMLElement>("puzzle-screen").hidden = false;
  const model = buildRenderModel(puzzle);
  const table = el<HTMLTableElement>("grid");
  table.replaceChildren();
  for (const row of model.rows) {
    const tr = document.createElement("tr");
    for (const cell of row) {
      const td = document.createElement("td");
      td.className = cell.blocked ? "blocked" : "open";
      if (!cell.blocked) {
        if (cell.number !== null) {
          const sup = document.createElement("sup");
          sup.textContent = String(cell.number);
          td.appendChild(sup);
        }
        td.appendChild(document.createTextNode(cell.letter ?? ""));
      }
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  const clueList = (entries: typeof model.across) =>
    entries.map((e) => {
      const li = document.createElement("li");
      li.textContent = `${e.number}. ${e.clue} (${e.answer.length})`;
      return li;
    });
  el<HTMLOListElement>("across-clues").replaceChildren(
    ...clueList(model.across)
  );
  el<HTMLOListElement>("down-clues").replaceChildren(...clueList(model.down));
  const s = puzzle.score;
  el<HTMLSpanElement>("puzzle-score").textContent =
    `${s.score.toFixed(3)} (${s.fw} words, fill ${s.fr.toFixed(2)})`;
}

async function startFromText(): Promise<void> {
  const document_ = el<HTMLTextAreaElement>("intake-text").value;
  const lang = el<HTMLSelectElement>("intake-lang").value;
  const result = await api.pipelineText(document_, lang);
  store.load(result.session);
}

async function startFromKeywords(): Promise<void> {
  const raw = el<HTMLInputElement>("intake-keywords").value;
  const keywords = raw
    .split(",")
    .map((k) => k.trim())
    .filter((k) => k.length > 0);
  const lang = el<HTMLSelectElement>("intake-lang").value;
  const result = await api.pipelineKeywords(keywords, 3, lang);
  store.load(result.session);
}

async function generatePuzzle(): Promise<void> {
  const session = store.current;
  if (!session) {
    return;
  }
  const seed = Number(el<HTMLInputElement>("generate-seed").value) || 0;
  const minWords = Number(el<HTMLInputElement>("generate-min-words").value) || 2;
  const result = await api.generate(session.session_id, {
    min_words: minWords,
    seed,
  });
  await store.refresh(session.session_id);
  renderPuzzle(await api.getPuzzle(result.puzzle_id));
}

export function main(): void {
  store.subscribe(renderSession);
  const wire = (id: string, action: () => Promise<void>) => {
    el<HTMLButtonElement>(id).addEventListener("click", () => {
      showError("");
      action().catch(reportFailure);
    });
  };
  wire("intake-text-button", startFromText);
  wire("intake-keywords-button", startFromKeywords);
  wire("generate-button", generatePuzzle);
}

if (typeof document !== "undefined" && document.getElementById("intake-screen")) {
  main();
}
