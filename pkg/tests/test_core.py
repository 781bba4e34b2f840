import random

import pytest
from hypothesis import given, strategies as st

from crux.core import (
    EmptyAnswer,
    EmptyInput,
    LengthMismatch,
    UnmappableCharacter,
    clue_contains_answer,
    compute_metrics,
    make_pair,
    normalize_answer,
)


class TestNormalizeAnswer:
    def test_uppercases(self):
        assert normalize_answer("soy") == "SOY"

    def test_idempotent_on_normal_input(self):
        assert normalize_answer("SOY") == "SOY"

    def test_folds_accents(self):
        assert normalize_answer("perché") == "PERCHE"
        assert normalize_answer("città") == "CITTA"
        assert normalize_answer("più") == "PIU"

    def test_strips_separators(self):
        assert normalize_answer("metodo sperimentale") == "METODOSPERIMENTALE"
        assert normalize_answer("l'aquila") == "LAQUILA"
        assert normalize_answer("week-end") == "WEEKEND"

    def test_empty_after_normalization(self):
        with pytest.raises(EmptyAnswer):
            normalize_answer("  - ' ")

    def test_digit_is_unmappable(self):
        with pytest.raises(UnmappableCharacter):
            normalize_answer("route 66")

    answers = st.text(
        alphabet="abcdefghijklmnopqrstuvwxyzàèéìòù ABCZ-'",
        min_size=1,
        max_size=20,
    )

    @given(answers)
    def test_idempotence(self, raw):
        try:
            once = normalize_answer(raw)
        except (EmptyAnswer, UnmappableCharacter):
            return
        assert normalize_answer(once) == once
        assert once.isupper()
        assert all("A" <= c <= "Z" for c in once)


class TestClueContainsAnswer:
    def test_direct_containment(self):
        assert clue_contains_answer("la ricerca è fondamentale", "RICERCA")

    def test_accent_insensitive(self):
        assert clue_contains_answer("una città famosa", "CITTA")

    def test_no_containment(self):
        assert not clue_contains_answer("il desiderio di sapere", "CURIOSITA")


class TestMakePair:
    def test_derives_grid_form(self):
        pair = make_pair("An exotic legume", "soy", "corpus", "en")
        assert pair.answer_grid == "SOY"
        assert pair.answer_display == "soy"

    def test_rejects_inconsistent_grid_form(self):
        from crux.core import ClueAnswerPair

        with pytest.raises(ValueError):
            ClueAnswerPair("clue", "soy", "WRONG", "corpus", "en")


class TestComputeMetrics:
    def test_perfect_classifier(self):
        preds = [True, False, True, True]
        m = compute_metrics(preds, preds)
        assert m.accuracy == 1.0
        assert m.f1 == 1.0

    def test_hand_counted_fixture(self):
        # tp=3, fp=1, tn=4, fn=2
        preds = [True] * 3 + [True] + [False] * 4 + [False] * 2
        labels = [True] * 3 + [False] + [False] * 4 + [True] * 2
        m = compute_metrics(preds, labels)
        assert m.accuracy == pytest.approx(0.7)
        assert m.precision == pytest.approx(0.75)
        assert m.recall == pytest.approx(0.6)
        assert m.f1 == pytest.approx(0.6667, abs=1e-4)
        assert (m.tp, m.fp, m.tn, m.fn) == (3, 1, 4, 2)

    def test_degenerate_denominators(self):
        m = compute_metrics([False, False], [True, True])
        assert m.precision == 0.0
        assert m.recall == 0.0
        assert m.f1 == 0.0

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compute_metrics([True], [True, False])

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            compute_metrics([], [])

    @given(st.lists(st.tuples(st.booleans(), st.booleans()), min_size=1, max_size=50),
           st.integers())
    def test_permutation_invariance(self, items, seed):
        shuffled = list(items)
        random.Random(seed).shuffle(shuffled)
        a = compute_metrics([p for p, _ in items], [l for _, l in items])
        b = compute_metrics([p for p, _ in shuffled], [l for _, l in shuffled])
        assert a == b

    def test_f1_identity_on_random_matrices(self):
        rng = random.Random(7)
        for _ in range(1000):
            tp, fp, tn, fn = (rng.randint(0, 20) for _ in range(4))
            if tp + fp + tn + fn == 0:
                continue
            preds = [True] * (tp + fp) + [False] * (tn + fn)
            labels = [True] * tp + [False] * fp + [False] * tn + [True] * fn
            m = compute_metrics(preds, labels)
            if m.precision + m.recall > 0:
                expected = 2 * m.precision * m.recall / (m.precision + m.recall)
                assert m.f1 == pytest.approx(expected, abs=1e-12)
            else:
                assert m.f1 == 0.0
