from itertools import product

import pytest

from cyorbits.families import DELTA2, DELTA4, family
from cyorbits.screening import Verdict, conjecture_screen, reference_lists
from cyorbits.words import IDENTITY_WORD, Word, apply_word, word_search

QUINTIC = family(5, 5)


class TestReferenceLists:
    def test_sizes(self):
        torus2, torus5, sphere2, sphere5 = reference_lists()
        assert (len(torus2), len(torus5), len(sphere2), len(sphere5)) == (5, 25, 10, 5)

    def test_mod2_lists_partition_nonzero_residues(self):
        torus2, _, sphere2, _ = reference_lists()
        nonzero = {v for v in product((0, 1), repeat=4) if any(v)}
        assert torus2 | sphere2 == nonzero
        assert not (torus2 & sphere2)

    def test_golden_drift_is_fatal(self, monkeypatch):
        import cyorbits.screening as screening

        wrong = (frozenset({(1, 1, 1, 1)}),) * 4
        monkeypatch.setattr(screening, "quintic_reference_lists", lambda: wrong)
        screening.reference_lists.cache_clear()
        try:
            with pytest.raises(RuntimeError, match="golden"):
                screening.reference_lists()
        finally:
            monkeypatch.undo()
            screening.reference_lists.cache_clear()


class TestConjectureScreen:
    def test_torus_seed(self):
        assert conjecture_screen(DELTA2) is Verdict.TORUS_CANDIDATE

    def test_sphere_seed(self):
        assert conjecture_screen(DELTA4) is Verdict.SPHERE_CANDIDATE

    def test_zero(self):
        assert conjecture_screen((0, 0, 0, 0)) is Verdict.ZERO

    def test_not_primitive(self):
        assert conjecture_screen((2, 0, 0, 0)) is Verdict.NOT_PRIMITIVE

    def test_neither(self):
        # (1,0,0,0) is in the sphere list mod 2 but not mod 5
        assert conjecture_screen((1, 0, 0, 0)) is Verdict.NEITHER

    def test_all_ones_is_neither(self):
        assert conjecture_screen((1, 1, 1, 1)) is Verdict.NEITHER

    def test_torus_translate(self):
        assert conjecture_screen((0, 1, 0, 1)) is Verdict.TORUS_CANDIDATE

    def test_negative_entries(self):
        # -delta4 reduces into the sphere lists mod 2 and mod 5?  mod 2 it is
        # (0,0,0,1) which is listed; mod 5 it is (0,0,0,4) which is not.
        assert conjecture_screen((0, 0, 0, -1)) is Verdict.NEITHER

    def test_wrong_arity(self):
        with pytest.raises(ValueError):
            conjecture_screen((1, 0, 0))


class TestWord:
    def test_str_forms(self):
        assert str(Word((("M0", -1), ("M1", 2)))) == "M0^-1 M1^2"
        assert str(Word((("M1", 1),))) == "M1"
        assert str(IDENTITY_WORD) == "<empty>"

    def test_length(self):
        assert len(Word((("M0", -2), ("M1", 3)))) == 5
        assert len(IDENTITY_WORD) == 0

    def test_rejects_unreduced(self):
        with pytest.raises(ValueError):
            Word((("M0", 1), ("M0", 2)))
        with pytest.raises(ValueError):
            Word((("M1", 0),))
        with pytest.raises(ValueError):
            Word((("M2", 1),))


class TestWordSearch:
    def test_trivial_target(self):
        assert word_search(DELTA2, DELTA2, QUINTIC) == IDENTITY_WORD

    def test_single_transvection(self):
        word = word_search(DELTA2, (0, 1, 0, 1), QUINTIC)
        assert word == Word((("M1", 1),))

    def test_conjugated_step_recovered(self):
        target = apply_word(DELTA2, Word((("M0", -1), ("M1", 1), ("M0", 1))), QUINTIC)
        word = word_search(DELTA2, target, QUINTIC, max_len=3)
        assert word is not None and len(word) <= 3
        assert apply_word(DELTA2, word, QUINTIC) == target

    def test_search_finds_shortest(self):
        # reachable in one M1 step, so that is what comes back even with
        # a generous bound
        word = word_search(DELTA2, (0, 1, 0, 1), QUINTIC, max_len=8)
        assert len(word) == 1

    def test_unreachable_within_bounds(self):
        assert word_search(DELTA2, (9, 9, 9, 9), QUINTIC, max_len=2, max_abs_entry=100) is None

    def test_nonprimitive_target_unreachable(self):
        # the group preserves primitivity, so this can only ever be a miss
        assert word_search(DELTA2, (0, 2, 0, 0), QUINTIC, max_len=5, max_abs_entry=50) is None

    def test_entry_bound_validation(self):
        with pytest.raises(ValueError, match="max_abs_entry"):
            word_search(DELTA2, (0, 1000, 0, 0), QUINTIC, max_abs_entry=10)

    def test_longer_roundtrips(self):
        for factors in (
            (("M1", -1), ("M0", 2)),
            (("M0", 1), ("M1", 1), ("M0", -2)),
            (("M1", 2), ("M0", 1), ("M1", -1)),
        ):
            target = apply_word(DELTA4, Word(factors), QUINTIC)
            found = word_search(DELTA4, target, QUINTIC, max_len=6)
            assert found is not None
            assert len(found) <= len(Word(factors))
            assert apply_word(DELTA4, found, QUINTIC) == target
