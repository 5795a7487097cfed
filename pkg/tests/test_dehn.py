import pytest
from hypothesis import given, strategies as st

from groupgeom.dehn import (
    dehn_reduce,
    find_majority_subword,
    verify_dehn_presentation,
    zz_normal_form,
)
from groupgeom.words import (
    EMPTY,
    free_reduce,
    parse_word,
    standard_presentation,
    symmetrize,
)

ZZ = standard_presentation("zz")
F2 = standard_presentation("free", 2)
SURF2 = standard_presentation("surface", 2)


def test_find_majority_surface_prefix():
    w = parse_word("abABc", SURF2)
    step = find_majority_subword(w, symmetrize(SURF2))
    assert step.position == 0
    assert step.matched_length == 5
    assert step.relator == parse_word("abABcdCD", SURF2)
    assert step.replacement == parse_word("dcD", SURF2)


def test_find_majority_absent_on_square_word():
    w = parse_word("aabbAABB", ZZ)
    assert find_majority_subword(w, symmetrize(ZZ)) is None


def test_find_majority_empty_word():
    assert find_majority_subword(EMPTY, symmetrize(ZZ)) is None


def test_find_majority_leftmost_and_longest():
    # two candidate matches; position 1 comes first
    w = parse_word("aabA", ZZ)
    step = find_majority_subword(w, symmetrize(ZZ))
    assert step.position == 1
    assert step.matched_length == 3


def test_dehn_reduce_relator_itself():
    out, trace = dehn_reduce(SURF2, parse_word("abABcdCD", SURF2))
    assert out == EMPTY
    assert trace.step_count == 1


def test_dehn_reduce_majority_split():
    out, trace = dehn_reduce(SURF2, parse_word("abABc", SURF2))
    assert out == parse_word("dcD", SURF2)
    assert trace.step_count == 1


def test_dehn_reduce_stuck_on_square():
    word = parse_word("aabbAABB", ZZ)
    out, trace = dehn_reduce(ZZ, word)
    assert out == word
    assert trace.step_count == 0


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=20).map(tuple))
def test_dehn_reduce_on_free_presentation_is_free_reduction(word):
    out, trace = dehn_reduce(F2, word)
    assert out == free_reduce(word)
    assert trace.step_count == 0


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 4, -4]), max_size=18).map(tuple))
def test_dehn_reduce_shortens_and_is_deterministic(word):
    out1, trace1 = dehn_reduce(SURF2, word)
    out2, trace2 = dehn_reduce(SURF2, word)
    assert (out1, trace1) == (out2, trace2)
    assert len(out1) <= len(word)
    assert trace1.step_count <= len(word)
    assert find_majority_subword(out1, symmetrize(SURF2)) is None


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=16).map(tuple))
def test_dehn_reduce_preserves_zz_element(word):
    out, _ = dehn_reduce(ZZ, word)
    assert zz_normal_form(out)[:2] == zz_normal_form(word)[:2]


def test_zz_normal_form_examples():
    assert zz_normal_form(parse_word("aaabb", ZZ)) == (3, 2, 0)
    assert zz_normal_form(parse_word("ababa", ZZ)) == (3, 2, 3)
    assert zz_normal_form(parse_word("bbaa", ZZ)) == (2, 2, 4)
    assert zz_normal_form(EMPTY) == (0, 0, 0)


def test_zz_normal_form_rejects_foreign_letters():
    with pytest.raises(ValueError):
        zz_normal_form((1, 3))


def _inversions(word):
    # brute-force (b-type, a-type) ordered pair count
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if abs(word[i]) == 2 and abs(word[j]) == 1
    )


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=30).map(tuple))
def test_zz_swaps_match_bruteforce_inversions(word):
    assert zz_normal_form(word)[2] == _inversions(word)


def test_verify_surface_genus2():
    verdict = verify_dehn_presentation(SURF2, 2, 12)
    assert verdict.holds
    assert verdict.words_checked > 0


def test_verify_zz_fails_with_square_witness():
    verdict = verify_dehn_presentation(ZZ, 2, 8)
    assert not verdict.holds
    assert verdict.counterexample == parse_word("aabbAABB", ZZ)
    out, _ = dehn_reduce(ZZ, verdict.counterexample)
    assert out != EMPTY


def test_verify_free_checks_nothing():
    verdict = verify_dehn_presentation(F2, 1, 8)
    assert verdict.holds
    assert verdict.words_checked == 0


def test_verify_rejects_zero_insertions():
    with pytest.raises(ValueError):
        verify_dehn_presentation(ZZ, 0, 8)


def test_dehn_reduce_element_confirmed_by_generic_oracle():
    from groupgeom.oracle import OracleBudget, Tristate, words_equal
    from groupgeom.words import Presentation

    generic = Presentation(("a", "b"), ((1, 2, -1, -2),))
    budget = OracleBudget(10, 30)
    for text in ("abABab", "aabbAABB", "babA", "aabABAbA", "bbaaBBAA"):
        word = parse_word(text, ZZ)
        out, _ = dehn_reduce(ZZ, word)
        assert words_equal(generic, word, out, budget) is Tristate.EQUAL


@given(st.sampled_from(["zz", "surface"]), st.integers(0, 2**32 - 1))
def test_scan_resume_matches_always_from_zero(family, seed):
    # The back-up-and-resume scan must behave exactly like rescanning the
    # whole word after every replacement.
    import random as _random

    from groupgeom.dehn import _splice_reduce
    from groupgeom.words import free_reduce_with_count

    pres = ZZ if family == "zz" else SURF2
    rng = _random.Random(seed)
    letters = pres.letters()
    word = tuple(rng.choice(letters) for _ in range(rng.randrange(0, 28)))

    relators = symmetrize(pres)
    w, cancels = free_reduce_with_count(word)
    steps = []
    while True:
        step = find_majority_subword(w, relators, 0)
        if step is None:
            break
        w, _, c = _splice_reduce(w, step.position, step.matched_length, step.replacement)
        cancels += c
        steps.append(step)

    out, trace = dehn_reduce(pres, word)
    assert out == w
    assert trace.steps == tuple(steps)
    assert trace.free_cancellations == cancels
