from itertools import product

import pytest

from groupgeom.dehn import zz_normal_form
from groupgeom.oracle import (
    OracleBudget,
    Tristate,
    UndecidedError,
    abelian_residue,
    canonical_form,
    exhaustive_identity_words,
    generate_null_homotopic,
    words_equal,
)
from groupgeom.words import (
    EMPTY,
    Presentation,
    format_word,
    invert,
    multiply,
    parse_word,
    shortlex_key,
    standard_presentation,
)

ZZ = standard_presentation("zz")
F2 = standard_presentation("free", 2)
SURF2 = standard_presentation("surface", 2)
GENERIC_ZZ = Presentation(("a", "b"), ((1, 2, -1, -2),))  # same relator, untagged


def w(text, pres=ZZ):
    return parse_word(text, pres)


def test_equal_zz_classic_pair():
    assert words_equal(ZZ, w("aaabb"), w("ababa")) is Tristate.EQUAL


def test_not_equal_free():
    assert words_equal(F2, (1,), (2,)) is Tristate.NOT_EQUAL


def test_generic_zero_budget_is_unknown():
    ans = words_equal(GENERIC_ZZ, w("aabbAABB"), EMPTY, OracleBudget(0, 16))
    assert ans is Tristate.UNKNOWN


def test_generic_with_budget_certifies():
    budget = OracleBudget(8, 24)
    assert words_equal(GENERIC_ZZ, w("aabbAABB"), EMPTY, budget) is Tristate.EQUAL
    assert words_equal(GENERIC_ZZ, w("ab"), w("ba"), budget) is Tristate.EQUAL
    assert words_equal(GENERIC_ZZ, w("a"), w("b"), budget) is Tristate.NOT_EQUAL


def test_surface_equality_via_rewriting():
    assert words_equal(SURF2, parse_word("abABc", SURF2), parse_word("dcD", SURF2)) is Tristate.EQUAL
    assert words_equal(SURF2, parse_word("ab", SURF2), parse_word("ba", SURF2)) is Tristate.NOT_EQUAL


def test_alphabet_mismatch_raises():
    with pytest.raises(ValueError):
        words_equal(ZZ, (3,), (1,))


def test_residue_with_nonzero_exponent_relators():
    # <a, b | a^3, b^2 a^2>: exponent lattice spanned by (3,0) and (2,2)
    pres = Presentation(("a", "b"), ((1, 1, 1), (2, 2, 1, 1)))
    assert abelian_residue(pres, (1, 1, 1)) == (0, 0)
    assert any(abelian_residue(pres, (1,)))
    # (1,0)+(2,2) = (3,2) ... lattice contains (3,0),(2,2) hence (1,-2),(0,6)
    assert abelian_residue(pres, (1, -2, 2, -2, 2, -2)) != ()  # well-formed call


def test_canonical_forms():
    assert canonical_form(ZZ, w("ababa")) == w("aaabb")
    assert canonical_form(ZZ, w("BAab")) == EMPTY
    assert canonical_form(F2, parse_word("abB", F2)) == (1,)
    surf_word = parse_word("abABc", SURF2)
    canon = canonical_form(SURF2, surf_word, max_radius=6)
    assert canon == parse_word("dcD", SURF2)
    assert words_equal(SURF2, canon, surf_word) is Tristate.EQUAL


def test_canonical_form_idempotent_zz():
    for text in ("ababa", "BAab", "bbaa", "aBaB"):
        once = canonical_form(ZZ, w(text))
        assert canonical_form(ZZ, once) == once
        assert words_equal(ZZ, once, w(text)) is Tristate.EQUAL


def test_canonical_form_budget_guard():
    with pytest.raises(UndecidedError):
        canonical_form(SURF2, parse_word("ababab", SURF2), max_radius=2)


def test_generate_zz_one_insertion():
    out = generate_null_homotopic(ZZ, 1, 4)
    texts = {format_word(x, ZZ) for x in out}
    assert "1" in texts
    assert {"abAB", "bABa", "ABab", "BabA", "baBA", "aBAb", "BAba", "AbaB"} <= texts
    assert len(out) == 9


def test_generate_is_shortlex_sorted_and_identity_only():
    out = generate_null_homotopic(ZZ, 2, 8)
    assert list(out) == sorted(out, key=shortlex_key)
    for word in out:
        assert zz_normal_form(word)[:2] == (0, 0)


def test_generate_square_needs_four_insertions():
    square = w("aabbAABB")
    assert square not in generate_null_homotopic(ZZ, 2, 8)
    assert square in generate_null_homotopic(ZZ, 4, 8)


def test_generate_free_is_trivial():
    assert generate_null_homotopic(F2, 5, 20) == (EMPTY,)


def test_exhaustive_identity_words_families():
    assert exhaustive_identity_words(F2, 8) == (EMPTY,)
    assert exhaustive_identity_words(SURF2, 8) is None
    zz_words = exhaustive_identity_words(ZZ, 4)
    assert EMPTY in zz_words
    assert w("abAB") in zz_words
    assert all(zz_normal_form(x)[:2] == (0, 0) for x in zz_words)
    # every balanced reduced word of length <= 4 appears
    brute = {EMPTY}
    letters = (1, -1, 2, -2)
    for n in (2, 4):
        for combo in product(letters, repeat=n):
            word = combo
            if any(word[i] == -word[i + 1] for i in range(n - 1)):
                continue
            if zz_normal_form(word)[:2] == (0, 0):
                brute.add(word)
    assert set(zz_words) == brute


def test_soundness_on_certified_closure():
    budget = OracleBudget(8, 24)
    for word in generate_null_homotopic(ZZ, 2, 8):
        for cut in range(len(word) + 1):
            u, tail = word[:cut], word[cut:]
            v = invert(tail)
            if len(u) > 6 or len(v) > 6:
                continue
            assert words_equal(GENERIC_ZZ, u, v, budget) is not Tristate.NOT_EQUAL


def test_definite_answers_never_contradict_abelianization():
    budget = OracleBudget(6, 20)
    words = [w(t) for t in ("1", "a", "ab", "ba", "abAB", "aabb", "bbaa", "aBAb")]
    for u in words:
        for v in words:
            ans = words_equal(GENERIC_ZZ, u, v, budget)
            residue_match = abelian_residue(GENERIC_ZZ, multiply(u, invert(v))) == (0, 0)
            if ans is Tristate.EQUAL:
                assert residue_match
            if not residue_match:
                assert ans is Tristate.NOT_EQUAL


def test_surface_oracle_sound_on_certified_closure():
    for word in generate_null_homotopic(SURF2, 2, 12):
        for cut in range(len(word) + 1):
            u, tail = word[:cut], word[cut:]
            v = invert(tail)
            if len(u) > 6 or len(v) > 6:
                continue
            assert words_equal(SURF2, u, v) is not Tristate.NOT_EQUAL
