"""Three-valued word equality, canonical forms, and identity-word generation.

Family-built presentations get exact strategies (normal forms for the
free and commuting families, greedy rewriting for surface groups, whose
reliability ``verify_dehn_presentation`` checks).  Arbitrary presentations
get a sound but incomplete strategy: an abelianized certificate for
"different" and a budgeted minimal-rewrite search for "equal", with
Unknown when the budget runs out.  A definite answer is never wrong.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .dehn import dehn_reduce, zz_normal_form
from .words import (
    EMPTY,
    Presentation,
    Word,
    free_reduce,
    invert,
    multiply,
    shortlex_key,
    symmetrize,
)


class Tristate(enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class OracleBudget:
    max_area: int = 8
    max_search_length: int = 32

    def __post_init__(self):
        if self.max_area < 0 or self.max_search_length < 0:
            raise ValueError("budgets must be nonnegative")


class UndecidedError(RuntimeError):
    """Raised where an Unknown answer would poison the surrounding result."""


def exponent_vector(word: Word, rank: int) -> tuple[int, ...]:
    out = [0] * rank
    for x in word:
        out[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(out)


@lru_cache(maxsize=None)
def _lattice_basis(presentation: Presentation):
    """Column-echelon basis (over the integers) of the relator exponent span."""
    rank = presentation.rank
    work = [list(exponent_vector(r, rank)) for r in presentation.relators]
    work = [c for c in work if any(c)]
    basis: list[tuple[int, tuple[int, ...]]] = []
    for coord in range(rank):
        while True:
            nz = [c for c in work if c[coord] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[coord]))
            piv = nz[0]
            for c in nz[1:]:
                q = c[coord] // piv[coord]
                for k in range(coord, rank):
                    c[k] -= q * piv[k]
        nz = [c for c in work if c[coord] != 0]
        if nz:
            basis.append((coord, tuple(nz[0])))
            work.remove(nz[0])
        work = [c for c in work if any(c)]
    return tuple(basis)


def abelian_residue(presentation: Presentation, word: Word) -> tuple[int, ...]:
    """Exponent vector reduced modulo the relator lattice.

    Equal group elements always share a residue, so a residue mismatch is
    a sound "different" certificate even when relators have nonzero
    exponent sums.
    """
    vec = list(exponent_vector(word, presentation.rank))
    for coord, b in _lattice_basis(presentation):
        q = vec[coord] // b[coord]
        if q:
            for k in range(coord, len(vec)):
                vec[k] -= q * b[k]
    return tuple(vec)


def words_equal(
    presentation: Presentation,
    u: Word,
    v: Word,
    budget: Optional[OracleBudget] = None,
) -> Tristate:
    """Decide whether two words name the same group element."""
    presentation.check_word(u)
    presentation.check_word(v)
    w = multiply(u, invert(v))
    if not w:
        return Tristate.EQUAL
    family = presentation.family
    if family == "free":
        return Tristate.NOT_EQUAL
    if family == "zz":
        i, j, _ = zz_normal_form(w)
        return Tristate.EQUAL if i == 0 and j == 0 else Tristate.NOT_EQUAL
    if family == "surface":
        reduced, _ = dehn_reduce(presentation, w)
        return Tristate.EQUAL if reduced == EMPTY else Tristate.NOT_EQUAL
    if budget is None:
        budget = OracleBudget()
    if any(abelian_residue(presentation, w)):
        return Tristate.NOT_EQUAL
    from .isoperimetry import AreaCaps, area

    result = area(presentation, w, AreaCaps(budget.max_area, budget.max_search_length))
    return Tristate.EQUAL if result.value is not None else Tristate.UNKNOWN


def element_key(presentation: Presentation, word: Word):
    """Hashable exact identity key for families that admit one, else None."""
    family = presentation.family
    if family == "free":
        return free_reduce(word)
    if family == "zz":
        i, j, _ = zz_normal_form(free_reduce(word))
        return (i, j)
    return None


def canonical_form(
    presentation: Presentation, word: Word, max_radius: Optional[int] = None
) -> Word:
    """A canonical spelling of the element named by ``word``.

    Free: the freely reduced word.  Commuting pair: ``a^i b^j``.  Other
    families: the representative stored at the word's vertex in a ball of
    radius ``len(word)``, canonical only relative to that ball; the
    ``max_radius`` guard turns an over-budget request into an error
    instead of a runaway ball construction.
    """
    presentation.check_word(word)
    family = presentation.family
    if family == "free":
        return free_reduce(word)
    if family == "zz":
        i, j, _ = zz_normal_form(free_reduce(word))
        a = (1,) * i if i >= 0 else (-1,) * (-i)
        b = (2,) * j if j >= 0 else (-2,) * (-j)
        return a + b
    # Greedy rewriting preserves the element and never lengthens, so it
    # shrinks the ball radius the lookup needs.
    w, _ = dehn_reduce(presentation, word)
    radius = len(w)
    if max_radius is not None and radius > max_radius:
        raise UndecidedError(
            f"canonical form needs a radius-{radius} ball, over the {max_radius} budget"
        )
    from .cayley import build_ball

    ball = build_ball(presentation, radius)
    return ball.vertices[ball.vertex_of(w)]


def generate_null_homotopic(
    presentation: Presentation, max_insertions: int, max_length: int
) -> tuple[Word, ...]:
    """Words built by splicing up to ``max_insertions`` symmetrized relators
    into the empty word, keeping every freely reduced result of length at
    most ``max_length``.  All outputs equal the identity by construction.
    Returned shortlex-sorted, starting with the empty word.
    """
    if max_insertions < 0 or max_length < 0:
        raise ValueError("budgets must be nonnegative")
    members = symmetrize(presentation).members
    seen: set[Word] = {EMPTY}
    frontier: set[Word] = {EMPTY}
    for _ in range(max_insertions):
        grown: set[Word] = set()
        for w in frontier:
            for cut in range(len(w) + 1):
                head, tail = w[:cut], w[cut:]
                for rho in members:
                    cand = multiply(head, rho, tail)
                    if len(cand) <= max_length and cand not in seen:
                        grown.add(cand)
        seen |= grown
        frontier = grown
        if not frontier:
            break
    return tuple(sorted(seen, key=shortlex_key))


def exhaustive_identity_words(
    presentation: Presentation, max_length: int
) -> Optional[tuple[Word, ...]]:
    """Every identity word up to ``max_length`` for exactly decidable
    families (free, zz); None where no independent exact test exists."""
    family = presentation.family
    if family == "free":
        return (EMPTY,)
    if family != "zz":
        return None
    out: list[Word] = []
    word: list[int] = []

    def rec(na: int, nb: int):
        depth = len(word)
        if abs(na) + abs(nb) > max_length - depth:
            return
        if na == 0 and nb == 0:
            out.append(tuple(word))
        if depth == max_length:
            return
        last = word[-1] if word else 0
        for letter in (1, -1, 2, -2):
            if letter == -last:
                continue
            word.append(letter)
            da = 1 if letter == 1 else (-1 if letter == -1 else 0)
            db = 1 if letter == 2 else (-1 if letter == -2 else 0)
            rec(na + da, nb + db)
            word.pop()

    rec(0, 0)
    return tuple(sorted(out, key=shortlex_key))
