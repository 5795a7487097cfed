"""Greedy majority-subword rewriting and the commuting-pair normal form.

``dehn_reduce`` scans a word for a subword covering strictly more than
half of some symmetrized relator, swaps it for the inverse of the
remaining part (which is strictly shorter), backs the scan up one full
relator length, and repeats.  ``verify_dehn_presentation`` tests whether
that procedure actually recognizes the identity on a budgeted family of
words that are equal to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import (
    EMPTY,
    Presentation,
    SymmetrizedRelatorSet,
    Word,
    free_reduce_with_count,
    invert,
    shortlex_key,
    symmetrize,
)


@dataclass(frozen=True)
class DehnStep:
    """One replacement: ``matched_length`` letters at ``position`` covered a
    strict majority of ``relator`` and were swapped for ``replacement``."""

    position: int
    relator: Word
    matched_length: int
    replacement: Word


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[DehnStep, ...]
    free_cancellations: int

    @property
    def step_count(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class DehnVerdict:
    holds: bool
    counterexample: Optional[Word]
    words_checked: int
    max_insertions: int
    max_length: int


def find_majority_subword(
    word: Word, relators: SymmetrizedRelatorSet, start: int = 0
) -> Optional[DehnStep]:
    """Leftmost subword matching a strict-majority prefix of some member.

    Ties at one position go to the longest match, then to the member
    earliest in the set's (shortlex) enumeration order.
    """
    n = len(word)
    members = relators.members
    for i in range(start, n):
        best_len = 0
        best_rel: Optional[Word] = None
        remaining = n - i
        for rel in members:
            limit = min(len(rel), remaining)
            lcp = 0
            while lcp < limit and word[i + lcp] == rel[lcp]:
                lcp += 1
            if 2 * lcp > len(rel) and lcp > best_len:
                best_len = lcp
                best_rel = rel
        if best_rel is not None:
            return DehnStep(i, best_rel, best_len, invert(best_rel[best_len:]))
    return None


def _splice_reduce(word: Word, pos: int, length: int, replacement: Word):
    """Replace ``word[pos:pos+length]`` and freely reduce.

    Returns the new word, the leftmost index whose neighborhood changed
    (cancellation can cascade into the untouched prefix), and the number
    of cancelled pairs.
    """
    out = list(word[:pos])
    deepest = pos
    cancels = 0
    for x in replacement + word[pos + length :]:
        if out and out[-1] == -x:
            out.pop()
            cancels += 1
            if len(out) < deepest:
                deepest = len(out)
        else:
            out.append(x)
    return tuple(out), deepest, cancels


def dehn_reduce(presentation: Presentation, word: Word) -> tuple[Word, ReductionTrace]:
    """Run the greedy rewriting loop to a word with no majority subword."""
    presentation.check_word(word)
    relators = symmetrize(presentation)
    w, cancels = free_reduce_with_count(word)
    steps: list[DehnStep] = []
    max_len = relators.max_length
    if max_len == 0:
        return w, ReductionTrace((), cancels)
    scan = 0
    while True:
        step = find_majority_subword(w, relators, scan)
        if step is None:
            if scan == 0:
                break
            # Nothing new past the resume point; confirm from the top.
            scan = 0
            continue
        w, changed_at, c = _splice_reduce(
            w, step.position, step.matched_length, step.replacement
        )
        cancels += c
        steps.append(step)
        scan = max(0, changed_at - max_len)
    return w, ReductionTrace(tuple(steps), cancels)


def zz_normal_form(word: Word) -> tuple[int, int, int]:
    """Exponent pair and transposition count for a word over {a, b}.

    ``swaps`` counts pairs (b-type letter, a-type letter) occurring in
    that order: the adjacent transpositions needed to move every a-type
    letter left of every b-type letter.
    """
    i = j = swaps = 0
    b_seen = 0
    for x in word:
        g = abs(x)
        if g == 1:
            i += 1 if x > 0 else -1
            swaps += b_seen
        elif g == 2:
            j += 1 if x > 0 else -1
            b_seen += 1
        else:
            raise ValueError(f"letter {x} outside the two-generator alphabet")
    return i, j, swaps


def verify_dehn_presentation(
    presentation: Presentation, max_insertions: int, max_length: int
) -> DehnVerdict:
    """Check that greedy rewriting kills every budgeted identity word.

    Candidates come from relator-insertion products; for families with an
    independent exact equality test (free, zz) the candidate set is
    widened to every identity word up to ``max_length``, which catches
    failures that no short product of relator conjugates exhibits.
    """
    if max_insertions < 1:
        raise ValueError("max_insertions must be >= 1")
    from .oracle import exhaustive_identity_words, generate_null_homotopic

    candidates = set(generate_null_homotopic(presentation, max_insertions, max_length))
    extra = exhaustive_identity_words(presentation, max_length)
    if extra is not None:
        candidates.update(extra)
    checked = 0
    for w in sorted(candidates, key=shortlex_key):
        if not w:
            continue
        checked += 1
        reduced, _ = dehn_reduce(presentation, w)
        if reduced != EMPTY:
            return DehnVerdict(False, w, checked, max_insertions, max_length)
    return DehnVerdict(True, None, checked, max_insertions, max_length)
