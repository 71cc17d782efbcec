"""Pair classification and sequence analyses over arbitrary partial orders.

An order is passed around as a plain callable ``leq(a, b) -> bool``; every
function here works for any partial order on any carrier. Witness-producing
searches break ties deterministically: the lexicographically smallest witness
is always returned.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, NamedTuple, Sequence, TypeVar

T = TypeVar("T")
Leq = Callable[[T, T], bool]


class PairClass(Enum):
    """The unique relation holding between an ordered pair of elements."""

    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class SubseqClass(Enum):
    """Shapes of homogeneous subsequences, in tie-break priority order."""

    CONSTANT = "constant"
    DESCENDING = "descending"
    ASCENDING = "ascending"
    ANTICHAIN = "antichain"


# Pairwise relation that every (i, j) with i < j must satisfy, per shape.
_PAIR_FOR = {
    SubseqClass.CONSTANT: PairClass.EQUAL,
    SubseqClass.DESCENDING: PairClass.GREATER,
    SubseqClass.ASCENDING: PairClass.LESS,
    SubseqClass.ANTICHAIN: PairClass.INCOMPARABLE,
}


class Homogeneous(NamedTuple):
    indices: tuple[int, ...]
    shape: SubseqClass


def classify(a: T, b: T, leq: Leq) -> PairClass:
    """Classify the pair (a, b) as equal, less, greater, or incomparable."""
    ab = leq(a, b)
    ba = leq(b, a)
    if ab and ba:
        return PairClass.EQUAL
    if ab:
        return PairClass.LESS
    if ba:
        return PairClass.GREATER
    return PairClass.INCOMPARABLE


def find_good_pair(seq: Sequence[T], leq: Leq) -> tuple[int, int] | None:
    """Smallest (i, j) with i < j and seq[i] <= seq[j], or None if none exists.

    A sequence without such a pair is called bad. Indices are compared
    lexicographically, so the witness is deterministic.
    """
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if leq(seq[i], seq[j]):
                return (i, j)
    return None


def is_bad(seq: Sequence[T], leq: Leq) -> bool:
    """True iff no earlier element is <= a later one (vacuously true if short)."""
    return find_good_pair(seq, leq) is None


def homogeneous_subsequence(
    seq: Sequence[T], k: int, leq: Leq
) -> Homogeneous | None:
    """Search for a length-k subsequence that is uniformly one shape.

    A subsequence is homogeneous of a given shape when every index pair
    i < j inside it classifies to that shape's pairwise relation (equal,
    strictly greater, strictly less, or incomparable). Shapes are tried
    in the priority order constant, descending, ascending, antichain; the
    first shape admitting a witness wins and the lexicographically
    smallest index list within it is returned.

    The search is exhaustive and intended for short sequences; no bound
    on guaranteed existence is promised.
    """
    if k < 1:
        raise ValueError("subsequence length k must be at least 1")
    n = len(seq)
    if k > n:
        return None
    rel: list[list[PairClass | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rel[i][j] = classify(seq[i], seq[j], leq)
    for shape in SubseqClass:
        want = _PAIR_FOR[shape]
        if want is PairClass.INCOMPARABLE:
            indices = _smallest_antichain(rel, n, k)
        else:
            indices = _smallest_chain(rel, n, k, want)
        if indices is not None:
            return Homogeneous(indices, shape)
    return None


def _smallest_chain(rel, n: int, k: int, want: PairClass) -> tuple[int, ...] | None:
    # Equal/less/greater are transitive, so consecutive pairs determine all
    # pairs and a longest-extension table gives an exact completability test.
    best = [1] * n
    for i in range(n - 1, -1, -1):
        longest = 0
        for j in range(i + 1, n):
            if rel[i][j] is want and best[j] > longest:
                longest = best[j]
        best[i] = 1 + longest
    for start in range(n):
        if best[start] < k:
            continue
        out = [start]
        need = k - 1
        last = start
        j = start + 1
        # completability is guaranteed by best[start] >= k; the bound on j
        # only protects against a leq that is not actually a partial order
        while need and j < n:
            if rel[last][j] is want and best[j] >= need:
                out.append(j)
                last = j
                need -= 1
            j += 1
        if not need:
            return tuple(out)
    return None


def _smallest_antichain(rel, n: int, k: int) -> tuple[int, ...] | None:
    # Incomparability is not transitive: a candidate must be checked against
    # every chosen index, so this is a backtracking search in lexicographic
    # order. First complete tuple found is the smallest.
    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for j in range(start, n):
            if n - j < k - len(chosen):
                return False
            if all(rel[i][j] is PairClass.INCOMPARABLE for i in chosen):
                chosen.append(j)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None
