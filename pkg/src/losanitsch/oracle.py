"""Brute-force ground truth by direct enumeration.

Nothing here uses recursions or closed forms from the rest of the package;
it only walks subsets, binary words and bead arrangements. Keep it that way:
the other modules are validated against these counts.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

MAX_N = 24

Word = tuple[int, ...]


def _guard(n: int, k: int | None = None) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the enumeration bound {MAX_N}")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")


def k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {1..n} as increasing tuples."""
    _guard(n, k)
    return combinations(range(1, n + 1), k)


def words(n: int, k: int) -> Iterator[Word]:
    """All 0/1 words of length n with exactly k ones."""
    _guard(n, k)
    for ones in combinations(range(n), k):
        w = [0] * n
        for i in ones:
            w[i] = 1
        yield tuple(w)


def indicator(subset: Sequence[int], n: int) -> Word:
    w = [0] * n
    for i in subset:
        w[i - 1] = 1
    return tuple(w)


def inv(w: Sequence[int]) -> int:
    """Number of pairs i < j with a one at i and a zero at j."""
    count = 0
    ones_seen = 0
    for b in w:
        if b:
            ones_seen += 1
        else:
            count += ones_seen
    return count


def subset_residue_counts(n: int, k: int, p: int) -> tuple[int, ...]:
    """Entry j counts k-subsets of {1..n} whose element sum is j mod p."""
    if p < 1:
        raise ValueError("p must be positive")
    counts = [0] * p
    for s in k_subsets(n, k):
        counts[sum(s) % p] += 1
    return tuple(counts)


def inv_residue_counts(n: int, k: int, p: int) -> tuple[int, ...]:
    """Entry j counts words in W(n, k) whose inversion number is j mod p."""
    if p < 1:
        raise ValueError("p must be positive")
    counts = [0] * p
    for w in words(n, k):
        counts[inv(w) % p] += 1
    return tuple(counts)


def inv_distribution(n: int, k: int) -> tuple[int, ...]:
    """Exact inversion histogram over W(n, k): entry m counts inv(w) = m."""
    hist = [0] * (k * (n - k) + 1)
    for w in words(n, k):
        hist[inv(w)] += 1
    return tuple(hist)


def star_subset(subset: Sequence[int], n: int) -> tuple[int, ...]:
    """S* = {n+1-i : i in S}, listed increasingly."""
    return tuple(sorted(n + 1 - i for i in subset))


def star_word(subset: Sequence[int], n: int) -> Word:
    """Indicator word of S* inside {1..n}."""
    if any(not 1 <= i <= n for i in subset):
        raise ValueError(f"{subset} is not a subset of 1..{n}")
    return indicator(star_subset(subset, n), n)


def reversal_classes(n: int, k: int) -> tuple[int, int]:
    """(number of classes {w, reversed w}, number of palindromic words) in W(n, k)."""
    classes = set()
    pal = 0
    for w in words(n, k):
        r = w[::-1]
        if r == w:
            pal += 1
        classes.add(min(w, r))
    return len(classes), pal


def _dihedral_min(s: str) -> str:
    m = len(s)
    best = s
    for t in (s, s[::-1]):
        for i in range(m):
            rot = t[i:] + t[:i]
            if rot < best:
                best = rot
    return best


def bracelet_count(n_white: int, k_red: int) -> int:
    """Bracelets with n_white white, one blue and k_red red beads.

    Every bracelet has a rotation that starts with the blue bead, so it is
    enough to enumerate those strings; each is then canonicalized over the
    full dihedral group and the distinct canonical forms are counted.
    """
    _guard(n_white + k_red)
    if n_white < 0 or k_red < 0:
        raise ValueError("bead counts must be non-negative")
    m = n_white + k_red
    seen = set()
    for reds in combinations(range(m), k_red):
        tail = ["W"] * m
        for i in reds:
            tail[i] = "R"
        seen.add(_dihedral_min("B" + "".join(tail)))
    return len(seen)
