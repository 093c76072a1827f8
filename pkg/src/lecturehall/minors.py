"""
Minors of the upper-triangular Toeplitz matrix M with M[r, c] = -l_{c-r+1}
for c >= r and 0 below the diagonal.

Only top-aligned minors (rows 1..r) are ever needed, so a minor is keyed by
its sorted column tuple alone.  Determinants are expanded along the bottom
row, whose leading entries are zero, and every sub-minor is memoized on the
sequence object.  Because M is Toeplitz the same sub-minors recur across
all column subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .polyring import LaurentPoly, linear_combination

ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


@dataclass(frozen=True)
class MinorKey:
    rows: int
    cols: tuple

    def __post_init__(self):
        cols = tuple(self.cols)
        object.__setattr__(self, "cols", cols)
        if len(cols) != self.rows:
            raise ValueError(f"{self.rows} rows but {len(cols)} columns")
        if any(c < 1 for c in cols):
            raise ValueError(f"column indices must be >= 1: {cols}")
        if any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError(f"columns must be strictly increasing: {cols}")

    @classmethod
    def top(cls, cols: Iterable[int]) -> "MinorKey":
        cols = tuple(cols)
        return cls(len(cols), cols)


def matrix_entry(seq, r: int, c: int) -> LaurentPoly:
    if r < 1 or c < 1:
        raise ValueError(f"matrix indices are 1-based, got ({r}, {c})")
    if c < r:
        return ZERO
    return -seq.ell(c - r + 1)


def _det(seq, cols: tuple) -> LaurentPoly:
    if not cols:
        return ONE
    cache = seq.minor_cache if seq.memoize else None
    if cache is not None:
        hit = cache.get(cols)
        if hit is not None:
            seq.cache_hits += 1
            return hit
        seq.cache_misses += 1
    r = len(cols)
    pairs = []
    for j, c in enumerate(cols):
        if c < r:
            continue
        sub = _det(seq, cols[:j] + cols[j + 1:])
        if not sub:
            continue
        # cofactor sign (-1)^(r+j+1) times the entry -l_{c-r+1}
        sign = 1 if (r + j) % 2 == 0 else -1
        pairs.append((sign, seq.ell(c - r + 1), sub))
    result = linear_combination(pairs)
    if cache is not None:
        cache[cols] = result
    return result


def minor_det(seq, key) -> LaurentPoly:
    """det of M restricted to rows 1..r and the given columns."""
    if not isinstance(key, MinorKey):
        key = MinorKey.top(key)
    return _det(seq, key.cols)


def corner_columns(i: int) -> tuple:
    # ceil(i/2) rows, columns floor(i/2)+1 .. i
    return tuple(range(i // 2 + 1, i + 1))


def cal_E(seq, i: int) -> LaurentPoly:
    """Negated top-aligned square minor whose top-right entry is -l_i."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    return -_det(seq, corner_columns(i))


def normalize_subset(S: Iterable[int]) -> tuple:
    S = tuple(S)
    if any(s < 1 for s in S):
        raise ValueError(f"subset elements must be positive: {S}")
    if len(set(S)) != len(S):
        raise ValueError(f"subset has repeated elements: {S}")
    return tuple(sorted(S))


def ell_S(seq, S: Iterable[int]) -> LaurentPoly:
    """l_S = -det M[rows 1..#S, cols S+1]; the empty set gives l_1."""
    S = normalize_subset(S)
    if not S:
        return seq.ell(1)
    return -_det(seq, tuple(s + 1 for s in S))
