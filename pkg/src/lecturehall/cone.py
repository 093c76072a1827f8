"""
Lattice points of the Lecture Hall cone L_n and its generating functions.

A vector lam of length n lies in L_n iff

    lam_1/n >= lam_2/(n-1) >= ... >= lam_n/1 >= 0,

which is checked here in cross-multiplied integer form only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable


class MalformedHB(ValueError):
    pass


def is_lecture_hall(v: Iterable[int]) -> bool:
    v = tuple(v)
    n = len(v)
    if n == 0:
        return True
    if v[-1] < 0:
        return False
    # 0-based j: v[j]/(n-j) >= v[j+1]/(n-j-1)
    return all(v[j] * (n - j - 1) >= v[j + 1] * (n - j) for j in range(n - 1))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def enumerate_lh(n: int, N: int) -> list[tuple]:
    """All lam in L_n with |lam| = N, in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if N < 0:
        return []
    out = []
    lam = [0] * n

    # fill positions n-1, n-2, ..., 0 (0-based); each entry is bounded below
    # by the one after it and is never smaller than it, so the remaining
    # budget must cover `pos + 1` copies of the lower bound.
    def fill(pos: int, remaining: int, nxt: int | None):
        if nxt is None:
            low = 0
        else:
            low = _ceil_div(nxt * (n - pos), n - pos - 1)
        if pos == 0:
            if remaining >= low:
                lam[0] = remaining
                out.append(tuple(lam))
            return
        for val in range(low, remaining // (pos + 1) + 1):
            lam[pos] = val
            fill(pos - 1, remaining - val, val)

    fill(n - 1, N, None)
    out.sort()
    return out


def odd_parts_count(n: int, N: int) -> int:
    """Partitions of N into odd parts from {1, 3, ..., 2n-1}."""
    if N < 0:
        return 0
    ways = [1] + [0] * N
    for part in range(1, 2 * n, 2):
        for total in range(part, N + 1):
            ways[total] += ways[total - part]
    return ways[N]


@dataclass
class TruncatedBiSeries:
    """Coefficients of q1^a q2^b for a + b <= max_total; absent keys are zero."""

    max_total: int
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def add(self, a: int, b: int, count: int = 1):
        if a < 0 or b < 0 or a + b > self.max_total:
            raise ValueError(f"({a}, {b}) outside truncation {self.max_total}")
        self.coeffs[(a, b)] = self.coeffs.get((a, b), 0) + count

    def __eq__(self, other):
        if not isinstance(other, TruncatedBiSeries):
            return NotImplemented
        strip = lambda d: {k: v for k, v in d.items() if v}
        return self.max_total == other.max_total and strip(self.coeffs) == strip(other.coeffs)

    def rows(self) -> list[tuple]:
        keys = sorted((k for k, v in self.coeffs.items() if v), key=lambda k: (k[0] + k[1], k[0]))
        return [(a, b, self.coeffs[(a, b)]) for a, b in keys]

    def to_csv(self) -> str:
        return "".join(f"{a},{b},{c}\n" for a, b, c in self.rows())

    def diagonal(self, N: int) -> int:
        """Sum of coefficients along a + b = N."""
        return sum(v for (a, b), v in self.coeffs.items() if a + b == N)


def odd_even_sums(lam) -> tuple[int, int]:
    return sum(lam[0::2]), sum(lam[1::2])


def lh_series(n: int, max_total: int) -> TruncatedBiSeries:
    series = TruncatedBiSeries(max_total)
    for N in range(max_total + 1):
        for lam in enumerate_lh(n, N):
            series.add(*odd_even_sums(lam))
    return series


def product_series(n: int, max_total: int) -> TruncatedBiSeries:
    """Truncation of prod_{i=1..n} 1 / (1 - q1^i q2^(i-1))."""
    coeffs = {(0, 0): 1}
    for i in range(1, n + 1):
        step = (i, i - 1)
        # multiply by the geometric series in q1^i q2^(i-1): in-place
        # recurrence c[k] += c[k - step], walking upward in total degree
        for total in range(2 * i - 1, max_total + 1):
            for a in range(total + 1):
                src = (a - step[0], total - a - step[1])
                if src in coeffs:
                    key = (a, total - a)
                    coeffs[key] = coeffs.get(key, 0) + coeffs[src]
    return TruncatedBiSeries(max_total, coeffs)


def hilbert_basis(n: int) -> set[tuple]:
    """
    The 2^(n-1) minimal generators of L_n.

    For T = {t1 > t2 > ... > tr} in [n-1] the generator is
    (t1 + 1, t1, t2, ..., tr, 0, ..., 0); the empty set gives (1, 0, ..., 0).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    basis = set()
    for r in range(n):
        for T in combinations(range(n - 1, 0, -1), r):
            head = (T[0] + 1,) + T if T else (1,)
            basis.add(head + (0,) * (n - len(head)))
    return basis


def hb_to_subset(v: Iterable[int]) -> tuple:
    """Drop the first coordinate and keep the nonzero entries (ascending)."""
    v = tuple(v)
    if not v:
        raise MalformedHB("empty vector")
    tail = v[1:]
    nz = [x for x in tail if x != 0]
    k = len(nz)
    if any(x <= 0 for x in nz) or any(x != 0 for x in tail[k:]) or tuple(nz) != tail[:k]:
        raise MalformedHB(f"{v}: tail must be a strictly decreasing positive run followed by zeros")
    if any(a <= b for a, b in zip(nz, nz[1:])):
        raise MalformedHB(f"{v}: nonzero tail is not strictly decreasing")
    expected_head = nz[0] + 1 if nz else 1
    if v[0] != expected_head:
        raise MalformedHB(f"{v}: first entry must be {expected_head}")
    if nz and nz[0] > len(v) - 1:
        raise MalformedHB(f"{v}: entries exceed n - 1 = {len(v) - 1}")
    return tuple(sorted(nz))


def subset_to_hb(S: Iterable[int], n: int) -> tuple:
    T = sorted(S, reverse=True)
    if T and (T[0] > n - 1 or T[-1] < 1):
        raise ValueError(f"{sorted(S)} is not a subset of [{n - 1}]")
    head = (T[0] + 1, *T) if T else (1,)
    return head + (0,) * (n - len(head))


@lru_cache(maxsize=None)
def _hb_sorted(n: int) -> tuple:
    return tuple(sorted(hilbert_basis(n), reverse=True))


@lru_cache(maxsize=None)
def _decomposes(lam: tuple, n: int) -> bool:
    if not any(lam):
        return True
    for h in _hb_sorted(n):
        rest = tuple(a - b for a, b in zip(lam, h))
        if min(rest) >= 0 and is_lecture_hall(rest) and _decomposes(rest, n):
            return True
    return False


def decomposes(lam: Iterable[int], n: int) -> bool:
    """Whether lam is a finite sum of elements of hilbert_basis(n)."""
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError(f"expected a vector of length {n}, got {lam}")
    if not is_lecture_hall(lam):
        return False
    return _decomposes(lam, n)
