"""
The Lecture Hall sequence l_1, l_2, ... solved one index at a time.

l_i is fixed by requiring that the corner minor E_i(l_1, ..., l_i) equals
y1^i * y2^(i-1) * ... * yi.  E_i is linear in l_i, so

    E_i(l_i := t) = A*t + B,   B = E_i(l_i := 0),   A = E_i(l_i := 1) - B,

and l_i = (target - B) / A.  A is always a signed monomial, which keeps
every division exact over the integers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .minors import cal_E, corner_columns, minor_det
from .polyring import (
    BiDegree,
    LaurentPoly,
    Monomial,
    PolyError,
    bidegree,
    is_polynomial,
    linear_combination,
    poly_div_term,
)


class InvalidIndex(ValueError):
    pass


class NonMonomialCoefficient(PolyError):
    pass


def target_monomial(i: int) -> Monomial:
    if i < 1:
        raise InvalidIndex(f"index must be >= 1, got {i}")
    return Monomial(tuple(range(i, 0, -1)), i)


@dataclass(frozen=True)
class SolveRecord:
    """What the solver divided by when producing l_i."""

    i: int
    coeff: int
    monomial: Monomial


class LHSequence:
    """
    Append-only cache of l_1, l_2, ... plus the shared minor memo.

    `extend` mutates the cache; it takes a lock, but callers that share one
    instance across threads should still expect serialized solving.
    """

    def __init__(self, memoize: bool = True):
        self._polys: list[LaurentPoly] = []
        self.solve_records: dict[int, SolveRecord] = {}
        self.memoize = memoize
        self.minor_cache: dict[tuple, LaurentPoly] = {}
        self.cache_hits = 0
        self.cache_misses = 0
        self._lock = threading.RLock()

    def __len__(self):
        return len(self._polys)

    @property
    def polys(self) -> tuple:
        return tuple(self._polys)

    def ell(self, i: int) -> LaurentPoly:
        if i < 1:
            raise InvalidIndex(f"index must be >= 1, got {i}")
        if i > len(self._polys):
            self.extend(i)
        return self._polys[i - 1]

    def extend(self, i: int) -> LaurentPoly:
        if i < 1:
            raise InvalidIndex(f"index must be >= 1, got {i}")
        with self._lock:
            while len(self._polys) < i:
                k = len(self._polys) + 1
                self._polys.append(self._solve(k))
            return self._polys[i - 1]

    def cache_stats(self) -> dict:
        return {
            "entries": len(self.minor_cache),
            "hits": self.cache_hits,
            "misses": self.cache_misses,
            "memoize": self.memoize,
        }

    def _solve(self, i: int) -> LaurentPoly:
        # Expand E_i along its top row.  The cofactor of the top-row entry in
        # column c lives on rows 2..m; shifting one step up-left along the
        # diagonals turns it into the top-aligned minor on columns - 1, which
        # only involves l_1..l_{i-1} and is shared through the memo.
        cols = corner_columns(i)
        known = []
        unknown_cofactor = None
        for j, c in enumerate(cols):
            rest = tuple(x - 1 for x in cols[:j] + cols[j + 1:])
            cof = minor_det(self, rest)
            sign = 1 if j % 2 == 0 else -1
            if c == i:
                unknown_cofactor = (sign, cof)
            else:
                known.append((sign, self._polys[c - 1], cof))
        fixed = linear_combination(known)

        def evaluate(t: LaurentPoly) -> LaurentPoly:
            sign, cof = unknown_cofactor
            return fixed + linear_combination([(sign, t, cof)])

        B = evaluate(LaurentPoly())
        A = evaluate(LaurentPoly.constant(1)) - B
        if len(A) != 1:
            raise NonMonomialCoefficient(
                f"coefficient of l_{i} in E_{i} has {len(A)} terms: {A}")
        (mono, coeff), = A.terms.items()
        self.solve_records[i] = SolveRecord(i, coeff, Monomial(mono, i))
        rhs = LaurentPoly.monomial(target_monomial(i)) - B
        return poly_div_term(rhs, coeff, mono)


def extend(seq: LHSequence, i: int) -> LaurentPoly:
    return seq.extend(i)


@dataclass
class IndexReport:
    i: int
    n_terms: int
    is_polynomial: bool
    bidegree: BiDegree | None
    bidegree_ok: bool
    support_ok: bool
    residual_zero: bool
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_polynomial and self.bidegree_ok and self.support_ok and self.residual_zero


def check_index(seq: LHSequence, i: int) -> IndexReport:
    p = seq.ell(i)
    deg = bidegree(p)
    used = p.variables()
    support_ok = used <= set(range(1, i + 1)) and i in used
    # the residual goes through the bottom-row expansion, not the solver's path
    residual = cal_E(seq, i) - LaurentPoly.monomial(target_monomial(i))
    report = IndexReport(
        i=i,
        n_terms=len(p),
        is_polynomial=is_polynomial(p),
        bidegree=deg,
        bidegree_ok=deg == BiDegree(i, i - 1),
        support_ok=support_ok,
        residual_zero=not residual,
    )
    if not report.is_polynomial:
        report.problems.append("negative exponent")
    if not report.bidegree_ok:
        report.problems.append(f"bidegree {deg}, expected ({i}, {i - 1})")
    if not support_ok:
        report.problems.append(f"variable support {sorted(used)}")
    if not report.residual_zero:
        report.problems.append(f"defining equation residual has {len(residual)} terms")
    return report
