"""
Verification pipelines over the minors l_S and the Lecture Hall cone.

Every pipeline returns a VerificationReport; a falsified statement is
recorded as a failure entry, never raised.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

from . import cone
from .lhseq import LHSequence, check_index
from .minors import ell_S, normalize_subset
from .polyring import BiDegree, bidegree, leading_term, trim


class FixtureParseError(ValueError):
    pass


@dataclass(frozen=True)
class PhiEntry:
    subset: tuple
    vector: tuple
    lead_coeff: int

    def to_json(self) -> dict:
        return {"S": list(self.subset), "vector": list(self.vector), "lead_coeff": self.lead_coeff}


@dataclass
class VerificationReport:
    n: int
    conjecture: str
    entries: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    unit_leading_coeffs: bool = True
    elapsed_ms: int = 0
    cache: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, subset: Iterable[int], reason: str):
        self.failures.append((tuple(subset), reason))

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "conjecture": self.conjecture,
            "status": self.status,
            "entries": [e.to_json() for e in self.entries],
            "failures": [{"S": list(S), "reason": r} for S, r in self.failures],
            "unit_leading_coeffs": self.unit_leading_coeffs,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.cache is not None:
            out["cache"] = self.cache
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def write(self, path):
        """Write the JSON report atomically."""
        write_atomic(path, self.dumps())


def write_atomic(path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def subsets(n: int) -> list[tuple]:
    """Subsets of [n-1] by increasing size, then lexicographically."""
    return [S for r in range(n) for S in combinations(range(1, n), r)]


def bitmask_order(S: Iterable[int]) -> int:
    return sum(1 << (s - 1) for s in S)


def phi(seq: LHSequence, S: Iterable[int]) -> PhiEntry:
    S = normalize_subset(S)
    coeff, mono = leading_term(ell_S(seq, S))
    return PhiEntry(S, trim(mono.exponents), coeff)


def _phi_chunk(chunk: list[tuple]) -> list[PhiEntry]:
    seq = LHSequence()
    return [phi(seq, S) for S in chunk]


def compute_phi(seq: LHSequence, n: int, jobs: int = 1) -> list[PhiEntry]:
    todo = subsets(n)
    if jobs <= 1 or len(todo) < 2 * jobs:
        return [phi(seq, S) for S in todo]
    # each worker keeps its own sequence and memo
    chunks = [todo[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_phi_chunk, chunks))
    by_subset = {e.subset: e for part in results for e in part}
    return [by_subset[S] for S in todo]


def _timed(report: VerificationReport, start: float, seq: LHSequence | None, cache_stats: bool):
    report.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    if cache_stats and seq is not None:
        report.cache = seq.cache_stats()
    return report


def verify_sagbi(seq: LHSequence, n: int, jobs: int = 1, cache_stats: bool = False) -> VerificationReport:
    """
    Check that the leading exponents of l_S, S in [n-1], are pairwise distinct,
    each of Hilbert-basis shape, and together exactly hilbert_basis(n).
    Unit leading coefficients are tracked separately and do not affect status.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    start = time.perf_counter()
    report = VerificationReport(n, "sagbi")
    report.entries = compute_phi(seq, n, jobs)
    basis = cone.hilbert_basis(n)
    seen = {}
    for e in report.entries:
        if any(x < 0 for x in e.vector):
            report.fail(e.subset, f"leading monomial has a negative exponent: {list(e.vector)}")
            continue
        if len(e.vector) > n:
            report.fail(e.subset, f"leading monomial uses variables beyond y{n}: {list(e.vector)}")
            continue
        padded = e.vector + (0,) * (n - len(e.vector))
        if not cone.is_lecture_hall(padded):
            report.fail(e.subset, f"{list(e.vector)} is not a Lecture Hall partition")
        if padded not in basis:
            report.fail(e.subset, f"{list(e.vector)} is not a Hilbert basis element")
        if padded in seen:
            report.fail(e.subset, f"same leading exponent {list(e.vector)} as {list(seen[padded])}")
        else:
            seen[padded] = e.subset
    for missing in sorted(basis - set(seen)):
        report.fail((), f"Hilbert basis element {list(missing)} is not attained")
    report.unit_leading_coeffs = all(e.lead_coeff == 1 for e in report.entries)
    return _timed(report, start, seq, cache_stats)


def expected_bidegree(S: tuple) -> BiDegree:
    # degree of the diagonal product of l_{s_j + 2 - j}
    total = BiDegree(0, 0)
    for j, s in enumerate(S, start=1):
        total = total + BiDegree(s + 2 - j, s + 1 - j)
    return total


def verify_phi_properties(seq: LHSequence, n: int, cache_stats: bool = False) -> VerificationReport:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    start = time.perf_counter()
    report = VerificationReport(n, "phi-properties")
    report.entries = compute_phi(seq, n)
    for e in report.entries:
        S, v = e.subset, e.vector
        if S:
            k = len(S)
            alt = sum(x if j % 2 == 0 else -x for j, x in enumerate(v))
            if alt != k:
                report.fail(S, f"alternating sum {alt} != #S = {k}")
            want = 2 * sum(S) + 2 * k - k * k
            if sum(v) != want:
                report.fail(S, f"entry sum {sum(v)} != {want}")
            deg = bidegree(ell_S(seq, S))
            if deg != expected_bidegree(S):
                report.fail(S, f"bidegree {deg} != {tuple(expected_bidegree(S))}")
    by_subset = {e.subset: e.vector for e in report.entries}
    for i in range(1, n + 1):
        image = {by_subset[S] + (0,) * (i - len(by_subset[S])) for S in subsets(i)}
        if image != cone.hilbert_basis(i):
            report.fail((), f"image of subsets of [{i - 1}] is not the Hilbert basis H_{i}")
    report.unit_leading_coeffs = all(e.lead_coeff == 1 for e in report.entries)
    return _timed(report, start, seq, cache_stats)


def verify_pi(seq: LHSequence, max_i: int, cache_stats: bool = False) -> VerificationReport:
    """Polynomiality, bidegree, support and defining-equation checks for l_1..l_max_i."""
    if max_i < 1:
        raise ValueError(f"max_i must be >= 1, got {max_i}")
    start = time.perf_counter()
    report = VerificationReport(max_i, "pi")
    indices = []
    for i in range(1, max_i + 1):
        r = check_index(seq, i)
        indices.append({
            "i": i,
            "terms": r.n_terms,
            "is_polynomial": r.is_polynomial,
            "bidegree": list(r.bidegree) if r.bidegree is not None else None,
            "support_ok": r.support_ok,
            "residual_zero": r.residual_zero,
        })
        for problem in r.problems:
            report.fail((), f"l_{i}: {problem}")
    report.extra["indices"] = indices
    return _timed(report, start, seq, cache_stats)


def verify_lht(n: int, max_total: int) -> VerificationReport:
    """Both Lecture Hall Theorem identities for every length up to n."""
    start = time.perf_counter()
    report = VerificationReport(n, "lht")
    for m in range(1, n + 1):
        lhs = cone.lh_series(m, max_total)
        rhs = cone.product_series(m, max_total)
        if lhs != rhs:
            bad = sorted(k for k in set(lhs.coeffs) | set(rhs.coeffs) if lhs[k] != rhs[k])
            report.fail((), f"n={m}: bivariate series differ at {bad[:5]}")
        for N in range(max_total + 1):
            count = len(cone.enumerate_lh(m, N))
            if count != cone.odd_parts_count(m, N):
                report.fail((), f"n={m}, N={N}: {count} partitions vs {cone.odd_parts_count(m, N)} odd-part partitions")
            if lhs.diagonal(N) != count:
                report.fail((), f"n={m}, N={N}: bivariate series does not specialize to {count}")
    report.extra["max_total"] = max_total
    return _timed(report, start, None, False)


# -- phi table fixture -------------------------------------------------------

def format_phi_row(subset: Iterable[int], vector: Iterable[int]) -> str:
    return ",".join(map(str, subset)) + ";" + ",".join(map(str, vector))


def phi_csv(entries: Iterable[PhiEntry]) -> str:
    rows = sorted(entries, key=lambda e: bitmask_order(e.subset))
    return "".join(format_phi_row(e.subset, e.vector) + "\n" for e in rows)


def _ints(text: str, lineno: int) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise FixtureParseError(f"line {lineno}: non-integer field {text!r}") from None


def parse_table(text: str) -> dict[tuple, tuple]:
    table = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.count(";") != 1:
            raise FixtureParseError(f"line {lineno}: expected 'subset;vector', got {line!r}")
        left, right = line.split(";")
        S, v = _ints(left, lineno), _ints(right, lineno)
        if list(S) != sorted(set(S)):
            raise FixtureParseError(f"line {lineno}: subset must be ascending without repeats")
        if not v:
            raise FixtureParseError(f"line {lineno}: empty vector")
        if S in table:
            raise FixtureParseError(f"line {lineno}: duplicate row for {list(S)}")
        table[S] = v
    return table


def load_table(path) -> dict[tuple, tuple]:
    return parse_table(Path(path).read_text())


def compare_table(report: VerificationReport, table: dict[tuple, tuple]) -> list[str]:
    """
    Differences between computed entries and fixture rows.

    Only subsets the table covers are compared, so a table for n <= 8 can be
    checked against a larger run.
    """
    n = report.n
    diff = []
    covered = 1 + max((max(S) for S in table if S), default=0)
    computed = {e.subset: e.vector for e in report.entries if not e.subset or max(e.subset) < covered}
    for S, v in sorted(computed.items(), key=lambda kv: bitmask_order(kv[0])):
        if S not in table:
            diff.append(f"{format_phi_row(S, v)}: no fixture row")
        elif table[S] != v:
            diff.append(f"{format_phi_row(S, v)}: fixture has {format_phi_row(S, table[S])}")
    for S in sorted(table, key=bitmask_order):
        if (not S or max(S) < n) and S not in computed:
            diff.append(f"{format_phi_row(S, table[S])}: not computed")
    return diff
