"""
Exit criteria.  Each test records one PASS/FAIL line, shown in the pytest
terminal summary under "acceptance criteria".
"""

import random
import time
from importlib import resources
from itertools import combinations, permutations

import pytest

from conftest import ACCEPTANCE_RESULTS
from lecturehall import cone
from lecturehall.lhseq import LHSequence
from lecturehall.minors import matrix_entry, minor_det
from lecturehall.polyring import BiDegree, LaurentPoly, bidegree, is_polynomial, leading_term, parse_poly
from lecturehall.verify import compare_table, parse_table, verify_phi_properties, verify_sagbi


def record(number, title, ok, elapsed, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({elapsed:.1f}s){' - ' + detail if detail else ''}"
    ACCEPTANCE_RESULTS.append(line)
    print(line)
    return ok


def fixture_text(name):
    return resources.files("lecturehall").joinpath(f"fixtures/{name}").read_text()


def test_1_golden_polynomials():
    start = time.perf_counter()
    seq = LHSequence()
    mismatched = [i for i in range(1, 9) if seq.ell(i) != parse_poly(fixture_text(f"ell_{i}.txt").strip())]
    elapsed = time.perf_counter() - start
    ok = not mismatched and elapsed < 1.0
    assert record(1, "l_1..l_8 equal the golden listing", ok, elapsed, f"mismatched {mismatched}" if mismatched else "")


def test_2_polynomiality_and_bidegree():
    start = time.perf_counter()
    seq = LHSequence()
    bad = []
    elapsed_10 = None
    for i in range(1, 13):
        p = seq.ell(i)
        if not is_polynomial(p) or bidegree(p) != BiDegree(i, i - 1):
            bad.append(i)
        if i == 10:
            elapsed_10 = time.perf_counter() - start
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed_10 < 300
    assert record(2, "l_i polynomial of bidegree (i, i-1) for i <= 12", ok, elapsed,
                  f"i <= 10 in {elapsed_10:.1f}s" + (f"; failing {bad}" if bad else ""))


def test_3_sagbi_criterion():
    start = time.perf_counter()
    seq = LHSequence()
    failing = []
    unit = True
    for n in range(1, 9):
        report = verify_sagbi(seq, n)
        if report.status != "pass" or len(report.entries) != 2 ** (n - 1):
            failing.append(n)
        unit = unit and report.unit_leading_coeffs
    elapsed = time.perf_counter() - start
    ok = not failing and unit and elapsed < 600
    assert record(3, "leading exponents of l_S form H_n bijectively, unit coefficients, n <= 8", ok, elapsed,
                  f"failing n {failing}" if failing else "")


@pytest.mark.slow
def test_3_stretch_sagbi_up_to_12():
    start = time.perf_counter()
    seq = LHSequence()
    failing = [n for n in range(9, 13) if verify_sagbi(seq, n).status != "pass"]
    elapsed = time.perf_counter() - start
    assert record("3s", "stretch: criterion 3 for 9 <= n <= 12", not failing, elapsed,
                  f"failing n {failing}" if failing else "")


def test_4_table_reproduction():
    start = time.perf_counter()
    table = parse_table(fixture_text("table1.csv"))
    report = verify_sagbi(LHSequence(), 8)
    diff = compare_table(report, table)
    elapsed = time.perf_counter() - start
    ok = len(table) == 128 and diff == []
    assert record(4, "phi table for n <= 8 matches the 128-row fixture", ok, elapsed,
                  f"{len(diff)} differing rows" if diff else "")


def test_5_lecture_hall_theorem():
    start = time.perf_counter()
    bad = [(n, N) for n in range(1, 7) for N in range(31)
           if len(cone.enumerate_lh(n, N)) != cone.odd_parts_count(n, N)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    assert record(5, "#L_n(N) = odd-part partitions, n <= 6, N <= 30", ok, elapsed, f"failing {bad[:5]}" if bad else "")


def test_6_bivariate_identity():
    start = time.perf_counter()
    bad = [n for n in range(1, 7) if cone.lh_series(n, 20) != cone.product_series(n, 20)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    assert record(6, "bivariate series identity to total degree 20, n <= 6", ok, elapsed,
                  f"failing n {bad}" if bad else "")


def test_7_phi_properties():
    start = time.perf_counter()
    seq = LHSequence()
    failing = {}
    for n in range(1, 9):
        report = verify_phi_properties(seq, n)
        if report.failures:
            failing[n] = report.failures[:2]
    elapsed = time.perf_counter() - start
    assert record(7, "alternating sum, sum, restriction and bidegree checks, n <= 8", not failing, elapsed,
                  str(failing) if failing else "")


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        m = tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 6)))
        terms[m] = terms.get(m, 0) + rng.randint(-5, 5)
    return LaurentPoly(terms)


def _leibniz(seq, cols):
    r = len(cols)
    total = LaurentPoly()
    for perm in permutations(range(r)):
        sign = -1 if sum(perm[a] > perm[b] for a in range(r) for b in range(a + 1, r)) % 2 else 1
        term = LaurentPoly.constant(sign)
        for row, k in enumerate(perm, start=1):
            term = term * matrix_entry(seq, row, cols[k])
        total = total + term
    return total


def test_8_property_suites():
    start = time.perf_counter()
    rng = random.Random(20171)
    problems = []

    for _ in range(1000):
        p, q, r = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        if not ((p + q) + r == p + (q + r) and p + q == q + p and (p * q) * r == p * (q * r)
                and p * q == q * p and p * (q + r) == p * q + p * r):
            problems.append("ring axioms")
            break

    for _ in range(1000):
        p, q = _random_poly(rng), _random_poly(rng)
        if p and q:
            (cp, mp), (cq, mq) = leading_term(p), leading_term(q)
            if leading_term(p * q) != (cp * cq, mp * mq):
                problems.append("leading-term multiplicativity")
                break

    seq, off = LHSequence(), LHSequence(memoize=False)
    minors = [c for k in range(1, 5) for c in combinations(range(1, 6), k)]
    if any(minor_det(seq, c) != _leibniz(seq, c) for c in minors):
        problems.append("Leibniz oracle")
    if any(minor_det(seq, c) != minor_det(off, c) for c in minors + [tuple(range(1, 6))]):
        problems.append("memo transparency")

    for n in range(1, 6):
        if not all(cone.decomposes(lam, n) for N in range(16) for lam in cone.enumerate_lh(n, N)):
            problems.append(f"Hilbert basis generation n={n}")

    elapsed = time.perf_counter() - start
    assert record(8, "property suites", not problems, elapsed, ", ".join(problems))
