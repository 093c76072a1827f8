from itertools import combinations, permutations

import pytest

from lecturehall.lhseq import LHSequence, target_monomial
from lecturehall.minors import MinorKey, cal_E, ell_S, matrix_entry, minor_det
from lecturehall.polyring import LaurentPoly, parse_poly

P = parse_poly


def leibniz(seq, cols):
    """Sum over permutations; independent of the cofactor recursion."""
    r = len(cols)
    total = LaurentPoly()
    for perm in permutations(range(r)):
        inversions = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        term = LaurentPoly.constant(-1 if inversions % 2 else 1)
        for row, k in enumerate(perm, start=1):
            entry = matrix_entry(seq, row, cols[k])
            if not entry:
                term = LaurentPoly()
                break
            term = term * entry
        total = total + term
    return total


def test_matrix_entry(seq):
    assert matrix_entry(seq, 1, 1) == -P("y1")
    assert matrix_entry(seq, 2, 1) == LaurentPoly()
    assert matrix_entry(seq, 1, 4) == -seq.ell(4)
    assert matrix_entry(seq, 3, 5) == -seq.ell(3)


def test_minor_key_validation():
    assert MinorKey(2, (2, 3)).cols == (2, 3)
    for rows, cols in [(2, (1,)), (1, (0,)), (2, (3, 2)), (2, (2, 2))]:
        with pytest.raises(ValueError):
            MinorKey(rows, cols)


def test_minor_det_examples(seq):
    assert minor_det(seq, MinorKey(2, (2, 3))) == -P("y1^3*y2^2*y3")
    assert minor_det(seq, MinorKey(1, (1,))) == -P("y1")
    assert minor_det(seq, (2, 3, 4)) == -P("y1^4*y2^3*y3^2 + y1^4*y2^2*y3^2*y4")


def test_cal_E_examples(seq):
    assert cal_E(seq, 1) == P("y1")
    assert cal_E(seq, 3) == P("y1^3*y2^2*y3")
    assert cal_E(seq, 4) == P("y1^4*y2^3*y3^2*y4")
    l = seq.ell
    assert cal_E(seq, 3) == l(1) * l(3) - l(2) * l(2)
    assert cal_E(seq, 4) == l(2) * l(4) - l(3) * l(3)


def test_ell_S_examples(seq):
    assert ell_S(seq, ()) == seq.ell(1)
    assert ell_S(seq, {3, 1}) == P("y1^4*y2^3*y3 + y1^3*y2^3*y3^2 + y1^3*y2^2*y3^2*y4")
    assert ell_S(seq, (1, 2, 3)) == P("y1^4*y2^3*y3^2 + y1^4*y2^2*y3^2*y4")
    assert ell_S(seq, (1, 3)) == seq.ell(1) * seq.ell(4) - seq.ell(2) * seq.ell(3)
    with pytest.raises(ValueError):
        ell_S(seq, (1, 1))


def test_singletons_are_the_sequence(seq):
    for i in range(2, 13):
        assert ell_S(seq, (i - 1,)) == seq.ell(i)


def test_corner_identity(seq):
    for i in range(2, 13):
        S = tuple(range(i // 2, i))
        assert ell_S(seq, S) == cal_E(seq, i) == LaurentPoly.monomial(target_monomial(i))


def all_minors(n):
    # every top-aligned minor whose columns lie in [n], size <= 4
    return [c for r in range(1, 5) for c in combinations(range(1, n + 1), r)]


def test_leibniz_oracle_agrees(seq):
    for cols in all_minors(5):
        assert minor_det(seq, cols) == leibniz(seq, cols), cols


def test_memo_transparency():
    on, off = LHSequence(), LHSequence(memoize=False)
    for cols in all_minors(5) + [tuple(range(1, 6))]:
        assert minor_det(on, cols) == minor_det(off, cols)
    assert on.cache_hits > 0 and on.minor_cache
    assert off.cache_hits == 0 and not off.minor_cache
