"""Exact Laurent polynomial arithmetic and determinant backends."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotlab.laurent import (
    LaurentPoly,
    det_int,
    det_laurent,
    det_laurent_bareiss,
    symmetric_signature,
)

coeff = st.integers(min_value=-9, max_value=9)
poly = st.builds(
    LaurentPoly,
    st.lists(coeff, min_size=0, max_size=6),
    st.integers(min_value=-4, max_value=4),
)


@given(poly, poly)
def test_add_commutes(p, q):
    assert p + q == q + p


@given(poly, poly, poly)
def test_mul_associates_and_distributes(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(poly, poly, st.integers(min_value=-3, max_value=3))
def test_evaluate_is_a_homomorphism(p, q, x):
    if x == 0 and (p.offset < 0 or q.offset < 0):
        return  # negative powers undefined at 0
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


@given(poly, st.integers(min_value=-4, max_value=4))
def test_shift_multiplies_by_t_power(p, k):
    assert p.shifted(k) == p * LaurentPoly.t_power(k)


@given(poly)
def test_canonical_form(p):
    c = p.canonical()
    if not p.is_zero():
        assert c.min_exp == 0
        assert c.coeffs[-1] > 0
        assert c.canonical() == c


def test_palindromic():
    assert LaurentPoly([1, -3, 1]).is_palindromic()
    assert LaurentPoly([2, -5, 2], -1).is_palindromic()
    assert not LaurentPoly([1, -3, 2]).is_palindromic()


def test_exact_div():
    p = LaurentPoly([1, -1, 1], -1)
    q = LaurentPoly([2, 0, -2], 3)
    assert (p * q).exact_div(q) == p
    with pytest.raises(ArithmeticError):
        LaurentPoly([1, 1]).exact_div(LaurentPoly([1, 1, 1]))


def _rand_int_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def _det_fraction_gauss(rows):
    """Reference determinant by fraction-based Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    assert det.denominator == 1
    return int(det)


def test_det_int_matches_fraction_gauss():
    rng = random.Random(7)
    for trial in range(60):
        n = rng.randint(1, 6)
        rows = _rand_int_matrix(rng, n)
        assert det_int(rows) == _det_fraction_gauss(rows), rows


def _rand_laurent_matrix(rng, n):
    def entry():
        return LaurentPoly(
            [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))], rng.randint(-2, 2)
        )

    return [[entry() for _ in range(n)] for _ in range(n)]


def test_det_laurent_matches_bareiss_reference():
    """The interpolation backend and fraction-free elimination must agree."""
    rng = random.Random(11)
    for trial in range(40):
        n = rng.randint(1, 5)
        rows = _rand_laurent_matrix(rng, n)
        assert det_laurent(rows) == det_laurent_bareiss(rows), (trial, n)


def test_det_laurent_known_values():
    t = LaurentPoly.t_power(1)
    one = LaurentPoly.const(1)
    assert det_laurent([[t]]) == t
    assert det_laurent([[t, one], [one, t]]) == t * t - one
    assert det_laurent([]) == one


def test_symmetric_signature_known_forms():
    assert symmetric_signature([[1]]) == 1
    assert symmetric_signature([[-1]]) == -1
    assert symmetric_signature([[2, 0], [0, -3]]) == 0
    # hyperbolic pair: zero diagonal, off-diagonal coupling
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0, 0], [0, 0]]) == 0
    assert symmetric_signature([[2, 1], [1, 2]]) == 2


def test_symmetric_signature_random_congruence():
    """Signature is invariant under congruence by unimodular matrices."""
    rng = random.Random(3)
    for trial in range(30):
        n = rng.randint(1, 5)
        a = _rand_int_matrix(rng, n, -4, 4)
        sym = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        base = symmetric_signature(sym)
        u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(4):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                c = rng.randint(-2, 2)
                for k in range(n):
                    u[i][k] += c * u[j][k]
        m = [[sum(u[i][k] * sym[k][l] for k in range(n)) for l in range(n)] for i in range(n)]
        m = [[sum(m[i][k] * u[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
        assert symmetric_signature(m) == base, (trial, sym)
