"""Exact scalar and matrix arithmetic.

Derived expectations are checked against independent oracles computed in
this file: squaring for radicals, substitution for linear solves, and a
minor-expansion rank oracle for matrices up to 5x5.
"""

import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from mincombs import (
    RadicalScalar,
    RationalMatrix,
    SingularMatrixError,
    rank,
    rat_solve,
    sqrt_rational,
)
from mincombs.exact import squarefree_decompose

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
nonneg_rationals = st.fractions(min_value=0, max_value=100, max_denominator=50)


# ---------------------------------------------------------------- radicals


def test_squarefree_decompose():
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(42) == (1, 42)
    assert squarefree_decompose(2940) == (14, 15)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_sqrt_rational_examples():
    assert sqrt_rational(8) == RadicalScalar({2: F(2)})  # 2*sqrt(2)
    assert sqrt_rational(F(1, 3)) == RadicalScalar({3: F(1, 3)})
    assert sqrt_rational(F(27, 14)) == RadicalScalar({42: F(3, 14)})
    assert sqrt_rational(0).is_zero()
    assert sqrt_rational(1) == 1
    with pytest.raises(ValueError):
        sqrt_rational(-1)


@given(nonneg_rationals)
def test_sqrt_rational_square_roundtrip(q):
    r = sqrt_rational(q)
    assert r * r == q


def test_radical_mul_examples():
    r2, r3 = sqrt_rational(2), sqrt_rational(3)
    assert r2 * r3 == sqrt_rational(6)
    two_r2 = sqrt_rational(8)
    assert two_r2 * two_r2 == 8
    # (3/14)sqrt(42) * (1/14)sqrt(70) = (3/196)sqrt(2940) = (3/14)sqrt(15)
    a = sqrt_rational(F(27, 14))
    b = sqrt_rational(F(5, 14))
    prod = a * b
    assert prod == RadicalScalar({15: F(3, 14)})
    assert prod * prod == F(27, 14) * F(5, 14)


def _random_radical(rng):
    terms = {}
    for _ in range(rng.randint(0, 3)):
        s = squarefree_decompose(rng.randint(1, 30))[1]
        terms[s] = F(rng.randint(-5, 5), rng.randint(1, 4))
    return RadicalScalar(terms)


def test_radical_ring_axioms(rng):
    for _ in range(200):
        a, b, c = (_random_radical(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == RadicalScalar()


def test_radical_inverse_roundtrip(rng):
    count = 0
    while count < 50:
        a = _random_radical(rng)
        if a.is_zero():
            continue
        assert a * a.inverse() == 1
        assert (a / a) == 1
        count += 1
    with pytest.raises(ZeroDivisionError):
        RadicalScalar().inverse()


def test_radical_float_agrees(rng):
    for _ in range(100):
        a = _random_radical(rng)
        expected = sum(float(c) * s**0.5 for s, c in a.terms.items())
        assert abs(float(a) - expected) < 1e-12


def test_radical_str_and_json():
    a = RadicalScalar({1: F(1, 2), 42: F(3, 14)})
    assert str(a) == "1/2 + 3/14*sqrt(42)"
    assert str(RadicalScalar()) == "0"
    assert str(sqrt_rational(3)) == "sqrt(3)"
    assert RadicalScalar.from_json(a.to_json()) == a
    assert a.to_json() == [
        {"coef": "1/2", "radicand": "1"},
        {"coef": "3/14", "radicand": "42"},
    ]


def test_radical_rational_predicates():
    assert RadicalScalar.from_rational(F(2, 3)).as_rational() == F(2, 3)
    assert not sqrt_rational(2).is_rational()
    with pytest.raises(ValueError):
        sqrt_rational(2).as_rational()


# ----------------------------------------------------------------- solving


def test_rat_solve_examples():
    assert rat_solve(RationalMatrix.identity(3), (1, 2, 3)) == (1, 2, 3)
    with pytest.raises(SingularMatrixError):
        rat_solve(RationalMatrix([[1, 1], [1, 1]]), (1, 0))
    A = RationalMatrix([[2, 1], [1, 1]])
    x = rat_solve(A, (1, 0))
    assert x == (1, -1)
    assert A.apply(x) == (F(1), F(0))  # substitution check


def test_rat_solve_dimension_errors():
    with pytest.raises(ValueError):
        rat_solve(RationalMatrix([[1, 2]]), (1,))
    with pytest.raises(ValueError):
        rat_solve(RationalMatrix.identity(2), (1, 2, 3))


def test_rat_solve_random_substitution(rng):
    solved = 0
    while solved < 50:
        n = rng.randint(1, 5)
        A = RationalMatrix(
            [[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        )
        b = tuple(F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n))
        try:
            x = rat_solve(A, b)
        except SingularMatrixError:
            assert rank(A) < n
            continue
        assert A.apply(x) == b
        solved += 1


# -------------------------------------------------------------------- rank


def _det_minor_expansion(rows):
    """Independent determinant oracle by first-row cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = F(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det_minor_expansion(minor)
    return total


def _rank_minor_oracle(A: RationalMatrix) -> int:
    """Rank = largest r with a nonzero r x r minor (matrices up to 5x5)."""
    for r in range(min(A.rows, A.cols), 0, -1):
        for rsel in combinations(range(A.rows), r):
            for csel in combinations(range(A.cols), r):
                sub = [[A.entries[i][j] for j in csel] for i in rsel]
                if _det_minor_expansion(sub) != 0:
                    return r
    return 0


def test_rank_examples():
    assert rank(RationalMatrix([[0] * 3] * 3)) == 0
    assert rank(RationalMatrix.identity(4)) == 4
    # single difference column from S = {(1,-1,0), (-2,2,0)}
    assert rank(RationalMatrix.from_columns([(-3, 3, 0)])) == 1


def test_rank_against_minor_oracle(rng):
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        A = RationalMatrix(
            [[F(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(cols)] for _ in range(rows)]
        )
        assert rank(A) == _rank_minor_oracle(A)


def test_matrix_plumbing():
    A = RationalMatrix([[1, 2], [3, 4]])
    assert A.transpose().entries == [[1, 3], [2, 4]]
    assert (A @ RationalMatrix.identity(2)) == A
    assert A.column(1) == (2, 4)
    assert RationalMatrix.from_columns([(1, 3), (2, 4)]) == A
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        A @ RationalMatrix.identity(3)
