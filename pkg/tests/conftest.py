"""Shared helpers for the test suite: seeded random rational data."""

import random
from fractions import Fraction

import pytest

from mincombs import rank, RationalMatrix


def random_rational(rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 4) -> Fraction:
    """Rational in [lo, hi] with denominator at most max_den."""
    den = rng.randint(1, max_den)
    num = rng.randint(lo * den, hi * den)
    return Fraction(num, den)


def random_vector(rng: random.Random, n: int, **kw) -> tuple:
    return tuple(random_rational(rng, **kw) for _ in range(n))


def random_point_set(rng: random.Random, n: int, size: int, **kw) -> list:
    """Distinct rational points; excludes the origin unless it comes up."""
    points = set()
    while len(points) < size:
        points.add(random_vector(rng, n, **kw))
    return sorted(points)


def random_affinely_independent(rng: random.Random, n: int, size: int) -> list:
    """Affinely independent set of `size` points in R^n (size <= n + 1)."""
    assert size <= n + 1
    while True:
        S = random_point_set(rng, n, size)
        cols = [[xj - xi for xj, xi in zip(S[j], S[0])] for j in range(1, size)]
        if size == 1 or rank(RationalMatrix.from_columns(cols)) == size - 1:
            return S


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260823)


# One verdict line per acceptance criterion, shown after the test run
# (regular prints are swallowed by pytest's output capture).
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
