"""Monomial enumeration, norms, weights and the Weyl-chamber filter."""

from fractions import Fraction as F
from math import comb

import pytest

from mincombs import (
    WeightTable,
    in_weyl_chamber,
    monomial_norm_sq,
    monomial_string,
    multi_indices,
    weight_of,
)


def test_multi_indices_examples():
    cubic = multi_indices(3, 3)
    assert len(cubic) == 10
    assert cubic[0] == (3, 0, 0)
    assert (1, 1, 1) in cubic
    assert multi_indices(1, 5) == [(5,)]
    assert len(multi_indices(4, 3)) == 20
    with pytest.raises(ValueError):
        multi_indices(0, 3)


def test_multi_indices_descending_lex_and_counts():
    for n in range(1, 6):
        for d in range(1, 7):
            out = multi_indices(n, d)
            assert len(out) == comb(n + d - 1, d)
            assert out == sorted(out, reverse=True)
            assert len(set(out)) == len(out)
            assert all(sum(a) == d and len(a) == n for a in out)


def test_monomial_norm_sq_examples():
    assert monomial_norm_sq((3, 0, 0)) == 1
    assert monomial_norm_sq((2, 0, 1)) == F(1, 3)
    assert monomial_norm_sq((1, 1, 1)) == F(1, 6)
    for d in range(1, 9):
        assert monomial_norm_sq((d, 0, 0)) == 1


def test_weight_of_examples():
    assert weight_of((3, 0, 0)) == (2, -1, -1)
    assert weight_of((1, 1, 1)) == (0, 0, 0)
    assert weight_of((1, 0, 0, 2)) == (F(1, 4), F(-3, 4), F(-3, 4), F(5, 4))
    with pytest.raises(ValueError):
        weight_of((1, 1, 1), n=4)


def test_weights_sum_to_zero_and_injective():
    for n in (2, 3, 4):
        for d in (1, 2, 3):
            alphas = multi_indices(n, d)
            weights = [weight_of(a, n) for a in alphas]
            assert all(sum(w) == 0 for w in weights)
            assert len(set(weights)) == len(weights)


def test_in_weyl_chamber():
    assert in_weyl_chamber((2, -1, -1))
    assert in_weyl_chamber((0, 0, 0))
    assert not in_weyl_chamber((-1, 2, -1))
    assert in_weyl_chamber((F(1, 2), F(1, 2), -1))


def test_monomial_string():
    assert monomial_string((2, 1, 0)) == "x^2y"
    assert monomial_string((1, 1, 1)) == "xyz"
    assert monomial_string((1, 0, 0, 2)) == "xw^2"
    assert monomial_string((2,), names=("t",)) == "t^2"
    with pytest.raises(ValueError):
        monomial_string((1, 2), names=("x",))


def test_weight_table_build_and_roundtrip(tmp_path):
    table = WeightTable.build(3, 3)
    assert len(table) == 10
    assert table.alphas[0] == (3, 0, 0)
    assert table.weights[0] == (2, -1, -1)
    assert table.norms_sq[table.alphas.index((1, 1, 1))] == F(1, 6)
    assert table.alpha_of_weight((0, 0, 0)) == (1, 1, 1)
    assert table.index_of_weight((2, -1, -1)) == 0
    assert WeightTable.from_json(table.to_json()) == table
    path = tmp_path / "table.json"
    table.dump(path)
    import json

    assert WeightTable.from_json(json.loads(path.read_text())) == table
