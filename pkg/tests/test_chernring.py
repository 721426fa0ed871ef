from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from matherlift.chernring import (
    GradedClass,
    binom,
    csm_isolated,
    mather_from_polar,
    tensor_chern_generic,
    tensor_chern_terms,
)
from matherlift.exactmath import MultiPoly
from matherlift.lift.examples import verdier_table


def test_binomials():
    assert binom(4, 2) == 6
    assert binom(-1, 2) == 1
    assert binom(2, 3) == 0
    assert binom(3, -1) == 0


def _elementary(xs, i, zero):
    out = zero
    for combo in itertools.combinations(xs, i):
        term = zero + 1
        for x in combo:
            term = term * x
        out = out + term
    return out


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_formula_matches_chern_roots(k):
    names = tuple(f"x{r}" for r in range(k)) + ("a",)
    gens = MultiPoly.gens(names)
    xs, a = gens[:k], gens[k]
    zero = MultiPoly.zero(names)
    n = 4
    # c(E ⊗ L) = prod (1 + x_r + a): its degree-i part is e_i(x_r + a)
    expected = [_elementary([x + a for x in xs], i, zero) for i in range(n + 1)]
    got = tensor_chern_generic(
        lambda i: _elementary(xs, i, zero), lambda p, j: p * a**j, k, n, zero)
    assert got == expected


def test_displayed_rows():
    k = 7
    rows = {}
    for i, j, coeff in tensor_chern_terms(k, 4):
        rows.setdefault(i, {})[j] = coeff
    assert rows[1] == {0: 1, 1: k}
    assert rows[2] == {0: 1, 1: binom(k - 1, 1), 2: binom(k, 2)}
    assert rows[3] == {0: 1, 1: binom(k - 2, 1), 2: binom(k - 1, 2), 3: binom(k, 3)}
    assert rows[4] == {0: 1, 1: binom(k - 3, 1), 2: binom(k - 2, 2), 3: binom(k - 1, 3),
                       4: binom(k, 4)}


def test_graded_class_json_round_trip():
    T = verdier_table()
    c = T.cls({4: {"p1": 3, "p2": Fraction(-1, 2)}, 0: {"pt": 6}})
    assert GradedClass.from_json(c.to_json()) == c
    assert not c.is_integral()


def test_hyperplane_powers_on_segre_cone():
    T = verdier_table()
    X = T.fundamental_class()
    assert T.cap_hyperplane(X) == T.cls({4: {"p1": 1, "p2": 1}})
    assert T.cap_hyperplane(X, 2) == T.cls({2: {"d1": 1, "d2": 1}})
    assert T.cap_hyperplane(X, 3) == T.point().scale(2)


def test_mather_class_of_segre_cone():
    T = verdier_table()
    chain = [T.cls({4: {"p1": 1, "p2": 1}}), T.cls({2: {"d1": 1, "d2": 1}}), T.zero()]
    c_hat = mather_from_polar(chain, 3, T)
    assert c_hat == T.cls({6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": 4, "d2": 4},
                           0: {"pt": 6}})
    assert mather_from_polar([T.fundamental_class()] + chain, 3, T) == c_hat


def test_missing_polar_degree_rejected():
    T = verdier_table()
    with pytest.raises(ValueError, match="missing degrees"):
        mather_from_polar([T.zero()], 3, T)


def test_csm_corrections():
    T = verdier_table()
    c_hat = T.cls({6: {"X": 1}, 0: {"pt": 6}})
    assert csm_isolated(c_hat, [("pt", 2)]) == c_hat - T.point()
    assert csm_isolated(c_hat, [("pt", 1)]) == c_hat
    with_vertex = csm_isolated(c_hat, [("vertex", 2)], summands=("vertex",))
    assert with_vertex.coefficient(0, "vertex") == -1
    with pytest.raises(ValueError):
        csm_isolated(c_hat, [("vertex", 2)])
