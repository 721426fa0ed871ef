"""The twelve acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line, also when pytest
captures output.  ``python tests/test_acceptance.py`` runs them without pytest.
"""

from __future__ import annotations

import contextlib
import itertools
import json
import random
import sys

import pytest

from matherlift import cli
from matherlift.builtin import example, verdier_flag
from matherlift.chernring import (
    binom,
    mather_from_polar,
    tensor_chern_generic,
    tensor_chern_terms,
)
from matherlift.exactmath import (
    Ideal,
    MultiPoly,
    groebner,
    hilbert_dim_degree,
    ideal_saturate,
    same_ideal,
    s_polynomial,
)
from matherlift.grassmann import check_schubert_properties, prop13_witness, random_flag
from matherlift.ihcone import ConeInput, GradedBetti, a1_link_betti, cone_ih_betti, thom_homology
from matherlift.lift import (
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    lift_codim1,
    small_resolution_c1,
)
from matherlift.lift import examples, scenario
from matherlift.polar import certify_good_flag, flag_independence_check, polar_chain

from oracles import hilbert_function, random_ideal


@contextlib.contextmanager
def _report(number: int, title: str, out):
    try:
        yield
    except BaseException:
        out(f"criterion {number:2d}: FAIL  {title}")
        raise
    out(f"criterion {number:2d}: PASS  {title}")


@pytest.fixture
def criterion(capsys):
    def emit(line):
        with capsys.disabled():
            print(line)

    return lambda number, title: _report(number, title, emit)


def _verdier_table_classes():
    T = examples.verdier_table()
    chain = polar_chain(example("quadric_cone"), verdier_flag())
    lifted = canonical_lift(chain, examples.verdier_paths(chain), T)
    return T, lifted


def test_01_verdier_lift(criterion, capsys):
    with criterion(1, "verdier reproduces c_hat(X) = [X] + 3p1+3p2 + 4d1+4d2 + 6[pt]"):
        code = cli.main(["verdier", "--format", "json"])
        out = capsys.readouterr().out
        c_hat = json.loads(out)["c_hat"]
        assert code == 0
        assert c_hat == {"X": "1", "p1": "3", "p2": "3", "d1": "4", "d2": "4", "pt": "6"}


def test_02_resolution_classes(criterion):
    with criterion(2, "c*(X1) has (3d1+5d2), c*(X2) has (5d1+3d2)"):
        report = scenario.verdier_scenario()
        assert report["c_X1"] == {"X": "1", "p1": "3", "p2": "3", "d1": "3", "d2": "5", "pt": "6"}
        assert report["c_X2"] == {"X": "1", "p1": "3", "p2": "3", "d1": "5", "d2": "3", "pt": "6"}


def test_03_codim1_lift_step(criterion):
    with criterion(3, "pairings (N2.K, K.K) = (2, 2) give [N2] = [K] = d1 + d2"):
        T, lifted = _verdier_table_classes()
        chain = polar_chain(example("quadric_cone"), verdier_flag())
        path = examples.verdier_paths(chain)[1]
        step = path.step
        assert (step.cycle_pairings[0], step.pairing[0, 0]) == (2, 2)
        assert lift_codim1(step).part(2) == (1,)
        assert lifted[2] == T.cls({2: {"d1": 1, "d2": 1}})


def test_04_proper_transform_class(criterion):
    with criterion(4, "N2~.p2 = 0, N2~.p1 = 2 give [N2~] = 2d2 != [N2]"):
        step = examples.resolution_proper_transform(1)
        assert dict(zip(step.test_cycles, step.cycle_pairings)) == {"p1": 2, "p2": 0}
        tilde = lift_codim1(step)
        assert tilde.part(2) == (0, 2)
        _, lifted = _verdier_table_classes()
        assert tilde.part(2) != lifted[2].part(2)


def test_05_node(criterion):
    with criterion(5, "node: N1 empty, c_hat^1 = 2pt1 + 2pt2 = c^1 of the resolution"):
        H = example("node")
        chain = certify_good_flag(H, 0xC0FFEE).chain
        assert chain.empty_from == 1
        T = examples.curve_table(H, ("pt1", "pt2"))
        c_hat = mather_from_polar(canonical_lift(chain, [None], T), 1, T)
        c1 = T.cls({0: {"pt1": 2, "pt2": 2}})
        assert T.cls({0: dict(zip(("pt1", "pt2"), c_hat.part(0)))}) == c1
        comps = [ResolutionComponent(name, certified_jacobian_multiplicity(b), T.point(name))
                 for name, b in zip(("pt1", "pt2"), examples.node_branches())]
        assert small_resolution_c1(c1, comps) == c1


def test_06_cusp(criterion):
    with criterion(6, "cusp: n_W = 1 on two seeds, c_hat = [X] + 3[pt], c^1(P^1) = 2[pt]"):
        branch = examples.cusp_branch()
        assert certified_jacobian_multiplicity(branch, (0, 1)) == 1
        assert certified_jacobian_multiplicity(branch, (0xC0FFEE, 7)) == 1
        report = scenario.cusp_scenario()
        assert report["c_hat"] == {"X": "1", "pt": "3"}
        assert report["c1_resolution"] == {"X": "0", "pt": "2"}


def test_07_link_and_polar_ih(criterion):
    with criterion(7, "A1 link has H1 = H2 = 0; IH of N1 equals its homology"):
        link = a1_link_betti(2, 1, 0, 1)
        assert (link[1], link[2]) == (0, 0)
        n1 = ConeInput(GradedBetti((1, 0, 1)), 2, 1)
        assert cone_ih_betti(n1) == thom_homology(n1.base_betti)
        assert cone_ih_betti(n1).betti == (1, 0, 1, 0, 1)


def test_08_cone_ih(criterion):
    with criterion(8, "IH of the cone over P1xP1 is (1,0,2,0,2,0,1)"):
        ih = cone_ih_betti(ConeInput(GradedBetti((1, 0, 2, 0, 1)), 4, 0))
        assert ih.betti == (1, 0, 2, 0, 2, 0, 1)


def test_09_schubert_suite(criterion):
    with criterion(9, "Schubert properties on 200 samples in G(2,4), G(2,5); witnesses for i < n"):
        for m in (4, 5):
            report = check_schubert_properties(2, m, 200, 0xC0FFEE)
            assert report.samples == 200
            assert report.violations == {"nesting": 0, "regular_stratum": 0, "boundary": 0,
                                         "witness": 0}
            F = random_flag(m, m)
            for i in range(2):
                prop13_witness(F, i, 2, seed=i)


def _elementary(xs, i, zero):
    total = zero
    for combo in itertools.combinations(xs, i):
        term = zero + 1
        for x in combo:
            term = term * x
        total = total + term
    return total


def test_10_tensor_formula(criterion):
    with criterion(10, "tensor formula matches Chern roots for k <= 4 through degree 4"):
        for k in range(1, 5):
            names = tuple(f"x{r}" for r in range(k)) + ("a",)
            gens = MultiPoly.gens(names)
            xs, a = gens[:k], gens[k]
            zero = MultiPoly.zero(names)
            got = tensor_chern_generic(lambda i: _elementary(xs, i, zero),
                                       lambda p, j: p * a**j, k, 4, zero)
            assert got == [_elementary([x + a for x in xs], i, zero) for i in range(5)]
        # the four displayed rows, with symbolic k checked at several ranks
        for k in range(1, 9):
            rows = [[0] * (i + 1) for i in range(1, 5)]
            for i, j, coeff in tensor_chern_terms(k, 4):
                if i:
                    rows[i - 1][j] = coeff
            assert rows[0] == [1, k]
            assert rows[1] == [1, binom(k - 1, 1), binom(k, 2)]
            assert rows[2] == [1, binom(k - 2, 1), binom(k - 1, 2), binom(k, 3)]
            assert rows[3] == [1, binom(k - 3, 1), binom(k - 2, 2), binom(k - 1, 3), binom(k, 4)]


def test_11_flag_independence(criterion):
    with criterion(11, "profiles and lifted classes agree across 5 flag seeds"):
        report = flag_independence_check(example("quadric_cone"), [1, 2, 3, 4, 5],
                                         lift=scenario.verdier_lift)
        assert len(report.profiles) == 5 and len(set(report.profiles)) == 1
        assert len(set(report.lifted)) == 1
        c_hat = dict(report.lifted[0][-1])
        assert c_hat == {"X": "1", "p1": "3", "p2": "3", "d1": "4", "d2": "4", "pt": "6"}


def test_12_groebner_suite(criterion):
    with criterion(12, "Groebner oracles on 50 ideals, saturation idempotence, curve degrees"):
        for seed in range(50):
            ideal = random_ideal(1000 + seed)
            G = groebner(ideal)
            assert all(G.reduce(g).is_zero() for g in ideal.generators)
            for i, a in enumerate(G.basis):
                for b in G.basis[i + 1:]:
                    assert G.reduce(s_polynomial(a, b, G.order)).is_zero()
        xyz = ("x", "y", "z")
        for seed in range(5):
            ideal = random_ideal(seed, homogeneous=True)
            g = Ideal(xyz, [MultiPoly.gens(xyz)[seed % 3]])
            sat = ideal_saturate(ideal, g)
            assert same_ideal(ideal_saturate(sat, g), sat)
        for name in ("conic", "cusp", "node"):
            H = example(name)
            G = groebner(H.ideal())
            info = hilbert_dim_degree(G)
            hf = [hilbert_function(G.leading_exponents(), 3, s) for s in (9, 10)]
            assert hf[1] - hf[0] == info.degree == H.degree
            rng = random.Random(name)
            line = MultiPoly.linear_form(H.ambient_vars, [rng.randint(1, 60) for _ in range(3)])
            sliced = hilbert_dim_degree(groebner(H.ideal().with_generators(line)))
            assert (sliced.proj_dim, sliced.degree) == (0, info.degree)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
