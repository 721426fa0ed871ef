from __future__ import annotations

from fractions import Fraction

import pytest

from matherlift.builtin import example, verdier_flag
from matherlift.errors import GenericityError, IndeterminateOrderError, NonUniqueLiftError, \
    ScenarioFailure
from matherlift.exactmath import RationalMatrix
from matherlift.lift import (
    LiftStep,
    LocalParam,
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    eu_from_jacobian_multiplicity,
    jacobian_multiplicity,
    lift_codim1,
    small_resolution_c1,
)
from matherlift.lift import examples, scenario
from matherlift.polar import flag_independence_check, polar_chain


def test_lift_from_self_pairing():
    step = LiftStep.build("N1", 2, ("K",), [[2]], [2], ("K",))
    assert lift_codim1(step).part(2) == (1,)


def test_zero_pairings_give_zero():
    step = LiftStep.build("X", 4, ("p1", "p2"), examples.RULING_PAIRING, [0, 0])
    assert lift_codim1(step).part(4) == (0, 0)


def test_two_generator_solve():
    step = LiftStep.build("X", 2, ("d1", "d2"), [[0, 1], [1, 0]], [2, 0])
    assert lift_codim1(step).part(2) == (0, 2)


def test_singular_pairing_is_an_error():
    with pytest.raises(NonUniqueLiftError):
        lift_codim1(LiftStep.build("X", 2, ("d1", "d2"), [[1, 1], [1, 1]], [1, 1]))
    with pytest.raises(NonUniqueLiftError):
        lift_codim1(LiftStep.build("X", 2, ("d1", "d2"), [[1], [0]], [1]))


def test_lift_step_json_round_trip():
    step = LiftStep.build("X", 4, ("p1", "p2"), [[0, 1], [1, 0]], ["1/2", 3], ("d1", "d2"))
    assert LiftStep.from_json(step.to_json()) == step


def test_counted_pairings_on_segre_cone():
    H = example("quadric_cone")
    assert examples.verdier_pairing_by_counting(H, seed=4) == [[0, 1], [1, 0]]
    paths = examples.verdier_paths(polar_chain(H, verdier_flag()), seed=4)
    assert paths[0].step.cycle_pairings == (1, 1)
    k = paths[1].step
    assert (k.cycle_pairings[0], k.pairing[0, 0]) == (2, 2)


def test_canonical_lift_on_segre_cone():
    H = example("quadric_cone")
    T = examples.verdier_table()
    chain = polar_chain(H, verdier_flag())
    lifted = canonical_lift(chain, examples.verdier_paths(chain), T)
    assert lifted[1] == T.cls({4: {"p1": 1, "p2": 1}})
    assert lifted[2] == T.cls({2: {"d1": 1, "d2": 1}})
    assert lifted[3] == T.zero()


def test_lifted_classes_are_flag_independent():
    report = flag_independence_check(example("quadric_cone"), [21, 22, 23],
                                     lift=scenario.verdier_lift)
    assert len(set(report.lifted)) == 1


def test_jacobian_multiplicity_of_cusp_branch():
    cusp = LocalParam.from_polynomials([[0, 0, 1], [0, 0, 0, 1]])
    assert jacobian_multiplicity(cusp, [5, -7]) == 1
    assert certified_jacobian_multiplicity(examples.cusp_branch(), (3, 4)) == 1


def test_jacobian_multiplicity_guards():
    cusp = examples.cusp_branch()
    with pytest.raises(GenericityError):
        jacobian_multiplicity(cusp, [0, 0])
    with pytest.raises(ValueError):
        certified_jacobian_multiplicity(cusp, (1,))
    with pytest.raises(ValueError):
        LocalParam.from_polynomials([[0], [0]])


def test_short_truncation_is_reported():
    flat = LocalParam.from_polynomials([[0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0, 1]], truncation=4)
    with pytest.raises(IndeterminateOrderError):
        jacobian_multiplicity(flat, [1, 1])


@pytest.mark.parametrize("n_w,eu", [(0, 1), (1, 2), (3, 4)])
def test_euler_obstruction(n_w, eu):
    assert eu_from_jacobian_multiplicity(n_w) == Fraction(eu)


def test_small_resolution_correction():
    T = examples.curve_table(example("cusp"))
    c1 = T.point().scale(3)
    assert small_resolution_c1(c1, []) == c1
    comp = ResolutionComponent("pt", 1, T.point())
    assert small_resolution_c1(c1, [comp]) == T.point().scale(2)


def test_resolution_proper_transform():
    assert lift_codim1(examples.resolution_proper_transform(1)).part(2) == (0, 2)
    assert lift_codim1(examples.resolution_proper_transform(2)).part(2) == (2, 0)


def test_verdier_scenario_report():
    report = scenario.verdier_scenario()
    assert report["c_hat"] == {"X": "1", "p1": "3", "p2": "3", "d1": "4", "d2": "4", "pt": "6"}
    assert report["csm"]["pt"] == "5"
    assert report["c_X1"]["d1"] == "3" and report["c_X1"]["d2"] == "5"
    assert report["c_X2"]["d1"] == "5" and report["c_X2"]["d2"] == "3"
    assert report["N2_tilde"]["d2"] == "2"
    assert all(row["ok"] for row in report["checks"])
    for key in ("N1", "N2", "K", "p1", "p2", "d1", "d2", "c_hat", "csm", "c_X1", "c_X2", "N2_tilde"):
        assert key in report


def test_corrupted_table_fails_scenario():
    def corrupted():
        T = examples.verdier_table()
        action = dict(T.hyperplane_action)
        action[2] = RationalMatrix.from_rows([[1, 2]])
        return type(T)(T.n, T.generators, action, T.pairing)

    with pytest.raises(ScenarioFailure) as info:
        scenario.verdier_scenario(table_builder=corrupted)
    assert info.value.quantity == "b^3"


def test_curve_scenarios():
    node = scenario.node_scenario()
    assert node["c_hat"] == {"X": "1", "pt1": "2", "pt2": "2"}
    assert node["n_W"] == [0, 0]
    cusp = scenario.cusp_scenario()
    assert cusp["c_hat"] == {"X": "1", "pt": "3"}
    assert cusp["c1_resolution"]["pt"] == "2"
    assert cusp["csm"]["pt"] == "2"
