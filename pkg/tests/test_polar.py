from __future__ import annotations

import pytest

from matherlift.builtin import example, verdier_flag
from matherlift.errors import BadFlagError
from matherlift.exactmath import Ideal, MultiPoly, ideal_contains, ideal_saturate, same_ideal
from matherlift.grassmann import Flag
from matherlift.polar import (
    Hypersurface,
    certify_good_flag,
    flag_independence_check,
    polar_chain,
    polar_ideal,
)

Z5 = ("z0", "z1", "z2", "z3", "z4")


def test_hypersurface_json_round_trip():
    H = example("cusp")
    assert Hypersurface.from_json(H.to_json()) == H
    assert (H.m, H.n, H.degree) == (2, 1, 3)


def test_non_homogeneous_rejected():
    x, y = MultiPoly.gens(("x", "y"))
    with pytest.raises(ValueError):
        Hypersurface(x**2 - y)


def test_fixed_flag_ideals():
    H = example("quadric_cone")
    F = verdier_flag()
    z0, z1, z2, z3, z4 = MultiPoly.gens(Z5)
    assert same_ideal(polar_ideal(H, F, 1), Ideal(Z5, [z1 * z2 - z3**2, z0 - z3]))
    assert same_ideal(polar_ideal(H, F, 2), Ideal(Z5, [z2**2 - z3**2, z0 - z3, z1 - z2]))
    chain = polar_chain(H, F)
    assert chain.profile() == ((3, 2), (2, 2), (1, 2))
    assert chain.empty_from == 3


def test_polar_varieties_are_nested_and_saturated():
    H = example("quadric_cone")
    chain = certify_good_flag(H, 3).chain
    for outer, inner in zip(chain.steps, chain.steps[1:]):
        assert ideal_contains(inner.ideal, outer.ideal)
    for step in chain.steps[1:]:
        again = ideal_saturate(step.ideal, H.singular_ideal())
        assert same_ideal(again, step.ideal)


@pytest.mark.parametrize("name,profile,empty_from", [
    ("node", ((1, 2),), 1),
    ("cusp", ((1, 3), (0, 3)), 2),
    ("conic", ((1, 2), (0, 2)), 2),
    ("quadric_surface", ((2, 2), (1, 2), (0, 2)), 3),
])
def test_profiles(name, profile, empty_from):
    chain = certify_good_flag(example(name), 0xC0FFEE).chain
    assert chain.profile() == profile
    assert chain.empty_from == empty_from


def test_smooth_quadric_matches_closed_form():
    # a smooth degree-d hypersurface has polar degrees d (d - 1)^i
    report = flag_independence_check(example("quadric_surface"), [1, 2, 3])
    assert all(p == ((2, 2), (1, 2), (0, 2)) for p in report.profiles)


def test_flag_independence_on_segre_cone():
    report = flag_independence_check(example("quadric_cone"), [11, 12, 13, 14, 15])
    assert len({p for p in report.profiles}) == 1


def test_single_seed_rejected():
    with pytest.raises(ValueError):
        flag_independence_check(example("conic"), [1])


def test_special_flag_is_rejected():
    # V_1 along the z-axis: the first polar condition is df/dz = 0, identically zero
    H = example("node")
    F = Flag.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    with pytest.raises(BadFlagError, match="N\\^1"):
        polar_chain(H, F)
