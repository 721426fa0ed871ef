from __future__ import annotations

import pytest

from matherlift.ihcone import (
    ConeInput,
    GradedBetti,
    a1_link_betti,
    cone_ih_betti,
    is_rational_homology_manifold_A_d,
    thom_homology,
)

P1xP1 = GradedBetti((1, 0, 2, 0, 1))
P2 = GradedBetti((1, 0, 1, 0, 1))


def test_thom_shift():
    assert thom_homology(P1xP1).betti == (1, 0, 1, 0, 2, 0, 1)
    assert thom_homology(GradedBetti((1,))).betti == (1, 0, 1)
    assert thom_homology(P2).betti == (1, 0, 1, 0, 1, 0, 1)


def test_cone_over_segre_quadric():
    assert cone_ih_betti(ConeInput(P1xP1, 4, 0)).betti == (1, 0, 2, 0, 2, 0, 1)


def test_cone_over_plane():
    assert cone_ih_betti(ConeInput(P2, 4, 0)).betti == (1, 0, 1, 0, 1, 0, 1)


def test_cone_over_conic_is_a_rational_homology_manifold():
    conic = ConeInput(GradedBetti((1, 0, 1)), 2, 1)
    assert cone_ih_betti(conic) == thom_homology(conic.base_betti)


def test_ih_is_palindromic():
    ih = cone_ih_betti(ConeInput(P1xP1, 4, 0))
    assert ih.betti == ih.betti[::-1]


def test_duality_violation_rejected():
    with pytest.raises(ValueError, match="Poincaré"):
        ConeInput(GradedBetti((1, 0, 2, 0, 3)), 4, 0)


def test_pd_rank_bounded_by_middle_betti():
    with pytest.raises(ValueError):
        cone_ih_betti(ConeInput(GradedBetti((1, 0, 1)), 2, 2))


def test_links():
    assert a1_link_betti(2, 1, 0, 1).betti == (1, 0, 0, 1)
    assert a1_link_betti(1, 1, 0, 1).betti == (1, 0, 0, 1)
    # cone over a plane cubic: genus-1 link
    assert a1_link_betti(3, 1, 2, 1).betti == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        a1_link_betti(0, 1, 0, 1)


@pytest.mark.parametrize("d,expected", [(1, True), (2, True), (3, False)])
def test_rational_homology_manifold(d, expected):
    assert is_rational_homology_manifold_A_d(d) is expected
