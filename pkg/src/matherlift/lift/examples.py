"""Intersection tables and lift paths for the built-in examples.

The tables are hand-encoded from the known cycle structure (rulings of
the Segre quadric and their cones, points on curves).  The pairing
numbers fed to each lift, by contrast, are counted from the polar ideals
themselves: a class paired with a test cycle is the degree of the
zero-dimensional intersection of their ideals.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..chernring import GradedClass, IntersectionTable
from ..errors import GenericityError
from ..exactmath import Ideal, MultiPoly, RationalMatrix, groebner, hilbert_dim_degree
from ..polar import Hypersurface, PolarChain
from .core import LiftPath, LiftStep, LocalParam, lift_codim1

# p_i . d_j = [pt] for i != j, 0 for i == j
RULING_PAIRING = [[0, 1], [1, 0]]


def intersection_count(ideal: Ideal, *extra: MultiPoly) -> int:
    """Number of points, with multiplicity, of ``V(ideal + extra)``."""
    info = hilbert_dim_degree(groebner(ideal.with_generators(*extra)))
    if info.proj_dim > 0:
        raise GenericityError(f"intersection is {info.proj_dim}-dimensional, not a point count")
    return info.degree if info.proj_dim == 0 else 0


def _nonzero_pair(rng: random.Random) -> tuple[int, int]:
    while True:
        s, t = rng.randint(-99, 99), rng.randint(-99, 99)
        if s and t:
            return s, t


# -- the cone over P^1 x P^1 ------------------------------------------------


def verdier_table() -> IntersectionTable:
    """IH of the cone over the Segre quadric.

    ``d_1, d_2``: the two rulings of B; ``p_i``: the cone over ``d_i``.
    Cap with b sends ``p_i -> d_i`` and ``d_i -> [pt]``; the image of
    ``[X]`` (the class of b itself) is obtained as a codimension-one lift
    from ``b . d_i = [pt]``.
    """
    gens = {6: ("X",), 4: ("p1", "p2"), 2: ("d1", "d2"), 0: ("pt",)}
    b_lift = lift_codim1(LiftStep.build("X", 4, gens[4], RULING_PAIRING, [1, 1], ("d1", "d2")))
    partial = {
        4: RationalMatrix.identity(2),
        2: RationalMatrix.from_rows([[1, 1]]),
    }
    action = {6: RationalMatrix.from_rows([[c] for c in b_lift.part(4)]), **partial}
    pairing = {
        2: RationalMatrix.from_rows(RULING_PAIRING),  # rows d, columns p
        0: RationalMatrix.from_rows([[1]]),
    }
    return IntersectionTable(3, gens, action, pairing)


def ruling_line(H: Hypersurface, family: int, rng: random.Random, cone: bool = False) -> list[MultiPoly]:
    """Linear equations of a random ruling line of ``B = X ∩ {z4 = 0}``
    (``family`` 1: ``P^1_x × {y}``, 2: ``{x} × P^1_y``), or of its cone."""
    z0, z1, z2, z3, z4 = MultiPoly.gens(H.ambient_vars)
    s, t = _nonzero_pair(rng)
    if family == 1:
        eqs = [t * z0 - s * z1, t * z2 - s * z3]
    elif family == 2:
        eqs = [t * z0 - s * z2, t * z1 - s * z3]
    else:
        raise ValueError("ruling families are 1 and 2")
    return eqs if cone else eqs + [z4]


def verdier_paths(chain: PolarChain, seed=0) -> list[LiftPath | None]:
    """Lift paths for ``N^1`` and ``N^2`` of the cone over the Segre quadric.

    ``N^1`` lifts straight into ``IH_4(X)``.  ``N^2`` first lifts into
    ``IH_2(N^1) = Q[K]`` with ``K = N^1 ∩ {z4 = 0}``, and ``K`` is then
    lifted into ``IH_2(X)``.
    """
    H = chain.hypersurface
    rng = random.Random(seed)
    z4 = MultiPoly.gens(H.ambient_vars)[4]
    n1, n2 = chain.step(1), chain.step(2)
    paths: list[LiftPath | None] = [None, None, None]
    if n1 is None:
        return paths
    n1_pairs = [intersection_count(n1.ideal, *ruling_line(H, j, rng)) for j in (1, 2)]
    paths[0] = LiftPath(LiftStep.build("X", 4, ("p1", "p2"), RULING_PAIRING, n1_pairs, ("d1", "d2")))
    if n2 is None:
        return paths
    hyper = MultiPoly.linear_form(H.ambient_vars, [rng.randint(-99, 99) for _ in H.ambient_vars])
    k_self = intersection_count(n1.ideal, z4, hyper)
    n2_k = intersection_count(n2.ideal, z4)
    k_pairs = [intersection_count(n1.ideal, z4, *ruling_line(H, j, rng, cone=True)) for j in (1, 2)]
    k_path = LiftPath(LiftStep.build("X", 2, ("d1", "d2"), RULING_PAIRING, k_pairs, ("p1", "p2")))
    paths[1] = LiftPath(LiftStep.build("N1", 2, ("K",), [[k_self]], [n2_k], ("K",)), {"K": k_path})
    return paths


def verdier_pairing_by_counting(H: Hypersurface, seed=0) -> list[list[int]]:
    """``p_i . d_j`` counted from ideals, to cross-check the encoded table."""
    rng = random.Random(seed)
    X = H.ideal()
    return [
        [intersection_count(X, *ruling_line(H, i, rng, cone=True), *ruling_line(H, j, rng))
         for j in (1, 2)]
        for i in (1, 2)
    ]


def resolution_proper_transform(resolution: int) -> LiftStep:
    """``[Ñ²]`` in ``H_2(X_r)``: it lies in two fibres over ``P^1_x`` (r = 1)
    or ``P^1_y`` (r = 2), so it misses the fibre class and meets the other
    cone class twice."""
    pairings = {1: (2, 0), 2: (0, 2)}[resolution]
    return LiftStep.build(f"X{resolution}", 2, ("d1", "d2"), RULING_PAIRING, pairings, ("p1", "p2"))


# -- plane curves ---------------------------------------------------------------


def curve_table(H: Hypersurface, points=("pt",), seed=0) -> IntersectionTable:
    """IH of a plane curve: ``[X]`` in degree 2 and one point class per
    component of the normalization.  For a single point class the
    hyperplane image of ``[X]`` is the curve's degree."""
    if H.n != 1:
        raise ValueError("curve tables are for plane curves")
    gens = {2: ("X",), 0: tuple(points)}
    if len(points) == 1:
        action = RationalMatrix.from_rows([[H.degree]])
    else:
        action = RationalMatrix.from_rows([[c] for c in node_hyperplane_counts(H, seed)])
    pairing = {0: RationalMatrix.from_rows([[1]] * len(points))}
    return IntersectionTable(1, gens, {2: action}, pairing)


def node_hyperplane_counts(H: Hypersurface, seed=0) -> list[int]:
    """Points of a generic line on each line component of ``xy = 0``."""
    x, y, z = MultiPoly.gens(H.ambient_vars)
    rng = random.Random(seed)
    line = MultiPoly.linear_form(H.ambient_vars, [rng.randint(1, 99) for _ in range(3)])
    ideal = Ideal(H.ambient_vars, [line])
    return [intersection_count(ideal, comp) for comp in (x, y)]


def point_paths(chain: PolarChain) -> list[LiftPath | None]:
    """For a curve with ``IH_0 = Q[pt]``: ``[N^1] = deg(N^1) [pt]``, read
    off from the pairing of ``N^1`` with the fundamental class."""
    n1 = chain.step(1)
    if n1 is None:
        return [None]
    return [LiftPath(LiftStep.build("X", 0, ("pt",), [[1]], [n1.degree], ("X",)))]


def cusp_branch(truncation: int = 16) -> LocalParam:
    """Normalization of ``x^3 + y^2 z = 0`` near the cusp, chart ``z = 1``:
    ``t -> (-t^2, t^3)``."""
    return LocalParam.from_polynomials([[0, 0, -1], [0, 0, 0, 1]], truncation)


def node_branches(truncation: int = 16) -> list[LocalParam]:
    """The two branches ``t -> (t, 0)`` and ``t -> (0, t)`` of ``xy = 0``."""
    return [
        LocalParam.from_polynomials([[0, 1], [0]], truncation),
        LocalParam.from_polynomials([[0], [0, 1]], truncation),
    ]


def zero_class_over(T: IntersectionTable) -> GradedClass:
    return T.zero()


def as_fraction_pairs(values) -> list[Fraction]:
    return [Fraction(v) for v in values]
