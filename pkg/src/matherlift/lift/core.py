"""Codimension-one lifts of cycle classes, the canonical lift of polar
classes, Jacobian multiplicities and the small-resolution correction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..chernring import GradedClass, IntersectionTable
from ..errors import GenericityError, NonUniqueLiftError
from ..exactmath import (
    DEFAULT_TRUNCATION,
    PowerSeries1,
    RationalMatrix,
    as_rational,
    series_order,
    solve,
)
from ..polar import PolarChain


@dataclass(frozen=True)
class LiftStep:
    """Data to lift a cycle into the IH of ``ambient_name`` in ``degree``.

    ``pairing[g][t]`` is the intersection number of generator ``g`` with
    test cycle ``t`` (of complementary degree); ``cycle_pairings[t]`` is the
    intersection number of the cycle being lifted with test cycle ``t``.
    """

    ambient_name: str
    degree: int
    generators: tuple[str, ...]
    pairing: RationalMatrix
    cycle_pairings: tuple[Fraction, ...]
    test_cycles: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.pairing.rows, self.pairing.cols) != (len(self.generators), len(self.cycle_pairings)):
            raise ValueError(
                f"pairing is {self.pairing.rows}x{self.pairing.cols} for "
                f"{len(self.generators)} generators and {len(self.cycle_pairings)} test cycles"
            )

    @classmethod
    def build(cls, ambient_name: str, degree: int, generators: Sequence[str],
              pairing: Sequence[Sequence], cycle_pairings: Sequence,
              test_cycles: Sequence[str] = ()) -> "LiftStep":
        return cls(ambient_name, degree, tuple(generators),
                   RationalMatrix.from_rows(pairing, len(cycle_pairings)),
                   tuple(as_rational(x) for x in cycle_pairings), tuple(test_cycles))

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient_name,
            "degree": self.degree,
            "generators": list(self.generators),
            "test_cycles": list(self.test_cycles),
            "pairing": self.pairing.to_json(),
            "cycle_pairings": [str(x) for x in self.cycle_pairings],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LiftStep":
        return cls.build(obj["ambient"], int(obj["degree"]), obj["generators"], obj["pairing"],
                         obj["cycle_pairings"], obj.get("test_cycles", ()))


def lift_codim1(step: LiftStep) -> GradedClass:
    """The unique combination of the ambient generators whose pairings with
    the test cycles equal ``step.cycle_pairings``."""
    P = step.pairing
    if P.rows != P.cols:
        raise NonUniqueLiftError(
            f"{P.rows} generators against {P.cols} test cycles: the lift is not determined"
        )
    x = solve(P.transpose(), step.cycle_pairings)
    if x is None:
        raise NonUniqueLiftError(f"pairing matrix on {step.ambient_name} is singular")
    if P.transpose().apply(x) != list(step.cycle_pairings):
        raise AssertionError("lift does not reproduce the prescribed pairings")
    gens = {step.degree: step.generators}
    return GradedClass.from_terms(gens, {step.degree: dict(zip(step.generators, x))})


@dataclass(frozen=True)
class LiftPath:
    """How a polar class reaches IH of X: lift into the first ambient, then
    push each of that ambient's generators onward (no pushforward when the
    ambient is X itself)."""

    step: LiftStep
    pushforward: Mapping[str, "LiftPath"] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"step": self.step.to_json()}
        if self.pushforward:
            out["pushforward"] = {g: p.to_json() for g, p in self.pushforward.items()}
        return out


def push_to_ambient(path: LiftPath, T_X: IntersectionTable) -> GradedClass:
    local = lift_codim1(path.step)
    d = path.step.degree
    if not path.pushforward:
        return GradedClass.from_terms(T_X.generators, {d: dict(zip(path.step.generators, local.part(d)))})
    total = T_X.zero()
    for name, coeff in zip(path.step.generators, local.part(d)):
        if coeff:
            try:
                image = push_to_ambient(path.pushforward[name], T_X)
            except KeyError:
                raise ValueError(f"no pushforward for generator {name!r} of "
                                 f"{path.step.ambient_name}") from None
            total = total + image.scale(coeff)
    return total


def canonical_lift(chain: PolarChain, paths: Sequence[LiftPath | None],
                   T_X: IntersectionTable) -> list[GradedClass]:
    """Unsigned classes ``[N^0], [N^1], ..., [N^n]`` lifted to IH of X."""
    n = chain.hypersurface.n
    if T_X.n != n:
        raise ValueError(f"table is for dimension {T_X.n}, chain for {n}")
    if len(paths) != n:
        raise ValueError(f"need one lift path per polar index 1..{n}, got {len(paths)}")
    out = [T_X.fundamental_class()]
    for i in range(1, n + 1):
        path = paths[i - 1]
        if i >= chain.empty_from:
            out.append(T_X.zero())
            continue
        if path is None:
            raise ValueError(f"N^{i} is nonempty but has no lift path")
        if path.step.degree != 2 * (n - i):
            raise ValueError(f"lift path for N^{i} ends in degree {path.step.degree}, "
                             f"expected {2 * (n - i)}")
        cls = push_to_ambient(path, T_X)
        out.append(cls)
    return out


@dataclass(frozen=True)
class LocalParam:
    """Local parametrization ``t -> (s_1(t), ..., s_m(t))`` of a branch,
    in affine coordinates."""

    coordinate_series: tuple[PowerSeries1, ...]

    def __post_init__(self):
        if all(s.is_certified_zero() for s in self.coordinate_series):
            raise ValueError("a parametrization cannot be identically zero")

    @classmethod
    def from_polynomials(cls, coords: Sequence[Sequence], truncation: int = DEFAULT_TRUNCATION
                         ) -> "LocalParam":
        return cls(tuple(PowerSeries1.polynomial(c, truncation) for c in coords))


@dataclass(frozen=True)
class ResolutionComponent:
    name: str
    n_W: int
    class_in_resolution: GradedClass

    def __post_init__(self):
        if self.n_W < 0:
            raise ValueError("Jacobian multiplicity is nonnegative")


def jacobian_multiplicity(p: LocalParam, proj_coeffs: Sequence) -> int:
    """Order at ``t = 0`` of the derivative of a linear projection composed
    with the parametrization (curve case)."""
    coeffs = [as_rational(c) for c in proj_coeffs]
    if len(coeffs) != len(p.coordinate_series):
        raise ValueError("one projection coefficient per coordinate")
    if not any(coeffs):
        raise GenericityError("zero projection; reseed")
    composed = None
    for c, s in zip(coeffs, p.coordinate_series):
        term = s.scale(c)
        composed = term if composed is None else composed + term
    deriv = composed.derivative()
    if deriv.is_certified_zero():
        raise GenericityError("projection is constant along the branch; reseed")
    return series_order(deriv)


def random_projection(dim: int, seed) -> list[int]:
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-99, 99) for _ in range(dim)]
        if all(coeffs):
            return coeffs


def certified_jacobian_multiplicity(p: LocalParam, seeds: Sequence = (0, 1)) -> int:
    """Jacobian multiplicity for two or more seeded general projections,
    required to agree."""
    if len(seeds) < 2:
        raise ValueError("genericity is certified by at least two projections")
    values = [jacobian_multiplicity(p, random_projection(len(p.coordinate_series), s))
              for s in seeds]
    if len(set(values)) != 1:
        raise GenericityError(f"Jacobian multiplicity depends on the projection: {values}")
    return values[0]


def eu_from_jacobian_multiplicity(n_W: int) -> Fraction:
    """Local Euler obstruction at a locally irreducible point: ``n_W + 1``."""
    if n_W < 0:
        raise ValueError("Jacobian multiplicity is nonnegative")
    return Fraction(n_W + 1)


def small_resolution_c1(c1_lift: GradedClass,
                        comps: Sequence[ResolutionComponent]) -> GradedClass:
    """First Chern class of a small resolution: ``ĉ^1 - Σ n_W [W]``."""
    result = c1_lift
    for comp in comps:
        if comp.n_W:
            result = result - comp.class_in_resolution.scale(comp.n_W)
    return result
