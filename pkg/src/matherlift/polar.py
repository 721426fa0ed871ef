"""Polar varieties of projective hypersurfaces.

For ``X = V(f) ⊂ P^m`` the tangent space of the affine cone at a smooth
point is ``grad f(z)^⊥``, so the Schubert condition defining the i-th
polar variety for a flag ``V_*`` of ``Q^{m+1}`` becomes linear in the
gradient: ``<grad f(z), v> = 0`` for every ``v`` in ``V_i``.  The closure
over the smooth part is taken by saturating against the singular locus
``(f, df/dz_0, ..., df/dz_m)``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .errors import BadFlagError, DimensionMismatchError, GenericityError, PropertyViolation
from .exactmath import (
    Ideal,
    MultiPoly,
    gradient,
    groebner,
    hilbert_dim_degree,
    ideal_saturate,
)
from .grassmann import MAX_ATTEMPTS, Flag, random_flag

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hypersurface:
    f: MultiPoly
    name: str = ""

    def __post_init__(self):
        if not self.f:
            raise ValueError("the zero polynomial does not define a hypersurface")
        if not self.f.is_homogeneous():
            raise ValueError(f"{self.f} is not homogeneous")
        if self.f.total_degree() < 1:
            raise ValueError("a constant does not define a hypersurface")
        if len(self.f.vars) < 2:
            raise ValueError("need at least two projective coordinates")

    @property
    def ambient_vars(self) -> tuple[str, ...]:
        return self.f.vars

    @property
    def m(self) -> int:
        """Dimension of the projective ambient space."""
        return len(self.f.vars) - 1

    @property
    def n(self) -> int:
        return len(self.f.vars) - 2

    @property
    def degree(self) -> int:
        return self.f.total_degree()

    def ideal(self) -> Ideal:
        return Ideal(self.ambient_vars, [self.f])

    def singular_ideal(self) -> Ideal:
        return Ideal(self.ambient_vars, [self.f, *gradient(self.f)])

    def to_json(self) -> dict:
        return {"name": self.name, "f": self.f.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Hypersurface":
        if "f" in obj:
            return cls(MultiPoly.from_json(obj["f"]), obj.get("name", ""))
        return cls(MultiPoly.from_json(obj), obj.get("name", ""))


@dataclass(frozen=True)
class PolarStep:
    i: int
    ideal: Ideal
    proj_dim: int
    degree: int

    @property
    def empty(self) -> bool:
        return self.proj_dim < 0

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "dim": self.proj_dim,
            "deg": self.degree,
            "generators": [g.to_json() for g in self.ideal.generators],
        }


@dataclass(frozen=True)
class PolarChain:
    """Nonempty polar varieties ``N^0 = X ⊃ N^1 ⊃ ...`` for one flag.

    ``empty_from`` is the first index whose polar variety is empty.
    """

    hypersurface: Hypersurface
    flag: Flag
    steps: tuple[PolarStep, ...]
    empty_from: int
    flag_seed: object = None

    def step(self, i: int) -> PolarStep | None:
        return self.steps[i] if i < len(self.steps) else None

    def profile(self) -> tuple[tuple[int, int], ...]:
        return tuple((s.proj_dim, s.degree) for s in self.steps)

    def to_json(self) -> dict:
        return {
            "hypersurface": self.hypersurface.name,
            "n": self.hypersurface.n,
            "steps": [s.to_json() for s in self.steps],
            "empty_from": self.empty_from,
            "flag": self.flag.to_json(),
            "flag_seed": self.flag_seed,
        }


def _check_flag(H: Hypersurface, F: Flag):
    if F.m != H.m + 1:
        raise DimensionMismatchError(
            f"flag lives in Q^{F.m}, the cone over {H.name or H.f} in Q^{H.m + 1}"
        )


def polar_conditions(H: Hypersurface, F: Flag, i: int) -> list[MultiPoly]:
    """``<grad f, v_j>`` for the first ``i`` flag vectors."""
    grad = gradient(H.f)
    out = []
    for j in range(1, i + 1):
        v = F.vector(j)
        out.append(sum((c * g for c, g in zip(v, grad) if c), MultiPoly.zero(H.ambient_vars)))
    return out


def polar_ideal(H: Hypersurface, F: Flag, i: int) -> Ideal:
    """Saturated ideal of the projectivized polar variety ``N^i``; (1) means empty."""
    _check_flag(H, F)
    if not 1 <= i <= H.n + 1:
        raise ValueError(f"polar index {i} outside 1..{H.n + 1}")
    naive = Ideal(H.ambient_vars, [H.f, *polar_conditions(H, F, i)])
    return ideal_saturate(naive, H.singular_ideal())


def _step(H: Hypersurface, i: int, ideal: Ideal) -> PolarStep:
    gb = groebner(ideal)
    info = hilbert_dim_degree(gb)
    deg = info.degree if info.proj_dim >= 0 else 0
    return PolarStep(i, gb.as_ideal(), info.proj_dim, deg)


def polar_chain(H: Hypersurface, F: Flag, flag_seed=None) -> PolarChain:
    """Polar chain for the flag ``F``; raises ``BadFlagError`` when a
    nonempty step misses its expected codimension."""
    _check_flag(H, F)
    steps = [_step(H, 0, H.ideal())]
    if steps[0].proj_dim != H.n:
        raise ValueError(f"{H.f} does not cut out a hypersurface")
    empty_from = H.n + 1
    for i in range(1, H.n + 1):
        step = _step(H, i, polar_ideal(H, F, i))
        log.debug("N^%d: dim %d, deg %d", i, step.proj_dim, step.degree)
        if step.empty:
            empty_from = i
            break
        if step.proj_dim != H.n - i:
            raise BadFlagError(
                f"N^{i} has dimension {step.proj_dim}, expected {H.n - i} (codimension {i})"
            )
        steps.append(step)
    return PolarChain(H, F, tuple(steps), empty_from, flag_seed)


@dataclass(frozen=True)
class GoodFlagCertificate:
    flag: Flag
    seed: object
    checks: tuple[tuple[int, int, int], ...]
    empty_from: int
    chain: PolarChain = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "flag": self.flag.to_json(),
            "checks": [list(c) for c in self.checks],
            "empty_from": self.empty_from,
        }


def certify_flag(H: Hypersurface, F: Flag, seed=None) -> GoodFlagCertificate:
    chain = polar_chain(H, F, flag_seed=seed)
    checks = tuple((s.i, s.i, H.n - s.proj_dim) for s in chain.steps[1:])
    return GoodFlagCertificate(F, seed, checks, chain.empty_from, chain)


def certify_good_flag(H: Hypersurface, seed) -> GoodFlagCertificate:
    """Draw seeded flags until all polar steps have the expected codimension."""
    rng = random.Random(seed)
    for attempt in range(MAX_ATTEMPTS):
        flag_seed = rng.getrandbits(64)
        F = random_flag(H.m + 1, flag_seed)
        try:
            return certify_flag(H, F, seed=flag_seed)
        except BadFlagError as exc:
            log.info("flag attempt %d rejected: %s", attempt, exc)
    raise GenericityError(
        f"no good flag for {H.name or H.f} in {MAX_ATTEMPTS} attempts; "
        "the hypersurface may be too special"
    )


@dataclass
class FlagIndependenceReport:
    hypersurface: str
    seeds: list
    profiles: list
    lifted: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "hypersurface": self.hypersurface,
            "seeds": self.seeds,
            "profiles": [[list(p) for p in prof] for prof in self.profiles],
            "lifted": self.lifted,
            "consistent": True,
        }


def flag_independence_check(
    H: Hypersurface,
    seeds: Sequence,
    lift: Callable[[PolarChain], object] | None = None,
) -> FlagIndependenceReport:
    """Certify a flag per seed and require identical (dim, deg) profiles,
    and identical lifted classes when ``lift`` is given."""
    if len(seeds) < 2:
        raise ValueError("flag independence needs at least two seeds")
    profiles, lifted = [], []
    for seed in seeds:
        chain = certify_good_flag(H, seed).chain
        profiles.append((chain.profile(), chain.empty_from))
        if lift is not None:
            lifted.append(lift(chain))
    for seed, prof in zip(seeds[1:], profiles[1:]):
        if prof != profiles[0]:
            raise PropertyViolation(
                f"polar profiles differ: seed {seeds[0]} gives {profiles[0]}, seed {seed} gives {prof}"
            )
    for seed, cls in zip(seeds[1:], lifted[1:]):
        if cls != lifted[0]:
            raise PropertyViolation(
                f"lifted classes differ: seed {seeds[0]} gives {lifted[0]}, seed {seed} gives {cls}"
            )
    return FlagIndependenceReport(
        H.name or str(H.f), list(seeds), [p for p, _ in profiles], lifted
    )
