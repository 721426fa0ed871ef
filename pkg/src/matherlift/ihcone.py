"""Rational (intersection) homology Betti numbers of projective cones.

The projective cone over a smooth ``B`` is the Thom space of the
tautological line bundle restricted to ``B``, so its reduced homology is
that of ``B`` shifted up by two.  Middle-perversity IH of the cone is
cohomology below the middle degree, homology above it, and the image of
the Poincaré map in the middle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class GradedBetti:
    betti: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti numbers are nonnegative")

    @classmethod
    def of(cls, values: Sequence[int]) -> "GradedBetti":
        vals = [int(v) for v in values]
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(vals))

    def __getitem__(self, k: int) -> int:
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def __len__(self):
        return len(self.betti)

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def padded(self, length: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(length))

    def to_json(self) -> list[int]:
        return list(self.betti)


@dataclass(frozen=True)
class ConeInput:
    base_betti: GradedBetti
    base_dim_real: int
    middle_pd_rank: int

    def __post_init__(self):
        top = self.base_dim_real
        if top % 2:
            raise ValueError("complex varieties have even real dimension")
        if len(self.base_betti) > top + 1:
            raise ValueError(f"base Betti numbers beyond degree {top}")
        b = self.base_betti
        if any(b[k] != b[top - k] for k in range(top + 1)):
            raise ValueError(f"base Betti numbers {b.betti} violate Poincaré duality")
        if self.middle_pd_rank < 0:
            raise ValueError("a rank is nonnegative")

    @property
    def n(self) -> int:
        """Complex dimension of the cone."""
        return self.base_dim_real // 2 + 1


def thom_homology(base: GradedBetti) -> GradedBetti:
    """Betti numbers of the projective cone: ``H_0 = Q`` and
    ``H_k = H_{k-2}(B)`` for ``k >= 2``."""
    return GradedBetti.of([1, 0] + list(base.betti)) if len(base) else GradedBetti.of([1])


def cone_ih_betti(c: ConeInput) -> GradedBetti:
    """IH Betti numbers of the cone over ``B``."""
    n = c.n
    H = thom_homology(c.base_betti)
    top = 2 * n
    if c.middle_pd_rank > H[n]:
        raise ValueError(f"Poincaré map rank {c.middle_pd_rank} exceeds b_{n} = {H[n]}")
    out = []
    for k in range(top + 1):
        if k < n:
            out.append(H[top - k])  # rational cohomology in degree top - k
        elif k == n:
            out.append(c.middle_pd_rank)
        else:
            out.append(H[k])
    return GradedBetti(tuple(out))


def a1_link_betti(deg_d: int, base_b0: int, base_b1: int, base_b2: int) -> GradedBetti:
    """Cohomology of the circle bundle ``L -> K`` of Euler class ``deg_d`` over
    a smooth curve ``K``, from the Gysin sequence.

    ``0 -> H^1(K) -> H^1(L) -> H^0(K) --d--> H^2(K) -> H^2(L) -> H^1(K) -> 0``
    """
    if deg_d == 0:
        raise ValueError("degree 0 gives a trivial circle bundle, not a cone link")
    if deg_d < 0:
        raise ValueError("degree must be positive")
    if base_b0 != base_b2:
        raise ValueError("a closed curve has b0 = b2")
    # multiplication by d is an isomorphism on each component's H^0 -> H^2
    rank_euler = base_b0
    h1 = base_b1 + (base_b0 - rank_euler)
    h2 = (base_b2 - rank_euler) + base_b1
    if h1 != h2:
        raise AssertionError("Poincaré duality of the link failed")
    # H^3(L) is one copy of Q per component of K, by duality with H^0
    return GradedBetti((base_b0, h1, h2, base_b0))


def is_rational_homology_manifold_A_d(d: int) -> bool:
    """Whether the cone over a smooth plane curve of degree ``d`` (the
    ``A_1`` surface singularity for ``d = 2``) has a rational homology
    sphere as link."""
    genus = (d - 1) * (d - 2) // 2
    link = a1_link_betti(d, 1, 2 * genus, 1)
    return link[1] == 0 and link[2] == 0
