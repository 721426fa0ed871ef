"""Dimension and degree of homogeneous ideals from the Hilbert series of
their lead-term ideal."""

from __future__ import annotations

from typing import NamedTuple

from ..errors import HomogeneityError
from .groebner import GroebnerBasis
from .poly import Exponent, monomial_divides, monomial_lcm

MAX_MONOMIAL_GENERATORS = 20


class HilbertData(NamedTuple):
    krull_dim: int
    degree: int

    @property
    def proj_dim(self) -> int:
        """Dimension of the projective zero set; -1 when it is empty."""
        return self.krull_dim - 1 if self.krull_dim > 0 else -1


def minimal_monomial_generators(exps: list[Exponent]) -> list[Exponent]:
    uniq = sorted(set(exps))
    return [e for e in uniq if not any(f != e and monomial_divides(f, e) for f in uniq)]


def hilbert_numerator(exps: list[Exponent], nvars: int) -> list[int]:
    """Numerator of the Hilbert series of ``k[x]/(x^e : e in exps)`` over
    ``(1-t)^nvars``, by inclusion-exclusion over lcms of generator subsets."""
    gens = minimal_monomial_generators(exps)
    if len(gens) > MAX_MONOMIAL_GENERATORS:
        raise ValueError(
            f"{len(gens)} minimal monomial generators; inclusion-exclusion is capped at "
            f"{MAX_MONOMIAL_GENERATORS}"
        )
    acc: dict[Exponent, int] = {(0,) * nvars: 1}
    for g in gens:
        nxt = dict(acc)
        for m, c in acc.items():
            lcm = monomial_lcm(m, g)
            nxt[lcm] = nxt.get(lcm, 0) - c
        acc = {m: c for m, c in nxt.items() if c}
    top = max((sum(m) for m in acc), default=0)
    coeffs = [0] * (top + 1)
    for m, c in acc.items():
        coeffs[sum(m)] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def dim_degree_from_numerator(coeffs: list[int], nvars: int) -> HilbertData:
    if not any(coeffs):
        return HilbertData(-1, 0)
    k = 0
    while sum(coeffs) == 0:
        # divide by (1 - t): prefix sums
        q, run = [], 0
        for a in coeffs[:-1]:
            run += a
            q.append(run)
        coeffs = q
        k += 1
    return HilbertData(nvars - k, sum(coeffs))


def hilbert_dim_degree(G: GroebnerBasis) -> HilbertData:
    """Krull dimension of ``k[x]/I`` and the degree of ``V(I)``."""
    if not all(g.is_homogeneous() for g in G.basis):
        raise HomogeneityError("Hilbert dimension/degree needs a homogeneous ideal")
    nvars = len(G.vars)
    return dim_degree_from_numerator(hilbert_numerator(G.leading_exponents(), nvars), nvars)
