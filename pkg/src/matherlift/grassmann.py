"""Rational flags, points of G(n, m) and Schubert-variety membership.

For a flag ``V_*`` in ``Q^m`` the Schubert variety ``M^i`` is the set of
n-planes ``W`` with ``W + V_{m-n+i-1} != Q^m``; its smooth strata ``M^{i,k}``
are where that sum has codimension ``k + 1``.  Everything is decided by
exact ranks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, GenericityError
from .exactmath import RationalMatrix, matrix_rank

MAX_ATTEMPTS = 16
COEFF_RANGE = 99


def _rng(seed) -> random.Random:
    return random.Random(seed)


def random_integer_rows(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    return [[rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(cols)] for _ in range(rows)]


@dataclass(frozen=True)
class Flag:
    """Complete flag given by an ordered basis; ``V_j`` is spanned by the
    first ``j`` rows."""

    basis: RationalMatrix

    def __post_init__(self):
        if self.basis.rows != self.basis.cols:
            raise DimensionMismatchError("a complete flag needs m basis vectors in Q^m")
        if matrix_rank(self.basis) != self.m:
            raise ValueError("flag basis is not invertible")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Flag":
        return cls(RationalMatrix.from_rows(rows))

    @property
    def m(self) -> int:
        return self.basis.rows

    def stage(self, j: int) -> RationalMatrix:
        if not 0 <= j <= self.m:
            raise IndexError(f"flag stage {j} outside 0..{self.m}")
        return RationalMatrix.from_rows(self.basis.to_rows()[:j], self.m)

    @property
    def stages(self) -> list[RationalMatrix]:
        return [self.stage(j) for j in range(self.m + 1)]

    def vector(self, j: int) -> tuple[Fraction, ...]:
        """The basis vector added at stage ``j`` (1-based)."""
        return self.basis.row(j - 1)

    def to_json(self) -> list[list[str]]:
        return self.basis.to_json()

    @classmethod
    def from_json(cls, rows) -> "Flag":
        return cls.from_rows(rows)


@dataclass(frozen=True)
class GrassmannPoint:
    n: int
    m: int
    basis: RationalMatrix

    def __post_init__(self):
        if (self.basis.rows, self.basis.cols) != (self.n, self.m):
            raise DimensionMismatchError(
                f"basis is {self.basis.rows}x{self.basis.cols}, expected {self.n}x{self.m}"
            )
        if matrix_rank(self.basis) != self.n:
            raise ValueError("basis rows are linearly dependent")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GrassmannPoint":
        M = RationalMatrix.from_rows(rows)
        return cls(M.rows, M.cols, M)


def random_flag(m: int, seed) -> Flag:
    """Flag from a seeded random integer matrix, regenerated until invertible."""
    if m < 1:
        raise ValueError("ambient dimension must be positive")
    rng = _rng(seed)
    for _ in range(MAX_ATTEMPTS):
        M = RationalMatrix.from_rows(random_integer_rows(rng, m, m))
        if matrix_rank(M) == m:
            return Flag(M)
    raise GenericityError(f"no invertible {m}x{m} matrix in {MAX_ATTEMPTS} draws")


def random_point(n: int, m: int, rng: random.Random) -> GrassmannPoint:
    for _ in range(MAX_ATTEMPTS):
        M = RationalMatrix.from_rows(random_integer_rows(rng, n, m))
        if matrix_rank(M) == n:
            return GrassmannPoint(n, m, M)
    raise GenericityError(f"no rank-{n} {n}x{m} matrix in {MAX_ATTEMPTS} draws")


def schubert_defect(W: GrassmannPoint, F: Flag, i: int) -> int:
    """Stratum index ``k`` with ``W`` in ``M^{i,k}``, or -1 when ``W`` is not in ``M^i``."""
    if W.m != F.m:
        raise DimensionMismatchError(f"W lives in Q^{W.m}, flag in Q^{F.m}")
    if not 0 <= i <= W.n + 1:
        raise ValueError(f"Schubert index {i} outside 0..{W.n + 1}")
    j = W.m - W.n + i - 1
    if j < 0:
        raise DimensionMismatchError(f"G({W.n},{W.m}) has no flag stage {j}")
    stacked = W.basis.vstack(F.stage(min(j, F.m)))
    codim = W.m - matrix_rank(stacked)
    return codim - 1


def stratum_classify(W: GrassmannPoint, F: Flag) -> list[tuple[int, int]]:
    """All ``(i, k)`` with ``W`` in ``M^{i,k}``, for ``i = 0..n+1``."""
    out = []
    defects = [schubert_defect(W, F, i) for i in range(W.n + 2)]
    for i, k in enumerate(defects):
        if k >= 0:
            out.append((i, k))
    # M^{i+1} ⊂ M^i: membership must be a prefix of 0..n+1
    members = [i for i, _ in out]
    if members != list(range(len(members))):
        raise AssertionError(f"Schubert nesting violated: {defects}")
    return out


def prop13_witness(F: Flag, i: int, n: int, seed=0) -> GrassmannPoint:
    """An n-plane in ``M^{i,0} ∩ M^{i+1,0}`` through the vector ``α`` with
    ``V_{m-n+i} = V_{m-n+i-1} + lin{α}``.

    ``W`` is spanned by ``α`` and ``n - 1`` random vectors of a random
    hyperplane ``H ⊃ V_{m-n+i}``, so both sums with the flag stages equal ``H``.
    """
    m = F.m
    if not 0 <= i < n:
        raise ValueError(f"witness needs 0 <= i < n, got i={i}, n={n}")
    if n >= m:
        raise DimensionMismatchError(f"G({n},{m}) has no proper Schubert varieties")
    j = m - n + i
    alpha = list(F.vector(j))
    base = F.stage(j).to_rows()
    rng = _rng(seed)
    for _ in range(MAX_ATTEMPTS):
        extra = random_integer_rows(rng, m - 1 - j, m)
        H = base + [[Fraction(x) for x in r] for r in extra]
        combos = random_integer_rows(rng, n - 1, len(H))
        rows = [alpha] + [
            [sum((c * h[k] for c, h in zip(combo, H)), Fraction(0)) for k in range(m)]
            for combo in combos
        ]
        M = RationalMatrix.from_rows(rows, m)
        if matrix_rank(M) != n:
            continue
        W = GrassmannPoint(n, m, M)
        if schubert_defect(W, F, i) == 0 and schubert_defect(W, F, i + 1) == 0:
            return W
    raise GenericityError(f"no witness for i={i} in {MAX_ATTEMPTS} attempts")


def special_point(n: int, F: Flag, rng: random.Random) -> GrassmannPoint:
    """Random n-plane whose basis vectors are drawn from random flag stages,
    so that samples land in deep Schubert strata as well as generic ones."""
    m = F.m
    for _ in range(MAX_ATTEMPTS):
        rows = []
        for _ in range(n):
            j = rng.randint(1, m)
            coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(j)]
            rows.append([sum((c * F.basis[r, k] for r, c in enumerate(coeffs)), Fraction(0))
                         for k in range(m)])
        M = RationalMatrix.from_rows(rows, m)
        if matrix_rank(M) == n:
            return GrassmannPoint(n, m, M)
    raise GenericityError("could not sample an n-plane")


@dataclass
class SchubertReport:
    n: int
    m: int
    samples: int
    violations: dict[str, int]
    witnesses: int
    strata_seen: dict[str, int]

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {
            "grassmannian": f"G({self.n},{self.m})",
            "samples": self.samples,
            "violations": self.violations,
            "witnesses_found": self.witnesses,
            "strata_seen": self.strata_seen,
            "ok": self.ok,
        }


def check_schubert_properties(n: int, m: int, samples: int, seed) -> SchubertReport:
    """Sample ``(W, flag, i)`` triples and count violations of the nesting,
    stratum, and boundary properties; also build a witness for every ``i < n``."""
    rng = _rng(seed)
    violations = {"nesting": 0, "regular_stratum": 0, "boundary": 0, "witness": 0}
    strata: dict[str, int] = {}
    for _ in range(samples):
        F = random_flag(m, rng.getrandbits(64))
        W = special_point(n, F, rng) if rng.random() < 0.75 else random_point(n, m, rng)
        i = rng.randint(0, n)
        d_i, d_next = schubert_defect(W, F, i), schubert_defect(W, F, i + 1)
        if d_next >= 0 and d_i < 0:
            violations["nesting"] += 1
        if d_next >= 0 and d_i == 0 and d_next != 0:
            violations["regular_stratum"] += 1
        if schubert_defect(W, F, 0) < 0 or schubert_defect(W, F, n + 1) != -1:
            violations["boundary"] += 1
        tag = f"M^{i}" + (f",{d_i}" if d_i >= 0 else " (out)")
        strata[tag] = strata.get(tag, 0) + 1
    witnesses = 0
    F = random_flag(m, rng.getrandbits(64))
    for i in range(n):
        try:
            prop13_witness(F, i, n, seed=rng.getrandbits(64))
            witnesses += 1
        except GenericityError:
            violations["witness"] += 1
    return SchubertReport(n, m, samples, violations, witnesses, dict(sorted(strata.items())))
