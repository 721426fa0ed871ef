"""Graded homology classes, the tensor-product Chern class formula, and
Mather/CSM classes built from polar classes.

Classes are stored homologically: the i-th Chern class of an
n-dimensional X lives in degree ``2(n - i)``.  Multiplying by the
hyperplane class lowers the degree by two and is given, per degree, by a
rational matrix in an ``IntersectionTable``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Sequence, TypeVar

from .exactmath import RationalMatrix, as_rational

T = TypeVar("T")


def binom(p: int, q: int) -> int:
    """Generalized binomial ``p (p-1) ... (p-q+1) / q!``; zero for ``q < 0``."""
    if q < 0:
        return 0
    num = 1
    for r in range(q):
        num *= p - r
    return num // factorial(q)


def _gens(generators: Mapping[int, Sequence[str]]) -> dict[int, tuple[str, ...]]:
    return {int(d): tuple(names) for d, names in sorted(generators.items())}


@dataclass(frozen=True, eq=False)
class GradedClass:
    """Rational combination of named generators in even degrees."""

    generators: Mapping[int, tuple[str, ...]]
    coefficients: Mapping[int, tuple[Fraction, ...]]

    def __post_init__(self):
        for d, coeffs in self.coefficients.items():
            if d not in self.generators:
                raise ValueError(f"coefficients in degree {d} without generators")
            if len(coeffs) != len(self.generators[d]):
                raise ValueError(f"degree {d}: {len(coeffs)} coefficients for "
                                 f"{len(self.generators[d])} generators")
            if d % 2:
                raise ValueError("classes live in even degrees")

    @classmethod
    def zero(cls, generators: Mapping[int, Sequence[str]]) -> "GradedClass":
        gens = _gens(generators)
        return cls(gens, {d: (Fraction(0),) * len(names) for d, names in gens.items()})

    @classmethod
    def from_terms(cls, generators: Mapping[int, Sequence[str]],
                   terms: Mapping[int, Mapping[str, object]]) -> "GradedClass":
        gens = _gens(generators)
        coeffs = {d: [Fraction(0)] * len(names) for d, names in gens.items()}
        for d, part in terms.items():
            if d not in gens:
                raise ValueError(f"no generators in degree {d}")
            for name, c in part.items():
                try:
                    coeffs[d][gens[d].index(name)] += as_rational(c)
                except ValueError:
                    raise ValueError(f"unknown generator {name!r} in degree {d}") from None
        return cls(gens, {d: tuple(v) for d, v in coeffs.items()})

    def part(self, d: int) -> tuple[Fraction, ...]:
        return tuple(self.coefficients.get(d, (Fraction(0),) * len(self.generators.get(d, ()))))

    def coefficient(self, d: int, name: str) -> Fraction:
        try:
            return self.part(d)[self.generators[d].index(name)]
        except (KeyError, ValueError):
            raise ValueError(f"unknown generator {name!r} in degree {d}") from None

    def support(self) -> list[int]:
        return [d for d in self.generators if any(self.part(d))]

    def _same_shape(self, other: "GradedClass"):
        if dict(self.generators) != dict(other.generators):
            raise ValueError("classes over different generator lists")

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._same_shape(other)
        return GradedClass(self.generators, {
            d: tuple(a + b for a, b in zip(self.part(d), other.part(d))) for d in self.generators
        })

    def scale(self, c) -> "GradedClass":
        c = as_rational(c)
        return GradedClass(self.generators,
                           {d: tuple(c * a for a in self.part(d)) for d in self.generators})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return dict(self.generators) == dict(other.generators) and all(
            self.part(d) == other.part(d) for d in self.generators
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for d in self.generators for c in self.part(d))

    def with_generator(self, degree: int, name: str) -> "GradedClass":
        """Same class over a generator list extended by ``name``."""
        gens = dict(self.generators)
        gens[degree] = tuple(gens.get(degree, ())) + (name,)
        coeffs = {d: self.part(d) for d in self.generators}
        coeffs[degree] = self.part(degree) + (Fraction(0),)
        return GradedClass(_gens(gens), coeffs)

    def to_json(self) -> dict:
        return {
            f"deg{d}": {name: str(c) for name, c in zip(self.generators[d], self.part(d))}
            for d in sorted(self.generators, reverse=True)
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Mapping[str, str]]) -> "GradedClass":
        gens, terms = {}, {}
        for key, part in obj.items():
            if not key.startswith("deg"):
                raise ValueError(f"bad degree key {key!r}")
            d = int(key[3:])
            gens[d] = tuple(part)
            terms[d] = dict(part)
        return cls.from_terms(gens, terms)

    def __str__(self):
        pieces = []
        for d in sorted(self.generators, reverse=True):
            for name, c in zip(self.generators[d], self.part(d)):
                if not c:
                    continue
                label = f"[{name}]" if name in ("X", "pt", "vertex") or "_" in name else name
                pieces.append(label if c == 1 else f"{c}{label}" if c != -1 else f"-{label}")
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"

    def __repr__(self):
        return f"GradedClass({self})"


@dataclass(frozen=True, eq=False)
class IntersectionTable:
    """Generators of the (intersection) homology of an n-dimensional space,
    cap product with the hyperplane class, and the intersection pairing.

    ``hyperplane_action[d]`` has one row per generator in degree ``d - 2``
    and one column per generator in degree ``d``.  ``pairing[d]`` (for
    ``d <= n``) has rows for degree ``d`` and columns for degree ``2n - d``.
    """

    n: int
    generators: Mapping[int, tuple[str, ...]]
    hyperplane_action: Mapping[int, RationalMatrix]
    pairing: Mapping[int, RationalMatrix] = field(default_factory=dict)
    fundamental: str = "X"

    def __post_init__(self):
        gens = self.generators
        if tuple(gens.get(2 * self.n, ())) != (self.fundamental,):
            raise ValueError(f"top degree must be spanned by the fundamental class {self.fundamental}")
        for d, M in self.hyperplane_action.items():
            shape = (len(gens.get(d - 2, ())), len(gens.get(d, ())))
            if (M.rows, M.cols) != shape:
                raise ValueError(f"hyperplane action on degree {d}: {M.rows}x{M.cols}, "
                                 f"expected {shape[0]}x{shape[1]}")
        for d, M in self.pairing.items():
            shape = (len(gens.get(d, ())), len(gens.get(2 * self.n - d, ())))
            if (M.rows, M.cols) != shape:
                raise ValueError(f"pairing in degree {d}: {M.rows}x{M.cols}, "
                                 f"expected {shape[0]}x{shape[1]}")

    def fundamental_class(self) -> GradedClass:
        return GradedClass.from_terms(self.generators, {2 * self.n: {self.fundamental: 1}})

    def zero(self) -> GradedClass:
        return GradedClass.zero(self.generators)

    def point(self, name: str = "pt") -> GradedClass:
        return GradedClass.from_terms(self.generators, {0: {name: 1}})

    def cls(self, terms: Mapping[int, Mapping[str, object]]) -> GradedClass:
        return GradedClass.from_terms(self.generators, terms)

    def cap_hyperplane(self, c: GradedClass, times: int = 1) -> GradedClass:
        """Cap with the hyperplane class ``times`` times; degree-0 parts drop out."""
        for _ in range(times):
            out = {}
            for d in self.generators:
                part = c.part(d)
                if d == 0 or not any(part):
                    continue
                M = self.hyperplane_action.get(d)
                if M is None:
                    raise ValueError(f"no hyperplane action from degree {d}")
                out[d - 2] = M.apply(part)
            c = GradedClass.from_terms(self.generators, {
                d: dict(zip(self.generators[d], v)) for d, v in out.items()
            })
        return c

    def pairing_matrix(self, d: int) -> RationalMatrix:
        if d in self.pairing:
            return self.pairing[d]
        other = 2 * self.n - d
        if other in self.pairing:
            return self.pairing[other].transpose()
        raise ValueError(f"no pairing recorded between degrees {d} and {2 * self.n - d}")

    def pair(self, a: GradedClass, b: GradedClass, d: int) -> Fraction:
        """Intersection number of the degree-``d`` part of ``a`` with the
        complementary part of ``b``."""
        M = self.pairing_matrix(d)
        return sum((x * y for x, y in zip(a.part(d), M.apply(b.part(2 * self.n - d)))),
                   Fraction(0))


@dataclass(frozen=True)
class BundleClassData:
    """Chern classes ``c_1..c_n`` of a rank-k bundle as homology classes,
    with the line-bundle class acting through ``table``."""

    rank_k: int
    classes: tuple[GradedClass, ...]
    table: IntersectionTable

    def c(self, i: int) -> GradedClass:
        if i == 0:
            return self.table.fundamental_class()
        if i <= len(self.classes):
            return self.classes[i - 1]
        return self.table.zero()


def tensor_chern_terms(k: int, n: int) -> list[tuple[int, int, int]]:
    """``(i, j, binom(k - i + j, j))``: coefficient of ``a^j c_{i-j}`` in
    ``c_i(E ⊗ L)`` for a rank-k bundle E and line bundle L with ``c_1(L) = a``."""
    return [(i, j, binom(k - i + j, j)) for i in range(n + 1) for j in range(i + 1)]


def tensor_chern_generic(
    c: Callable[[int], T], a_power: Callable[[T, int], T], k: int, n: int, zero: T
) -> list[T]:
    """``c_i(E ⊗ L)`` for ``i = 0..n`` over values with ``+`` and ``.scale``
    (graded classes, or polynomials for the Chern-root check)."""
    out = [zero] * (n + 1)
    for i, j, coeff in tensor_chern_terms(k, n):
        if coeff:
            out[i] = out[i] + a_power(c(i - j), j).scale(coeff)
    return out


def tensor_chern(B: BundleClassData, n: int, T: IntersectionTable) -> GradedClass:
    """Total Chern class of ``E ⊗ L`` in homology, truncated at degree 0."""
    if T.n != n:
        raise ValueError(f"table is for dimension {T.n}, not {n}")
    if B.table is not T and dict(B.table.generators) != dict(T.generators):
        raise ValueError("bundle classes and table use different generators")
    for i, ci in enumerate(B.classes, start=1):
        stray = [d for d in ci.support() if d != 2 * (n - i)]
        if stray:
            raise ValueError(f"c_{i} has parts in degrees {stray}, expected only {2 * (n - i)}")
    pieces = tensor_chern_generic(B.c, T.cap_hyperplane, B.rank_k, n, T.zero())
    total = T.zero()
    for p in pieces:
        total = total + p
    return total


def _normalize_chain(chain_classes: Sequence[GradedClass], n: int,
                     T: IntersectionTable) -> list[GradedClass]:
    chain = list(chain_classes)
    if len(chain) == n:
        chain = [T.fundamental_class()] + chain
    if len(chain) != n + 1:
        raise ValueError(f"missing degrees: need classes of N^0..N^{n} (or N^1..N^{n}), "
                         f"got {len(chain_classes)}")
    if chain[0] != T.fundamental_class():
        raise ValueError("N^0 must be the fundamental class [X]")
    return chain


def mather_from_polar(chain_classes: Sequence[GradedClass], n: int,
                      T: IntersectionTable) -> GradedClass:
    """Chern-Mather class from polar classes: ``c_i = (-1)^i [N^i]``,
    ``k = n + 1``, the line bundle being the hyperplane bundle."""
    chain = _normalize_chain(chain_classes, n, T)
    signed = tuple(cls.scale((-1) ** i) for i, cls in enumerate(chain) if i > 0)
    result = tensor_chern(BundleClassData(n + 1, signed, T), n, T)
    if result.part(2 * n) != (1,):
        raise AssertionError(f"top coefficient should be [X], got {result.part(2 * n)}")
    return result


def csm_isolated(mather: GradedClass, points: Sequence[tuple[str, object]],
                 summands: Sequence[str] = ()) -> GradedClass:
    """Add ``(1 - Eu) [a]`` for each isolated singular point ``a``.

    Point names must be degree-0 generators, or listed in ``summands`` to be
    adjoined as separate point summands.
    """
    result = mather
    for name, eu in points:
        if name not in result.generators.get(0, ()):
            if name not in summands:
                raise ValueError(f"unknown point generator {name!r}")
            result = result.with_generator(0, name)
        bump = GradedClass.from_terms(result.generators, {0: {name: 1 - as_rational(eu)}})
        result = result + bump
    return result
