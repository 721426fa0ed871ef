"""Sparse multivariate polynomials over the rationals.

A polynomial is an immutable map from exponent tuples to nonzero
``Fraction`` coefficients, tied to an ordered tuple of variable names.
Arithmetic between polynomials with different variable lists is refused
rather than silently coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import VariableContextError

Exponent = tuple[int, ...]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction (never floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if any(ch in value for ch in ".eE"):
            raise ValueError(f"decimal coefficient {value!r}; use p/q")
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; ``key`` maps exponents to comparable tuples.

    ``block`` orders compare the first ``split`` variables by degrevlex and
    break ties with degrevlex on the remaining ones, which makes them
    elimination orders for the first block.
    """

    name: str
    split: int = 0

    def __post_init__(self):
        if self.name not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.name!r}")
        if self.name == "block" and self.split <= 0:
            raise ValueError("block order needs a positive split")

    def key(self, e: Exponent):
        if self.name == "lex":
            return e
        if self.name == "degrevlex":
            return _degrevlex_key(e)
        return (_degrevlex_key(e[: self.split]), _degrevlex_key(e[self.split :]))

    def __str__(self):
        return self.name if self.name != "block" else f"block({self.split})"


def _degrevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Polynomial in ``vars`` with exact rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated variable names in {self.vars}")
        clean: dict[Exponent, Fraction] = {}
        nv = len(self.vars)
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nv or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for variables {self.vars}")
            c = as_rational(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponent, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already normalized
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["MultiPoly", ...]:
        vars = tuple(vars)
        n = len(vars)
        return tuple(
            cls._raw(vars, {tuple(int(i == k) for i in range(n)): Fraction(1)}) for k in range(n)
        )

    @classmethod
    def constant(cls, vars: Sequence[str], c=1) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def linear_form(cls, vars: Sequence[str], coeffs: Sequence) -> "MultiPoly":
        vars = tuple(vars)
        if len(coeffs) != len(vars):
            raise ValueError("one coefficient per variable expected")
        n = len(vars)
        return cls(vars, {tuple(int(i == k) for i in range(n)): c for k, c in enumerate(coeffs)})

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    # arithmetic

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise VariableContextError(f"variables {self.vars} vs {other.vars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.vars, as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "MultiPoly":
        c = as_rational(c)
        if not c:
            return MultiPoly.zero(self.vars)
        return MultiPoly._raw(self.vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.vars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, e: Exponent, c: Fraction) -> "MultiPoly":
        return MultiPoly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(e, f)): c * v for f, v in self.terms.items()},
        )

    def derivative(self, k: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                d = list(e)
                d[k] -= 1
                out[tuple(d)] = c * e[k]
        return MultiPoly._raw(self.vars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        point = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    # orders

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "MultiPoly":
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # change of ring

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express in a ring whose variables include all of ours."""
        vars = tuple(vars)
        pos = {v: i for i, v in enumerate(vars)}
        try:
            idx = [pos[v] for v in self.vars]
        except KeyError as exc:
            raise VariableContextError(f"{exc.args[0]} missing from {vars}") from None
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(vars)
            for i, k in zip(idx, e):
                f[i] = k
            out[tuple(f)] = c
        return MultiPoly._raw(vars, out)

    def uses_only(self, vars: Iterable[str]) -> bool:
        keep = set(vars)
        active = {v for e in self.terms for v, k in zip(self.vars, e) if k}
        return active <= keep

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={list(self.vars)})"

    # interchange format

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MultiPoly":
        try:
            vars = obj["vars"]
            terms = obj["terms"]
        except (KeyError, TypeError):
            raise ValueError("polynomial JSON needs 'vars' and 'terms'") from None
        out: dict[Exponent, Fraction] = {}
        for t in terms:
            e = tuple(t["e"])
            out[e] = out.get(e, 0) + as_rational(t["c"])
        return cls(vars, out)


def gradient(f: MultiPoly) -> list[MultiPoly]:
    """Formal partial derivatives of ``f`` in variable order."""
    return [f.derivative(k) for k in range(len(f.vars))]


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_scale(p: MultiPoly, c) -> MultiPoly:
    return p.scale(c)


class Ideal:
    """Finitely generated ideal; zero generators are dropped on construction."""

    __slots__ = ("ambient", "generators")

    def __init__(self, ambient: Sequence[str], generators: Iterable[MultiPoly] = ()):
        self.ambient = tuple(ambient)
        gens = []
        for g in generators:
            if g.vars != self.ambient:
                raise VariableContextError(f"generator in {g.vars}, ideal in {self.ambient}")
            if g:
                gens.append(g)
        self.generators = tuple(gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ambient != other.ambient:
            raise VariableContextError(f"{self.ambient} vs {other.ambient}")
        return Ideal(self.ambient, self.generators + other.generators)

    def with_generators(self, *extra: MultiPoly) -> "Ideal":
        return Ideal(self.ambient, self.generators + tuple(extra))

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def to_json(self) -> list:
        return [g.to_json() for g in self.generators]

    @classmethod
    def from_json(cls, arr: Sequence[Mapping]) -> "Ideal":
        polys = [MultiPoly.from_json(o) for o in arr]
        if not polys:
            raise ValueError("an ideal in JSON form needs at least one generator to fix its ring")
        return cls(polys[0].vars, polys)
