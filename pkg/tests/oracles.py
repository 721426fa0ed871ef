"""Independent reference computations shared by the test modules."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

from matherlift.exactmath import Ideal, MultiPoly


def to_sympy(p: MultiPoly, symbols):
    return sum(
        (sympy.Rational(c.numerator, c.denominator)
         * sympy.Mul(*[s ** k for s, k in zip(symbols, e)])
         for e, c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr, symbols, vars) -> MultiPoly:
    poly = sympy.Poly(expr, *symbols)
    return MultiPoly(vars, {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


def random_poly(rng: random.Random, vars, max_deg=2, n_terms=3, homogeneous=False) -> MultiPoly:
    nv = len(vars)
    terms = {}
    deg = rng.randint(1, max_deg)
    for _ in range(n_terms):
        d = deg if homogeneous else rng.randint(0, max_deg)
        cuts = sorted(rng.randint(0, d) for _ in range(nv - 1))
        e = tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))
        terms[e] = Fraction(rng.randint(-5, 5))
    return MultiPoly(vars, terms)


def random_ideal(seed: int, vars=("x", "y", "z"), homogeneous=False) -> Ideal:
    rng = random.Random(seed)
    gens = [random_poly(rng, vars, homogeneous=homogeneous) for _ in range(rng.randint(1, 3))]
    return Ideal(vars, gens)


def hilbert_function(lead_exponents, nvars: int, s: int) -> int:
    """Monomials of degree ``s`` outside the initial ideal, by enumeration."""
    count = 0
    for e in itertools.product(range(s + 1), repeat=nvars):
        if sum(e) != s:
            continue
        if not any(all(a >= b for a, b in zip(e, g)) for g in lead_exponents):
            count += 1
    return count
