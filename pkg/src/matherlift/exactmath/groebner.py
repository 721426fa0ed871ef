"""Buchberger's algorithm with the normal selection strategy.

Pairs are processed in increasing order of the lcm of their leading
monomials, ties broken by pair indices, so the output is a deterministic
function of the input generators and the order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .poly import (
    DEGREVLEX,
    Exponent,
    Ideal,
    MonomialOrder,
    MultiPoly,
    monomial_divides,
    monomial_lcm,
)

Terms = dict[Exponent, Fraction]


class _Elem:
    __slots__ = ("lm", "lc", "terms")

    def __init__(self, terms: Terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _reduce(f: Terms, basis: list[_Elem], key) -> Terms:
    """Full multivariate division remainder of ``f`` by ``basis``."""
    p = dict(f)
    rem: Terms = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for g in basis:
            if monomial_divides(g.lm, e):
                shift = tuple(a - b for a, b in zip(e, g.lm))
                coef = c / g.lc
                for ge, gc in g.terms.items():
                    ne = tuple(a + b for a, b in zip(ge, shift))
                    v = p.get(ne, 0) - coef * gc
                    if v:
                        p[ne] = v
                    else:
                        del p[ne]
                break
        else:
            rem[e] = c
            del p[e]
    return rem


def _s_poly(f: _Elem, g: _Elem) -> Terms:
    lcm = monomial_lcm(f.lm, g.lm)
    out: Terms = {}
    for elem, sign in ((f, 1), (g, -1)):
        shift = tuple(a - b for a, b in zip(lcm, elem.lm))
        coef = Fraction(sign) / elem.lc
        for e, c in elem.terms.items():
            ne = tuple(a + b for a, b in zip(e, shift))
            v = out.get(ne, 0) + coef * c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
    return out


def _monic(terms: Terms, key) -> Terms:
    lc = terms[max(terms, key=key)]
    if lc == 1:
        return terms
    return {e: c / lc for e, c in terms.items()}


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def buchberger(polys: list[Terms], order: MonomialOrder) -> list[Terms]:
    """Reduced Groebner basis (as term dicts, monic, sorted by leading term)."""
    key = order.key
    G: list[_Elem] = []
    for p in polys:
        if p:
            G.append(_Elem(_monic(p, key), key))
    if any(not any(g.lm) for g in G):
        nv = len(G[0].lm)
        return [{(0,) * nv: Fraction(1)}]

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push(i, j):
        lcm = monomial_lcm(G[i].lm, G[j].lm)
        heapq.heappush(heap, (key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = G[i], G[j]
        if _coprime(fi.lm, fj.lm):
            continue
        lcm = monomial_lcm(fi.lm, fj.lm)
        if _chain_criterion(G, i, j, lcm, pending):
            continue
        h = _reduce(_s_poly(fi, fj), G, key)
        if not h:
            continue
        G.append(_Elem(_monic(h, key), key))
        if not any(G[-1].lm):
            nv = len(G[-1].lm)
            return [{(0,) * nv: Fraction(1)}]
        new = len(G) - 1
        for k in range(new):
            push(k, new)

    return _reduced(G, key)


def _chain_criterion(G, i, j, lcm, pending) -> bool:
    for k in range(len(G)):
        if k in (i, j):
            continue
        if not monomial_divides(G[k].lm, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduced(G: list[_Elem], key) -> list[Terms]:
    minimal: list[_Elem] = []
    for idx, g in enumerate(G):
        redundant = False
        for jdx, h in enumerate(G):
            if jdx == idx or not monomial_divides(h.lm, g.lm):
                continue
            # equal leading monomials: keep the first occurrence only
            if h.lm != g.lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [h for jdx, h in enumerate(minimal) if jdx != idx]
        tail = dict(g.terms)
        del tail[g.lm]
        r = _reduce(tail, others, key)
        r[g.lm] = g.lc
        out.append(_monic(r, key))
    out.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return out


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order``."""

    ideal: Ideal
    order: MonomialOrder
    basis: tuple[MultiPoly, ...]

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ideal.ambient

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_exponents(self) -> list[Exponent]:
        return [g.leading_term(self.order)[0] for g in self.basis]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        if f.vars != self.vars:
            f = f.with_vars(self.vars)
        key = self.order.key
        elems = [_Elem(g.terms, key) for g in self.basis]
        return MultiPoly._raw(self.vars, _reduce(f.terms, elems, key))

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        return self.vars == other.vars and self.order == other.order and self.basis == other.basis

    def as_ideal(self) -> Ideal:
        return Ideal(self.vars, self.basis)


def groebner(ideal: Ideal, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    if not ideal.ambient:
        raise ValueError("empty variable list")
    basis = buchberger([g.terms for g in ideal.generators], order)
    polys = tuple(MultiPoly._raw(ideal.ambient, t) for t in basis)
    return GroebnerBasis(ideal, order, polys)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder = DEGREVLEX) -> MultiPoly:
    key = order.key
    return MultiPoly._raw(f.vars, _s_poly(_Elem(f.terms, key), _Elem(g.terms, key)))
