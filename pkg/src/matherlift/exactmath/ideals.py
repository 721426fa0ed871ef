"""Ideal operations built on Groebner bases: elimination, intersection,
quotients and saturation."""

from __future__ import annotations

import logging

from ..errors import SaturationLimitError, VariableContextError
from .groebner import GroebnerBasis, groebner
from .poly import DEGREVLEX, Ideal, MonomialOrder, MultiPoly, block_order

log = logging.getLogger(__name__)

SATURATION_CAP = 32


def _fresh(prefix: str, taken) -> str:
    name, k = prefix, 0
    while name in taken:
        k += 1
        name = f"{prefix}{k}"
    return name


def eliminate(ideal: Ideal, drop: list[str]) -> Ideal:
    """Elimination ideal ``ideal ∩ k[remaining variables]``.

    The result is expressed in the ring of the remaining variables.
    """
    drop_set = set(drop)
    if not drop_set <= set(ideal.ambient):
        raise VariableContextError(f"{drop} not all in {ideal.ambient}")
    keep = [v for v in ideal.ambient if v not in drop_set]
    order_vars = list(drop) + keep
    moved = Ideal(order_vars, [g.with_vars(order_vars) for g in ideal.generators])
    gb = groebner(moved, block_order(len(drop)))
    out = []
    for g in gb.basis:
        if g.uses_only(keep):
            terms = {e[len(drop) :]: c for e, c in g.terms.items()}
            out.append(MultiPoly(keep, terms))
    return Ideal(keep, out)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a ∩ b`` via ``t·a + (1 - t)·b`` with ``t`` eliminated."""
    if a.ambient != b.ambient:
        raise VariableContextError(f"{a.ambient} vs {b.ambient}")
    t = _fresh("_t", a.ambient)
    big = (t,) + a.ambient
    tt = MultiPoly.gens(big)[0]
    gens = [tt * g.with_vars(big) for g in a.generators]
    gens += [(1 - tt) * g.with_vars(big) for g in b.generators]
    return eliminate(Ideal(big, gens), [t])


def _exact_divide(p: MultiPoly, g: MultiPoly) -> MultiPoly:
    q = MultiPoly.zero(p.vars)
    r = p
    ge, gc = g.leading_term(DEGREVLEX)
    while r:
        e, c = r.leading_term(DEGREVLEX)
        shift = tuple(x - y for x, y in zip(e, ge))
        if any(s < 0 for s in shift):
            raise ArithmeticError(f"{g} does not divide {p}")
        term = MultiPoly._raw(p.vars, {shift: c / gc})
        q = q + term
        r = r - term * g
    return q


def quotient_by_element(ideal: Ideal, g: MultiPoly) -> Ideal:
    """``ideal : g``."""
    if not g:
        return Ideal(ideal.ambient, [MultiPoly.constant(ideal.ambient, 1)])
    inter = intersect(ideal, Ideal(ideal.ambient, [g]))
    return Ideal(ideal.ambient, [_exact_divide(h, g) for h in inter.generators])


def ideal_quotient(ideal: Ideal, other: Ideal) -> Ideal:
    """``ideal : other``, the intersection of the quotients by each generator."""
    gens = groebner(other).basis
    if not gens:
        return Ideal(ideal.ambient, [MultiPoly.constant(ideal.ambient, 1)])
    result = quotient_by_element(ideal, gens[0])
    for g in gens[1:]:
        result = intersect(result, quotient_by_element(ideal, g))
    return result


def ideal_saturate(
    ideal: Ideal, other: Ideal, order: MonomialOrder = DEGREVLEX, cap: int = SATURATION_CAP
) -> Ideal:
    """Stable quotient ``ideal : other^∞`` by iterating ``I -> I : other``.

    Returns the reduced Groebner basis of the result as an ideal.
    """
    current = groebner(ideal, order)
    if current.is_unit():
        return current.as_ideal()
    j_basis = groebner(other, order)
    if j_basis.is_unit():
        return current.as_ideal()
    for step in range(cap):
        nxt = groebner(ideal_quotient(current.as_ideal(), j_basis.as_ideal()), order)
        log.debug("saturation step %d: %d generators", step, len(nxt.basis))
        if nxt.same_ideal(current):
            return current.as_ideal()
        current = nxt
        if current.is_unit():
            return current.as_ideal()
    raise SaturationLimitError(f"saturation did not stabilize within {cap} quotient steps")


def saturate_rabinowitsch(ideal: Ideal, g: MultiPoly) -> Ideal:
    """``ideal : g^∞`` as ``(ideal + (1 - s·g)) ∩ k[vars]``.

    Independent of the iterated-quotient route; used to cross-check it.
    """
    s = _fresh("_s", ideal.ambient)
    big = (s,) + ideal.ambient
    ss = MultiPoly.gens(big)[0]
    gens = [h.with_vars(big) for h in ideal.generators]
    gens.append(1 - ss * g.with_vars(big))
    return eliminate(Ideal(big, gens), [s])


def same_ideal(a: Ideal, b: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    return groebner(a, order).same_ideal(groebner(b, order))


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """True when every generator of ``small`` lies in ``big``."""
    return groebner(big).contains_ideal(small)


def reduced_basis(ideal: Ideal) -> GroebnerBasis:
    return groebner(ideal, DEGREVLEX)
