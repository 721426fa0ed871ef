"""End-to-end scenarios on the built-in examples.

Each scenario recomputes every intermediate quantity from the polar
ideals and the encoded intersection tables, compares it with the known
value and raises ``ScenarioFailure`` at the first disagreement.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..builtin import example, verdier_flag
from ..chernring import (
    BundleClassData,
    GradedClass,
    IntersectionTable,
    csm_isolated,
    mather_from_polar,
    tensor_chern,
)
from ..errors import ScenarioFailure
from ..ihcone import ConeInput, GradedBetti, a1_link_betti, cone_ih_betti, thom_homology
from ..polar import certify_good_flag, polar_chain
from ..exactmath import DEFAULT_TRUNCATION
from . import examples
from .core import (
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    eu_from_jacobian_multiplicity,
    lift_codim1,
    push_to_ambient,
    small_resolution_c1,
)

# Euler obstruction of the cone over P^1 x P^1 at its vertex
VERTEX_EU = 2


class _Checks:
    """Ordered list of (quantity, expected, got); raises at the first mismatch."""

    def __init__(self):
        self.rows: list[dict] = []

    def __call__(self, quantity: str, expected, got):
        ok = expected == got
        self.rows.append({"quantity": quantity, "expected": _show(expected),
                          "got": _show(got), "ok": ok})
        if not ok:
            raise ScenarioFailure(quantity, _show(expected), _show(got))


def _show(value):
    if isinstance(value, GradedClass):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return value


def _coeffs(c: GradedClass, T: IntersectionTable) -> dict:
    return {name: str(c.coefficient(d, name)) for d in sorted(T.generators, reverse=True)
            for name in T.generators[d]}


def verdier_scenario(seed=0, table_builder: Callable[[], IntersectionTable] | None = None) -> dict:
    """The cone over the Segre quadric, from polar ideals to CSM class."""
    check = _Checks()
    H = example("quadric_cone")
    T = (table_builder or examples.verdier_table)()
    chain = polar_chain(H, verdier_flag(), flag_seed="fixed")
    check("polar profile", ((3, 2), (2, 2), (1, 2)), chain.profile())
    check("pairing p.d counted", [[0, 1], [1, 0]], examples.verdier_pairing_by_counting(H, seed))

    paths = examples.verdier_paths(chain, seed)
    n1_step, n2_path = paths[0].step, paths[1]
    k_step, k_path = n2_path.step, n2_path.pushforward["K"]
    check("(N2.K, K.K)", (2, 2), (int(k_step.cycle_pairings[0]), int(k_step.pairing[0, 0])))
    n2_in_n1 = lift_codim1(k_step)
    check("[N2] in IH(N1)", (Fraction(1),), n2_in_n1.part(2))

    lifted = canonical_lift(chain, paths, T)
    b = T.cap_hyperplane(T.fundamental_class())
    check("[N1]", T.cls({4: {"p1": 1, "p2": 1}}), lifted[1])
    check("[N2]", T.cls({2: {"d1": 1, "d2": 1}}), lifted[2])
    check("[K]", lifted[2], push_to_ambient(k_path, T))
    check("b", lifted[1], b)
    check("b^3", T.point().scale(2), T.cap_hyperplane(T.fundamental_class(), 3))

    c_hat = mather_from_polar(lifted, 3, T)
    check("c_hat", T.cls({6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": 4, "d2": 4}, 0: {"pt": 6}}),
          c_hat)
    csm = csm_isolated(c_hat, [("pt", VERTEX_EU)])
    check("csm", c_hat - T.point(), csm)
    check("euler characteristic", 5, int(csm.coefficient(0, "pt")))

    resolutions = {}
    for r in (1, 2):
        n2_tilde = _degree_part(lift_codim1(examples.resolution_proper_transform(r)), 2, T)
        resolutions[r] = (n2_tilde, _resolution_class(lifted[1], n2_tilde, T))
    n2_tilde = resolutions[1][0]
    check("N2_tilde", T.cls({2: {"d2": 2}}), n2_tilde)
    check("N2_tilde != [N2]", True, n2_tilde != lifted[2])
    check("c_X1", T.cls({6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": 3, "d2": 5}, 0: {"pt": 6}}),
          resolutions[1][1])
    check("c_X2", T.cls({6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": 5, "d2": 3}, 0: {"pt": 6}}),
          resolutions[2][1])
    for r in (1, 2):
        diff = c_hat - resolutions[r][1]
        check(f"(c_hat - c_X{r}) . b", Fraction(0), T.pair(diff, b, 2))

    base = GradedBetti((1, 0, 2, 0, 1))
    ih = cone_ih_betti(ConeInput(base, 4, 0))
    check("IH betti of X", (1, 0, 2, 0, 2, 0, 1), ih.betti)
    conic_cone = ConeInput(GradedBetti((1, 0, 1)), 2, 1)
    check("IH betti of N1 = H betti", thom_homology(conic_cone.base_betti).betti,
          cone_ih_betti(conic_cone).betti)
    link = a1_link_betti(2, 1, 0, 1)
    check("A1 link (H1, H2)", (0, 0), (link[1], link[2]))

    return {
        "example": "quadric_cone",
        "polar": chain.to_json(),
        "N1": _coeffs(lifted[1], T),
        "N2": _coeffs(lifted[2], T),
        "K": {"self_pairing": str(k_step.pairing[0, 0]), "N2_pairing": str(k_step.cycle_pairings[0]),
              "class": _coeffs(push_to_ambient(k_path, T), T)},
        "N1_lift": n1_step.to_json(),
        "K_lift": k_path.step.to_json(),
        **{name: _generator_report(T, 4, name) for name in ("p1", "p2")},
        **{name: _generator_report(T, 2, name) for name in ("d1", "d2")},
        "b_powers": [str(T.cap_hyperplane(T.fundamental_class(), j)) for j in range(4)],
        "c_hat": _coeffs(c_hat, T),
        "csm": _coeffs(csm, T),
        "c_X1": _coeffs(resolutions[1][1], T),
        "c_X2": _coeffs(resolutions[2][1], T),
        "N2_tilde": _coeffs(n2_tilde, T),
        "ih_betti": list(ih.betti),
        "checks": check.rows,
        "ok": True,
    }


def _generator_report(T: IntersectionTable, d: int, name: str) -> dict:
    g = T.cls({d: {name: 1}})
    other = 2 * T.n - d
    return {
        "degree": d,
        "pairing": {h: str(T.pair(g, T.cls({other: {h: 1}}), d)) for h in T.generators[other]},
        "cap_b": str(T.cap_hyperplane(g)),
    }


def _resolution_class(n1: GradedClass, n2_tilde: GradedClass, T: IntersectionTable) -> GradedClass:
    """Chern class of a small resolution: the tensor formula applied to
    ``c_1 = -[N^1]`` and ``c_2 = [Ñ^2]``, identifying ``H_*`` of the
    resolution with IH of X."""
    return tensor_chern(BundleClassData(4, (n1.scale(-1), n2_tilde), T), 3, T)


def node_scenario(seed=0, truncation: int = DEFAULT_TRUNCATION) -> dict:
    """Cone over two points (the node ``xy = 0``): ĉ¹ equals c¹ of the
    normalization."""
    check = _Checks()
    H = example("node")
    cert = certify_good_flag(H, seed)
    chain = cert.chain
    check("N1 empty", 1, chain.empty_from)
    T = examples.curve_table(H, ("pt1", "pt2"), seed)
    lifted = canonical_lift(chain, [None], T)
    c_hat = mather_from_polar(lifted, 1, T)
    check("c_hat", T.cls({2: {"X": 1}, 0: {"pt1": 2, "pt2": 2}}), c_hat)
    comps = []
    for name, branch in zip(("pt1", "pt2"), examples.node_branches(truncation)):
        n_w = certified_jacobian_multiplicity(branch, (seed, seed + 1))
        comps.append(ResolutionComponent(name, n_w, T.point(name)))
    check("n_W", [0, 0], [c.n_W for c in comps])
    c1 = small_resolution_c1(_degree_part(c_hat, 0, T), comps)
    check("c1 of normalization", _degree_part(c_hat, 0, T), c1)
    return {
        "example": "node",
        "polar": chain.to_json(),
        "c_hat": _coeffs(c_hat, T),
        "n_W": [c.n_W for c in comps],
        "c1_resolution": _coeffs(c1, T),
        "checks": check.rows,
        "ok": True,
    }


def cusp_scenario(seed=0, truncation: int = DEFAULT_TRUNCATION) -> dict:
    """Cuspidal cubic: ĉ* = [X] + 3[pt] and the small-resolution correction
    recovers c¹(P¹) = 2[pt]."""
    check = _Checks()
    H = example("cusp")
    chain = certify_good_flag(H, seed).chain
    check("N1 (dim, deg)", (0, 3), chain.profile()[1])
    T = examples.curve_table(H)
    lifted = canonical_lift(chain, examples.point_paths(chain), T)
    c_hat = mather_from_polar(lifted, 1, T)
    check("c_hat", T.cls({2: {"X": 1}, 0: {"pt": 3}}), c_hat)
    n_w = certified_jacobian_multiplicity(examples.cusp_branch(truncation), (seed, seed + 1))
    check("n_W", 1, n_w)
    eu = eu_from_jacobian_multiplicity(n_w)
    check("Eu at cusp", Fraction(2), eu)
    c1 = small_resolution_c1(_degree_part(c_hat, 0, T), [ResolutionComponent("pt", n_w, T.point())])
    check("c1(P^1)", T.point().scale(2), c1)
    csm = csm_isolated(c_hat, [("pt", eu)])
    check("euler characteristic", 2, int(csm.coefficient(0, "pt")))
    return {
        "example": "cusp",
        "polar": chain.to_json(),
        "N1": _coeffs(lifted[1], T),
        "c_hat": _coeffs(c_hat, T),
        "n_W": n_w,
        "eu": str(eu),
        "c1_resolution": _coeffs(c1, T),
        "csm": _coeffs(csm, T),
        "checks": check.rows,
        "ok": True,
    }


def _degree_part(c: GradedClass, d: int, T: IntersectionTable) -> GradedClass:
    return T.cls({d: dict(zip(T.generators[d], c.part(d)))})


def verdier_lift(chain, seed=0, table: IntersectionTable | None = None) -> tuple:
    """Coefficients of ``[N^0..N^3]`` and ĉ* for one polar chain of the
    cone over the Segre quadric, as a hashable tuple."""
    T = table or examples.verdier_table()
    lifted = canonical_lift(chain, examples.verdier_paths(chain, seed), T)
    c_hat = mather_from_polar(lifted, 3, T)
    return tuple(tuple(sorted(_coeffs(c, T).items())) for c in lifted + [c_hat])
