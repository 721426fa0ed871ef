"""Command-line entry point.

Exit codes: 0 success, 1 input error, 2 genericity or degeneracy,
3 property or scenario violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from . import builtin
from .chernring import mather_from_polar
from .errors import GenericityError, MatherLiftError, PropertyViolation, ScenarioFailure
from .exactmath import DEFAULT_TRUNCATION
from .grassmann import check_schubert_properties
from .ihcone import ConeInput, GradedBetti, cone_ih_betti
from .lift import canonical_lift, lift_codim1
from .lift import examples as lift_examples
from .lift import scenario
from .lift.core import LiftStep
from .polar import Hypersurface, certify_good_flag

log = logging.getLogger("matherlift")

DEFAULT_SEED = 0xC0FFEE
EXIT_OK, EXIT_INPUT, EXIT_GENERICITY, EXIT_VIOLATION = 0, 1, 2, 3


class InputError(MatherLiftError):
    pass


def default_seed() -> int:
    raw = os.environ.get("MATHERLIFT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise InputError(f"MATHERLIFT_SEED={raw!r} is not an integer") from None


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _hypersurface(args) -> Hypersurface:
    if args.input:
        try:
            return Hypersurface.from_json(_read_json(args.input))
        except InputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.input} is not a hypersurface: {exc}") from None
    name = args.example or "quadric_cone"
    try:
        return builtin.example(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


# -- commands -------------------------------------------------------------------


def cmd_polar(args) -> dict:
    H = _hypersurface(args)
    cert = certify_good_flag(H, args.seed)
    return {"command": "polar", "seed": args.seed, "certificate": cert.to_json(),
            "chain": cert.chain.to_json()}


def _curve_lift(H: Hypersurface, chain, seed):
    if H.name == "node":
        return lift_examples.curve_table(H, ("pt1", "pt2"), seed), [None]
    return lift_examples.curve_table(H), lift_examples.point_paths(chain)


def _lift_for(H: Hypersurface, chain, seed):
    if H.name == "quadric_cone":
        return lift_examples.verdier_table(), lift_examples.verdier_paths(chain, seed)
    if H.name in ("node", "cusp", "conic"):
        return _curve_lift(H, chain, seed)
    raise InputError(f"no intersection table for {H.name or H.f}; "
                     "tables ship for quadric_cone, node, cusp and conic")


def cmd_chern(args) -> dict:
    H = _hypersurface(args)
    chain = certify_good_flag(H, args.seed).chain
    T, paths = _lift_for(H, chain, args.seed)
    lifted = canonical_lift(chain, paths, T)
    c_hat = mather_from_polar(lifted, H.n, T)
    return {
        "command": "chern",
        "example": H.name,
        "profile": [list(p) for p in chain.profile()],
        "lifted": [lc.to_json() for lc in lifted],
        "c_hat": c_hat.to_json(),
    }


def cmd_lift(args) -> dict:
    if args.input:
        try:
            step = LiftStep.from_json(_read_json(args.input))
        except InputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.input} is not a lift step: {exc}") from None
        return {"command": "lift", "step": step.to_json(), "class": lift_codim1(step).to_json()}
    out = cmd_chern(args)
    out["command"] = "lift"
    return out


def cmd_cone_ih(args) -> dict:
    if args.input:
        obj = _read_json(args.input)
        try:
            betti, pd_rank = obj["base_betti"], int(obj.get("middle_pd_rank", 0))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"{args.input}: expected base_betti and middle_pd_rank ({exc})") from None
    else:
        try:
            betti = [int(x) for x in args.betti.split(",")]
        except ValueError:
            raise InputError(f"--betti {args.betti!r} is not a comma-separated list") from None
        pd_rank = args.pd_rank
    try:
        base = GradedBetti(tuple(int(b) for b in betti))
        cone = ConeInput(base, len(base.betti) - 1, pd_rank)
        ih = cone_ih_betti(cone)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"command": "cone-ih", "base_betti": list(base.betti), "middle_pd_rank": pd_rank,
            "ih_betti": ih.to_json()}


def cmd_schubert_check(args) -> dict:
    reports = [check_schubert_properties(2, m, args.samples, args.seed) for m in (4, 5)]
    out = {"command": "schubert-check", "seed": args.seed,
           "reports": [r.to_json() for r in reports]}
    bad = [r for r in reports if not r.ok]
    if bad:
        raise PropertyViolation(json.dumps([r.to_json() for r in bad]))
    return out


def cmd_verdier(args) -> dict:
    report = scenario.verdier_scenario(seed=args.seed)
    report["node"] = scenario.node_scenario(seed=args.seed, truncation=args.truncation)
    report["cusp"] = scenario.cusp_scenario(seed=args.seed, truncation=args.truncation)
    report["command"] = "verdier"
    return report


COMMANDS = {
    "polar": cmd_polar,
    "chern": cmd_chern,
    "lift": cmd_lift,
    "cone-ih": cmd_cone_ih,
    "schubert-check": cmd_schubert_check,
    "verdier": cmd_verdier,
}


# -- output ---------------------------------------------------------------------


def _rows(report: dict) -> list[tuple[str, str]]:
    """Flatten the headline quantities of a report into (label, value) rows."""
    if report["command"] == "verdier":
        rows = [(c["quantity"], str(c["got"])) for c in report["checks"]]
        rows += [(f"node: {c['quantity']}", str(c["got"])) for c in report["node"]["checks"]]
        rows += [(f"cusp: {c['quantity']}", str(c["got"])) for c in report["cusp"]["checks"]]
        return rows
    if report["command"] == "polar":
        return [(f"N^{s['i']}", f"dim {s['dim']}, deg {s['deg']}")
                for s in report["chain"]["steps"]] + [("empty from", str(report["chain"]["empty_from"]))]
    if report["command"] == "schubert-check":
        return [(r["grassmannian"], ", ".join(f"{k}={v}" for k, v in r["violations"].items()))
                for r in report["reports"]]
    if report["command"] == "cone-ih":
        return [(f"IH_{k}", str(b)) for k, b in enumerate(report["ih_betti"])]
    return [(k, json.dumps(v)) for k, v in report.items() if k != "command"]


def render_table(report: dict) -> str:
    rows = _rows(report)
    width = max((len(label) for label, _ in rows), default=0)
    return "\n".join(f"{label.ljust(width)}  {value}" for label, value in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matherlift",
        description="Polar varieties, Chern-Mather classes and their lift to intersection homology.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", metavar="PATH", help="JSON input file")
    parser.add_argument("--example", choices=builtin.EXAMPLE_NAMES,
                        help="built-in hypersurface (default quadric_cone)")
    parser.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                        help=f"random seed (default {DEFAULT_SEED:#x} or $MATHERLIFT_SEED)")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION,
                        help="power series truncation order")
    parser.add_argument("--samples", type=int, default=200, help="schubert-check sample count")
    parser.add_argument("--betti", default="1,0,2,0,1", help="cone-ih base Betti numbers")
    parser.add_argument("--pd-rank", type=int, default=0, help="cone-ih middle Poincaré map rank")
    parser.add_argument("--verbose", "-v", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.seed is None:
            args.seed = default_seed()
        if args.truncation < 1:
            raise InputError("--truncation must be positive")
        report = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ScenarioFailure, PropertyViolation) as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except GenericityError as exc:
        print(f"genericity: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    if args.format == "table":
        print(render_table(report))
    else:
        print(json.dumps(report, indent=2, default=str))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
