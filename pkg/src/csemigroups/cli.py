"""Command-line front end.

Every subcommand reads one input source (inline generators, inline gaps, or
a JSON file), runs one library operation, and prints either a human-readable
report or exactly one JSON document. Output point lists are sorted by the
graded-lex order, so identical inputs produce byte-identical output. Domain
errors exit with code 1 and carry the error class name; usage errors exit
with code 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arf as arf_mod
from . import constructions as cons
from .conjectures import buchsbaum_report, wilf_report
from .errors import SemigroupError
from .frobenius import (
    apery,
    cardinality_identity,
    classify,
    frobenius_element,
    omega_extra,
    pf_via_ideal,
    pseudo_frobenius,
)
from .gapsemigroup import Budget, GapSemigroup, from_gaps, from_generators
from .lattice import GRLEX, TermOrder
from .membership import AffineSemigroup


def parse_point(text: str):
    """One point: "(1,3)", "[1,3]", or a bare integer for dimension one."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise ValueError(f"not an integer point: {text!r}")
        return tuple(data)
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [s.strip() for s in text.split(",") if s.strip()]
    if not parts:
        raise ValueError("empty point")
    return tuple(int(s) for s in parts)


def parse_point_list(text: str):
    """Semicolon-separated points, e.g. "(0,1);(3,0)" or "4;6;9"."""
    points = [parse_point(chunk) for chunk in text.split(";") if chunk.strip()]
    if not points:
        raise ValueError("empty point list")
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise ValueError(f"mixed dimensions in point list: {sorted(dims)}")
    return points


def _points_json(points):
    return [list(p) for p in sorted(points, key=GRLEX.key)]


def _budget(args) -> Budget:
    if getattr(args, "budget", None) is None:
        return Budget()
    return Budget(max_levels_per_axis=args.budget, max_work=args.budget)


def _load_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _input_source(args):
    """Returns ("gens", points, d) or ("gaps", points, d) from the one source."""
    if getattr(args, "gens", None) is not None:
        pts = parse_point_list(args.gens)
        return "gens", pts, len(pts[0])
    if getattr(args, "gaps", None) is not None:
        pts = parse_point_list(args.gaps)
        return "gaps", pts, len(pts[0])
    data = _load_file(args.file)
    d = data["d"]
    if "gens" in data:
        return "gens", [tuple(p) for p in data["gens"]], d
    if "gaps" in data:
        return "gaps", [tuple(p) for p in data["gaps"]], d
    raise ValueError(f"{args.file}: expected a 'gens' or 'gaps' key")


def _gap_semigroup(args) -> GapSemigroup:
    kind, pts, d = _input_source(args)
    if kind == "gens":
        return from_generators(AffineSemigroup(d, pts), budget=_budget(args))
    return from_gaps(d, pts)


def _term_order(args) -> TermOrder:
    return TermOrder(getattr(args, "order", "grlex"))


# ---------------------------------------------------------------------------
# Handlers; each returns a JSON-ready dict
# ---------------------------------------------------------------------------


def _run_member(args):
    point = parse_point(args.point)
    kind, pts, d = _input_source(args)
    if kind == "gens":
        result = AffineSemigroup(d, pts).is_member(point) if len(point) == d else False
    else:
        result = from_gaps(d, pts).contains(point) if len(point) == d else False
    return {"point": list(point), "member": result}


def _run_gaps(args):
    gs = _gap_semigroup(args)
    out = gs.to_json()
    out["conductor"] = list(gs.conductor)
    out["genus"] = gs.genus
    out["hilbert_basis"] = _points_json(gs.hilbert_basis)
    return out


def _run_pf(args):
    pf = pseudo_frobenius(_gap_semigroup(args))
    return {"pf": _points_json(pf), "betti_type": len(pf)}


def _run_frobenius(args):
    order = _term_order(args)
    return {
        "frobenius": list(frobenius_element(_gap_semigroup(args), order)),
        "order": order.to_json(),
    }


def _run_classify(args):
    return classify(_gap_semigroup(args), _term_order(args)).to_json()


def _run_omega(args):
    gs = _gap_semigroup(args)
    order = _term_order(args)
    return {
        "omega_extra": _points_json(omega_extra(gs, order)),
        "frobenius": list(frobenius_element(gs, order)),
    }


def _run_apery(args):
    elements = parse_point_list(args.elements)
    return {
        "elements": _points_json(elements),
        "apery": _points_json(apery(_gap_semigroup(args), elements)),
    }


def _run_wilf(args):
    return wilf_report(_gap_semigroup(args), _term_order(args)).to_json()


def _run_buchsbaum(args):
    return buchsbaum_report(_gap_semigroup(args)).to_json()


def _run_glue(args):
    s1 = AffineSemigroup.from_json(_load_file(args.s1))
    s2 = AffineSemigroup.from_json(_load_file(args.s2))
    s = parse_point(args.s)
    glued = cons.glue(cons.GluingSpec(s1, s2, s))
    return {"d": glued.dimension, "generators": _points_json(glued.generators), "s": list(s)}


def _run_family_sap(args):
    sem = cons.family_sap(args.a, args.p)
    out = {
        "generators": _points_json(sem.generators),
        "delta": _points_json(cons.delta_set(args.a, args.p)),
    }
    if args.verify:
        verification = cons.verify_delta_pf(args.a, args.p)
        out["delta_verified"] = verification.ok
        out["delta_size"] = len(verification.witnesses)
        window = parse_point(args.window) if args.window else None
        if window is not None:
            report = cons.apery_sap_window(args.a, args.p, window)
            out["apery_window"] = {
                "formula_side": _points_json(report.formula_side),
                "window_scan": _points_json(report.window_scan),
                "consistent": report.consistent,
            }
    return out


def _run_family_saps(args):
    gens = [p[0] for p in parse_point_list(args.numerical)]
    fam = cons.family_saps(args.a, args.p, gens)
    return {
        "generators": _points_json(fam.semigroup.generators),
        "embedding_dimension": len(fam.semigroup.generators),
        "pf_lower_bound": fam.pf_lower_bound,
        "mu": fam.mu,
        "nu": fam.nu,
        "gluing_element": list(fam.gluing_element),
    }


def _run_arf(args):
    gs = _gap_semigroup(args)
    if args.action == "check":
        return {"is_arf": arf_mod.is_arf(gs)}
    if args.action == "derived":
        return arf_mod.arf_derived(gs).to_json()
    closure, steps = arf_mod.arf_closure(gs)
    out = closure.to_json()
    out["steps"] = steps
    return out


def _run_pi(args):
    kind, pts, d = _input_source(args)
    sem = AffineSemigroup(d, pts) if kind == "gens" else from_gaps(d, pts)
    if args.action == "check":
        status = arf_mod.is_pi(sem)
        return {
            "multiplicity": list(status.multiplicity),
            "attained": status.attained,
            "is_pi": status.is_pi,
        }
    pim = arf_mod.pi_decompose(sem)
    return {"offset": list(pim.offset), "base": pim.base.to_json()}


def _run_identity(args):
    gs = _gap_semigroup(args)
    if args.action == "pf-ideal":
        via_ideal = pf_via_ideal(gs)
        return {
            "pf": _points_json(via_ideal),
            "matches_direct": via_ideal == pseudo_frobenius(gs),
        }
    lhs, rhs = cardinality_identity(gs, _term_order(args))
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common(sp, order_flag=False):
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", help='generators, e.g. "(0,1);(3,0)" or "4;6;9"')
    group.add_argument("--gaps", help='gap set, same point syntax')
    group.add_argument("--file", help="JSON file with d and gens or gaps")
    if order_flag:
        sp.add_argument("--order", choices=["lex", "grlex"], default="grlex")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csg",
        description="Exact invariants of finite-gap semigroups in N^d.",
    )
    # the shared flags are accepted both before and after the subcommand;
    # SUPPRESS keeps a subparser from clobbering a value parsed up front
    common = argparse.ArgumentParser(add_help=False)
    for target, default in ((parser, False), (common, argparse.SUPPRESS)):
        target.add_argument(
            "--json", action="store_true", default=default, help="emit one JSON document"
        )
    for target, default in ((parser, None), (common, argparse.SUPPRESS)):
        target.add_argument(
            "--budget",
            type=int,
            default=default,
            help="gap-scan budget: max slice levels per axis and total work units",
        )
    for target, default in ((parser, 1), (common, argparse.SUPPRESS)):
        target.add_argument(
            "--threads",
            type=int,
            default=default,
            help="reserved; computations currently run single-threaded",
        )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    sp = add_parser("member", help="decide membership of a point")
    _add_common(sp)
    sp.add_argument("--point", required=True, help='point, e.g. "(7,4)"')
    sp.set_defaults(handler=_run_member)

    sp = add_parser("gaps", help="gap set, conductor, Hilbert basis")
    _add_common(sp)
    sp.set_defaults(handler=_run_gaps)

    sp = add_parser("pf", help="pseudo-Frobenius elements and Betti-type")
    _add_common(sp)
    sp.set_defaults(handler=_run_pf)

    sp = add_parser("frobenius", help="order-maximum gap")
    _add_common(sp, order_flag=True)
    sp.set_defaults(handler=_run_frobenius)

    sp = add_parser("classify", help="symmetry classification report")
    _add_common(sp, order_flag=True)
    sp.set_defaults(handler=_run_classify)

    sp = add_parser("omega", help="non-member part of the Frobenius ideal")
    _add_common(sp, order_flag=True)
    sp.set_defaults(handler=_run_omega)

    sp = add_parser("apery", help="Apery set of a finite witness set")
    _add_common(sp)
    sp.add_argument("--elements", required=True, help='witness points, e.g. "(1,0);(0,3)"')
    sp.set_defaults(handler=_run_apery)

    sp = add_parser("wilf", help="extended Wilf report")
    _add_common(sp, order_flag=True)
    sp.set_defaults(handler=_run_wilf)

    sp = add_parser("buchsbaum", help="doubled-ray gap test")
    _add_common(sp)
    sp.set_defaults(handler=_run_buchsbaum)

    sp = add_parser("glue", help="validate a gluing and emit the result")
    sp.add_argument("--s1", required=True, help="JSON file for the first factor")
    sp.add_argument("--s2", required=True, help="JSON file for the second factor")
    sp.add_argument("--s", required=True, help='gluing element, e.g. "[14]"')
    sp.set_defaults(handler=_run_glue)

    fam = add_parser("family", help="parametric families").add_subparsers(
        dest="family", required=True
    )
    sp = fam.add_parser("sap", parents=[common], help="four-generator plane family")
    sp.add_argument("-a", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="verify the certified PF subset")
    sp.add_argument("--window", help='Apery window, e.g. "(60,60)" (with --verify)')
    sp.set_defaults(handler=_run_family_sap)
    sp = fam.add_parser("saps", parents=[common], help="glued family of embedding dimension s+4")
    sp.add_argument("-a", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--numerical", required=True, help='numerical generators, e.g. "2;3"')
    sp.set_defaults(handler=_run_family_saps)

    sp = add_parser("arf", help="Arf property, derived monoid, closure")
    sp.add_argument("action", choices=["check", "derived", "closure"])
    _add_common(sp)
    sp.set_defaults(handler=_run_arf)

    sp = add_parser("pi", help="offset-plus-monoid property")
    sp.add_argument("action", choices=["check", "decompose"])
    _add_common(sp)
    sp.set_defaults(handler=_run_pi)

    sp = add_parser("identity", help="cross-checked identities")
    sp.add_argument("action", choices=["pf-ideal", "cardinality"])
    _add_common(sp, order_flag=True)
    sp.set_defaults(handler=_run_identity)

    return parser


def _render_text(payload, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_text(value, indent + 1))
        elif isinstance(value, list) and not value:
            lines.append(f"{pad}{key}: []")
        elif isinstance(value, list) and isinstance(value[0], list):
            pts = " ".join("(" + ",".join(str(v) for v in p) + ")" for p in value)
            lines.append(f"{pad}{key}: {pts}")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + "(" + ",".join(str(v) for v in value) + ")")
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has printed its message
        return int(exc.code or 0)
    if args.threads < 1:
        print("usage error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        payload = args.handler(args)
    except SemigroupError as exc:
        if args.json:
            print(
                json.dumps(
                    {"error": exc.name, "detail": str(exc)},
                    sort_keys=True,
                    separators=(",", ":"),
                )
            )
        else:
            print(f"error {exc.name}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print("\n".join(_render_text(payload)))
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
