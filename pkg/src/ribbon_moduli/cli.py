"""Command line surface: classification, component tables, strata graphs
and the exact verification batteries, all emitted as deterministic JSON.

Every run prints one report object: {"command", "params", "result",
"checks", "ms"}.  Keys are sorted and rationals rendered "num/den", so
output is byte-stable except for the wall-time "ms" field.  Exit codes:
0 success, 1 invalid input, 2 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .core import mk_glb, mk_ribbon, mk_vb
from .deformations import Check, verify_deformation_I, verify_deformation_II
from .extcomplex import NotStabilized, endo_quotient_dim, ext1_dim
from .geometry import (
    enumerate_strata,
    graph_to_dot,
    component_table,
    stratification_graph,
)
from .stability import (
    SelfClass,
    SplitClass,
    StabilityVerdict,
    classify_glb,
    classify_vb,
    gr_class,
    slopes,
)
from .sweeps import run_all


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would sys.exit(2)
        raise _UsageError(message)


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _partition_str(indices: tuple[int, ...]) -> str:
    return ",".join(str(b) for b in indices)


def _split_str(cls: SplitClass) -> str:
    return f"({cls.subsheaf_degree},{cls.quotient_degree})"


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"{what} must be comma-joined integers, got {text!r}") from None


def _checks_json(checks) -> list[dict]:
    return [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in checks]


def _cmd_classify(args) -> tuple[dict, dict, list[dict]]:
    ribbon = mk_ribbon(args.g, args.gbar)
    params = {"g": args.g, "gbar": args.gbar, "d": args.d, "degL": args.degL}
    if (args.index is None) == (args.vb is None):
        raise ValueError("provide exactly one of --index or --vb")

    if args.index is not None:
        params["index"] = args.index
        glb = mk_glb(ribbon, args.d, _parse_ints(args.index, "--index"))
        verdict = classify_glb(ribbon, glb)
        total, quotient, subsheaf = slopes(ribbon, args.degL, glb)
        gr = None
        if verdict is not StabilityVerdict.UNSTABLE:
            cls = gr_class(ribbon, glb)
            gr = "self" if isinstance(cls, SelfClass) else _split_str(cls)
        result = {
            "kind": "rank-1",
            "verdict": verdict.value,
            "b": glb.total_index,
            "slopes": {
                "total": _fraction_str(total),
                "quotient": _fraction_str(quotient),
                "subsheaf": _fraction_str(subsheaf),
            },
            "gr_class": gr,
        }
        return params, result, []

    params["vb"] = args.vb
    parts = _parse_ints(args.vb, "--vb")
    if len(parts) == 1:
        vb = mk_vb(ribbon, parts[0])
    elif len(parts) == 3:
        vb = mk_vb(ribbon, parts[0], split=(parts[1], parts[2]))
    else:
        raise ValueError(f"--vb takes e or e,a,b, got {args.vb!r}")
    verdict = classify_vb(ribbon, vb)
    known = isinstance(verdict, StabilityVerdict)
    gr = None
    if known and verdict is not StabilityVerdict.UNSTABLE:
        cls = gr_class(ribbon, vb)
        gr = "self" if isinstance(cls, SelfClass) else _split_str(cls)
    result = {
        "kind": "rank-2",
        "verdict": verdict.value if known else "unknown",
        "e": vb.e,
        "split": f"{vb.split[0]},{vb.split[1]}" if vb.split is not None else None,
        "gr_class": gr,
    }
    return params, result, []


def _cmd_components(args) -> tuple[dict, dict, list[dict]]:
    ribbon = mk_ribbon(args.g, args.gbar)
    params = {"g": args.g, "gbar": args.gbar, "d": args.d}
    table = component_table(ribbon, args.d)
    result = {
        "glb_components": [
            {"partition": _partition_str(c.indices), "dim": c.dim}
            for c in table.glb_components
        ],
        "count": len(table.glb_components),
        "vb_component": {
            "status": table.vb_component.status.value,
            "dim": table.vb_component.dim,
        },
        "special_case": None
        if table.special_case is None
        else {"empty": table.special_case.empty, "dim": table.special_case.dim},
    }
    return params, result, []


def _cmd_strata(args) -> tuple[dict, dict, list[dict]]:
    ribbon = mk_ribbon(args.g, args.gbar)
    params = {
        "g": args.g,
        "gbar": args.gbar,
        "d": args.d,
        "semistable": bool(args.semistable),
    }
    strata = enumerate_strata(ribbon, args.d, include_semistable=args.semistable)
    graph = stratification_graph(ribbon, args.d)
    if args.dot:
        Path(args.dot).write_text(graph_to_dot(graph))
    boundary = None
    if graph.boundary is not None:
        boundary = {
            "gr": None if graph.boundary.gr is None else _split_str(graph.boundary.gr),
            "vb": graph.boundary.has_vb,
        }
    result = {
        "strata": [
            {
                "partition": _partition_str(s.indices),
                "sum": s.total_index,
                "dim": s.dim,
                "stability": s.stability.value,
            }
            for s in strata
        ],
        "graph": {
            "nodes": graph.node_count,
            "edges": len(graph.edges),
            "connected": graph.connected,
            "boundary": boundary,
        },
    }
    return params, result, []


def _cmd_verify(args) -> tuple[dict, dict, list[dict]]:
    kind = args.verification
    if kind in ("ext", "endo"):
        floor = 4 * args.n + 4 if kind == "ext" else 2 * args.n + 2
        trunc = args.trunc if args.trunc is not None else floor
        params = {"n": args.n, "prime": args.prime, "trunc": trunc}
        if kind == "ext":
            value, want = ext1_dim(args.n, args.prime, trunc), 2 * args.n
            name = "ext1-dim"
        else:
            value, want = endo_quotient_dim(args.n, args.prime, trunc), args.n
            name = "endo-quotient-dim"
        checks = [Check(name, value == want, f"got {value}, want {want}")]
        return params, {"dim": value}, _checks_json(checks)
    if kind in ("deform1", "deform2"):
        if args.t is None:
            raise ValueError("--t is required for deformation checks")
        runner = verify_deformation_I if kind == "deform1" else verify_deformation_II
        report = runner(args.b, args.prime, args.t)
        return dict(report.params), {"ok": report.ok}, _checks_json(report.checks)
    # sweep: the whole acceptance grid
    checks = run_all()
    return {}, {"ok": all(c.passed for c in checks)}, _checks_json(checks)


def _add_common(p: _Parser) -> None:
    p.add_argument("--g", type=int, required=True, help="arithmetic genus")
    p.add_argument("--gbar", type=int, required=True, help="genus of the reduction")
    p.add_argument("--d", type=int, required=True, help="descriptor degree")
    p.add_argument("--json", metavar="FILE", default=None, help="write the report to FILE")


def _build_parser() -> _Parser:
    top = _Parser(prog="ribbon-moduli", description="rank-1 moduli bookkeeping on ribbons")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="stability verdict for one descriptor")
    _add_common(c)
    c.add_argument("--index", default=None, help="comma-joined local indices ('' = line bundle)")
    c.add_argument("--vb", default=None, help="rank-2 descriptor: e or e,a,b")
    c.add_argument("--degL", type=int, default=1, help="polarization degree for the slopes")

    p = sub.add_parser("components", help="irreducible component table")
    _add_common(p)

    s = sub.add_parser("strata", help="stratum list and degeneration graph")
    _add_common(s)
    s.add_argument("--semistable", action="store_true", help="list strictly semistable strata too")
    s.add_argument("--dot", metavar="FILE", default=None, help="write the graph as DOT to FILE")

    v = sub.add_parser("verify", help="exact local-model verification batteries")
    vsub = v.add_subparsers(dest="verification", required=True, parser_class=_Parser)
    for name, expect in (("ext", "2n"), ("endo", "n")):
        q = vsub.add_parser(name, help=f"homology dimension check (expects {expect})")
        q.add_argument("--n", type=int, required=True, help="local index of the model")
        q.add_argument("--prime", type=int, default=101)
        q.add_argument("--trunc", type=int, default=None, help="truncation order")
        q.add_argument("--json", metavar="FILE", default=None)
    for name, blurb in (
        ("deform1", "collision family (index b and a double point)"),
        ("deform2", "absorption family (index b eats an index-1 point)"),
    ):
        q = vsub.add_parser(name, help=blurb)
        q.add_argument("--b", type=int, required=True, help="local index parameter")
        q.add_argument("--prime", type=int, default=101)
        q.add_argument("--t", type=int, default=None, help="collision parameter (unit mod prime)")
        q.add_argument("--json", metavar="FILE", default=None)
    q = vsub.add_parser("sweep", help="run the full verification grid")
    q.add_argument("--json", metavar="FILE", default=None)
    return top


def main(argv: list[str] | None = None) -> int:
    start = time.perf_counter()
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    handlers = {
        "classify": _cmd_classify,
        "components": _cmd_components,
        "strata": _cmd_strata,
        "verify": _cmd_verify,
    }
    command = args.command if args.command != "verify" else f"verify {args.verification}"
    try:
        params, result, checks = handlers[args.command](args)
    except NotStabilized as err:
        print(f"verification failure: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    report = {
        "command": command,
        "params": params,
        "result": result,
        "checks": checks,
        "ms": int((time.perf_counter() - start) * 1000),
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.json:
        Path(args.json).write_text(text + "\n")
    else:
        print(text)
    return 2 if any(not c["pass"] for c in checks) else 0


if __name__ == "__main__":
    sys.exit(main())
