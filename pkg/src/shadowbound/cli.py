"""Command-line front end: ``shadowbound {bound,construct,analyze,oracle,sweep,verify}``.

Exit status is 2 for bad arguments, 1 when a certification or verification
fails, 0 otherwise. Every JSON report carries a ``params`` block with the fully
resolved inputs.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import bounds, constructions, oracle, verify
from .combinatorics import binom_inverse
from .constructions import CertificationError, Kind
from .families import SetFamily, min_degree, parse_family, shadow
from .graphs import (Graph, clique_family, format_edgelist, from_graph6, max_triangle_degree,
                     min_triangle_degree, parse_edgelist, to_graph6, triangle_degrees)

CONSTRUCT_KINDS = {
    "g1": Kind.G1,
    "g2": Kind.G2,
    "g2p": Kind.G2_PRIME,
    "cliques": Kind.DISJOINT_CLIQUES,
    "exact-small": None,  # picked from n - t
}
EXACT_SMALL = {2: Kind.K_MINUS_EDGE, 3: Kind.K_MINUS_MATCHING, 4: Kind.COMPL_2REGULAR}


class UsageError(ValueError):
    pass


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _number(text: str):
    """Parse an int, or a decimal exactly as a Fraction."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else float(x)
    return x


# ---------------------------------------------------------------- file formats


def load_object(path: str) -> Graph | SetFamily:
    """Read a graph6 file, an edge list ('n' header) or a family file ('n k' header)."""
    text = Path(path).read_text()
    if path.endswith(".g6"):
        return from_graph6(text.split()[0] if text.split() else "")
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError(f"{path} is empty")
    head = lines[0].split()
    if all(tok.isdigit() for tok in head):
        if len(head) == 1:
            return parse_edgelist(text)
        if len(head) == 2:
            return parse_family(text)
    return from_graph6(lines[0])


def _output_format(path: str | None, fmt: str | None) -> str:
    if fmt:
        return fmt
    if path and not path.endswith(".g6"):
        return "edgelist"
    return "graph6"


def _encode(G: Graph, fmt: str) -> str:
    return to_graph6(G) + "\n" if fmt == "graph6" else format_edgelist(G)


# ---------------------------------------------------------------- subcommands


def cmd_bound(args) -> int:
    if args.which == "shadow":
        report = bounds.shadow_mindeg_bound(args.n, args.d)
        naive = bounds.naive_mindeg_shadow_bound(args.n, 3, float(args.d))
        _emit({
            "command": "bound shadow",
            "params": {"n": args.n, "d": _jsonable(args.d)},
            "report": report.to_dict(),
            "naive_bound": naive,
        })
    else:
        if (args.t is None) == (args.threshold is None):
            raise UsageError("bound edges needs exactly one of --t or --threshold")
        report = bounds.edge_lower_bound(args.n, args.t, threshold=args.threshold)
        _emit({
            "command": "bound edges",
            "params": {"n": args.n, "t": report.t, "threshold": _jsonable(args.threshold)},
            "report": report.to_dict(),
        })
    return 0


def cmd_construct(args) -> int:
    if (args.t is None) == (args.threshold is None):
        raise UsageError("construct needs exactly one of --t or --threshold")
    kind = CONSTRUCT_KINDS[args.kind]
    options = {}
    if kind is None:
        if args.t is None or Fraction(args.t).denominator != 1:
            raise UsageError("exact-small needs an integer --t")
        kind = EXACT_SMALL.get(args.n - int(args.t))
        if kind is None:
            raise UsageError(f"exact-small needs n - t in {{2, 3, 4}}, got {args.n - args.t}")
        if args.two_regular:
            H = load_object(args.two_regular)
            if not isinstance(H, Graph):
                raise UsageError("--two-regular must be a graph file")
            options["two_regular"] = H
    elif args.two_regular:
        raise UsageError("--two-regular only applies to exact-small")

    spec = constructions.plan(kind, args.n, args.t, threshold=args.threshold, **options)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", constructions.SideConditionWarning)
        try:
            G = constructions.build(spec)
        except CertificationError as exc:
            print(f"certification failed: {exc}", file=sys.stderr)
            return 1
    notes = [str(w.message) for w in caught]
    for msg in notes:
        print(f"warning: {msg}", file=sys.stderr)

    fmt = _output_format(args.output, args.format)
    lo, hi = min_triangle_degree(G), max_triangle_degree(G)
    summary = {
        "command": f"construct {args.kind}",
        "params": {
            "kind": kind.value,
            "n": args.n,
            "t": spec.t,
            "threshold": spec.threshold,
            "derived": {k: v for k, v in spec.derived.items() if k != "two_regular"},
            "format": fmt,
            "output": args.output,
        },
        "edges": G.num_edges,
        "min_triangle_degree": lo,
        "max_triangle_degree": hi,
        "certification": f"min triangle-degree {lo} ≥ {spec.threshold}",
        "warnings": notes,
    }
    if args.output:
        Path(args.output).write_text(_encode(G, fmt))
    else:
        summary["graph"] = _encode(G, fmt).rstrip("\n") if fmt == "graph6" else _encode(G, fmt)
    _emit(summary)
    return 0


def _shadow_report(F: SetFamily) -> dict:
    sh = shadow(F)
    out = {"n": F.n, "k": F.k, "size": len(F), "shadow_size": len(sh)}
    if F.n:
        md = min_degree(F)
        out["min_degree"] = md
        if F.k == 3 and F.n >= 2:
            d = Fraction(md, math.comb(F.n, 2))
            out["density"] = float(d)
            out["kruskal_katona_bound"] = bounds.kk_shadow_bound(len(F), 3)
            out["naive_bound"] = bounds.naive_mindeg_shadow_bound(F.n, 3, float(d))
            if F.n >= bounds.MIN_N_SHADOW and Fraction(1, 4) <= d < 1:
                out["mindeg_bound"] = bounds.shadow_mindeg_bound(F.n, d).to_dict()
    return out


def cmd_analyze(args) -> int:
    obj = load_object(args.input)
    params = {"input": args.input, "report": args.report, "t": _jsonable(args.t)}
    if args.report == "shadow":
        F = obj if isinstance(obj, SetFamily) else clique_family(obj, 3)
        _emit({"command": "analyze", "params": params, "source": type(obj).__name__,
               "result": _shadow_report(F)})
        return 0
    if not isinstance(obj, Graph):
        raise UsageError(f"--report {args.report} needs a graph file")
    G = obj
    degs = triangle_degrees(G)
    if args.report == "triangle-degrees":
        result = {
            "n": G.n,
            "edges": G.num_edges,
            "min_degree": min(G.degrees()) if G.n else 0,
            "min_triangle_degree": min(degs) if degs else 0,
            "max_triangle_degree": max(degs) if degs else 0,
            "triangle_degrees": degs,
        }
    else:
        t = args.t if args.t is not None else binom_inverse(min(degs), 2)
        params["t"] = _jsonable(t)
        need = Fraction(t) * (Fraction(t) - 1) / 2
        bound = bounds.delta_based_bound(G, t)
        result = {
            "n": G.n,
            "edges": G.num_edges,
            "min_degree": min(G.degrees()),
            "min_triangle_degree": min(degs),
            "hypothesis_holds": min(degs) >= need,
            "delta_bound": bound,
            "meets_delta_bound": abs(G.num_edges - bound) <= 1e-9 * max(1.0, bound),
            "equality_structure": bounds.check_delta_equality(G, t),
        }
    _emit({"command": "analyze", "params": params, "result": result})
    return 0


def cmd_oracle(args) -> int:
    def progress(msg: str) -> None:
        print(msg, file=sys.stderr, flush=True)

    progress(f"searching {args.which} n={args.n} threshold={args.threshold}")
    if args.which == "min-edges":
        res = oracle.min_edges_graph(args.n, args.threshold, workers=args.workers,
                                     witnesses=not args.no_witnesses, progress=progress)
    else:
        res = oracle.min_shadow_family(args.n, args.threshold, witnesses=not args.no_witnesses)
    progress(f"done: minimum {res.minimum}, {res.nodes_explored} nodes, {res.wall_time:.2f}s")
    workers = args.workers if args.workers is not None else oracle.default_workers()
    _emit({
        "command": f"oracle {args.which}",
        "params": {"n": args.n, "threshold": args.threshold,
                   "workers": workers if args.which == "min-edges" else 1,
                   "witnesses": not args.no_witnesses},
        "result": res.to_dict(),
    })
    return 0


def sweep_rows(n: int, d_from, d_to, step):
    """Rows (d, regime, bound/C(n,2), construction/C(n,2), kind) on an exact decimal grid."""
    d_from, d_to, step = Fraction(d_from), Fraction(d_to), Fraction(step)
    if step <= 0:
        raise UsageError("--step must be positive")
    if d_to < d_from:
        raise UsageError("--d-to must be >= --d-from")
    pairs = math.comb(n, 2)
    count = int((d_to - d_from) / step) + 1
    for i in range(count):
        d = d_from + i * step
        rep = bounds.shadow_mindeg_bound(n, d)
        spec = constructions.best_construction(n, threshold=math.ceil(d * pairs))
        size = constructions.construction_size(spec) / pairs if spec else None
        yield float(d), rep.regime.value, rep.value / pairs, size, spec.kind.value if spec else ""


def cmd_sweep(args) -> int:
    rows = list(sweep_rows(args.n, args.d_from, args.d_to, args.step))
    g = "{:.12g}".format
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["d", "regime", "bound/C(n,2)", "construction_size/C(n,2)", "construction"])
        for d, regime, b, c, kind in rows:
            w.writerow([g(d), regime, g(b), "" if c is None else g(c), kind])
    _emit({
        "command": "sweep",
        "params": {"n": args.n, "d_from": _jsonable(args.d_from), "d_to": _jsonable(args.d_to),
                   "step": _jsonable(args.step), "out": args.out},
        "rows": len(rows),
    })
    return 0


def cmd_verify(args) -> int:
    print(f"verify all: max_n={args.max_n}")
    results = verify.run_all(args.max_n)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------- parser


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shadowbound", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate a lower bound")
    bsub = b.add_subparsers(dest="which", required=True)
    bs = bsub.add_parser("shadow", help="shadow of a triple system with min degree d C(n,2)")
    bs.add_argument("--n", type=int, required=True)
    bs.add_argument("--d", type=_number, required=True)
    be = bsub.add_parser("edges", help="edges of a graph with every vertex in C(t,2) triangles")
    be.add_argument("--n", type=int, required=True)
    be.add_argument("--t", type=_number)
    be.add_argument("--threshold", type=_number)

    c = sub.add_parser("construct", help="build and certify a construction")
    c.add_argument("kind", choices=sorted(CONSTRUCT_KINDS))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=_number)
    c.add_argument("--threshold", type=_number)
    c.add_argument("-o", "--output")
    c.add_argument("--format", choices=["graph6", "edgelist"])
    c.add_argument("--two-regular", help="graph file with the 2-regular graph to complement")

    a = sub.add_parser("analyze", help="report on a graph or family file")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--report", required=True, choices=["triangle-degrees", "shadow", "delta-equality"])
    a.add_argument("--t", type=_number, help="requirement for delta-equality (default: from the graph)")

    o = sub.add_parser("oracle", help="exact minimum by exhaustive search")
    o.add_argument("which", choices=["min-edges", "min-shadow"])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--threshold", type=int, required=True)
    o.add_argument("--workers", type=_positive_int)
    o.add_argument("--no-witnesses", action="store_true")

    s = sub.add_parser("sweep", help="bound and best construction over a density grid")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d-from", type=_number, required=True)
    s.add_argument("--d-to", type=_number, required=True)
    s.add_argument("--step", type=_number, required=True)
    s.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("which", choices=["all"])
    v.add_argument("--max-n", type=int, default=7)
    return p


COMMANDS = {
    "bound": cmd_bound,
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
