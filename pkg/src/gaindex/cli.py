"""Command-line front end: compute, construct, bounds, verify, search, spotcheck.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections.abc import Sequence

from . import __version__
from .bounds import all_bounds, best_lower_bound
from .errors import GAIndexError
from .families import (
    construct_complete_bipartite,
    construct_example_210,
    construct_gdd,
    construct_h_delta,
    construct_two_hub,
    ga1_closed_form_gdd,
    ga1_closed_form_hdelta,
    ga1_closed_form_kdd,
)
from .formats import iter_graph6_lines, parse_edge_list, write_edge_list, write_graph6
from .graph import Graph, degree_summary
from .index import TOL, classic_bounds, ga1
from .harness.enumerate import MAX_N
from .harness.search import search_counterexample_2_2, search_minimal, theorem_2_20_spotchecks
from .harness.verify import SPOTCHECK_ONLY, THEOREMS, default_jobs, verify_graphs, verify_range

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- output ------------------------------------------------------------------

def _fmt(obj):
    """Round floats to 10 significant digits; non-finite values become null."""
    if isinstance(obj, float):
        return float(f"{obj:.10g}") if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _fmt(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_fmt(v) for v in obj]
    if isinstance(obj, range):
        return f"{obj.start}..{obj.stop - 1}"
    return obj


def _num(x: float | None) -> str:
    return "n/a" if x is None else f"{x:.10g}"


def _emit(args: argparse.Namespace, payload: dict, text: list[str]) -> None:
    if args.json:
        payload = {"command": args.command, "options": _options(args), **payload}
        sys.stdout.write(json.dumps(_fmt(payload), indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text) + "\n")


def _options(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}


# -- input -------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_graphs(paths: Sequence[str], fmt: str) -> list[tuple[str, Graph]]:
    out = []
    for path in paths:
        text = _read(path)
        try:
            if fmt == "edgelist":
                out.append((path, parse_edge_list(text)))
            else:
                out.extend((f"{path}:{line}", g) for line, g in iter_graph6_lines(text))
        except GAIndexError as exc:
            raise UsageError(f"{path}: {exc}") from None
    return out


def _int_range(text: str) -> range:
    """``7`` or ``2..9`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be > 0, got {text}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


# -- commands ----------------------------------------------------------------

def _bound_row(r) -> dict:
    return {"theorem_id": r.theorem_id.value, "applicable": r.applicable, "value": r.value,
            "equality_family": r.equality_family.describe() if r.equality_family else None,
            "gate": r.gate.value if r.gate else None, "notes": r.notes}


def cmd_compute(args: argparse.Namespace) -> int:
    reports, text = [], []
    for where, g in _load_graphs(args.files, args.format):
        s = degree_summary(g)
        row = {"source": where, "n": s.n, "m": s.m, "delta": s.delta, "Delta": s.Delta}
        if s.m == 0:
            row.update(ga1=None, note="no edges")
        else:
            row["ga1"] = ga1(g)
            if s.delta >= 1:
                cb = classic_bounds(s.m, s.delta, s.Delta)
                best = best_lower_bound(s.delta, s.Delta, tol=args.tolerance)
                row["classic_bounds"] = {"lower": cb.lower, "upper": cb.upper}
                row["best_lower_bound"] = _bound_row(best)
            else:
                row["note"] = "isolated vertex; bounds need minimum degree >= 1"
        reports.append(row)
        line = f"{where}: n={s.n} m={s.m} delta={s.delta} Delta={s.Delta} GA1={_num(row['ga1'])}"
        if "classic_bounds" in row:
            b = row["best_lower_bound"]
            line += (f" classic=[{_num(row['classic_bounds']['lower'])}, {_num(row['classic_bounds']['upper'])}]"
                     f" best={b['theorem_id']} {_num(b['value'])}")
        text.append(line)
    _emit(args, {"graphs": reports}, text)
    return EXIT_OK


_FAMILIES = {
    "gdd": (2, lambda d, D: (construct_gdd(d, D), ga1_closed_form_gdd(d, D))),
    "kdd": (2, lambda d, D: (construct_complete_bipartite(d, D), ga1_closed_form_kdd(d, D))),
    "hdelta": (1, lambda D: (construct_h_delta(D), ga1_closed_form_hdelta(D))),
    "two-hub": (2, lambda d, D: (construct_two_hub(d, D), None)),
    "example-210": (0, lambda: (construct_example_210(), None)),
}


def cmd_construct(args: argparse.Namespace) -> int:
    arity, build = _FAMILIES[args.family]
    if len(args.params) != arity:
        raise UsageError(f"{args.family} takes {arity} integer parameter(s), got {len(args.params)}")
    g, closed = build(*args.params)
    body = write_graph6(g).decode("ascii") + "\n" if args.format == "graph6" else write_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(body)
    s = degree_summary(g)
    value = ga1(g)
    payload = {"family": args.family, "params": list(args.params), "n": s.n, "m": s.m, "delta": s.delta,
               "Delta": s.Delta, "ga1": value, "closed_form": closed}
    text = [f"{args.family} {' '.join(map(str, args.params))}: n={s.n} m={s.m} delta={s.delta} Delta={s.Delta}",
            f"GA1 computed={_num(value)} closed form={_num(closed)}"]
    if not args.out:
        payload["graph"] = body
        text.append(body.rstrip("\n"))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    m = None
    delta, Delta = args.delta, args.Delta
    if args.graph:
        graphs = _load_graphs([args.graph], args.format)
        if len(graphs) != 1:
            raise UsageError(f"{args.graph}: expected exactly one graph, found {len(graphs)}")
        s = degree_summary(graphs[0][1])
        delta, Delta, m = s.delta, s.Delta, s.m
    if delta is None or Delta is None:
        raise UsageError("bounds needs --delta and --Delta, or --graph")
    rows = all_bounds(delta, Delta, m)
    # the best bound is a function of the profile alone; the classic row is informational
    best = best_lower_bound(delta, Delta, tol=args.tolerance)
    text = [f"bounds for delta={delta} Delta={Delta}" + (f" m={m}" if m is not None else "")]
    for r in rows:
        flag = " [BOUNDARY]" if r.gate is not None and r.gate.value == "BOUNDARY" else ""
        fam = r.equality_family.describe() if r.equality_family else "-"
        text.append(f"  {r.theorem_id.value:<12} {'yes' if r.applicable else 'no ':<3} {_num(r.value):>16}  "
                    f"{fam}{flag}  {r.notes}".rstrip())
    text.append(f"best: {best.theorem_id.value} {_num(best.value)}")
    _emit(args, {"delta": delta, "Delta": Delta, "m": m, "bounds": [_bound_row(r) for r in rows],
                 "best": _bound_row(best)}, text)
    return EXIT_OK


def _report_text(rep) -> list[str]:
    text = [f"{rep.theorem_id}: {'PASS' if rep.passed else 'FAIL'} graphs_checked={rep.graphs_checked} "
            f"gated={rep.graphs_gated} violations={len(rep.violations)} equality_witnesses={len(rep.equality_witnesses)} "
            f"mismatches={len(rep.equality_family_mismatches)}"]
    text += [f"  violation {g} ga1={_num(v)} bound={_num(b)}" for g, v, b in rep.violations[:20]]
    text += [f"  mismatch {g}" for g in rep.equality_family_mismatches[:20]]
    text += [f"  note: {n}" for n in rep.notes]
    return text


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem in SPOTCHECK_ONLY:
        raise UsageError(f"{args.theorem} is not certified by enumeration; use the spotcheck command")
    if args.input:
        graphs = [g for _, g in _load_graphs(args.input, "graph6")]
        rep = verify_graphs(args.theorem, graphs, args.tolerance)
    else:
        if not 2 <= args.n_max <= MAX_N:
            raise UsageError(f"--n-max must be in 2..{MAX_N}, got {args.n_max}")
        rep = verify_range(args.theorem, args.n_max, n_min=args.n_min, tol=args.tolerance, jobs=args.jobs,
                           require_connected=args.connected, dedup_isomorphic=args.dedup,
                           delta=args.delta, Delta=args.Delta, max_degree=args.max_degree)
    _emit(args, {"report": rep.to_dict()}, _report_text(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    if args.delta is None or args.Delta is None:
        raise UsageError("search needs --delta and --Delta")
    if args.kind == "counterexample-2-2":
        found = search_counterexample_2_2(args.delta, args.Delta, n_max=args.n_max, tol=args.tolerance)
        text = [f"{len(found)} witness(es) below both closed forms"]
        text += [f"  {w.graph6} delta={w.delta} Delta={w.Delta} ga1={_num(w.lhs)} min_form={_num(w.rhs)} "
                 f"margin={_num(w.margin)} ({w.source})" for w in found]
        _emit(args, {"witnesses": [w.to_dict() for w in found]}, text)
        return EXIT_OK
    if len(args.delta) != 1 or len(args.Delta) != 1:
        raise UsageError("minimal search takes a single --delta and --Delta")
    res = search_minimal(args.delta[0], args.Delta[0], args.n_max, args.tolerance)
    m_lo, m_hi, n_lo, n_hi = res.ranges
    text = [f"minimum GA1 for profile ({res.delta},{res.Delta}) over n <= {res.n_max}: {_num(res.min_value)}",
            f"  witnesses: {' '.join(res.witnesses)}",
            f"  edge range {m_lo}..{m_hi}, vertex range {n_lo}..{n_hi}; witnesses inside: {res.witnesses_in_ranges}",
            f"  search covers the whole vertex range: {res.exhaustive}"]
    _emit(args, res.to_dict(), text)
    return EXIT_OK


def cmd_spotcheck(args: argparse.Namespace) -> int:
    rng = args.Delta
    rep = theorem_2_20_spotchecks(rng.start, rng.stop - 1, args.tolerance)
    _emit(args, {"report": rep.to_dict()}, _report_text(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--tolerance", type=_positive_float, default=TOL, help="equality tolerance (default 1e-9)")
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6", help="graph input/output format")

    p = argparse.ArgumentParser(prog="gaindex", description="GA1 index computation, bounds and certification.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="GA1, classic bounds and best bound for input graphs")
    c.add_argument("files", nargs="+", help="input files ('-' for standard input)")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("construct", parents=[common], help="build an extremal graph")
    c.add_argument("family", choices=sorted(_FAMILIES))
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("--out", help="write the graph here instead of standard output")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("bounds", parents=[common], help="every lower bound for a degree profile")
    c.add_argument("--delta", type=int)
    c.add_argument("--Delta", type=int)
    c.add_argument("--graph", help="take the profile and edge count from this graph")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("verify", parents=[common], help="exhaustively certify a theorem")
    c.add_argument("theorem", choices=THEOREMS + SPOTCHECK_ONLY)
    c.add_argument("--n-max", type=int, default=7)
    c.add_argument("--n-min", type=int, default=2)
    c.add_argument("--delta", type=int)
    c.add_argument("--Delta", type=int)
    c.add_argument("--max-degree", type=int)
    c.add_argument("--jobs", type=_positive_int, default=default_jobs())
    conn = c.add_mutually_exclusive_group()
    conn.add_argument("--connected-only", dest="connected", action="store_true", default=True)
    conn.add_argument("--include-disconnected", dest="connected", action="store_false")
    c.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    c.add_argument("--input", nargs="+", help="check graph6 streams instead of enumerating")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("search", parents=[common], help="counterexample or minimal-graph search")
    c.add_argument("kind", choices=("counterexample-2-2", "minimal"))
    c.add_argument("--delta", type=_int_range)
    c.add_argument("--Delta", type=_int_range)
    c.add_argument("--n-max", type=int, default=8)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("spotcheck", parents=[common], help="large-Delta battery for minimum degree two")
    c.add_argument("--Delta", type=_int_range, default=range(28, 65))
    c.set_defaults(func=cmd_spotcheck)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GAIndexError) as exc:
        sys.stderr.write(f"gaindex {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
