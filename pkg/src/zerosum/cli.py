"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 infeasible instance, 3 budget
exceeded.  Rationals are printed as canonical "p/q" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bounds, constructions, solver, suites
from .errors import InvalidParameters, ZeroSumError
from .hypergraph import complete_equipartite, complete_hypergraph, total_sum, unbalancedness
from .serialize import (dump_hypergraph, dump_weighting, parse_rational, read_hypergraph, to_jsonable,
                        write_text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(s):
    try:
        return parse_rational(s)
    except InvalidParameters as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _flatten(d, prefix=""):
    out = {}
    for k, v in d.items():
        if isinstance(v, dict):
            out.update(_flatten(v, f"{prefix}{k}."))
        elif isinstance(v, list):
            out[prefix + k] = json.dumps(v)
        else:
            out[prefix + k] = v
    return out


def emit(obj, fmt: str, out=None):
    out = out or sys.stdout
    data = to_jsonable(obj)
    if fmt == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    elif fmt == "csv":
        rows = data if isinstance(data, list) else [data]
        rows = [_flatten(r) for r in rows]
        cols = list(dict.fromkeys(k for r in rows for k in r))
        w = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        rows = data if isinstance(data, list) else [data]
        for r in rows:
            for k, v in _flatten(r).items():
                out.write(f"{k}: {v}\n")
            if len(rows) > 1:
                out.write("\n")


# -- bound ------------------------------------------------------------------

def cmd_bound(args):
    if args.kind == "complete":
        rep = bounds.complete_bound(args.n, args.r)
    elif args.kind == "equipartite":
        e = args.n ** args.r if args.e is None else args.e
        rep = bounds.equipartite_bound(args.r, args.n, e)
    elif args.kind == "complete-partite":
        rep = bounds.BoundReport(bounds.complete_partite_bound(args.r, args.n), "complete-partite",
                                 {"r": args.r, "n": args.n})
    else:
        rep = bounds.BoundReport(bounds.balogh_smyth_bound(args.r, args.n, args.D, args.alpha), "balogh-smyth",
                                 {"r": args.r, "n": args.n, "D": args.D, "alpha": args.alpha})
    emit(rep, args.format)
    return 0


# -- construct --------------------------------------------------------------

def _construction_report(kind, c, claimed=None):
    H, f = c.hypergraph, c.weighting
    x = unbalancedness(H, f)
    report = {"kind": kind, "n": H.n, "r": H.r, "edges": H.m, "X": x, "total_sum": total_sum(H, f)}
    warnings = []
    if not c.zero_sum:
        warnings.append("weighting does not sum to zero")
    if H.isolated_vertices():
        warnings.append(f"isolated vertices {H.isolated_vertices()} force X = 0")
    if claimed is not None:
        report["bound"] = claimed
        report["attained"] = x == claimed
    report["warnings"] = warnings
    return report


def cmd_construct(args):
    kind = args.kind
    if kind == "majority":
        c = constructions.majority_weighting_complete(args.n, args.r)
        claimed = bounds.complete_bound(args.n, args.r).value if args.n % 2 == 0 else None
    elif kind == "optimal":
        c = constructions.optimal_weighting_complete(args.n, args.r)
        claimed = bounds.complete_bound(args.n, args.r).value
    elif kind == "equipartite-majority":
        c = constructions.equipartite_majority(args.r, args.n)
        claimed = bounds.complete_partite_bound(args.r, args.n)
    else:
        c = constructions.equipartite_threshold(args.r, args.n, args.k)
        claimed = bounds.equipartite_bound(args.r, args.n, c.hypergraph.m).value
    report = _construction_report(kind, c, claimed)
    if args.emit:
        write_text(f"{args.emit}.hypergraph.json", dump_hypergraph(c.hypergraph))
        write_text(f"{args.emit}.weighting.json", dump_weighting(c.weighting))
        report["files"] = [f"{args.emit}.hypergraph.json", f"{args.emit}.weighting.json"]
    if args.show_weighting:
        report["weighting"] = c.weighting
    emit(report, args.format)
    return 0


# -- solve ------------------------------------------------------------------

def _source(args):
    if args.complete:
        return complete_hypergraph(*args.complete)
    if args.equipartite:
        return complete_equipartite(*args.equipartite)
    if args.file:
        return read_hypergraph(args.file)
    raise InvalidParameters("give one of --complete N R, --equipartite R N, --file PATH")


def cmd_solve(args):
    H = _source(args)
    if args.method == "enumerate":
        res = solver.enumerate_pm1_max(H)
    elif args.method == "lp":
        res = solver.lp_max(H, workers=solver.thread_budget())
    else:
        if not args.complete:
            raise InvalidParameters("the reduced method needs --complete N R")
        res = solver.exact_complete_max(*args.complete)
    if args.emit:
        write_text(args.emit, dump_weighting(res.witness))
    out = {"method": res.method, "value": res.value, "explored": res.explored,
           "n": H.n, "r": H.r, "edges": H.m, "witness": res.witness, "notes": res.notes}
    emit(out, args.format)
    return 0


# -- verify -----------------------------------------------------------------

def cmd_verify(args):
    name = args.suite
    fn = suites.SUITES[name]
    kw = {}
    if name in ("shifts", "level-one", "semi-threshold", "symmetry"):
        kw["seed"] = args.seed
        if args.trials is not None:
            kw["trials"] = args.trials
    if name in ("shifts", "level-one", "semi-threshold") and args.r_max is not None:
        kw["r_max"] = args.r_max
    if name in ("monotonicity", "oracle-vs-bound", "constructions") and args.n_max is not None:
        kw["n_max"] = args.n_max
    if name in ("monotonicity", "constructions") and args.r_max is not None:
        kw["r_max"] = args.r_max
    if name == "oracle-vs-bound":
        kw["workers"] = solver.thread_budget()
    checks = fn(**kw)
    ok = all(c.passed for c in checks)
    if args.format == "human":
        for c in checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name} ({c.cases} cases)"
            if not c.passed:
                line += f" counterexample: {json.dumps(to_jsonable(c.counterexample))}"
            print(line)
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    else:
        emit(checks, args.format)
    return 0 if ok else 4


# -- table ------------------------------------------------------------------

def _complete_row(n, r, lp_n_max):
    rep = bounds.complete_bound(n, r)
    best, k = bounds.max_chi(n, r)
    row = {"n": n, "r": r, "complete_bound": rep.value, "literal_bound": rep.parameters["literal_value"],
           "max_chi": best, "k_star": k, "lp": "", "equal": ""}
    if n <= lp_n_max:
        lp = solver.lp_max(complete_hypergraph(n, r)).value
        row["lp"] = lp
        row["equal"] = lp == rep.value
    return row


def _equipartite_row(r, n, lp_n_max):
    rep = bounds.equipartite_bound(r, n, n ** r)
    row = {"r": r, "n": n, "complete_partite_bound": bounds.complete_partite_bound(r, n),
           "equipartite_bound": rep.value, "k": rep.parameters["k"], "beta": rep.parameters["beta"],
           "balogh_smyth": bounds.balogh_smyth_bound(r, n, 1, 0), "lp": "", "equal": ""}
    if r * n <= lp_n_max:
        lp = solver.lp_max(complete_equipartite(r, n)).value
        row["lp"] = lp
        row["equal"] = lp == rep.value
    return row


def table_rows(kind: str, n_range, r_range, lp_n_max: int, workers: int = 1):
    if kind == "complete":
        jobs = [(n, r, lp_n_max) for n in n_range for r in r_range if r <= n and n >= 2]
        fn = _complete_row
    else:
        jobs = [(r, n, lp_n_max) for r in r_range for n in n_range]
        fn = _equipartite_row
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, *zip(*jobs)))
    return [fn(*j) for j in jobs]


def cmd_table(args):
    rows = table_rows(args.kind, range(args.n_min, args.n_max + 1), range(args.r_min, args.r_max + 1),
                      args.lp_n_max, solver.thread_budget())
    emit(rows, args.format)
    return 0


def _fmt(parser, default="human"):
    parser.add_argument("--format", choices=("json", "csv", "human"), default=default)
    return parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zerosum", description="Reverse discrepancy bounds, constructions and exact oracles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = _fmt(sub.add_parser("bound", help="evaluate a closed-form bound"))
    b.add_argument("kind", choices=("complete", "equipartite", "complete-partite", "balogh-smyth"))
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--e", type=int, help="edge count (equipartite; default n^r)")
    b.add_argument("--D", type=_rational, default=Fraction(1))
    b.add_argument("--alpha", type=_rational, default=Fraction(0))
    b.set_defaults(func=cmd_bound)

    c = _fmt(sub.add_parser("construct", help="build an extremal weighting"))
    c.add_argument("kind", choices=("majority", "optimal", "equipartite-majority", "equipartite-threshold"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--k", type=int, default=1, help="threshold (equipartite-threshold)")
    c.add_argument("--emit", metavar="STEM", help="write STEM.hypergraph.json and STEM.weighting.json")
    c.add_argument("--show-weighting", action="store_true")
    c.set_defaults(func=cmd_construct)

    s = _fmt(sub.add_parser("solve", help="run an exact oracle"))
    s.add_argument("method", choices=("enumerate", "lp", "reduced"))
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--complete", nargs=2, type=int, metavar=("N", "R"))
    src.add_argument("--equipartite", nargs=2, type=int, metavar=("R", "N"))
    src.add_argument("--file", help="hypergraph JSON file")
    s.add_argument("--emit", metavar="PATH", help="write the witness weighting JSON")
    s.set_defaults(func=cmd_solve)

    v = _fmt(sub.add_parser("verify", help="run a property suite"))
    v.add_argument("suite", choices=tuple(suites.SUITES))
    v.add_argument("--n-max", type=int)
    v.add_argument("--r-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0, help="seed for random.Random (default 0)")
    v.set_defaults(func=cmd_verify)

    t = _fmt(sub.add_parser("table", help="sweep bounds and oracles into a table"), "csv")
    t.add_argument("kind", choices=("complete", "equipartite"))
    t.add_argument("--n-min", type=int, default=2)
    t.add_argument("--n-max", type=int, default=6)
    t.add_argument("--r-min", type=int, default=2)
    t.add_argument("--r-max", type=int, default=3)
    t.add_argument("--lp-n-max", type=int, default=6, help="run lp_max only up to this many vertices")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except ZeroSumError as exc:
        print(f"zerosum: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
