"""Command-line interface: ``packnum <command> ...``.

Exit codes: 0 success, 2 theorem violation, 3 input error, 4 budget
exhausted with undecided graphs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .budget import BudgetExceeded
from .enumeration import MAX_BUILTIN_ORDER, connected_corpus
from .families import FAMILIES, FamilyError, FamilyParams, generate
from .graph import Graph
from .graph6 import Graph6Error, emit_graph6, read_graph6
from .invariants import invariant_report
from .mycielski import mycielski_bound_report, mycielski_power
from .packing import SPackingSpec, packing_chromatic_number, s_packing_color
from .realizability import ALL_CHECKS, MTable, build_m_table, build_report, dump_report, resolve_checks

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INPUT = 3
EXIT_UNDECIDED = 4

DEFAULT_BUDGET = 10 ** 8

# named searches accepted by ``scan --check``
SEARCH_CHECKS = {"conjecture-356": (3, 5, 6)}

_FAMILY_ALIASES = {
    "complete": "complete",
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "complete-bipartite": "complete_bipartite",
    "gkl": "g_k_ell",
    "g-k-ell": "g_k_ell",
    "hclass": "h_class",
    "h-class": "h_class",
    "kn-minus-star": "k_n_minus_star",
    "mycielski-power": "mycielski_power",
}


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    output_format: str = "human"
    seed: int | None = None

    def __post_init__(self):
        if self.budget <= 0:
            raise InputError("budget must be positive")
        if self.jobs < 1:
            raise InputError("jobs must be at least 1")


def _default_budget() -> int:
    raw = os.environ.get("PACKNUM_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise InputError(f"PACKNUM_BUDGET is not a number: {raw!r}") from None


def _read_inputs(paths: Sequence[str]) -> Iterator[Graph]:
    for path in paths or ["-"]:
        try:
            if path == "-":
                yield from read_graph6(sys.stdin)
            else:
                with open(path) as fh:
                    yield from read_graph6(fh)
        except Graph6Error as exc:
            raise InputError(f"{path}: {exc}") from None
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None


def _fmt_diam(d) -> str:
    return "inf" if d == float("inf") else str(int(d))


# commands


def cmd_invariants(args, out) -> int:
    cfg = RunConfig("invariants", args.inputs, args.budget, output_format=args.format)
    rows = []
    for g in _read_inputs(cfg.inputs):
        rep = invariant_report(g, cfg.budget)
        g6 = emit_graph6(g)
        if cfg.output_format == "json":
            rows.append({"graph6": g6, **rep.as_dict()})
        else:
            out.write(f"{g6}\tn={rep.n} Δ={rep.max_degree} diam={_fmt_diam(rep.diameter)} "
                      f"ω={rep.omega} χ={rep.chi} α={rep.alpha} χ_ρ={rep.chi_rho}\n")
    if cfg.output_format == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_packing(args, out) -> int:
    spec = None
    if args.spec:
        try:
            spec = SPackingSpec(tuple(int(x) for x in args.spec.split(",")))
        except ValueError as exc:
            raise InputError(f"bad --spec: {exc}") from None
    rows = []
    for g in _read_inputs(args.inputs):
        g6 = emit_graph6(g)
        if spec is None:
            k, col = packing_chromatic_number(g, args.budget)
            row = {"graph6": g6, "chi_rho": k, "coloring": list(col.colors)}
        else:
            col = s_packing_color(g, spec, args.budget)
            row = {"graph6": g6, "spec": list(spec.seq), "coloring": None if col is None else list(col.colors)}
        rows.append(row)
        if args.format == "human":
            if spec is None:
                out.write(f"{g6}\tχ_ρ={row['chi_rho']} coloring={row['coloring']}\n")
            else:
                out.write(f"{g6}\t{'NONE' if col is None else row['coloring']}\n")
    if args.format == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_mycielski(args, out) -> int:
    rows = []
    for g in _read_inputs(args.inputs):
        if args.bounds:
            rep = mycielski_bound_report(g, args.budget)
            row = {"graph6": emit_graph6(g), **rep.as_dict()}
            rows.append(row)
            if args.format == "human":
                out.write(f"{row['graph6']}\tα={rep.alpha} α(M)={rep.alpha_m} "
                          f"χ_ρ={rep.chi_rho} χ_ρ(M)={rep.chi_rho_m}\n")
                for b in rep.bounds:
                    flag = "n/a" if not b.applicable else ("ok" if b.holds else "FAIL")
                    tight = " tight" if b.applicable and b.tight else ""
                    out.write(f"  {b.name}: {b.lhs} {b.relation} {b.rhs} [{flag}{tight}]\n")
        else:
            out.write(emit_graph6(mycielski_power(g, args.power)) + "\n")
    if args.bounds and args.format == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _parse_params(text: str | None) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"bad --params item {item!r}; expected key=value")
        key, value = item.split("=", 1)
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise InputError(f"parameter {key} must be an integer") from None
    return params


def _parse_edges(text: str | None) -> tuple[tuple[int, int], ...]:
    if not text:
        return ()
    edges = []
    for item in text.split(","):
        try:
            u, v = item.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise InputError(f"bad edge {item!r}; expected u-v") from None
    return tuple(edges)


def cmd_gen(args, out) -> int:
    family = _FAMILY_ALIASES.get(args.family, args.family)
    params = _parse_params(args.params)
    for name in ("n", "k", "r", "s", "p", "q", "ell"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if family == "complete_bipartite" and "t" in params:
        params.setdefault("p", params["t"])
        params.setdefault("q", params["t"])
    if args.t is not None and family == "complete_bipartite":
        params.setdefault("p", args.t)
        params.setdefault("q", args.t)
    try:
        g = generate(FamilyParams(family, params, _parse_edges(args.extra_edges)))
    except FamilyError as exc:
        raise InputError(str(exc)) from None
    out.write(emit_graph6(g) + "\n")
    return EXIT_OK


def _scan_corpus(args) -> list[Graph]:
    if args.corpus:
        graphs = list(_read_inputs(args.corpus))
        return [g for g in graphs if args.min_n <= g.n <= args.max_n] if args.max_n is not None else graphs
    max_n = args.max_n if args.max_n is not None else 6
    if max_n > MAX_BUILTIN_ORDER:
        try:
            import pynauty  # noqa: F401
        except ImportError:
            raise InputError(f"--max-n {max_n} needs pynauty for corpus generation; "
                             "pass --corpus FILE with graph6 input instead") from None
    return list(connected_corpus(max_n, args.min_n))


def cmd_scan(args, out) -> int:
    cfg = RunConfig("scan", args.corpus or [], args.budget, args.jobs, "json")
    names = [c.strip() for c in args.check.split(",") if c.strip()]
    searches = [SEARCH_CHECKS[c] for c in names if c in SEARCH_CHECKS]
    for pattern in args.search or []:
        try:
            a, b, c = (int(x) for x in pattern.split(","))
        except ValueError:
            raise InputError(f"bad --search pattern {pattern!r}; expected a,b,c") from None
        searches.append((a, b, c))
    theorem_ids = [c for c in names if c not in SEARCH_CHECKS]
    if "all" in theorem_ids:
        theorem_ids = list(ALL_CHECKS)
    try:
        theorem_ids = list(resolve_checks(theorem_ids)) if theorem_ids else []
    except ValueError as exc:
        raise InputError(str(exc)) from None
    corpus = _scan_corpus(args)
    report = build_report(
        corpus,
        theorem_ids,
        budget=cfg.budget,
        jobs=cfg.jobs,
        with_m_table=not args.no_mtable and bool(theorem_ids),
        searches=searches,
        config={"max_n": args.max_n, "min_n": args.min_n, "corpus_files": args.corpus or []},
    )
    text = dump_report(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if any(r["status"] == "VIOLATION_FOUND" for r in report["per_theorem"]) or report["m_table_conflicts"]:
        return EXIT_VIOLATION
    if report["undecided"]:
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_mtable(args, out) -> int:
    table = MTable.seeded()
    if args.corpus or args.max_n is not None:
        table = build_m_table(_scan_corpus(args), args.budget, args.jobs, table)
    if args.format == "json":
        out.write(json.dumps(table.as_list(), indent=2, sort_keys=True) + "\n")
    else:
        out.write(table.render() + "\n")
    return EXIT_VIOLATION if table.conflicts else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="packnum", description="Exact packing chromatic number toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("inputs", nargs="*", help="graph6 files, '-' for stdin (default)")
        p.add_argument("--budget", type=int, default=None, help="solver node budget per graph")
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("invariants", help="n, Delta, diam, omega, chi, alpha, chi_rho per graph")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("packing", help="packing chromatic number or S-packing decision")
    common(p)
    p.add_argument("--spec", help="comma-separated nondecreasing distances, e.g. 2,3,4,5")
    p.set_defaults(func=cmd_packing)

    p = sub.add_parser("mycielski", help="Mycielskian powers or bound reports")
    common(p)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--bounds", action="store_true", help="evaluate the Mycielskian bounds instead")
    p.set_defaults(func=cmd_mycielski)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("--family", required=True, help=", ".join(sorted(_FAMILY_ALIASES)))
    p.add_argument("--params", help="key=value pairs, comma separated")
    for name in ("n", "k", "r", "s", "p", "q", "t", "ell"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--extra-edges", help="h_class extra edges, e.g. 1-4,3-5")
    p.set_defaults(func=cmd_gen)

    def corpus_opts(p):
        p.add_argument("--corpus", action="append", help="graph6 corpus file ('-' for stdin); repeatable")
        p.add_argument("--max-n", type=int, default=None)
        p.add_argument("--min-n", type=int, default=1)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("scan", help="check statements over a corpus; JSON report")
    corpus_opts(p)
    p.add_argument("--check", default="all",
                   help=f"comma list of {', '.join(ALL_CHECKS)}, {', '.join(SEARCH_CHECKS)}, or all")
    p.add_argument("--search", action="append", help="extra counterexample pattern a,b,c")
    p.add_argument("--no-mtable", action="store_true")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("mtable", help="m(a,b) table, optionally tightened by a corpus")
    corpus_opts(p)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_mtable)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "budget", None) is None and hasattr(args, "budget"):
            args.budget = _default_budget()
        if hasattr(args, "budget") and args.budget <= 0:
            raise InputError("budget must be positive")
        if hasattr(args, "jobs") and args.jobs < 1:
            raise InputError("jobs must be at least 1")
        return args.func(args, out)
    except InputError as exc:
        print(f"packnum: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"packnum: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
