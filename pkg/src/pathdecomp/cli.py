"""Command-line front end.

Exit codes: 0 success, 1 invalid decomposition, 2 parse error, 3 method does
not fit the input, 4 an emitted decomposition failed verification, 5 oracle
budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import graph as gc
from .decomposition import Decomposition, from_json, lower_bound, to_json, verify
from .dot import to_dot
from .errors import BudgetExhausted, GraphError, InvalidParams, ParseError, PreconditionError
from .graph import Graph, cartesian_product, is_connected, is_tree
from .layered import decompose_grid, decompose_path_even_product, decompose_path_product
from .oracle import OracleBudget, decompose_odd_graph, min_path_decomposition
from .products import decompose_path_tree_product, decompose_product
from .trees import decompose_tree

METHODS = ("auto", "tree", "grid", "layered", "even", "virtual_real", "exact")

EXIT_INVALID, EXIT_PARSE, EXIT_MISMATCH, EXIT_UNVERIFIED, EXIT_BUDGET = 1, 2, 3, 4, 5


class MethodMismatch(Exception):
    pass


@dataclass(frozen=True)
class GraphSpec:
    """A graph together with how it was generated (if known)."""
    kind: str
    graph: Graph
    factors: tuple["GraphSpec", "GraphSpec"] | None = None


def _ints(text: str, count: int, spec: str) -> list[int]:
    parts = text.split(",") if text else []
    if len(parts) != count or not all(p.strip().isdigit() for p in parts):
        raise ParseError(f"bad generator spec {spec!r}")
    return [int(p) for p in parts]


def parse_gen(spec: str, seed: int = 0) -> GraphSpec:
    """Parse the generator mini-grammar.

    ``path:n``, ``cycle:n``, ``star:k`` (``K_{1,k}``), ``complete:n``,
    ``tree:n[:seed]``, ``connected:n[:seed]``, ``even:n[:seed]``,
    ``odd:n[:seed]``, ``grid:n,t`` and ``product:<spec>,<spec>``.
    """
    kind, _, rest = spec.partition(":")
    try:
        if kind == "product":
            for i, ch in enumerate(rest):
                if ch != ",":
                    continue
                try:
                    left, right = parse_gen(rest[:i], seed), parse_gen(rest[i + 1:], seed)
                except (ParseError, InvalidParams):
                    continue
                return GraphSpec("product", cartesian_product(left.graph, right.graph), (left, right))
            raise ParseError(f"cannot split product spec {spec!r}")
        if kind == "grid":
            n, t = _ints(rest, 2, spec)
            return GraphSpec("grid", gc.grid_graph(n, t),
                             (GraphSpec("path", gc.path_graph(n)), GraphSpec("path", gc.path_graph(t))))
        if kind in ("path", "cycle", "complete"):
            (n,) = _ints(rest, 1, spec)
            return GraphSpec(kind, gc.gen_family(kind, n=n))
        if kind == "star":
            (k,) = _ints(rest, 1, spec)
            return GraphSpec(kind, gc.star_graph(k))
        families = {"tree": "random_tree", "connected": "random_connected",
                    "even": "random_even", "odd": "random_odd"}
        if kind in families:
            n_text, _, seed_text = rest.partition(":")
            (n,) = _ints(n_text, 1, spec)
            s = _ints(seed_text, 1, spec)[0] if seed_text else seed
            return GraphSpec(kind, gc.gen_family(families[kind], seed=s, n=n))
    except GraphError as exc:
        if isinstance(exc, ParseError):
            raise
        raise InvalidParams(f"{spec!r}: {exc}") from None
    raise ParseError(f"unknown generator kind {kind!r}")


def _is_path(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees, default=0) <= 2 and all(
        abs(u - v) == 1 for u, v in g.edges)


def _odd(g: Graph) -> bool:
    return g.n >= 2 and all(d % 2 for d in g.degrees)


def _even(g: Graph) -> bool:
    return all(d % 2 == 0 for d in g.degrees)


def choose_method(spec: GraphSpec) -> str:
    """The most specific construction whose hypotheses hold, else the oracle."""
    g = spec.graph
    if is_tree(g):
        return "tree"
    if spec.factors:
        f1, f2 = spec.factors[0].graph, spec.factors[1].graph
        if _is_path(f1) and _is_path(f2):
            # small grids fall outside the explicit construction
            return "grid" if max(f1.n, f2.n) >= 4 else "exact"
        if _is_path(f1) and f1.n >= 2 and f2.m and is_connected(f2):
            if _even(f2):
                return "even"
            if is_tree(f2) and f1.n >= 4:
                return "virtual_real"
            return "layered"
        if f1.n >= 2 and is_connected(f1) and is_connected(f2) and (is_tree(f1) or _odd(f1)):
            return "virtual_real"
    return "exact"


def run_method(method: str, spec: GraphSpec, budget: OracleBudget) -> Decomposition:
    g = spec.graph
    f1 = f2 = None
    if spec.factors:
        f1, f2 = spec.factors[0].graph, spec.factors[1].graph
    if method == "tree":
        return decompose_tree(g)
    if method == "exact":
        return min_path_decomposition(g, budget).witness
    if f1 is None:
        raise MethodMismatch(f"method {method!r} needs a product generator spec")
    if method == "grid":
        if not (_is_path(f1) and _is_path(f2)):
            raise MethodMismatch("grid needs two path factors")
        return decompose_grid(f1.n, f2.n)
    if method in ("layered", "even"):
        if not _is_path(f1):
            raise MethodMismatch(f"{method} needs a path as first factor")
        if method == "even":
            return decompose_path_even_product(f1.n, f2, budget)
        return decompose_path_product(f1.n, f2, budget)
    if method == "virtual_real":
        if _is_path(f1) and f1.n >= 4 and is_tree(f2) and f2.n >= 2:
            return decompose_path_tree_product(f1.n, f2)
        if is_tree(f1):
            return decompose_product(f1, f2, decompose_tree(f1), budget=budget)
        if _odd(f1):
            return decompose_product(f1, f2, decompose_odd_graph(f1, budget), budget=budget)
        raise MethodMismatch("virtual_real needs a tree or odd first factor")
    raise MethodMismatch(f"unknown method {method!r}")


def _load_spec(args) -> GraphSpec:
    if args.gen:
        return parse_gen(args.gen, args.seed)
    text = Path(args.input).read_text()
    return GraphSpec("file", gc.parse_edge_list(text))


def _budget(args) -> OracleBudget:
    return OracleBudget(max_nodes=args.max_nodes, max_time=args.max_seconds)


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def cmd_decompose(args) -> int:
    try:
        spec = _load_spec(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    method = choose_method(spec) if args.method == "auto" else args.method
    try:
        d = run_method(method, spec, _budget(args))
    except (MethodMismatch, PreconditionError) as exc:
        print(f"error: method {method} does not fit this input: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    try:
        report = verify(spec.graph, d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNVERIFIED
    print(f"p={d.path_count} lb={lower_bound(spec.graph)} method={method} "
          f"verified={'true' if report.valid else 'false'}")
    if not report.valid:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_UNVERIFIED
    if args.format == "json":
        _write(args.out, to_json(d) + "\n")
    elif args.format == "dot":
        _write(args.out, to_dot(d))
    return 0


def _read_decomposition(path: str) -> Decomposition:
    try:
        return from_json(Path(path).read_text())
    except OSError as exc:
        raise ParseError(str(exc)) from None


def cmd_verify(args) -> int:
    try:
        d = _read_decomposition(args.file)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify(d.host, d)
    for v in report.violations:
        print(v)
    if report.valid:
        print(f"valid p={report.path_count} lb={lower_bound(d.host)}")
        return 0
    return EXIT_INVALID


def cmd_oracle(args) -> int:
    try:
        spec = _load_spec(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    res = min_path_decomposition(spec.graph, _budget(args))
    _write(args.out, to_json(res.witness) + "\n")
    if not res.optimal:
        print("NON-OPTIMAL: budget exhausted, reporting the best decomposition found")
        print(f"p<={res.p} non-optimal nodes={res.nodes_explored} elapsed={res.elapsed:.3f}s")
        return EXIT_BUDGET
    print(f"p={res.p} optimal nodes={res.nodes_explored} elapsed={res.elapsed:.3f}s")
    return 0


def cmd_export(args) -> int:
    try:
        d = _read_decomposition(args.file)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify(d.host, d)
    if not report.valid:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_INVALID
    text = to_dot(d)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def _sweep_one(job):
    spec_text, max_nodes, max_seconds = job
    g = parse_gen(spec_text).graph
    res = min_path_decomposition(g, OracleBudget(max_nodes, max_seconds))
    ok = verify(g, res.witness).valid and res.p >= lower_bound(g)
    within_half = (res.p <= -(-g.n // 2)) if is_connected(g) else True
    return spec_text, g.n, g.m, res.p, lower_bound(g), res.optimal, ok and within_half


def cmd_sweep(args) -> int:
    def feasible(n):
        if args.family == "odd":
            return n % 2 == 0
        if args.family == "even":
            return n == 1 or n >= 3
        return n >= 1

    jobs = [(f"{args.family}:{n}:{s}", args.max_nodes, args.max_seconds)
            for n in range(args.min_n, args.max_n + 1) if feasible(n)
            for s in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(j) for j in jobs]
    bad = 0
    for spec_text, n, m, p, lb, optimal, ok in rows:
        print(f"{spec_text} n={n} m={m} p={p} lb={lb} optimal={str(optimal).lower()} ok={str(ok).lower()}")
        bad += not ok
    print(f"checked={len(rows)} failures={bad}")
    return EXIT_INVALID if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathdecomp",
                                     description="Path decompositions of graphs and Cartesian products.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def graph_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--gen", help="generator spec, e.g. grid:6,4 or product:path:3,cycle:5")
        src.add_argument("--input", help="edge-list file ('n m' header, then 'u v' lines)")
        p.add_argument("--seed", type=int, default=0)

    def budget_opts(p):
        p.add_argument("--max-nodes", type=int, default=20_000_000)
        p.add_argument("--max-seconds", type=float, default=120.0)

    p = sub.add_parser("decompose", help="build and verify a decomposition")
    graph_source(p)
    budget_opts(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("json", "dot", "summary"), default="json")
    p.add_argument("--out", help="artifact path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum path decomposition")
    graph_source(p)
    budget_opts(p)
    p.add_argument("--out", help="witness JSON path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", help="render a decomposition file as DOT")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", default=True, help="DOT output (the only format)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("sweep", help=argparse.SUPPRESS)
    p.add_argument("--family", default="connected", choices=("tree", "connected", "even", "odd"))
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    budget_opts(p)
    p.set_defaults(func=cmd_sweep)
    # keep the hidden subcommand out of the usage listing
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "sweep"]
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
