"""``simdim`` command line."""

from __future__ import annotations

import argparse
import sys

from .errors import (BudgetExceeded, CapacityExceeded, InvalidParameter, ParseError,
                     UnsupportedMetric)
from .families import sample_members
from .graph import ADJ, Graph, parse_metric
from .products import family_corona, family_join
from .resolving import gamma_prime_witness, min_dominating_set, min_generator
from .search import DEFAULT_BUDGET
from .suite import resolve_basis, bundled_suite, run_suite
from .textio import format_graphs, load_family, load_graph, save_graphs
from .verify import format_report, suite_exit_code

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_METRIC, EXIT_BUDGET = 0, 1, 2, 3, 4


def _set(g: Graph, vertices) -> str:
    return "{" + ",".join(map(str, g.to_labels(vertices))) + "}"


def _metric(text):
    try:
        return parse_metric(text)
    except InvalidParameter as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_dim(args) -> int:
    g = load_graph(args.file)
    k, basis = min_generator(g, args.metric, args.budget)
    print(f"dim={k} basis={_set(g, basis)}")
    return EXIT_OK


def cmd_sdim(args) -> int:
    family = load_family(args.file)
    k, basis = min_generator(family, args.metric, args.budget)
    print(f"sdim={k} basis={_set(family[0], basis)}")
    return EXIT_OK


def cmd_gamma(args) -> int:
    if args.variant == "sgamma":
        family = load_family(args.file)
        k, dom = min_dominating_set(family, args.budget)
        print(f"sgamma={k} witness={_set(family[0], dom)}")
    elif args.variant == "gamma":
        g = load_graph(args.file)
        k, dom = min_dominating_set(g, args.budget)
        print(f"gamma={k} witness={_set(g, dom)}")
    else:
        g = load_graph(args.file)
        k, v, dom = gamma_prime_witness(g, args.budget)
        print(f"gamma_prime={k} removed={g.label_of(v)} witness={_set(g, dom)}")
    return EXIT_OK


def cmd_product(args) -> int:
    gs, hs = load_family(args.first), load_family(args.second)
    build = family_corona if args.op == "corona" else family_join
    _write(format_graphs(build(gs, hs, ascii_names=True)), args.out)
    return EXIT_OK


def cmd_family(args) -> int:
    g = load_graph(args.file)
    basis = resolve_basis(g, args.basis, None, args.file)
    family = sample_members(g, basis, args.mode, args.seed, args.count)
    if args.out:
        save_graphs(args.out, family)
    else:
        sys.stdout.write(format_graphs(family))
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = args.suite or bundled_suite()

    def emit(report):
        print(format_report(report), flush=True)
        if args.verbose and report.note:
            print(f"  # {report.note}")

    reports = run_suite(suite, on_report=emit)
    return suite_exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simdim",
                                     description="Exact (simultaneous) metric and adjacency dimension.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum candidate checks (default %(default)s)")

    p = sub.add_parser("dim", help="metric dimension of one graph")
    p.add_argument("file")
    p.add_argument("--metric", type=_metric, default=ADJ, help="full, adj or t=<k> (default adj)")
    budget(p)
    p.set_defaults(run=cmd_dim)

    p = sub.add_parser("sdim", help="simultaneous dimension of a family")
    p.add_argument("file")
    p.add_argument("--metric", type=_metric, default=ADJ, help="full, adj or t=<k> (default adj)")
    budget(p)
    p.set_defaults(run=cmd_sdim)

    p = sub.add_parser("gamma", help="domination numbers")
    p.add_argument("file")
    p.add_argument("--variant", choices=("gamma", "sgamma", "gamma-prime"), default="gamma")
    budget(p)
    p.set_defaults(run=cmd_gamma)

    p = sub.add_parser("product", help="corona or join of two graph files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--op", choices=("corona", "join"), required=True)
    p.add_argument("--out")
    p.set_defaults(run=cmd_product)

    p = sub.add_parser("family", help="permutation families")
    fam = p.add_subparsers(dest="action", required=True)
    g = fam.add_parser("gen", help="sample members sharing a basis")
    g.add_argument("file")
    g.add_argument("--basis", default="auto", help="auto, dominating, or comma-separated labels")
    g.add_argument("--mode", choices=("relabel", "free-outside"), default="relabel")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=4)
    g.add_argument("--out")
    g.set_defaults(run=cmd_family)

    p = sub.add_parser("verify", help="run a scenario suite (default: the bundled one)")
    p.add_argument("suite", nargs="?")
    p.add_argument("-v", "--verbose", action="store_true", help="print notes under each report")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, InvalidParameter, CapacityExceeded, OSError) as exc:
        print(f"simdim: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedMetric as exc:
        print(f"simdim: unsupported metric: {exc}", file=sys.stderr)
        return EXIT_METRIC
    except BudgetExceeded as exc:
        print(f"simdim: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
