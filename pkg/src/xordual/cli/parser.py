"""Argument parser for the ``xordual`` command."""

import argparse

from .. import __version__


def _add_instance_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("instance", nargs="?", help="Instance file (text or JSON)")
    parser.add_argument("--family", choices=["tree", "closure"], help="Generator family")
    parser.add_argument("--g", type=int, help="Generation count of the family")
    parser.add_argument(
        "--couplings",
        default="all-plus",
        help="Couplings for a generated instance: all-plus, random, unsat, explicit:+1,-1,...",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xordual",
        description=(
            "3-XORSAT annealing Hamiltonians: GF(2) duality, charge sectors, "
            "exact gap curves and their oracles."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="YAML file with setting overrides")
    parser.add_argument("--workers", type=int, help="Worker processes (XORDUAL_WORKERS)")
    parser.add_argument("--seed", type=int, help="Seed for random starts and samples")
    parser.add_argument(
        "--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a tree or closure instance")
    gen.add_argument("family", choices=["tree", "closure"])
    gen.add_argument("g", type=int)
    gen.add_argument("--couplings", default="all-plus")
    gen.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    gen.add_argument("--out", help="Output file; stdout when omitted")

    solve = sub.add_parser("solve", help="Decide satisfiability, leaf removal and gauge case")
    _add_instance_source(solve)
    group = solve.add_mutually_exclusive_group()
    group.add_argument("--y", help="Right-hand side as one 0/1 character per edge")
    group.add_argument("--random-y", action="store_true", help="Seeded random right-hand side")
    solve.add_argument("--brute-force", action="store_true", help="Also enumerate all states")
    solve.add_argument("--out", help="JSON output; stdout when omitted")

    dualize = sub.add_parser("dualize", help="Build the dual model and its sector terms")
    _add_instance_source(dualize)
    dualize.add_argument("--basis", help="1-based basis edges, e.g. 2,3,4")
    dualize.add_argument("--sector", default="all-plus", help="Sector specification")
    dualize.add_argument(
        "--s",
        type=float,
        help="Emit the numeric term dump at this s; without it the terms stay symbolic",
    )
    dualize.add_argument("--dump", help="Term dump file; stdout when omitted")

    scan = sub.add_parser("scan", help="Gap curve over s and its refined minimum")
    _add_instance_source(scan)
    scan.add_argument(
        "--sector",
        default="all-plus",
        help="all-plus, enumerate, flip:4,6,8 or an explicit list +1,-1,...",
    )
    mode = scan.add_mutually_exclusive_group()
    mode.add_argument("--full", action="store_true", help="Diagonalize the full model")
    mode.add_argument("--embed", action="store_true", help="Embed the product term")
    scan.add_argument("--grid", help="start:stop:points or a list of s values")
    scan.add_argument("--k", type=int, default=2, help="Eigenvalues per grid point")
    scan.add_argument("--out", help="Gap curve CSV")
    scan.add_argument("--summary", help="Minimum-gap JSON")

    scaling = sub.add_parser("scaling", help="Minimum gap versus size of one family")
    scaling.add_argument("--family", choices=["tree", "closure"], required=True)
    scaling.add_argument("--g", required=True, help="Range such as 1..3 or a list 1,2,4")
    scaling.add_argument("--grid", help="start:stop:points or a list of s values")
    scaling.add_argument("--k", type=int, default=2)
    scaling.add_argument(
        "--sector",
        default="all-plus",
        help="all-plus, flip:1,2 or an explicit list, resolved for every size",
    )
    scaling.add_argument("--out", help="Scaling CSV")

    verify = sub.add_parser("verify", help="Run an oracle suite")
    verify.add_argument(
        "--suite",
        choices=["quick", "acceptance", "paper"],
        default="quick",
        help="quick, or acceptance (alias paper) with the larger instances",
    )
    verify.add_argument("--out", help="JSON report; stdout when omitted")
    return parser
