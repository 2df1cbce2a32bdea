"""Command-line front end.

Exit codes are uniform across subcommands: 0 for a found allocation or a
verified core member, 2 for an empty core or a blocked allocation, 1 for
bad input (unreadable files, parse or validation errors, cap overruns).
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from .fileformat import (
    ParseError,
    load_market,
    parse_allocation_text,
    serialize_allocation,
    serialize_market,
)
from .gen import GenParams, InvalidParams, random_market
from .htts import OpCounter, format_segment, htts_solve, solve_with_tiebreak
from .market import Market, ValidationError
from .oracle import CapExceeded, enumerate_strict_core, find_blocking_coalition


def _read_market(path: str) -> Market:
    with open(path, encoding="utf-8") as f:
        return load_market(f.read())


def _stats_line(counter: OpCounter) -> str:
    return (
        f"arcs={counter.arcs_built} scc={counter.scc_work} "
        f"feas={counter.feasibility_comparisons}"
    )


def cmd_solve(args: argparse.Namespace) -> int:
    market = _read_market(args.market)
    counter = OpCounter()
    if args.tiebreak_seed is None:
        outcome = htts_solve(market, counter=counter)
    else:
        outcome = solve_with_tiebreak(market, args.tiebreak_seed, counter=counter)
    if outcome.core_found:
        sys.stdout.write(serialize_allocation(market, outcome.allocation))
        if args.trace:
            for seg in outcome.trace:
                print(format_segment(market, seg))
        if args.stats:
            print(_stats_line(counter))
        return 0
    print(f"EMPTY CORE at step {outcome.failed_step}", file=sys.stderr)
    if args.trace:
        for seg in outcome.trace:
            print(format_segment(market, seg), file=sys.stderr)
    if args.stats:
        print(_stats_line(counter), file=sys.stderr)
    return 2


def cmd_verify(args: argparse.Namespace) -> int:
    market = _read_market(args.market)
    with open(args.allocation, encoding="utf-8") as f:
        allocation = parse_allocation_text(f.read(), market)
    if not market.feasible_allocation(allocation.assignment):
        print(
            "error: allocation does not match the endowment counts",
            file=sys.stderr,
        )
        return 1
    certificate = find_blocking_coalition(market, allocation)
    if certificate is None:
        return 0
    names = ",".join(market.agent_name(i) for i in certificate.coalition)
    print(f"BLOCKED by {{{names}}}")
    for i in certificate.coalition:
        house = certificate.sub_allocation[i]
        print(f"  {market.agent_name(i)} -> {market.house_name(house)}")
    return 2


def cmd_oracle(args: argparse.Namespace) -> int:
    market = _read_market(args.market)
    core = enumerate_strict_core(market)
    if core:
        sys.stdout.write(serialize_allocation(market, core[0]))
        return 0
    print("EMPTY CORE", file=sys.stderr)
    return 2


def cmd_gen(args: argparse.Namespace) -> int:
    params = GenParams(args.agents, args.houses, args.seed)
    sys.stdout.write(serialize_market(random_market(params)))
    return 0


def _fit_slope(points: list[tuple[int, int]]) -> float | None:
    """Least-squares slope of log(total) against log(size)."""
    if len(points) < 2:
        return None
    xs = [math.log(h) for h, _ in points]
    ys = [math.log(max(t, 1)) for _, t in points]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    denom = sum((x - mx) ** 2 for x in xs)
    if denom == 0:
        return None
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / denom


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        print(f"error: invalid size list {args.sizes!r}", file=sys.stderr)
        return 1
    if not sizes or any(s < 1 for s in sizes):
        print(f"error: invalid size list {args.sizes!r}", file=sys.stderr)
        return 1

    print("H I wall_ns arcs scc feas")
    totals: dict[int, list[int]] = {}
    for houses in sizes:
        agents = max(houses, round(args.ratio * houses))
        market = random_market(GenParams(agents, houses, args.seed))
        for _ in range(args.repeats):
            counter = OpCounter()
            start = time.perf_counter_ns()
            htts_solve(market, counter=counter)
            wall = time.perf_counter_ns() - start
            print(
                f"{houses} {agents} {wall} {counter.arcs_built} "
                f"{counter.scc_work} {counter.feasibility_comparisons}"
            )
            totals.setdefault(houses, []).append(counter.total())

    means = [
        (houses, sum(runs) // len(runs)) for houses, runs in sorted(totals.items())
    ]
    slope = _fit_slope(means)
    print("slope=n/a" if slope is None else f"slope={slope:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="houseswap",
        description=(
            "Decide whether a house-swapping market with duplicate house "
            "types has a strict-core allocation, and compute it."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a market file")
    p.add_argument("market")
    p.add_argument("--trace", action="store_true", help="print segment lines")
    p.add_argument("--tiebreak-seed", type=int, default=None, metavar="N")
    p.add_argument("--stats", action="store_true", help="print operation counts")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an allocation for strict-core membership")
    p.add_argument("market")
    p.add_argument("allocation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force the strict core (small markets)")
    p.add_argument("market")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random market file")
    p.add_argument("--agents", type=int, required=True)
    p.add_argument("--houses", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="operation-count scaling table")
    p.add_argument("--sizes", required=True, help="comma-separated house counts")
    p.add_argument("--ratio", type=float, default=2.0, help="agents per house type")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, InvalidParams, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
