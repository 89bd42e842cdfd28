"""Command line: construct, verify, bounds, oracle.

Exit codes: 0 success, 1 verification failure (or bound missed), 2 usage or
I/O error.  The environment variable LINLAY_SEED is reserved and ignored;
every algorithm here is deterministic.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable

from linlay import bounds
from linlay.io import DocumentError, read_layout, serialize_layout, write_atomic
from linlay.layout import verify_layout
from linlay.oracle import PARAMETERS, CapExceeded, exact_number
from linlay.pages import build_local_page_layout, build_union_page_layout, zigzag_page_layout
from linlay.queues.elbow import elbow_queue_layout
from linlay.queues.recursive import build_local_queue_layout
from linlay.queues.union import build_union_queue_layout
from linlay.svg import render_triangle_svg

log = logging.getLogger("linlay")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _locality_at_most(limit: Callable[[int], float]):
    return lambda n, rep: ("max_locality", rep.max_locality, limit(n))


def _parts_at_most(limit: Callable[[int], float]):
    return lambda n, rep: ("part_count", rep.part_count, limit(n))


# kind -> (builder, which quantity must stay within which budget)
CONSTRUCTIONS = {
    "local-queue": (build_local_queue_layout, _locality_at_most(bounds.lqn_upper)),
    "union-queue": (build_union_queue_layout, _parts_at_most(bounds.uqn_upper)),
    "local-page": (build_local_page_layout, _locality_at_most(bounds.lpn_upper)),
    "union-page": (build_union_page_layout, _parts_at_most(bounds.upn_upper)),
    "global-queue": (elbow_queue_layout, _parts_at_most(lambda n: n // 2)),
    "global-page": (zigzag_page_layout, _parts_at_most(lambda n: (n + 1) // 2)),
}


def _number(x) -> float | int:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    return x


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def cmd_construct(args) -> int:
    builder, budget = CONSTRUCTIONS[args.kind]
    layout = builder(args.n)
    report = verify_layout(layout)
    quantity, value, limit = budget(args.n, report)
    within = value <= limit
    summary = {"construction": args.kind, **report.summary(), "budget": {quantity: _number(limit)}, "within_budget": within}
    text = serialize_layout(layout)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    if args.svg:
        write_atomic(args.svg, render_triangle_svg(layout, title=f"{args.kind} n={args.n}"))
    print(json.dumps(summary, sort_keys=True, default=str), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK if report.ok and within else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        layout = read_layout(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if exc.code == "schema" else EXIT_FAIL
    report = verify_layout(layout)
    summary = report.summary()
    ok = report.ok
    if args.expect_max_locality is not None:
        summary["expect_max_locality"] = args.expect_max_locality
        ok &= report.max_locality <= args.expect_max_locality
    if args.expect_max_parts is not None:
        summary["expect_max_parts"] = args.expect_max_parts
        ok &= report.part_count <= args.expect_max_parts
    summary["passed"] = bool(ok)
    _emit(summary)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args) -> int:
    table = bounds.evaluate_bounds(args.n)
    if args.json:
        _emit(table.as_dict())
    else:
        for key, value in table.as_dict().items():
            print(f"{key:>15}  {value}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        res = exact_number(args.n, args.parameter, cap=args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(
        {
            "n": res.n,
            "parameter": res.parameter,
            "value": res.value,
            "refuted_below": res.refuted,
            "nodes": res.nodes,
            "seconds": round(res.seconds, 4),
            "witness": json.loads(serialize_layout(res.witness)),
        }
    )
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="linlay",
        description="Build and check queue and page layouts of complete graphs.",
        epilog="LINLAY_SEED is reserved and has no effect: all algorithms are deterministic.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a layout and verify it against its budget")
    c.add_argument("--kind", required=True, choices=sorted(CONSTRUCTIONS))
    c.add_argument("--n", required=True, type=_positive)
    c.add_argument("--out", help="write the layout JSON here (default: stdout)")
    c.add_argument("--svg", help="also write a triangle drawing")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a layout JSON file")
    v.add_argument("file")
    v.add_argument("--expect-max-locality", type=int)
    v.add_argument("--expect-max-parts", type=int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    b.add_argument("--n", required=True, type=_positive)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    o = sub.add_parser("oracle", help="exact value by exhaustive search (tiny n)")
    o.add_argument("--n", required=True, type=_positive)
    o.add_argument("--parameter", required=True, choices=sorted(PARAMETERS))
    o.add_argument("--cap", type=int, help="raise the default size cap (slow)")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    if os.environ.get("LINLAY_SEED"):
        log.debug("LINLAY_SEED is set but unused")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
