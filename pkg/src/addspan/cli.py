"""Command line entry point: ``addspan {build,verify,gen,bench}``.

Exit codes: 0 success, 1 stretch or subgraph violation, 2 input error,
3 internal invariant violation (including a dominating-set size bound).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .bench import run_ladder, write_csv
from .exceptions import GraphInputError, InvariantViolation, SubgraphViolation, VerificationCapExceeded
from .graph import generate_gnm, read_edge_list, serialize_edge_list
from .oracle import DEFAULT_CAP, verify_stretch
from .reduction import build_4_spanner
from .spanner5 import SpannerParams, build_5_spanner

log = logging.getLogger("addspan")

EXIT_OK, EXIT_STRETCH, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
AUTO_VERIFY_MAX_N = 1024


def _add_params(p):
    p.add_argument("--mode", type=int, choices=(4, 5), default=4)
    p.add_argument("--no-shortcut", action="store_true", help="always run the full construction")
    p.add_argument("--threads", type=int, default=1, help="worker threads; never changes output")
    p.add_argument("--elim-threshold", type=float)
    p.add_argument("--heavy-threshold", type=float)
    p.add_argument("--f-threshold", type=float)
    p.add_argument("--subtree-factor", type=float, default=3.0)
    p.add_argument("--shortpath-factor", type=float, default=5.0)


def _params(args):
    return SpannerParams(
        elim_threshold=args.elim_threshold,
        heavy_threshold=args.heavy_threshold,
        f_threshold=args.f_threshold,
        subtree_factor=args.subtree_factor,
        shortpath_factor=args.shortpath_factor,
        dense_shortcut=not args.no_shortcut,
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="addspan", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a 4- or 5-additive spanner")
    b.add_argument("--input", "-i", required=True)
    b.add_argument("--output", "-o", help="spanner edge list (default: stdout)")
    b.add_argument("--report", help="JSON report path")
    b.add_argument("--verify", dest="verify", action="store_true", default=None)
    b.add_argument("--no-verify", dest="verify", action="store_false")
    b.add_argument("--verify-cap", type=int, default=DEFAULT_CAP)
    b.add_argument("--seed", type=int, help="accepted for symmetry; construction is deterministic")
    _add_params(b)

    v = sub.add_parser("verify", help="certify additive stretch of a spanner")
    v.add_argument("--input", "-i", required=True, help="host graph")
    v.add_argument("--spanner", "-s", required=True, help="spanner edge list")
    v.add_argument("--mode", "-k", type=int, default=4, help="additive stretch to certify")
    v.add_argument("--report", help="JSON report path")
    v.add_argument("--verify-cap", type=int, default=DEFAULT_CAP)

    g = sub.add_parser("gen", help="write a seeded G(n, m) graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", "-o", help="default: stdout")

    r = sub.add_parser("bench", help="spanner size and phase timings on a size ladder")
    r.add_argument("--sizes", default="128,256,512", help="comma-separated n values; may be empty")
    r.add_argument("--exponent", type=float, default=1.8, help="m = floor(n^exponent)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--output", "-o", help="CSV path (default: stdout)")
    _add_params(r)
    return parser


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dump_json(path, obj):
    _write(path, json.dumps(obj, indent=2, sort_keys=False) + "\n")


def cmd_build(args):
    g = read_edge_list(args.input)
    build = build_4_spanner if args.mode == 4 else build_5_spanner
    res = build(g, _params(args), workers=args.threads)
    log.info("n=%d m=%d -> %d spanner edges", g.n, g.m, res.edge_count)
    _write(args.output, serialize_edge_list(res.spanner_edges, n=g.n))
    verify = args.verify if args.verify is not None else g.n <= AUTO_VERIFY_MAX_N
    report = res.to_dict()
    status = EXIT_OK
    if verify:
        rep = verify_stretch(g, res.spanner_edges, args.mode, cap=args.verify_cap)
        report["verification"] = rep.to_dict()
        if not rep.passed:
            log.error("stretch %s exceeds %d at pair %s", rep.max_excess, args.mode, rep.worst_pair)
            status = EXIT_STRETCH
    if args.report:
        _dump_json(args.report, report)
    return status


def cmd_verify(args):
    g = read_edge_list(args.input)
    h = read_edge_list(args.spanner)
    if h.n > g.n:
        raise SubgraphViolation(f"spanner has {h.n} vertices, input has {g.n}")
    rep = verify_stretch(g, h.edges, args.mode, cap=args.verify_cap)
    out = rep.to_dict()
    if args.report:
        _dump_json(args.report, out)
    else:
        _dump_json(None, out)
    return EXIT_OK if rep.passed else EXIT_STRETCH


def cmd_gen(args):
    _write(args.output, serialize_edge_list(generate_gnm(args.n, args.m, args.seed)))
    return EXIT_OK


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = run_ladder(
        sizes, mode=args.mode, exponent=args.exponent, seed=args.seed,
        params=_params(args), workers=args.threads,
    )
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_csv(fh, rows)
    else:
        write_csv(sys.stdout, rows)
    return EXIT_OK


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "gen": cmd_gen, "bench": cmd_bench}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except SubgraphViolation as exc:
        log.error("%s", exc)
        return EXIT_STRETCH
    except (GraphInputError, VerificationCapExceeded, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except InvariantViolation as exc:
        log.error("internal invariant violated: %s", exc)
        return EXIT_INTERNAL
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
