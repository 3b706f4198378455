"""Command-line front end: ``synchq {verify,enumerate,gf,trace}``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from . import qseries as qs
from .involutions import trace as trace_steps
from .partitions import InvalidPartition
from .qpoly import ArithmeticOverflow
from .syncpart import (enumerate_R, enumerate_S, from_json, gf_R, gf_S,
                       gf_S_discrepancy, render)
from .verifier import (CHECKS, FAIL, OVERFLOW, default_grid_limit, discrepancy_closed_form,
                       rooted_gf_closed_form, run_check, run_grid)

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_OVERFLOW = 0, 1, 2, 3

GF_TARGETS = ("sync-all", "sync-zero-free", "sync-by-discrepancy", "rooted", "rooted-signed")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", type=Path, help="write here instead of stdout")

    mn = argparse.ArgumentParser(add_help=False)
    mn.add_argument("--m", type=nonneg, default=None)
    mn.add_argument("--n", "--N", dest="n", type=nonneg, default=None)

    p = _Parser(prog="synchq", description="Verify the finite Jacobi identity symbolically "
                "and through synchronized partitions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common, mn], help="run an identity check or grid")
    v.add_argument("check", choices=list(CHECKS), metavar="CHECK",
                   help="one of: " + ", ".join(CHECKS))
    v.add_argument("--grid", action="store_true",
                   help="sweep 0..limit (SYNCHQ_GRID_LIMIT overrides the default)")
    v.add_argument("--m-max", type=nonneg)
    v.add_argument("--n-max", type=nonneg)
    v.add_argument("--workers", type=nonneg, default=1)

    e = sub.add_parser("enumerate", parents=[common, mn], help="list S_{m,n} or R_{m,n}")
    e.add_argument("family", choices=("sync", "rooted"))
    e.add_argument("--weight", type=nonneg)
    e.add_argument("--zero-free", action="store_true")
    e.add_argument("--unicode", action="store_true", help="draw the barred star with an overline")

    g = sub.add_parser("gf", parents=[common, mn], help="brute-force generating functions")
    g.add_argument("target", choices=GF_TARGETS)
    g.add_argument("--discrepancy", type=int)

    t = sub.add_parser("trace", parents=[common, mn], help="apply tau or phi to a rooted partition")
    t.add_argument("partition", help="inline JSON object, or a path to one")
    t.add_argument("--unicode", action="store_true")
    return p


@contextmanager
def _sink(path: Path | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit_json(out, obj):
    out.write(json.dumps(obj) + "\n")


def cmd_verify(args, out) -> int:
    fn, arity = CHECKS[args.check]
    if args.grid or args.m_max is not None or args.n_max is not None:
        limit = default_grid_limit(args.check)
        m_max = args.m_max if args.m_max is not None else limit
        n_max = args.n_max if args.n_max is not None else limit
        reports = run_grid(args.check, m_max, n_max, workers=args.workers)
    else:
        m = args.m if args.m is not None else 0
        n = args.n if args.n is not None else 0
        reports = [run_check(args.check, n) if arity == 1 else run_check(args.check, m, n)]

    statuses = set()
    for rep in reports:
        statuses.add(rep.status)
        if args.format == "json":
            _emit_json(out, rep.to_json())
        else:
            params = " ".join(f"{k}={v}" for k, v in rep.params.items())
            line = f"{rep.status.upper():8s} {rep.check} {params}"
            if rep.witness is not None:
                line += f"  witness={json.dumps(rep.witness)}"
            out.write(line + "\n")
    if FAIL in statuses:
        return EXIT_FAIL
    if OVERFLOW in statuses:
        return EXIT_OVERFLOW
    return EXIT_OK


def _bounds(args) -> tuple[int, int]:
    return (args.m or 0, args.n or 0)


def cmd_enumerate(args, out) -> int:
    m, n = _bounds(args)
    if args.family == "sync":
        items = enumerate_S(m, n, args.weight, zero_free=args.zero_free)
    else:
        items = enumerate_R(m, n, args.weight)
        if args.zero_free:
            items = (s for s in items if not s.has_zero)
    count = 0
    for s in items:
        count += 1
        if args.format == "json":
            _emit_json(out, s.to_json())
        else:
            out.write(render(s, unicode=args.unicode) + "\n\n")
    if args.format == "json":
        _emit_json(out, {"count": count})
    else:
        out.write(f"count: {count}\n")
    return EXIT_OK


def cmd_gf(args, out) -> int:
    m, n = _bounds(args)
    target = args.target
    if target == "sync-all":
        brute = gf_S(m, n)
        closed = qs.pochhammer(-1, 1, m) * qs.pochhammer(-1, 0, n + 1)
    elif target == "sync-zero-free":
        brute = gf_S(m, n, zero_free=True)
        closed = qs.pochhammer(-1, 1, m) * qs.pochhammer(-1, 1, n)
    elif target == "sync-by-discrepancy":
        if args.discrepancy is None:
            raise UsageError("sync-by-discrepancy requires --discrepancy")
        brute = gf_S_discrepancy(m, n, args.discrepancy)
        closed = discrepancy_closed_form(m, n, args.discrepancy)
    elif target == "rooted":
        brute = gf_R(m, n)
        closed = rooted_gf_closed_form(m, n)
    else:
        brute = gf_R(m, n, signed=True)
        closed = qs.finite_jacobi_rhs(m, n)
    match = brute == closed
    if args.format == "json":
        _emit_json(out, {"target": target, "params": {"m": m, "n": n, "discrepancy": args.discrepancy},
                         "brute": brute.to_json(), "closed": closed.to_json(), "match": match})
    else:
        out.write(f"brute:  {brute}\nclosed: {closed}\nmatch:  {'yes' if match else 'no'}\n")
    return EXIT_OK if match else EXIT_FAIL


def _load_partition(text: str):
    path = Path(text)
    if not text.lstrip().startswith("{") and path.exists():
        text = path.read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"partition is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InvalidPartition("partition JSON must be an object")
    return from_json(obj, rooted=True)


def cmd_trace(args, out) -> int:
    s = _load_partition(args.partition)
    m = args.m if args.m is not None else (s.alpha[0] if s.alpha else 0)
    n = args.n if args.n is not None else (s.beta[0] if s.beta else 0)
    if not s.within(m, n):
        raise InvalidPartition(f"partition is not within bounds m={m}, n={n}")
    steps = trace_steps(s, (m, n))
    consistent = steps[-1]["after"] == steps[0]["before"]
    if args.format == "json":
        _emit_json(out, steps)
    else:
        for st in steps:
            before = from_json(st["before"])
            after = from_json(st["after"])
            out.write(f"case {st['case']}: sign {st['sign_before']:+d} -> {st['sign_after']:+d}\n")
            out.write(render(before, unicode=args.unicode) + "\n  ->\n")
            out.write(render(after, unicode=args.unicode) + "\n\n")
        out.write(f"round-trip: {'ok' if consistent else 'MISMATCH'}\n")
    return EXIT_OK if consistent else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "enumerate": cmd_enumerate, "gf": cmd_gf, "trace": cmd_trace}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _sink(args.output) as out:
            return COMMANDS[args.command](args, out)
    except (UsageError, InvalidPartition) as exc:
        print(f"synchq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticOverflow as exc:
        print(f"synchq: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
