"""Command-line interface: ``iesieve <command> FILE [flags]``.

Exit codes: 0 success (kpath: found), 1 kpath not found, 2 usage or
parse error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import coloring, hampath, kpath, matchings, oracles, steiner, transforms
from .core import CorruptionError, SetFunction, SizeCapError, format_setfn, from_elements
from .core import parse_graph, parse_matrix, parse_setfn

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _terminals(text):
    try:
        nodes = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad terminal list {text!r}") from None
    if not nodes:
        raise argparse.ArgumentTypeError("terminal list is empty")
    return nodes


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser():
    p = _Parser(prog="iesieve", description="Inclusion-exclusion counting and detection.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("file")
        c.add_argument("--json", action="store_true", help="machine-readable output")
        c.add_argument("--oracle", action="store_true", help="use the brute-force reference instead")
        c.add_argument("--threads", type=int, default=1, help="worker processes (never changes output)")
        return c

    c = command("color-count", "ordered covers of the nodes by k independent sets")
    c.add_argument("--colors", type=int, required=True)
    c.add_argument("--method", choices=coloring.METHODS, default="table")
    command("chromatic", "chromatic number")
    command("indep-table", "table of nonempty independent subset counts")
    command("zeta", "zeta transform of a set function")
    command("mobius", "Moebius transform of a set function")
    c = command("permanent", "permanent of a 0/1 matrix")
    c.add_argument("--gray", action="store_true", help="Gray-code order Ryser")
    c = command("pm-count", "perfect matchings of a graph")
    c.add_argument("--trace", action="store_true", help="print every sieve term to stderr")
    c = command("hamiltonian", "Hamiltonian path count")
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("--start", type=int)
    group.add_argument("--total", action="store_true")
    c = command("steiner", "minimum Steiner tree node count")
    c.add_argument("--terminals", type=_terminals, required=True)
    c = command("kpath", "detect a simple path on k nodes")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--start", type=int)
    c.add_argument("--trials", type=int, default=20)
    c.add_argument("--seed", type=_u64, default=0)
    return p


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _node(graph, v, what):
    if not 0 <= v < graph.n:
        raise UsageError(f"{what} {v} out of range 0..{graph.n - 1}")
    return v


def _print_trace(s, e, term):
    print(f"trace: S={s:#x} e={e} term={term}", file=sys.stderr)


def run_command(args):
    """Execute one parsed command; returns (n, value, method)."""
    cmd = args.command
    text = _read(args.file)
    if cmd in ("zeta", "mobius"):
        f = parse_setfn(text)
        if cmd == "zeta":
            out = transforms.zeta_naive(f) if args.oracle else transforms.zeta_yates(f)
        else:
            out = transforms.mobius_naive(f) if args.oracle else transforms.mobius_yates(f)
        return f.n, out, "naive" if args.oracle else "yates"
    if cmd == "permanent":
        a = parse_matrix(text)
        if args.oracle:
            return a.n, oracles.brute_permanent(a), "oracle"
        if args.gray:
            return a.n, matchings.permanent_ryser_gray(a), "gray"
        return a.n, matchings.permanent_ryser(a), "plain"

    g = parse_graph(text)
    if cmd == "color-count":
        if args.colors < 1:
            raise UsageError("--colors must be positive")
        if args.oracle:
            return g.n, oracles.brute_cover_count(g, args.colors), "oracle"
        return g.n, coloring.cover_count(g, args.colors, args.method), args.method
    if cmd == "chromatic":
        if args.oracle:
            return g.n, oracles.brute_chromatic(g), "oracle"
        return g.n, coloring.chromatic_number(g), "table"
    if cmd == "indep-table":
        if args.oracle:
            return g.n, SetFunction.of(g.n, oracles.brute_indep_table(g)), "oracle"
        return g.n, coloring.indep_table(g).g, "table"
    if cmd == "pm-count":
        if args.oracle:
            return g.n, oracles.brute_pm_count(g), "oracle"
        trace = _print_trace if args.trace else None
        return g.n, matchings.pm_count_general(g, trace=trace), "sieve"
    if cmd == "hamiltonian":
        if args.total:
            if g.n < 2:
                raise UsageError("--total needs at least two nodes")
            if args.oracle:
                return g.n, sum(oracles.brute_ham_count(g, s) for s in range(g.n)) // 2, "oracle"
            return g.n, hampath.hamiltonian_count_total(g, threads=args.threads), "sieve"
        start = _node(g, args.start, "start node")
        if args.oracle:
            return g.n, oracles.brute_ham_count(g, start), "oracle"
        return g.n, hampath.hamiltonian_count_from(g, start, threads=args.threads), "sieve"
    if cmd == "steiner":
        for t in args.terminals:
            _node(g, t, "terminal")
        mask = from_elements(args.terminals)
        if args.oracle:
            return g.n, oracles.brute_steiner(g, mask), "oracle"
        return g.n, steiner.steiner_min_size(steiner.SteinerInstance(g, mask)), "sieve"
    if cmd == "kpath":
        if args.start is not None:
            _node(g, args.start, "start node")
        if args.trials < 1:
            raise UsageError("--trials must be positive")
        try:
            kpath.check_k(args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.oracle:
            return g.n, oracles.brute_kpath(g, args.k), "oracle"
        return g.n, kpath.kpath_detect(g, args.k, args.trials, args.seed, args.start), "algebraic"
    raise UsageError(f"unknown command {cmd}")


def _render(value):
    if isinstance(value, bool):
        return "found" if value else "not-found"
    if value is None:
        return "none"
    return str(value)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        t0 = time.perf_counter()
        n, value, method = run_command(args)
        elapsed_ms = (time.perf_counter() - t0) * 1000
    except SizeCapError as exc:
        print(f"error: size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CorruptionError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        if isinstance(value, SetFunction):
            shown = [str(v) for v in value.values]
        else:
            shown = None if value is None else _render(value)
        record = {
            "command": args.command,
            "n": n,
            "value": shown,
            "elapsed_ms": round(elapsed_ms, 3),
            "method": method,
            "seed": getattr(args, "seed", None),
        }
        print(json.dumps(record))
    elif isinstance(value, SetFunction):
        sys.stdout.write(format_setfn(value))
    else:
        print(_render(value))
    if args.command == "kpath" and value is False:
        return EXIT_NOT_FOUND
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
