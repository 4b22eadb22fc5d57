"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violated,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import algebra
from .errors import GraphIndexError, ParseError, PreconditionError
from .graph import join_chain, j_join
from .io import read_graph, serialize_graph, write_graph
from .pairs import enumerate_pairs
from .verify import run_suite

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class VerificationFailure(Exception):
    pass


def _emit_graph(g, out_path):
    if out_path:
        write_graph(g, out_path)
    else:
        sys.stdout.write(serialize_graph(g))


def _cross_check(fast: int, graphs, j: int):
    naive = algebra.graph_det(join_chain(graphs, j))
    if naive != fast:
        raise VerificationFailure(f"transfer-matrix value {fast} != materialized determinant {naive}")


def cmd_det(args):
    print(algebra.graph_det(read_graph(args.file)))


def cmd_join(args):
    g, h = read_graph(args.file1), read_graph(args.file2)
    _emit_graph(j_join(g, h, args.j, strict=args.strict), args.output)


def cmd_phi(args):
    m = algebra.phi(read_graph(args.file), args.j, workers=args.workers)
    sys.stdout.write(m.to_json() + "\n" if args.json else m.to_text())


def cmd_chain(args):
    graphs = [read_graph(f) for f in args.files]
    value = algebra.chain_det(graphs, args.j)
    if args.naive:
        _cross_check(value, graphs, args.j)
    print(value)


def cmd_power(args):
    g = read_graph(args.file)
    value = algebra.nfold_det(g, args.n, args.j)
    if args.naive:
        _cross_check(value, [g] * (args.n + 1), args.j)
    print(value)


def cmd_classify(args):
    print(algebra.classify(read_graph(args.file), args.j))


def cmd_enum_pairs(args):
    for p in enumerate_pairs(args.j):
        print(f"{p} {p.sign:+d}")


def cmd_make_identity(args):
    _emit_graph(algebra.make_identity(args.j), args.output)


def cmd_make_nclass(args):
    _emit_graph(algebra.make_n_class(args.n, args.j), args.output)


def cmd_verify(args):
    results = run_suite(args.j, samples=args.samples, seed=args.seed)
    for r in results:
        print(r.line())
    if not all(r.passed for r in results):
        raise VerificationFailure("one or more invariant checks failed")


def cmd_bench(args):
    g = read_graph(args.file)
    ts = list(range(1, args.t + 1, args.step))
    if ts[-1] != args.t:
        ts.append(args.t)
    print("t,naive_micros,transfer_micros,det")
    for t in ts:
        graphs = [g] * t
        start = time.perf_counter_ns()
        naive = algebra.graph_det(join_chain(graphs, args.j))
        mid = time.perf_counter_ns()
        fast = algebra.chain_det(graphs, args.j)
        end = time.perf_counter_ns()
        if naive != fast:
            raise VerificationFailure(f"t={t}: transfer {fast} != naive {naive}")
        print(f"{t},{(mid - start) // 1000},{(end - mid) // 1000},{fast}")


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="joindet", description="Determinants of j-joined digraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, j=True):
        sp = sub.add_parser(name, help=help)
        if j:
            sp.add_argument("-j", type=_positive, required=True, help="join arity")
        sp.set_defaults(func=func)
        return sp

    sp = add("det", cmd_det, "adjacency determinant of a graph", j=False)
    sp.add_argument("file")

    sp = add("join", cmd_join, "write the j-join of two graphs")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("-o", "--output")
    sp.add_argument("--strict", action="store_true", help="require order >= 2j")

    sp = add("phi", cmd_phi, "print the phi matrix")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--workers", type=_positive, default=None)

    sp = add("chain", cmd_chain, "determinant of G1 ⋈ G2 ⋈ ... ⋈ Gt")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--naive", action="store_true", help="also materialize and cross-check")

    sp = add("power", cmd_power, "determinant of the n-fold join of a graph")
    sp.add_argument("-n", type=_nonneg, required=True, help="number of joins")
    sp.add_argument("file")
    sp.add_argument("--naive", action="store_true", help="also materialize and cross-check")

    sp = add("classify", cmd_classify, "class of a graph under the j-join")
    sp.add_argument("file")

    add("enum-pairs", cmd_enum_pairs, "list the canonical (R, B) pairs with signs")

    sp = add("make-identity", cmd_make_identity, "identity-class representative")
    sp.add_argument("-o", "--output")

    sp = add("make-nclass", cmd_make_nclass, "[n]-class representative")
    sp.add_argument("-n", type=_nonneg, required=True)
    sp.add_argument("-o", "--output")

    sp = add("verify", cmd_verify, "run the invariant suite on random graphs")
    sp.add_argument("--samples", type=_positive, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("bench", cmd_bench, "transfer-matrix vs materialized timings as CSV")
    sp.add_argument("-t", type=_positive, required=True, help="longest chain length")
    sp.add_argument("--step", type=_positive, default=1)
    sp.add_argument("file")
    return p


def run_command(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, GraphIndexError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
