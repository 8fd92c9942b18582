"""Command line interface.

Exit status: 0 on success, 1 when a checked statement fails, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import graphfile
from .eigen import eigenvalues
from .errors import GainGraphError
from .fuzz import ALL_GAIN_MODES, FuzzConfig
from .graph import cycle_gain, is_balanced
from .matrices import matrix_by_name, norm_adjacency, norm_laplacian
from .subgraphs import (
    adjacency_coeffs,
    adjacency_oracle,
    charpoly_oracle,
    norm_lap_b_coeffs,
    norm_lap_c_coeffs,
)
from .theorems import FAIL, conjecture_search, interlace_check, run_fuzz, theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt(x: float) -> str:
    return f"{x + 0.0:.12g}"  # no "-0"


def fmt_complex(z: complex) -> str:
    return f"{fmt(z.real)},{fmt(z.imag)}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gainlap", description="Normalized Laplacians of complex unit gain graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", help="sorted eigenvalues of a matrix of the graph")
    s.add_argument("file")
    s.add_argument("--matrix", choices=("A", "L", "NA", "NL"), default="NL")

    s = sub.add_parser("balance", help="decide balance; print switching function or witness cycle")
    s.add_argument("file")

    s = sub.add_parser("charpoly", help="characteristic polynomial coefficients from subgraph sums")
    s.add_argument("file")
    s.add_argument("--basis", choices=("x", "x1", "adjacency"), default="x")
    s.add_argument("--oracle", action="store_true", help="compare with Faddeev-LeVerrier")

    s = sub.add_parser("interlace", help="eigenvalue interlacing after deleting one edge")
    s.add_argument("file")
    s.add_argument("--edge", nargs=2, type=int, required=True, metavar=("U", "V"))

    s = sub.add_parser("verify", help="run the theorem suite on one graph")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("fuzz", help="theorem suite on random connected gain graphs")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--edge-probability", type=float, default=0.5)
    s.add_argument("--gain-mode", choices=ALL_GAIN_MODES, default="mixed")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("conjecture", help="search for rho(NL(Phi)) == rho(NL(G)) with Phi unbalanced")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-7)
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--edge-probability", type=float, default=0.5)
    s.add_argument("--gain-mode", choices=ALL_GAIN_MODES, default="fourth_roots")
    s.add_argument("--bipartite", action="store_true",
                   help="search bipartite graphs, where a hit is a failure")
    s.add_argument("--archive", help="append every hit to this file in graph-file format")
    return p


def _print_coeffs(out, values, oracle=None):
    if oracle is None:
        for k, c in enumerate(values):
            print(f"{k} {fmt(c)}", file=out)
        return
    for k, (c, o) in enumerate(zip(values, oracle)):
        print(f"{k} {fmt(c)} {fmt(o)}", file=out)
    print(f"max deviation: {float(np.max(np.abs(np.asarray(values) - oracle))):.3e}", file=out)


def cmd_spectrum(args, out) -> int:
    g = graphfile.parse(args.file)
    spec = eigenvalues(matrix_by_name(g, args.matrix))
    print(" ".join(fmt(x) for x in spec.values), file=out)
    return EXIT_OK


def cmd_balance(args, out) -> int:
    g = graphfile.parse(args.file)
    ok, witness = is_balanced(g)
    if ok:
        print("BALANCED", file=out)
        print("vertex zeta", file=out)
        for v, z in enumerate(witness.values):
            print(f"{v} {fmt_complex(z)}", file=out)
    else:
        print("UNBALANCED", file=out)
        print("cycle: " + " ".join(str(v) for v in witness.vertices), file=out)
        print(f"gain: {fmt_complex(cycle_gain(g, witness))}", file=out)
    return EXIT_OK


def cmd_charpoly(args, out) -> int:
    g = graphfile.parse(args.file)
    if args.basis == "adjacency":
        values = adjacency_coeffs(g).coeffs
        oracle = adjacency_oracle(g).coeffs if args.oracle else None
    elif args.basis == "x":
        values = norm_lap_b_coeffs(g).coeffs
        oracle = charpoly_oracle(norm_laplacian(g)).coeffs if args.oracle else None
    else:
        values = norm_lap_c_coeffs(g).coeffs
        # det(yI + NA) has the coefficients of det(yI - M) with M = -NA
        oracle = charpoly_oracle(-norm_adjacency(g)).coeffs if args.oracle else None
    _print_coeffs(out, values, oracle)
    return EXIT_OK


def cmd_interlace(args, out) -> int:
    g = graphfile.parse(args.file)
    res = interlace_check(g, tuple(args.edge))
    print("lambda: " + " ".join(fmt(x) for x in res.lam.values), file=out)
    print("theta:  " + " ".join(fmt(x) for x in res.theta.values), file=out)
    print("PASS" if res.passed else "FAIL", file=out)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_verify(args, out) -> int:
    g = graphfile.parse(args.file)
    report = theorem_suite(g, seed=args.seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        print(report.graph_summary, file=out)
        width = max(len(c.check_id) for c in report.checks)
        for c in report.checks:
            print(f"{c.check_id:<{width}}  {c.status}", file=out)
    return EXIT_FAIL if any(c.status == FAIL for c in report.checks) else EXIT_OK


def cmd_fuzz(args, out) -> int:
    cfg = FuzzConfig(n_range=(args.n_min, args.n_max), edge_probability=args.edge_probability,
                     gain_mode=args.gain_mode, trials=args.trials, seed=args.seed, connected=True)
    summary = run_fuzz(cfg)
    if args.json:
        print(json.dumps(summary.to_dict(), indent=2, sort_keys=True), file=out)
    else:
        width = max(len(k) for k in summary.counts)
        print(f"{'check':<{width}}  pass  fail  not_met", file=out)
        for k, c in summary.counts.items():
            print(f"{k:<{width}}  {c['pass']:4d}  {c['fail']:4d}  {c['hypothesis_not_met']:7d}", file=out)
        print(f"trials: {summary.trials}  failures: {len(summary.failures)}", file=out)
        for trial, check_id, _ in summary.failures[:20]:
            print(f"FAIL trial={trial} check={check_id}", file=out)
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_conjecture(args, out) -> int:
    cfg = FuzzConfig(n_range=(args.n_min, args.n_max), edge_probability=args.edge_probability,
                     gain_mode=args.gain_mode, trials=args.trials, seed=args.seed,
                     connected=True, bipartite=args.bipartite)
    res = conjecture_search(cfg, args.tol)
    kind = "bipartite" if args.bipartite else "non-bipartite"
    print(f"examined {res.examined} connected unbalanced {kind} graphs (skipped {res.skipped} draws)",
          file=out)
    if not res.hits:
        print("no counterexample", file=out)
        if res.nearest_graph is not None:
            print(f"nearest miss: |rho(NL(Phi)) - rho(NL(G))| = {res.nearest_gap:.6e}", file=out)
            out.write(graphfile.serialize(res.nearest_graph, "nearest miss"))
        return EXIT_OK
    print(f"{len(res.hits)} graph(s) with |rho(NL(Phi)) - rho(NL(G))| < {args.tol:g}", file=out)
    out.write(graphfile.serialize(res.counterexample, "counterexample"))
    if args.archive:
        with open(args.archive, "a", encoding="utf-8") as fh:
            for i, g in enumerate(res.hits):
                fh.write(graphfile.serialize(g, f"hit {i} seed={args.seed}"))
                fh.write("\n")
    return EXIT_FAIL if res.theorem_violation else EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "balance": cmd_balance,
    "charpoly": cmd_charpoly,
    "interlace": cmd_interlace,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
    "conjecture": cmd_conjecture,
}


def run(argv=None, out=None) -> int:
    """Parse ``argv``, run the subcommand, return the exit status."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (GainGraphError, OSError) as exc:
        print(f"gainlap {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
