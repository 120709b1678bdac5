"""Command-line interface: generate states, analyze diagrams, run
ensembles, cross-check against the dense oracle.

Exit codes: 0 success, 1 data error (invalid tableau, oracle mismatch,
unwritable output), 2 usage error.  Qubit labels are 1-based here.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import diagram_io, oracle, states
from .clustering import build_diagram
from .ensembles import EnsembleSpec, records_to_csv, run_ensemble, stats_to_json
from .entropy import entropy_bits
from .metrics import separable_partitions
from .tableau import StabilizerTableau, ValidationError

GEN_CHOICES = ("ghz", "cluster1d", "code5", "steane", "fig1", "fig2")


def _read_tableau(path: str) -> StabilizerTableau:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return StabilizerTableau.from_text(text)


def _parse_l_values(text: str) -> list[int]:
    values: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                pieces = [int(p) for p in part.split("..")]
                if len(pieces) == 2:
                    lo, hi, step = pieces[0], pieces[1], 1
                elif len(pieces) == 3:
                    lo, hi, step = pieces
                else:
                    raise ValueError
                if step < 1 or hi < lo:
                    raise ValueError
                values.extend(range(lo, hi + 1, step))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad L specification {text!r}; use e.g. 12, 8,12,16 or 8..16..2"
        ) from None
    return values


def cmd_gen(args) -> int:
    name = args.name
    if name in ("ghz", "cluster1d"):
        if args.n is None:
            print(f"gen {name} requires a qubit count", file=sys.stderr)
            return 2
        try:
            t = states.ghz(args.n) if name == "ghz" else states.cluster1d(args.n, args.boundary)
        except ValueError as exc:
            print(f"bad parameters: {exc}", file=sys.stderr)
            return 2
    else:
        if args.n is not None:
            print(f"gen {name} takes no qubit count", file=sys.stderr)
            return 2
        if name == "code5":
            t = states.five_qubit_code_logical_x()
        elif name == "steane":
            t = states.steane_code_logical_x()
        elif name == "fig1":
            t = states.example_state("fig1")
        else:
            print(f"warning: {states.FIG2_DEFECT_NOTE}", file=sys.stderr)
            t = states.example_state("fig2")
    sys.stdout.write(t.to_text())
    return 0


def cmd_analyze(args) -> int:
    try:
        t = _read_tableau(args.infile)
    except (OSError, ValidationError) as exc:
        print(f"invalid tableau: {exc}", file=sys.stderr)
        return 1
    doc = diagram_io.document(build_diagram(t))
    if args.format == "json":
        sys.stdout.write(diagram_io.to_json(doc))
    elif args.format == "dot":
        sys.stdout.write(diagram_io.to_dot(doc.diagram))
    else:
        sys.stdout.write(diagram_io.to_text(doc.diagram, doc.metrics if args.metrics else None))
    return 0


def cmd_ensemble(args) -> int:
    kind = "measurement_only" if args.kind == "measurement" else "unitary"
    all_records = []
    all_stats = []
    for L in args.L:
        spec = EnsembleSpec(kind=kind, L=L, samples=args.samples, seed=args.seed, layers=args.layers)
        stats = run_ensemble(spec, workers=args.threads)
        all_stats.append(stats)
        all_records.extend(stats.records)
        mean = stats.means["s_ee_bits"]
        err = stats.stderrs["s_ee_bits"]
        print(f"kind={kind} L={L} samples={len(stats.records)} s_ee_bits={mean:.3f}+-{err:.3f}")
    csv_path = Path(args.out + ".csv")
    json_path = Path(args.out + ".json")
    try:
        csv_path.write_text(records_to_csv(all_records))
        json_path.write_text(stats_to_json(all_stats))
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {csv_path} and {json_path}")
    return 0


def cmd_verify(args) -> int:
    try:
        t = _read_tableau(args.infile)
    except (OSError, ValidationError) as exc:
        print(f"invalid tableau: {exc}", file=sys.stderr)
        return 1
    if t.n > oracle.MAX_QUBITS:
        print(f"verify is capped at {oracle.MAX_QUBITS} qubits, got {t.n}", file=sys.stderr)
        return 2
    state = oracle.tableau_to_state(t)
    n = t.n
    if n <= 8:
        subsets = [[q for q in range(n) if (mask >> q) & 1] for mask in range(1 << n)]
    else:
        rng = np.random.default_rng(0)
        subsets = [
            [q for q in range(n) if rng.integers(2)] for _ in range(200)
        ]
    mismatches = 0
    for sub in subsets:
        if entropy_bits(t, sub) != oracle.dense_entropy_bits(state, sub):
            mismatches += 1
            print(f"entropy mismatch on subset {[q + 1 for q in sub]}", file=sys.stderr)
    print(f"entropy cross-check: {len(subsets)} subsets, {mismatches} mismatches")
    diagram = build_diagram(t)
    bad_roots = [r for r in diagram.roots if entropy_bits(t, r.qubits) != 0]
    print(f"root separability: {len(diagram.roots)} roots, {len(bad_roots)} entangled")
    partition_ok = True
    if n <= 8:
        fast = separable_partitions(diagram)
        brute = oracle.brute_force_partitions(t)
        partition_ok = fast == brute
        print(f"partition cross-check: {'OK' if partition_ok else 'MISMATCH'}")
    if mismatches or bad_roots or not partition_ok:
        return 1
    print("verify: all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entstruct",
        description="Entanglement-structure diagrams and metrics for stabilizer states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a named state in the text tableau format")
    p_gen.add_argument("name", choices=GEN_CHOICES)
    p_gen.add_argument("n", nargs="?", type=int, help="qubit count (ghz, cluster1d)")
    p_gen.add_argument("--boundary", choices=("pbc", "obc"), default="pbc")
    p_gen.set_defaults(func=cmd_gen)

    p_an = sub.add_parser("analyze", help="build the diagram of a tableau")
    p_an.add_argument("--in", dest="infile", default="-", help="tableau file, '-' for stdin")
    p_an.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_an.add_argument("--metrics", action="store_true", help="append metrics to text output")
    p_an.set_defaults(func=cmd_analyze)

    p_en = sub.add_parser("ensemble", help="run a random-circuit ensemble study")
    p_en.add_argument("--kind", choices=("unitary", "measurement"), required=True)
    p_en.add_argument("--L", type=_parse_l_values, required=True,
                      help="system sizes: 12, 8,12,16 or 8..16..2")
    p_en.add_argument("--samples", type=int, default=100)
    p_en.add_argument("--seed", type=int, default=0)
    p_en.add_argument("--layers", type=int, default=None, help="circuit depth (default 4L)")
    p_en.add_argument("--out", default="ensemble", help="output base path (writes .csv and .json)")
    p_en.add_argument("--threads", type=int, default=1, help="worker processes")
    p_en.set_defaults(func=cmd_ensemble)

    p_ver = sub.add_parser("verify", help="cross-check against the dense oracle")
    p_ver.add_argument("--in", dest="infile", default="-", help="tableau file, '-' for stdin")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
