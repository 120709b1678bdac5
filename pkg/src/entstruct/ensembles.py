"""Random-circuit ensembles and their diagram statistics.

Two kinds of volume-law dynamics on a 1D open chain, both starting from
|0...0>: brickwork layers of uniformly random two-qubit Cliffords, or
layers of random weight-3 Pauli measurements on neighboring triples.
Each sample owns an independent child RNG derived from (seed, index), so
runs are reproducible regardless of worker count.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import json
import math
from dataclasses import dataclass, asdict

import numpy as np

from .clustering import build_diagram
from .entropy import entropy_bits
from .metrics import metrics_report
from .pauli import PauliString
from .tableau import StabilizerTableau, random_two_qubit_clifford

KINDS = ("unitary", "measurement_only")

_LETTERS = "XYZ"


@dataclass(frozen=True, slots=True)
class EnsembleSpec:
    kind: str
    L: int
    samples: int
    seed: int
    layers: int | None = None  # None = 4L, past saturation for both kinds

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.L < 4:
            raise ValueError("L must be at least 4")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.layers is not None and self.layers < 0:
            raise ValueError("layers must be non-negative")

    @property
    def effective_layers(self) -> int:
        return 4 * self.L if self.layers is None else self.layers


@dataclass(frozen=True, slots=True)
class EnsembleRecord:
    kind: str
    L: int
    seed: int
    sample: int
    s_ee_bits: int
    depth: int
    min_weight: int | None
    mean_range: float | None
    layers: int


@dataclass(frozen=True, slots=True)
class EnsembleStats:
    spec: EnsembleSpec
    records: tuple[EnsembleRecord, ...]
    means: dict[str, float | None]
    stderrs: dict[str, float | None]
    errors: tuple[tuple[int, str], ...] = ()


def unitary_brickwork_layer(t: StabilizerTableau, layer: int, rng) -> StabilizerTableau:
    """One brickwork layer: even layer indices couple (0,1),(2,3),...,
    odd ones couple (1,2),(3,4),...; every gate an independent uniform
    two-qubit Clifford."""
    L = t.n
    start = 0 if layer % 2 == 0 else 1
    for a in range(start, L - 1, 2):
        t = t.apply_clifford(random_two_qubit_clifford(rng), (a, a + 1))
    return t


def evolve_unitary(L: int, layers: int, rng) -> StabilizerTableau:
    """Brickwork circuit of independent uniform two-qubit Cliffords."""
    if L < 2:
        raise ValueError("need at least 2 qubits")
    t = StabilizerTableau.zero_state(L)
    for layer in range(layers):
        t = unitary_brickwork_layer(t, layer, rng)
    return t


def random_weight3_pauli(L: int, site: int, rng) -> PauliString:
    """Uniform X/Y/Z letter on each of three neighboring sites."""
    letters = [_LETTERS[int(k)] for k in rng.integers(0, 3, size=3)]
    x = z = 0
    for offset, letter in enumerate(letters):
        q = site + offset
        if letter != "Z":
            x |= 1 << q
        if letter != "X":
            z |= 1 << q
    return PauliString.make(L, x, z)


def measurement_layer(t: StabilizerTableau, rng, scheme: str = "sweep") -> StabilizerTableau:
    """One layer of random weight-3 Pauli measurements.

    ``sweep`` measures every position once in a random order;
    ``replacement`` draws L uniformly random positions.
    """
    L = t.n
    if scheme == "sweep":
        sites = [int(s) for s in rng.permutation(L - 2)]
    elif scheme == "replacement":
        sites = [int(rng.integers(0, L - 2)) for _ in range(L)]
    else:
        raise ValueError(f"scheme must be 'sweep' or 'replacement', got {scheme!r}")
    for site in sites:
        t, _outcome = t.measure_pauli(random_weight3_pauli(L, site, rng), rng)
    return t


def evolve_measurement_only(
    L: int, layers: int, rng, scheme: str = "sweep"
) -> StabilizerTableau:
    """Measurement-only dynamics with random weight-3 Paulis on neighboring
    triples.  The default sweep keeps the chain ends covered, which is what
    sustains the full entanglement depth at small L."""
    if L < 3:
        raise ValueError("need at least 3 qubits")
    t = StabilizerTableau.zero_state(L)
    for _ in range(layers):
        t = measurement_layer(t, rng, scheme)
    return t


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent child generator for one sample, stable across runs."""
    return np.random.default_rng([seed, index])


def evolve_sample(spec: EnsembleSpec, index: int) -> StabilizerTableau:
    rng = sample_rng(spec.seed, index)
    if spec.kind == "unitary":
        return evolve_unitary(spec.L, spec.effective_layers, rng)
    return evolve_measurement_only(spec.L, spec.effective_layers, rng)


def sample_record(spec: EnsembleSpec, index: int) -> EnsembleRecord:
    """Evolve one trajectory, build its diagram, extract the metrics."""
    t = evolve_sample(spec, index)
    half = range(spec.L // 2)
    report = metrics_report(build_diagram(t))
    return EnsembleRecord(
        kind=spec.kind,
        L=spec.L,
        seed=spec.seed,
        sample=index,
        s_ee_bits=entropy_bits(t, half),
        depth=report.depth,
        min_weight=report.min_weight,
        mean_range=report.mean_range,
        layers=report.layers,
    )


def _worker(args: tuple[EnsembleSpec, int]):
    spec, index = args
    try:
        return index, sample_record(spec, index), None
    except Exception as exc:  # isolate per-sample failures
        return index, None, f"{type(exc).__name__}: {exc}"


METRIC_KEYS = ("s_ee_bits", "depth", "min_weight", "mean_range", "layers")


def _aggregate(records):
    means: dict[str, float | None] = {}
    stderrs: dict[str, float | None] = {}
    for key in METRIC_KEYS:
        values = [getattr(r, key) for r in records if getattr(r, key) is not None]
        if not values:
            means[key] = None
            stderrs[key] = None
            continue
        arr = np.asarray(values, dtype=float)
        means[key] = float(arr.mean())
        stderrs[key] = float(arr.std(ddof=1) / math.sqrt(len(arr))) if len(arr) > 1 else 0.0
    return means, stderrs


def run_ensemble(spec: EnsembleSpec, workers: int = 1) -> EnsembleStats:
    """Run every sample, aggregate means and standard errors.

    Bit-identical output for a given spec, independent of ``workers``:
    samples are keyed by index and reduced in index order.
    """
    tasks = [(spec, index) for index in range(spec.samples)]
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_worker, tasks, chunksize=1))
    else:
        results = [_worker(task) for task in tasks]
    results.sort(key=lambda item: item[0])
    records = tuple(rec for _, rec, err in results if rec is not None)
    errors = tuple((idx, err) for idx, _, err in results if err is not None)
    means, stderrs = _aggregate(records)
    return EnsembleStats(spec=spec, records=records, means=means, stderrs=stderrs, errors=errors)


CSV_COLUMNS = ("kind", "L", "seed", "sample", "s_ee_bits", "depth", "min_weight", "mean_range", "layers")


def records_to_csv(records) -> str:
    """One CSV row per record; None renders as an empty cell."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        row = [getattr(r, col) for col in CSV_COLUMNS]
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def stats_to_json(stats_list) -> str:
    """JSON aggregate for one or more ensemble runs."""
    payload = []
    for stats in stats_list:
        payload.append(
            {
                "spec": asdict(stats.spec),
                "count": len(stats.records),
                "mean": stats.means,
                "stderr": stats.stderrs,
                "errors": [list(e) for e in stats.errors],
            }
        )
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
