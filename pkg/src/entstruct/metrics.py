"""Quantitative features read off an entanglement-structure diagram."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .clustering import Diagram


@dataclass(frozen=True, slots=True)
class MetricsReport:
    """All diagram-derived metrics of one state, in one place.

    Sizes and entropies are integer counts (entropies in ln-2 units);
    ``min_weight``/``k_uniformity``/``mean_range`` are None for a fully
    product state, which has no first-round sets.
    """

    depth: int
    partitions: tuple[tuple[int, ...], ...]
    min_weight: int | None
    k_uniformity: int | None
    layers: int
    layers_per_root: tuple[int, ...]
    first_round_ranges: tuple[int, ...]
    mean_range: float | None


def entanglement_depth(d: Diagram) -> int:
    """Number of qubits in the largest separable factor (1 if product)."""
    return max(len(r.qubits) for r in d.roots)


def separable_partitions(d: Diagram) -> list[tuple[int, ...]]:
    """Qubit sets of the separable factors, sorted by smallest member."""
    return [tuple(sorted(r.qubits)) for r in d.roots]


def minimal_stabilizer_weight(d: Diagram) -> int | None:
    """Smallest weight label among the first-round sets; the state is
    (result - 1)-uniform.  None for a fully product state."""
    if not d.first_round_sets:
        return None
    return min(w for _, w in d.first_round_sets)


def entropy_upper_bound(d: Diagram, qubits: Iterable[int]) -> int:
    """Diagram upper bound (ln-2 units) on the entropy across a cut.

    Every cluster node lying entirely on one side of the cut certifies one
    confined bit, lowering the attainable entropy by one unit; the bound
    takes the better of the two sides.
    """
    a = frozenset(qubits)
    full = frozenset(range(d.n))
    if not a or not a < full:
        raise ValueError("cut must be a nonempty strict subset of the qubits")
    comp = full - a
    clusters = list(d.cluster_nodes())

    def side(region: frozenset[int]) -> int:
        confined = sum(1 for node in clusters if node.qubits <= region)
        return len(region) - confined

    return min(side(a), side(comp))


def layer_count(d: Diagram) -> tuple[int, list[int]]:
    """(overall layers, layers per root): the per-root value is the maximum
    number of nested cluster nodes on any leaf-to-root path."""
    per_root = [r.cluster_depth() for r in d.roots]
    return max(per_root, default=0), per_root


def first_round_spatial_ranges(d: Diagram) -> tuple[list[int], float | None]:
    """Index span (last - first qubit) of each minimal-weight first-round
    set, plus their mean; ([], None) for a product state."""
    mw = minimal_stabilizer_weight(d)
    if mw is None:
        return [], None
    ranges = [max(qs) - min(qs) for qs, w in d.first_round_sets if w == mw]
    return ranges, sum(ranges) / len(ranges)


def metrics_report(d: Diagram) -> MetricsReport:
    mw = minimal_stabilizer_weight(d)
    layers, per_root = layer_count(d)
    ranges, mean_range = first_round_spatial_ranges(d)
    return MetricsReport(
        depth=entanglement_depth(d),
        partitions=tuple(separable_partitions(d)),
        min_weight=mw,
        k_uniformity=None if mw is None else mw - 1,
        layers=layers,
        layers_per_root=tuple(per_root),
        first_round_ranges=tuple(ranges),
        mean_range=mean_range,
    )
