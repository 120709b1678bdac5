"""Diagram serialization: versioned JSON documents, DOT graphs, text trees.

Qubit labels are 1-based in every external format, matching the CLI and
the text tableau format; the library itself is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .clustering import Diagram, DiagramNode
from .metrics import MetricsReport, metrics_report

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """Malformed or unsupported diagram document."""


@dataclass(frozen=True, slots=True)
class DiagramDocument:
    """A diagram plus its metrics, the primary interchange object."""

    diagram: Diagram
    metrics: MetricsReport


def document(diagram: Diagram) -> DiagramDocument:
    return DiagramDocument(diagram=diagram, metrics=metrics_report(diagram))


# -- JSON ---------------------------------------------------------------


def _node_to_obj(node: DiagramNode) -> dict:
    if node.kind == "leaf":
        obj: dict = {"kind": "leaf", "qubit": node.qubit + 1}
    else:
        obj = {"kind": "cluster", "w": node.w, "children": [_node_to_obj(c) for c in node.children]}
    if node.decoupled:
        obj["decoupled"] = True
    return obj


def _expect_keys(obj: dict, required: set[str], optional: set[str], where: str) -> None:
    keys = set(obj)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise DocumentError(f"{where}: missing fields {sorted(missing)}")
    if unknown:
        raise DocumentError(f"{where}: unknown fields {sorted(unknown)}")


def _node_from_obj(obj, where: str = "node") -> DiagramNode:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    kind = obj.get("kind")
    if kind == "leaf":
        _expect_keys(obj, {"kind", "qubit"}, {"decoupled"}, where)
        qubit = obj["qubit"]
        if not isinstance(qubit, int) or qubit < 1:
            raise DocumentError(f"{where}: bad qubit label {qubit!r}")
        return DiagramNode(frozenset((qubit - 1,)), decoupled=bool(obj.get("decoupled", False)))
    if kind == "cluster":
        _expect_keys(obj, {"kind", "w", "children"}, {"decoupled"}, where)
        children = tuple(
            _node_from_obj(c, f"{where}.children[{i}]") for i, c in enumerate(obj["children"])
        )
        qubits = frozenset().union(*(c.qubits for c in children))
        try:
            return DiagramNode(
                qubits, children, w=obj["w"], decoupled=bool(obj.get("decoupled", False))
            )
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from exc
    raise DocumentError(f"{where}: kind must be 'leaf' or 'cluster', got {kind!r}")


def _metrics_to_obj(m: MetricsReport) -> dict:
    return {
        "depth": m.depth,
        "partitions": [[q + 1 for q in part] for part in m.partitions],
        "min_weight": m.min_weight,
        "k_uniformity": m.k_uniformity,
        "layers": m.layers,
        "layers_per_root": list(m.layers_per_root),
        "first_round_ranges": list(m.first_round_ranges),
        "mean_range": m.mean_range,
    }


_METRICS_KEYS = {
    "depth",
    "partitions",
    "min_weight",
    "k_uniformity",
    "layers",
    "layers_per_root",
    "first_round_ranges",
    "mean_range",
}


def _metrics_from_obj(obj) -> MetricsReport:
    if not isinstance(obj, dict):
        raise DocumentError("metrics: expected an object")
    _expect_keys(obj, _METRICS_KEYS, set(), "metrics")
    mean_range = obj["mean_range"]
    return MetricsReport(
        depth=obj["depth"],
        partitions=tuple(tuple(q - 1 for q in part) for part in obj["partitions"]),
        min_weight=obj["min_weight"],
        k_uniformity=obj["k_uniformity"],
        layers=obj["layers"],
        layers_per_root=tuple(obj["layers_per_root"]),
        first_round_ranges=tuple(obj["first_round_ranges"]),
        mean_range=None if mean_range is None else float(mean_range),
    )


def to_json(doc: DiagramDocument) -> str:
    payload = {
        "schema": SCHEMA_VERSION,
        "n": doc.diagram.n,
        "roots": [_node_to_obj(r) for r in doc.diagram.roots],
        "first_round_sets": [
            {"qubits": [q + 1 for q in qs], "w": w} for qs, w in doc.diagram.first_round_sets
        ],
        "metrics": _metrics_to_obj(doc.metrics),
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> DiagramDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DocumentError("document must be a JSON object")
    _expect_keys(payload, {"schema", "n", "roots", "first_round_sets", "metrics"}, set(), "document")
    if payload["schema"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema version {payload['schema']!r}")
    roots = tuple(_node_from_obj(r, f"roots[{i}]") for i, r in enumerate(payload["roots"]))
    first_round = []
    for i, entry in enumerate(payload["first_round_sets"]):
        if not isinstance(entry, dict):
            raise DocumentError(f"first_round_sets[{i}]: expected an object")
        _expect_keys(entry, {"qubits", "w"}, set(), f"first_round_sets[{i}]")
        first_round.append((tuple(q - 1 for q in entry["qubits"]), entry["w"]))
    try:
        diagram = Diagram(payload["n"], roots, tuple(first_round))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return DiagramDocument(diagram=diagram, metrics=_metrics_from_obj(payload["metrics"]))


# -- DOT ----------------------------------------------------------------


def to_dot(diagram: Diagram) -> str:
    """Graphviz rendering: nested subgraph boxes labeled with w, one node
    per qubit."""
    lines = ["graph entanglement_structure {", '  node [shape=circle];']
    counter = [0]

    def emit(node: DiagramNode, indent: str) -> None:
        if node.kind == "leaf":
            lines.append(f'{indent}q{node.qubit + 1} [label="{node.qubit + 1}"];')
            return
        cid = counter[0]
        counter[0] += 1
        lines.append(f"{indent}subgraph cluster_{cid} {{")
        lines.append(f'{indent}  label="w={node.w}";')
        for child in node.children:
            emit(child, indent + "  ")
        lines.append(f"{indent}}}")

    for root in diagram.roots:
        emit(root, "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- Text tree ----------------------------------------------------------


def _qubit_list(qubits) -> str:
    return ",".join(str(q + 1) for q in sorted(qubits))


def to_text(diagram: Diagram, metrics: MetricsReport | None = None) -> str:
    lines: list[str] = []

    def emit(node: DiagramNode, depth: int) -> None:
        pad = "  " * depth
        if node.kind == "leaf":
            lines.append(f"{pad}qubit {node.qubit + 1}")
        else:
            lines.append(f"{pad}cluster w={node.w} {{{_qubit_list(node.qubits)}}}")
            for child in node.children:
                emit(child, depth + 1)

    for root in diagram.roots:
        emit(root, 0)
    if metrics is not None:
        lines.append("")
        lines.append(f"depth: {metrics.depth}")
        lines.append(f"partitions: {'; '.join('{' + _qubit_list(p) + '}' for p in metrics.partitions)}")
        lines.append(f"min_weight: {metrics.min_weight}")
        lines.append(f"k_uniformity: {metrics.k_uniformity}")
        lines.append(f"layers: {metrics.layers}")
        lines.append(f"layers_per_root: {', '.join(str(v) for v in metrics.layers_per_root)}")
        lines.append(f"first_round_ranges: {', '.join(str(v) for v in metrics.first_round_ranges)}")
        lines.append(f"mean_range: {metrics.mean_range}")
    return "\n".join(lines) + "\n"
