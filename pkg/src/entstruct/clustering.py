"""Recursive w-cluster construction of the entanglement-structure diagram.

Each pass strips decoupled elements, escalates w until some w-element set
of the remaining elements carries shared information (total correlations
> 0), fuses all overlapping such sets into new indivisible clusters, and
restarts.  The result is a forest whose roots are the separable factors
of the state and whose nesting records at which joint size information
first appears.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Hashable, Iterable, Sequence

from .entropy import EntropyCache
from .tableau import StabilizerTableau, ValidationError


@dataclass(frozen=True, slots=True)
class DiagramNode:
    """A diagram tree node: a single-qubit leaf or a w-labeled cluster."""

    qubits: frozenset[int]
    children: tuple["DiagramNode", ...] = ()
    w: int | None = None
    decoupled: bool = False

    def __post_init__(self) -> None:
        if self.children:
            if self.w is None or self.w < 2:
                raise ValueError("cluster nodes need a weight label w >= 2")
            if len(self.children) < 2:
                raise ValueError("cluster nodes need at least two children")
            union: set[int] = set()
            size = 0
            for c in self.children:
                union.update(c.qubits)
                size += len(c.qubits)
            if size != len(union):
                raise ValueError("child qubit sets overlap")
            if frozenset(union) != self.qubits:
                raise ValueError("cluster qubits must equal the union of its children")
        else:
            if self.w is not None:
                raise ValueError("leaf nodes carry no weight label")
            if len(self.qubits) != 1:
                raise ValueError("leaf nodes hold exactly one qubit")

    @property
    def kind(self) -> str:
        return "cluster" if self.children else "leaf"

    @property
    def qubit(self) -> int:
        if self.children:
            raise ValueError("not a leaf")
        return next(iter(self.qubits))

    def walk(self):
        """Yield this node and every descendant, depth first."""
        yield self
        for c in self.children:
            yield from c.walk()

    def cluster_depth(self) -> int:
        """Maximum number of cluster nodes on any leaf-to-here path."""
        if not self.children:
            return 0
        return 1 + max(c.cluster_depth() for c in self.children)


@dataclass(frozen=True, slots=True)
class Element:
    """An indivisible unit during clustering: a qubit or an earlier cluster."""

    uid: int
    mask: int
    node: DiagramNode


@dataclass(frozen=True, slots=True)
class Diagram:
    """The full entanglement-structure forest of one stabilizer state.

    ``roots`` are the separable factors (each decoupled from the rest);
    ``first_round_sets`` records the indivisible qubit sets of the very
    first pass together with their weight label.
    """

    n: int
    roots: tuple[DiagramNode, ...]
    first_round_sets: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        covered: set[int] = set()
        size = 0
        for r in self.roots:
            covered.update(r.qubits)
            size += len(r.qubits)
        if size != len(covered) or covered != set(range(self.n)):
            raise ValueError("roots must partition the qubits")

    def all_nodes(self):
        for r in self.roots:
            yield from r.walk()

    def cluster_nodes(self):
        return (node for node in self.all_nodes() if node.children)


def merge_overlaps(sets: Iterable[Iterable[Hashable]]) -> list[frozenset]:
    """Disjoint unions of overlapping sets.

    Treats each input set as a hyperedge and returns the union of every
    connected component, pairwise disjoint, sorted by smallest member.
    """
    parent: dict[Hashable, Hashable] = {}

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    members: list[Hashable] = []
    for s in sets:
        first = None
        for item in s:
            if item not in parent:
                parent[item] = item
                members.append(item)
            if first is None:
                first = item
            else:
                ra, rb = find(first), find(item)
                if ra != rb:
                    parent[rb] = ra
    comps: dict[Hashable, set] = {}
    for item in members:
        comps.setdefault(find(item), set()).add(item)
    return sorted((frozenset(c) for c in comps.values()), key=min)


def _mask_qubits(mask: int) -> tuple[int, ...]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return tuple(out)


def _element_key(e: Element) -> int:
    return (e.mask & -e.mask).bit_length() - 1  # smallest qubit


def singleton_elements(n: int) -> list[Element]:
    return [Element(q, 1 << q, DiagramNode(frozenset((q,)))) for q in range(n)]


def _scan(
    elements: Sequence[Element],
    w: int,
    cache: EntropyCache,
    skip_pairs: set[frozenset[int]] | None = None,
) -> list[tuple[Element, ...]]:
    singles = {e.uid: cache.entropy_mask(e.mask) for e in elements}
    found = []
    for combo in itertools.combinations(elements, w):
        if skip_pairs is not None and w == 2:
            key = frozenset((combo[0].uid, combo[1].uid))
            if key in skip_pairs:
                continue
        union = 0
        total = 0
        for e in combo:
            union |= e.mask
            total += singles[e.uid]
        if total - cache.entropy_mask(union) > 0:
            found.append(combo)
    return found


def find_indivisible_sets(
    t: StabilizerTableau,
    elements: Sequence[Element],
    w: int,
    cache: EntropyCache | None = None,
) -> list[tuple[Element, ...]]:
    """All w-element combinations with total correlations > 0.

    Elements must be pairwise disjoint; results come in lexicographic
    order of the elements sorted by smallest qubit.
    """
    elems = sorted(elements, key=_element_key)
    union = 0
    for e in elems:
        if union & e.mask:
            raise ValueError("elements overlap")
        union |= e.mask
    if not 2 <= w <= len(elems):
        raise ValueError(f"w must be in 2..{len(elems)}, got {w}")
    if cache is None:
        cache = EntropyCache(t)
    return _scan(elems, w, cache)


def build_diagram(t: StabilizerTableau, prune_additive_pairs: bool = False) -> Diagram:
    """Construct the entanglement-structure diagram of a stabilizer state.

    Deterministic for a given tableau and invariant under gauge changes of
    the generator list.  ``prune_additive_pairs`` skips re-scanning element
    pairs that a previous pass already found uncorrelated; pair totals
    depend only on the state, so this cannot change the result.
    """
    n = t.n
    cache = EntropyCache(t)
    elements = singleton_elements(n)
    roots: list[DiagramNode] = []
    first_round: list[tuple[tuple[int, ...], int]] = []
    first_pass = True
    checked_pairs: set[frozenset[int]] = set()
    next_uid = n

    while elements:
        live = []
        for e in elements:
            if cache.entropy_mask(e.mask) == 0:
                roots.append(replace(e.node, decoupled=True))
            else:
                live.append(e)
        elements = live
        if not elements:
            break

        # Purity guarantees the scan hits at w = len(elements) at the
        # latest: the union of all live elements has zero entropy while
        # each element alone does not.
        found: list[tuple[Element, ...]] = []
        w = 1
        while w < len(elements):
            w += 1
            skip = checked_pairs if (prune_additive_pairs and w == 2) else None
            found = _scan(elements, w, cache, skip)
            if prune_additive_pairs and w == 2:
                for a, b in itertools.combinations(elements, 2):
                    checked_pairs.add(frozenset((a.uid, b.uid)))
            if found:
                break
        if not found:
            raise ValidationError("no indivisible set found; the generator list is inconsistent")

        if first_pass:
            first_round = [
                (tuple(sorted(q for e in combo for q in _mask_qubits(e.mask))), w)
                for combo in found
            ]

        merged_uids = merge_overlaps([tuple(e.uid for e in combo) for combo in found])
        merged_all = set().union(*merged_uids)
        by_uid = {e.uid: e for e in elements}
        new_elements = [e for e in elements if e.uid not in merged_all]
        for comp in merged_uids:
            parts = sorted((by_uid[uid] for uid in comp), key=_element_key)
            union_mask = 0
            for p in parts:
                union_mask |= p.mask
            node = DiagramNode(
                frozenset(_mask_qubits(union_mask)),
                tuple(p.node for p in parts),
                w=w,
            )
            new_elements.append(Element(next_uid, union_mask, node))
            next_uid += 1
        elements = sorted(new_elements, key=_element_key)
        first_pass = False

    roots.sort(key=lambda r: min(r.qubits))
    return Diagram(n, tuple(roots), tuple(first_round))
