"""Subset entanglement entropies of a stabilizer state, in units of ln 2.

The entropy of a qubit subset equals the GF(2) rank of the generator
matrix restricted to the subset's x/z columns, minus the subset size.
Everything here is exact integer arithmetic; there is no floating point.
"""

from __future__ import annotations

from typing import Iterable

from .gf2 import rank_of_ints
from .tableau import StabilizerTableau


def qubit_mask(qubits: Iterable[int], n: int) -> int:
    """Pack a qubit index collection into a bit mask, rejecting bad input."""
    mask = 0
    for q in qubits:
        if not 0 <= q < n:
            raise ValueError(f"qubit index {q} out of range 0..{n - 1}")
        bit = 1 << q
        if mask & bit:
            raise ValueError(f"duplicate qubit index {q}")
        mask |= bit
    return mask


def _entropy_of_mask(pairs: list[tuple[int, int]], n: int, mask: int) -> int:
    # Zero columns do not change rank, so masking beats materializing the
    # reduced matrix.
    rows = [(x & mask) | ((z & mask) << n) for x, z in pairs]
    return rank_of_ints(rows) - mask.bit_count()


def entropy_bits(t: StabilizerTableau, qubits: Iterable[int]) -> int:
    """Entanglement entropy of ``qubits`` with the rest, in ln-2 units."""
    mask = qubit_mask(qubits, t.n)
    return _entropy_of_mask([(g.x, g.z) for g in t.generators], t.n, mask)


def total_correlations(t: StabilizerTableau, groups: Iterable[Iterable[int]]) -> int:
    """Sum of per-group entropies minus the entropy of their union.

    Counts bits stored jointly in the groups but in no single group.
    Groups must be nonempty and pairwise disjoint.
    """
    pairs = [(g.x, g.z) for g in t.generators]
    n = t.n
    union = 0
    total = 0
    count = 0
    for group in groups:
        m = qubit_mask(group, n)
        if m == 0:
            raise ValueError("groups must be nonempty")
        if union & m:
            raise ValueError("groups overlap")
        union |= m
        total += _entropy_of_mask(pairs, n, m)
        count += 1
    if count == 0:
        return 0
    return total - _entropy_of_mask(pairs, n, union)


def confined_stabilizer_count(t: StabilizerTableau, qubits: Iterable[int]) -> int:
    """Number of independent stabilizer elements supported inside ``qubits``."""
    mask = qubit_mask(qubits, t.n)
    return mask.bit_count() - _entropy_of_mask([(g.x, g.z) for g in t.generators], t.n, mask)


class EntropyCache:
    """Memoized subset-entropy queries against one fixed tableau.

    Diagram construction re-queries heavily overlapping subsets; keying by
    the packed subset mask makes every repeat a dict hit.  Use one cache
    per thread (inserts are idempotent, so racing caches stay correct).
    """

    __slots__ = ("n", "_pairs", "_memo")

    def __init__(self, t: StabilizerTableau) -> None:
        self.n = t.n
        self._pairs = [(g.x, g.z) for g in t.generators]
        self._memo: dict[int, int] = {}

    def entropy_mask(self, mask: int) -> int:
        s = self._memo.get(mask)
        if s is None:
            s = _entropy_of_mask(self._pairs, self.n, mask)
            self._memo[mask] = s
        return s

    def entropy(self, qubits: Iterable[int]) -> int:
        return self.entropy_mask(qubit_mask(qubits, self.n))
