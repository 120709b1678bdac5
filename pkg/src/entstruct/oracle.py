"""Dense statevector reference implementation for small registers.

Everything here is deliberately brute force: it exists to cross-check the
rank-based fast paths, not to be fast.  Registers are capped at 14 qubits.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable

import numpy as np

from .entropy import qubit_mask
from .pauli import PauliString
from .tableau import StabilizerTableau

MAX_QUBITS = 14

_I_POWERS = np.array([1, 1j, -1, -1j], dtype=np.complex128)


def _check_size(n: int) -> None:
    if n > MAX_QUBITS:
        raise ValueError(f"dense oracle is capped at {MAX_QUBITS} qubits, got {n}")


def _parity(values: np.ndarray) -> np.ndarray:
    v = values.copy()
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1


def apply_pauli(p: PauliString, vec: np.ndarray) -> np.ndarray:
    """Apply a Pauli string to a dense vector (basis index bit j = qubit j)."""
    _check_size(p.n)
    idx = np.arange(len(vec))
    coeff = _I_POWERS[p.i_phase] * np.where(_parity(idx & p.z), -1.0, 1.0)
    out = np.empty_like(vec)
    out[idx ^ p.x] = coeff * vec
    return out


def tableau_to_state(t: StabilizerTableau) -> np.ndarray:
    """The unit vector (up to global phase) fixed by all generators.

    Built by applying the projector (1+g)/2 of every generator to a
    computational basis state that the product does not annihilate.
    """
    _check_size(t.n)
    dim = 1 << t.n
    for basis in range(dim):
        vec = np.zeros(dim, dtype=np.complex128)
        vec[basis] = 1.0
        for g in t.generators:
            vec = (vec + apply_pauli(g, vec)) / 2.0
            if np.linalg.norm(vec) < 1e-9:
                break
        norm = np.linalg.norm(vec)
        if norm > 1e-9:
            return vec / norm
    raise ValueError("no basis state survives the projectors; tableau is inconsistent")


def dense_entropy_bits(state: np.ndarray, qubits: Iterable[int]) -> int:
    """Von Neumann entropy of the reduced state over ``qubits``, in ln-2
    units, rounded to the nearest integer.

    Stabilizer entropies are exact multiples of ln 2, so a rounding
    residual above 1e-6 signals a bug and raises.
    """
    n = int(round(math.log2(len(state))))
    _check_size(n)
    mask = qubit_mask(qubits, n)
    keep = [q for q in range(n) if (mask >> q) & 1]
    if not keep:
        return 0
    rest = [q for q in range(n) if not (mask >> q) & 1]
    # Axis n-1-q corresponds to qubit q after reshaping.
    tensor = state.reshape([2] * n)
    order = [n - 1 - q for q in keep] + [n - 1 - q for q in rest]
    mat = tensor.transpose(order).reshape(1 << len(keep), -1)
    sv = np.linalg.svd(mat, compute_uv=False)
    probs = sv**2
    probs = probs[probs > 1e-12]
    bits = float(-(probs * np.log(probs)).sum() / math.log(2))
    nearest = round(bits)
    if abs(bits - nearest) > 1e-6:
        raise ValueError(f"entropy {bits} is not a multiple of ln 2; residual too large")
    return int(nearest)


def state_entropy_bits(t: StabilizerTableau, qubits: Iterable[int]) -> int:
    """Convenience wrapper: dense entropy straight from a tableau."""
    return dense_entropy_bits(tableau_to_state(t), qubits)


def brute_force_partitions(t: StabilizerTableau) -> list[tuple[int, ...]]:
    """Finest decomposition into product factors, by recursive bipartition
    search over dense entropies (any zero-entropy subset splits off)."""
    if t.n > 8:
        raise ValueError("brute-force partition search is capped at 8 qubits")
    state = tableau_to_state(t)
    memo: dict[int, int] = {}

    def ent(mask: int) -> int:
        if mask not in memo:
            memo[mask] = dense_entropy_bits(state, [q for q in range(t.n) if (mask >> q) & 1])
        return memo[mask]

    def split(qubits: tuple[int, ...]) -> list[tuple[int, ...]]:
        k = len(qubits)
        for size in range(1, k // 2 + 1):
            for picked in itertools.combinations(qubits, size):
                mask = sum(1 << q for q in picked)
                if ent(mask) == 0:
                    rest = tuple(q for q in qubits if q not in picked)
                    return split(picked) + split(rest)
        return [qubits]

    parts = split(tuple(range(t.n)))
    return sorted(parts, key=min)


def brute_force_depth(t: StabilizerTableau) -> int:
    """Largest factor size found by the brute-force partition search."""
    return max(len(p) for p in brute_force_partitions(t))
