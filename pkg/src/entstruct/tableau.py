"""Stabilizer tableaux: Clifford conjugation, Pauli measurement, membership.

A tableau is a value: operations return new instances and never mutate,
so tableaux can be shared freely across threads or processes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf2 import BitMatrix, rank_of_ints
from .pauli import PauliString, parse_pauli


class ValidationError(ValueError):
    """A generator list that does not describe a pure stabilizer state."""


class StabilizerTableau:
    """A pure n-qubit stabilizer state given by n signed commuting generators."""

    __slots__ = ("_gens", "_n", "_pivots")

    def __init__(self, generators: Iterable[PauliString], validate: bool = True) -> None:
        gens = tuple(generators)
        if not gens:
            raise ValidationError("empty generator list")
        n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValidationError("generators act on differing qubit counts")
        if len(gens) != n:
            raise ValidationError(
                f"{len(gens)} generators for {n} qubits; a pure state needs exactly n"
            )
        self._gens = gens
        self._n = n
        self._pivots: dict[int, int] | None = None
        if validate:
            self.validate()

    @property
    def n(self) -> int:
        return self._n

    @property
    def generators(self) -> tuple[PauliString, ...]:
        return self._gens

    def validate(self) -> None:
        """Raise ValidationError naming the first violated invariant."""
        gens = self._gens
        for i, g in enumerate(gens):
            if not g.is_hermitian:
                raise ValidationError(f"generator {i + 1} is not Hermitian")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not gens[i].commutes(gens[j]):
                    raise ValidationError(f"generators {i + 1} and {j + 1} anticommute")
        if self.bit_matrix().rank() != self._n:
            raise ValidationError("generators are linearly dependent over GF(2)")
        # Independence plus Hermitian generators already rules out -I in the
        # group: only the empty product has trivial x/z bits.

    def bit_matrix(self) -> BitMatrix:
        """n x 2n check matrix: x block in columns 0..n-1, z block after."""
        n = self._n
        return BitMatrix([g.x | (g.z << n) for g in self._gens], 2 * n)

    @classmethod
    def zero_state(cls, n: int) -> "StabilizerTableau":
        """|0...0>: one Z generator per qubit."""
        if n < 1:
            raise ValueError("need at least one qubit")
        return cls([PauliString.single(n, q, "Z") for q in range(n)], validate=False)

    # -- Clifford dynamics ------------------------------------------------

    def apply_clifford(self, gate: "CliffordGate | str", qubits: Sequence[int]) -> "StabilizerTableau":
        """Conjugate every generator by the gate acting on ``qubits``."""
        if isinstance(gate, str):
            gate = get_gate(gate)
        qubits = tuple(qubits)
        if len(qubits) != gate.arity:
            raise ValueError(f"gate {gate.name} needs {gate.arity} qubits, got {len(qubits)}")
        if len(set(qubits)) != len(qubits):
            raise ValueError("gate qubits must be distinct")
        for q in qubits:
            if not 0 <= q < self._n:
                raise ValueError(f"qubit {q} out of range 0..{self._n - 1}")
        table = gate.local_action
        arity = gate.arity
        new = []
        for g in self._gens:
            a = b = 0
            for k, q in enumerate(qubits):
                a |= ((g.x >> q) & 1) << k
                b |= ((g.z >> q) & 1) << k
            lx, lz, lph = table[a | (b << arity)]
            x, z = g.x, g.z
            for k, q in enumerate(qubits):
                x = (x & ~(1 << q)) | (((lx >> k) & 1) << q)
                z = (z & ~(1 << q)) | (((lz >> k) & 1) << q)
            new.append(PauliString(self._n, x, z, (g.i_phase + lph) % 4))
        return StabilizerTableau(new, validate=False)

    # -- Group membership and measurement ---------------------------------

    def _solver_pivots(self) -> dict[int, int]:
        # Echelonized rows over the low 2n bits, with combination tags in
        # the high bits, built once per tableau.
        if self._pivots is None:
            n = self._n
            width = 2 * n
            low_mask = (1 << width) - 1
            pivots: dict[int, int] = {}
            for i, g in enumerate(self._gens):
                row = g.x | (g.z << n) | (1 << (width + i))
                while True:
                    low = row & low_mask
                    if not low:
                        raise ValidationError("generators are linearly dependent over GF(2)")
                    bit = low.bit_length() - 1
                    pivot = pivots.get(bit)
                    if pivot is None:
                        pivots[bit] = row
                        break
                    row ^= pivot
            self._pivots = pivots
        return self._pivots

    def in_group(self, p: PauliString) -> int | None:
        """Membership of ±p in the stabilizer group.

        Returns +1 if p itself is a group element, -1 if -p is, and None
        if neither is.
        """
        if p.n != self._n:
            raise ValueError("operator acts on a different register")
        n = self._n
        width = 2 * n
        low_mask = (1 << width) - 1
        pivots = self._solver_pivots()
        row = p.x | (p.z << n)
        while row & low_mask:
            bit = (row & low_mask).bit_length() - 1
            pivot = pivots.get(bit)
            if pivot is None:
                return None
            row ^= pivot
        combo = row >> width
        acc = PauliString.identity(n)
        i = 0
        while combo:
            if combo & 1:
                acc = acc * self._gens[i]
            combo >>= 1
            i += 1
        assert acc.x == p.x and acc.z == p.z
        return 1 if acc.i_phase == p.i_phase else -1

    def measure_pauli(self, p: PauliString, rng) -> tuple["StabilizerTableau", int]:
        """Projective measurement of a Hermitian Pauli.

        Returns (post-measurement tableau, outcome ±1).  If ±p is already
        in the group the state is unchanged and the outcome deterministic;
        otherwise the outcome is a fair coin from ``rng``.
        """
        if p.n != self._n:
            raise ValueError("operator acts on a different register")
        if p.weight == 0:
            raise ValueError("cannot measure the identity operator")
        if not p.is_hermitian:
            raise ValueError("measured operator must be Hermitian")
        anti = [i for i, g in enumerate(self._gens) if not g.commutes(p)]
        if not anti:
            outcome = self.in_group(p)
            assert outcome is not None  # the group is its own centralizer
            return self, outcome
        outcome = 1 if int(rng.integers(2)) == 0 else -1
        pivot = self._gens[anti[0]]
        new = list(self._gens)
        for i in anti[1:]:
            new[i] = new[i] * pivot
        new[anti[0]] = p if outcome == 1 else p.negated()
        return StabilizerTableau(new, validate=False), outcome

    def group_equal(self, other: "StabilizerTableau") -> bool:
        """Same stabilizer group (state equality, gauge-independent)."""
        if self._n != other._n:
            return False
        return all(self.in_group(g) == 1 for g in other._gens)

    # -- Text format -------------------------------------------------------

    def to_text(self) -> str:
        """One generator per line in sparse Pauli syntax."""
        return "\n".join(g.sparse_text() for g in self._gens) + "\n"

    @classmethod
    def from_text(cls, text: str, validate: bool = True) -> "StabilizerTableau":
        """Parse the text tableau format: one generator per line, ``#``
        comments and blank lines ignored, qubit count = number of lines."""
        lines = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                lines.append((lineno, body))
        if not lines:
            raise ValidationError("no generator lines found")
        n = len(lines)
        gens = []
        for lineno, body in lines:
            try:
                gens.append(parse_pauli(body, n))
            except ValueError as exc:
                raise ValidationError(f"line {lineno}: {exc}") from exc
        return cls(gens, validate=validate)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StabilizerTableau):
            return NotImplemented
        return self._gens == other._gens

    def __hash__(self) -> int:
        return hash(self._gens)

    def __repr__(self) -> str:
        return f"StabilizerTableau(n={self._n})"


class CliffordGate:
    """A small Clifford unitary given by the images of each X_k and Z_k.

    The images must satisfy the symplectic relations: image_x[k]
    anticommutes with image_z[k] and commutes with every other image.
    A per-gate lookup table maps each local x/z pattern to its conjugated
    pattern, so application is table-driven.
    """

    __slots__ = ("name", "arity", "image_x", "image_z", "local_action")

    def __init__(self, name: str, image_x: Iterable[PauliString], image_z: Iterable[PauliString]) -> None:
        image_x = tuple(image_x)
        image_z = tuple(image_z)
        arity = len(image_x)
        if arity == 0 or len(image_z) != arity:
            raise ValueError("need one X image and one Z image per gate qubit")
        for p in image_x + image_z:
            if p.n != arity:
                raise ValueError("gate images must act on the gate's own qubit count")
            if not p.is_hermitian:
                raise ValueError("gate images must be Hermitian (±1 sign)")
        for i in range(arity):
            if image_x[i].commutes(image_z[i]):
                raise ValueError("images do not satisfy the symplectic relations")
            for j in range(arity):
                if j != i and not image_x[i].commutes(image_z[j]):
                    raise ValueError("images do not satisfy the symplectic relations")
                if j > i and not (
                    image_x[i].commutes(image_x[j]) and image_z[i].commutes(image_z[j])
                ):
                    raise ValueError("images do not satisfy the symplectic relations")
        self.name = name
        self.arity = arity
        self.image_x = image_x
        self.image_z = image_z
        self.local_action = self._build_table()

    def _build_table(self) -> tuple[tuple[int, int, int], ...]:
        table = []
        for code in range(1 << (2 * self.arity)):
            a = code & ((1 << self.arity) - 1)
            b = code >> self.arity
            acc = PauliString.identity(self.arity)
            for k in range(self.arity):
                if (a >> k) & 1:
                    acc = acc * self.image_x[k]
                if (b >> k) & 1:
                    acc = acc * self.image_z[k]
            table.append((acc.x, acc.z, acc.i_phase))
        return tuple(table)

    @classmethod
    def from_symplectic(
        cls,
        name: str,
        rows: Sequence[Sequence[int]],
        signs: Sequence[int] | None = None,
    ) -> "CliffordGate":
        """Composite gate from a symplectic matrix plus per-image signs.

        ``rows`` lists the images of X_1..X_k, Z_1..Z_k as 0/1 vectors of
        length 2k (x bits then z bits).  A non-symplectic matrix raises.
        """
        rows = [list(r) for r in rows]
        k, rem = divmod(len(rows), 2)
        if rem or k == 0:
            raise ValueError("need 2k image rows")
        if signs is None:
            signs = [1] * len(rows)
        imgs = []
        for r, s in zip(rows, signs):
            if len(r) != 2 * k:
                raise ValueError("image rows must have length 2k")
            x = sum(bit << i for i, bit in enumerate(r[:k]))
            z = sum(bit << i for i, bit in enumerate(r[k:]))
            imgs.append(PauliString.make(k, x, z, s))
        return cls(name, imgs[:k], imgs[k:])

    def __repr__(self) -> str:
        return f"CliffordGate({self.name!r}, arity={self.arity})"


def _img(letters: str, sign: int = 1) -> PauliString:
    return PauliString.from_letters(letters, sign)


GATES: dict[str, CliffordGate] = {
    "H": CliffordGate("H", (_img("Z"),), (_img("X"),)),
    "S": CliffordGate("S", (_img("Y"),), (_img("Z"),)),
    "CNOT": CliffordGate("CNOT", (_img("XX"), _img("IX")), (_img("ZI"), _img("ZZ"))),
    "CZ": CliffordGate("CZ", (_img("XZ"), _img("ZX")), (_img("ZI"), _img("IZ"))),
    "SWAP": CliffordGate("SWAP", (_img("IX"), _img("XI")), (_img("IZ"), _img("ZI"))),
}
GATES["CX"] = GATES["CNOT"]


def get_gate(name: str) -> CliffordGate:
    try:
        return GATES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown gate {name!r}; supported: {sorted(GATES)}") from None


def _symplectic_commutes(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return ((p[0] & q[1]).bit_count() + (p[1] & q[0]).bit_count()) % 2 == 0


def random_clifford_gate(num_qubits: int, rng) -> CliffordGate:
    """Uniformly random Clifford on ``num_qubits`` qubits, signs included.

    Sequential rejection-free construction: pick the image of X_1 among
    all non-identity Paulis, then an anticommuting partner for Z_1, then
    images for the next qubit inside the commutant, and so on.  Each step
    is a uniform choice over the valid candidates, which makes the product
    measure uniform over the Clifford group (mod global phase).
    """
    all_paulis = [
        (x, z)
        for x in range(1 << num_qubits)
        for z in range(1 << num_qubits)
        if (x, z) != (0, 0)
    ]
    chosen: list[tuple[int, int]] = []  # X_1, Z_1, X_2, Z_2, ...
    signs: list[int] = []
    for k in range(num_qubits):
        for partner in (None, 2 * k):
            cands = []
            for p in all_paulis:
                ok = True
                for j, c in enumerate(chosen):
                    same = _symplectic_commutes(p, c)
                    want_same = j != partner
                    if same != want_same:
                        ok = False
                        break
                if ok:
                    cands.append(p)
            chosen.append(cands[int(rng.integers(len(cands)))])
            signs.append(-1 if int(rng.integers(2)) else 1)
    imgs = [PauliString.make(num_qubits, x, z, s) for (x, z), s in zip(chosen, signs)]
    return CliffordGate(f"random{num_qubits}q", imgs[0::2], imgs[1::2])


def random_two_qubit_clifford(rng) -> CliffordGate:
    return random_clifford_gate(2, rng)


def recombine_generators(t: StabilizerTableau, rng) -> StabilizerTableau:
    """Random gauge transformation: replace the generators by an invertible
    GF(2) recombination.  The stabilizer group (and state) is unchanged."""
    n = t.n
    while True:
        combos = [int(rng.integers(1, 1 << n)) for _ in range(n)]
        if rank_of_ints(combos) == n:
            break
    new = []
    for combo in combos:
        acc = None
        i = 0
        while combo:
            if combo & 1:
                g = t.generators[i]
                acc = g if acc is None else acc * g
            combo >>= 1
            i += 1
        new.append(acc)
    return StabilizerTableau(new, validate=False)
