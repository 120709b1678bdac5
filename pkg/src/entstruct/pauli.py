"""Signed Pauli strings encoded as x/z bit masks.

Internally an operator is ``i^phase * X^x Z^z`` with one x and one z bit
per qubit (bit ``j`` = qubit ``j``, 0-based).  Hermiticity ties the phase
parity to the number of Y positions, so every instance has a definite
sign of +1 or -1.  Text forms use 1-based qubit labels.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTER_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class PauliParseError(ValueError):
    """Raised when a Pauli-string text cannot be parsed."""


@dataclass(frozen=True, slots=True)
class PauliString:
    """A Pauli operator on ``n`` qubits.

    Products of Hermitian strings can pick up ±i (X·Z = -iY), so the
    phase is unrestricted here; ``sign`` demands Hermiticity and all
    parse/make constructors produce Hermitian strings.
    """

    n: int
    x: int
    z: int
    i_phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << self.n) - 1
        if not (0 <= self.x <= mask and 0 <= self.z <= mask):
            raise ValueError("x/z bits outside the qubit range")
        if not 0 <= self.i_phase < 4:
            raise ValueError("i_phase must be in 0..3")

    @classmethod
    def make(cls, n: int, x: int, z: int, sign: int = 1) -> "PauliString":
        """Construct from bit masks and an explicit ±1 sign."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        phase = ((x & z).bit_count() + (0 if sign == 1 else 2)) % 4
        return cls(n, x, z, phase)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str, sign: int = 1) -> "PauliString":
        """Build from a dense letter string; position j acts on qubit j."""
        x = z = 0
        for j, ch in enumerate(letters):
            try:
                a, b = _LETTER_TO_XZ[ch]
            except KeyError:
                raise PauliParseError(f"invalid letter {ch!r} at position {j + 1}") from None
            x |= a << j
            z |= b << j
        return cls.make(len(letters), x, z, sign)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str, sign: int = 1) -> "PauliString":
        """One-qubit Pauli embedded in an n-qubit register (0-based qubit)."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range 0..{n - 1}")
        a, b = _LETTER_TO_XZ[letter]
        if (a, b) == (0, 0):
            raise ValueError("use PauliString.identity for the identity")
        return cls.make(n, a << qubit, b << qubit, sign)

    @property
    def is_hermitian(self) -> bool:
        return (self.i_phase - (self.x & self.z).bit_count()) % 2 == 0

    @property
    def sign(self) -> int:
        d = (self.i_phase - (self.x & self.z).bit_count()) % 4
        if d == 0:
            return 1
        if d == 2:
            return -1
        raise ValueError("operator is not Hermitian, it has no ±1 sign")

    @property
    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        bits = self.x | self.z
        return tuple(j for j in range(self.n) if (bits >> j) & 1)

    def commutes(self, other: "PauliString") -> bool:
        if self.n != other.n:
            raise ValueError("operators act on different registers")
        anti = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return anti % 2 == 0

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise ValueError("operators act on different registers")
        phase = (self.i_phase + other.i_phase + 2 * (self.z & other.x).bit_count()) % 4
        return PauliString(self.n, self.x ^ other.x, self.z ^ other.z, phase)

    def negated(self) -> "PauliString":
        return PauliString(self.n, self.x, self.z, (self.i_phase + 2) % 4)

    def letter(self, qubit: int) -> str:
        return _XZ_TO_LETTER[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    def dense_text(self) -> str:
        body = "".join(self.letter(j) for j in range(self.n))
        return ("-" if self.sign < 0 else "+") + body

    def sparse_text(self) -> str:
        """Compact 1-based form, e.g. ``-X1 Z3``; the identity renders as ``+I``."""
        toks = [f"{self.letter(j)}{j + 1}" for j in self.support]
        body = " ".join(toks) if toks else "I"
        return ("-" if self.sign < 0 else "") + body

    def __str__(self) -> str:
        return self.sparse_text()


def parse_pauli(text: str, n: int) -> PauliString:
    """Parse dense (``+XIZZY``) or sparse (``-X1 Z3 Y4``) Pauli text.

    Sparse qubit labels are 1-based.  Y sets both the x and the z bit.
    """
    raw = text.strip()
    if not raw:
        raise PauliParseError("empty Pauli string")
    sign = 1
    body = raw
    if body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        body = body[1:].strip()
    if not body:
        raise PauliParseError("sign without Pauli letters")
    if any(ch.isdigit() for ch in body):
        return _parse_sparse(body, n, sign)
    return _parse_dense(body, n, sign)


def _parse_dense(body: str, n: int, sign: int) -> PauliString:
    if len(body) != n:
        raise PauliParseError(f"dense Pauli has {len(body)} letters, expected {n}")
    x = z = 0
    for j, ch in enumerate(body):
        pair = _LETTER_TO_XZ.get(ch)
        if pair is None:
            raise PauliParseError(f"invalid letter {ch!r} at position {j + 1}")
        x |= pair[0] << j
        z |= pair[1] << j
    return PauliString.make(n, x, z, sign)


def _parse_sparse(body: str, n: int, sign: int) -> PauliString:
    x = z = 0
    seen: set[int] = set()
    for tok in body.split():
        letter, idx_text = tok[:1], tok[1:]
        if letter not in ("X", "Y", "Z") or not idx_text.isdigit():
            raise PauliParseError(f"bad token {tok!r}; expected e.g. X3")
        idx = int(idx_text)
        if not 1 <= idx <= n:
            raise PauliParseError(f"qubit {idx} out of range 1..{n} in token {tok!r}")
        if idx in seen:
            raise PauliParseError(f"duplicate qubit {idx} in token {tok!r}")
        seen.add(idx)
        a, b = _LETTER_TO_XZ[letter]
        x |= a << (idx - 1)
        z |= b << (idx - 1)
    return PauliString.make(n, x, z, sign)
