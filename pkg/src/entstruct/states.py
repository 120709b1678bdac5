"""Constructors for named stabilizer states: GHZ, 1D cluster states, code
states, and the two documented worked examples (``fig1``, ``fig2``).

The ten-qubit ``fig2`` generator list is shipped verbatim even though it
is defective (two entries are identical, so only 9 of 10 generators are
independent).  A brute-force repair search is provided instead of any
silent fix.
"""

from __future__ import annotations

from .clustering import Diagram, DiagramNode, build_diagram
from .pauli import PauliString, parse_pauli
from .tableau import StabilizerTableau, ValidationError


def ghz(n: int) -> StabilizerTableau:
    """GHZ state: a ZZ chain plus the all-X generator."""
    if n < 2:
        raise ValueError("GHZ state needs at least 2 qubits")
    gens = [PauliString.make(n, 0, 0b11 << i) for i in range(n - 1)]
    gens.append(PauliString.make(n, (1 << n) - 1, 0))
    return StabilizerTableau(gens)


def cluster1d(n: int, boundary: str = "pbc") -> StabilizerTableau:
    """1D cluster state, Z X Z generators; ``boundary`` is ``pbc`` or ``obc``.

    With open boundaries the end generators degrade to X1 Z2 and
    Z(n-1) Xn, which is what makes the two ends locally probeable.
    """
    if n < 3:
        raise ValueError("1D cluster state needs at least 3 qubits")
    if boundary not in ("pbc", "obc"):
        raise ValueError(f"boundary must be 'pbc' or 'obc', got {boundary!r}")
    gens = []
    for j in range(n):
        x = 1 << j
        if boundary == "obc" and j == 0:
            z = 1 << 1
        elif boundary == "obc" and j == n - 1:
            z = 1 << (n - 2)
        else:
            z = (1 << ((j - 1) % n)) | (1 << ((j + 1) % n))
        gens.append(PauliString.make(n, x, z))
    return StabilizerTableau(gens)


def five_qubit_code_logical_x() -> StabilizerTableau:
    """The [[5,1,3]] code with the logical qubit in the +1 eigenstate of
    logical X: four cyclic XZZXI checks plus XXXXX."""
    rows = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "XXXXX"]
    return StabilizerTableau([PauliString.from_letters(r) for r in rows])


def steane_code_logical_x() -> StabilizerTableau:
    """The [[7,1,3]] CSS code with the logical qubit in the +1 eigenstate
    of logical X: three X checks, three Z checks, and X on all qubits."""
    checks = ((0, 2, 4, 6), (1, 2, 5, 6), (3, 4, 5, 6))
    gens = []
    for sup in checks:
        gens.append(PauliString.make(7, sum(1 << q for q in sup), 0))
    for sup in checks:
        gens.append(PauliString.make(7, 0, sum(1 << q for q in sup)))
    gens.append(PauliString.make(7, 0b1111111, 0))
    return StabilizerTableau(gens)


# Signs on the last two generators are pinned by the documented amplitude
# list |1111> + |0011> + |1100> - |0000>; the diagram itself is
# sign-independent.
FIG1_GENERATORS = ("Z1 Z2", "Z3 Z4", "-X1 X2 Z3", "-Z2 X3 X4")

# Verbatim ten-qubit list; entries 3 and 4 are identical (the defect).
FIG2_GENERATORS = (
    "Y2 Y3 Y4",
    "Y4 Y5 X6",
    "X1 Y2 Y5 X6",
    "X1 Y2 Y5 X6",
    "Y1 X2 Z3 Z5 Z6",
    "Y2 Y3 X5 Y6",
    "X7 X8 X9 X10",
    "Z7 Z9",
    "Z8 Z9",
    "Z8 Z10",
)

FIG2_DEFECT_NOTE = (
    "the published ten-qubit generator list repeats one generator "
    "(entries 3 and 4 are identical), leaving only 9 independent generators"
)


def example_state(name: str) -> StabilizerTableau:
    """The documented worked examples.

    ``fig1`` is the four-qubit state with amplitudes
    |1111> + |0011> + |1100> - |0000| (up to normalization).  ``fig2``
    returns the defective ten-qubit list unvalidated; calling
    ``validate()`` on it raises, by design.
    """
    if name == "fig1":
        return StabilizerTableau([parse_pauli(s, 4) for s in FIG1_GENERATORS])
    if name == "fig2":
        return StabilizerTableau(
            [parse_pauli(s, 10) for s in FIG2_GENERATORS], validate=False
        )
    raise ValueError(f"unknown example {name!r}; choices: fig1, fig2")


def fig2_target_diagram() -> Diagram:
    """The documented diagram of the ten-qubit example, built by hand.

    Qubits 7-10 form one decoupled 2-cluster; qubits 1-6 nest as
    [[(1,3),2],[4,(5,6)]] under successive 2-clusters.  Usable for metric
    checks even though the published generator list cannot reproduce it.
    """
    leaf = lambda q: DiagramNode(frozenset((q,)))  # noqa: E731
    c13 = DiagramNode(frozenset((0, 2)), (leaf(0), leaf(2)), w=2)
    c123 = DiagramNode(frozenset((0, 1, 2)), (c13, leaf(1)), w=2)
    c56 = DiagramNode(frozenset((4, 5)), (leaf(4), leaf(5)), w=2)
    c456 = DiagramNode(frozenset((3, 4, 5)), (leaf(3), c56), w=2)
    left = DiagramNode(frozenset(range(6)), (c123, c456), w=2, decoupled=True)
    right = DiagramNode(
        frozenset((6, 7, 8, 9)), tuple(leaf(q) for q in (6, 7, 8, 9)), w=2, decoupled=True
    )
    first_round = tuple(
        (pair, 2)
        for pair in ((0, 2), (4, 5), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9))
    )
    return Diagram(10, (left, right), first_round)


def search_fig2_completions() -> list[PauliString]:
    """Brute-force search for a tenth generator that repairs the ten-qubit
    list and reproduces the documented diagram.

    Scans every non-identity Pauli on qubits 1-6 (positive sign; the
    diagram is sign-independent) that commutes with the nine distinct
    published generators and is independent of them, and keeps those whose
    completed state clusters into the target diagram.
    """
    unique = []
    for s in FIG2_GENERATORS:
        p = parse_pauli(s, 10)
        if p not in unique:
            unique.append(p)
    target = fig2_target_diagram()
    found = []
    for x in range(64):
        for z in range(64):
            if (x, z) == (0, 0):
                continue
            cand = PauliString.make(10, x, z)
            if not all(cand.commutes(g) for g in unique):
                continue
            try:
                t = StabilizerTableau(unique + [cand])
            except ValidationError:
                continue
            if build_diagram(t) == target:
                found.append(cand)
    return found


def fig2_completed() -> StabilizerTableau:
    """The ten-qubit example repaired with the first tenth generator the
    search finds; raises LookupError if no completion exists."""
    completions = search_fig2_completions()
    if not completions:
        raise LookupError("no commuting tenth generator reproduces the target diagram")
    unique = []
    for s in FIG2_GENERATORS:
        p = parse_pauli(s, 10)
        if p not in unique:
            unique.append(p)
    return StabilizerTableau(unique + [completions[0]])
