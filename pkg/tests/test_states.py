import itertools

import numpy as np
import pytest

from entstruct import (
    StabilizerTableau,
    ValidationError,
    build_diagram,
    cluster1d,
    entropy_bits,
    example_state,
    five_qubit_code_logical_x,
    ghz,
    metrics_report,
    steane_code_logical_x,
)
from entstruct import oracle
from entstruct.pauli import parse_pauli
from entstruct.states import (
    FIG2_DEFECT_NOTE,
    FIG2_GENERATORS,
    fig2_completed,
    fig2_target_diagram,
    search_fig2_completions,
)


def test_ghz_generators():
    t = ghz(4)
    assert t.generators[0] == parse_pauli("Z1 Z2", 4)
    assert t.generators[2] == parse_pauli("Z3 Z4", 4)
    assert t.generators[3] == parse_pauli("XXXX", 4)


def test_ghz_bell_pair_entropy():
    assert entropy_bits(ghz(2), [0]) == 1


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_ghz_min_weight_always_two(n):
    assert metrics_report(build_diagram(ghz(n))).min_weight == 2


def test_cluster_obc_end_generators():
    t = cluster1d(8, "obc")
    assert t.generators[0] == parse_pauli("X1 Z2", 8)
    assert t.generators[7] == parse_pauli("Z7 X8", 8)
    assert "X1 Z2" in t.to_text().splitlines()


def test_cluster_pbc_wraps():
    t = cluster1d(8, "pbc")
    assert t.generators[0] == parse_pauli("Z8 X1 Z2", 8)


def test_constructor_validation():
    for t in (ghz(5), cluster1d(7, "pbc"), cluster1d(7, "obc"),
              five_qubit_code_logical_x(), steane_code_logical_x(),
              example_state("fig1")):
        t.validate()


def test_constructor_errors():
    with pytest.raises(ValueError):
        ghz(1)
    with pytest.raises(ValueError):
        cluster1d(2)
    with pytest.raises(ValueError):
        cluster1d(5, "torus")
    with pytest.raises(ValueError):
        example_state("fig3")


def test_constructors_are_pure():
    assert ghz(6) == ghz(6)
    assert cluster1d(6, "obc") == cluster1d(6, "obc")


def test_fig1_amplitudes_match_documentation():
    # |1111> + |0011> + |1100> - |0000>, qubit 1 leftmost, up to global phase
    v = oracle.tableau_to_state(example_state("fig1"))
    expected = np.zeros(16, dtype=complex)
    for ket, amp in (("1111", 1), ("0011", 1), ("1100", 1), ("0000", -1)):
        idx = sum(int(c) << j for j, c in enumerate(ket))
        expected[idx] = amp / 2.0
    overlap = abs(np.vdot(expected, v))
    assert overlap == pytest.approx(1.0, abs=1e-9)


def test_code_states_are_two_uniform():
    for t in (five_qubit_code_logical_x(), steane_code_logical_x()):
        for pair in itertools.combinations(range(t.n), 2):
            assert entropy_bits(t, pair) == 2


def test_fig2_ships_verbatim_and_defective():
    t = example_state("fig2")
    assert t.n == 10
    assert [g.sparse_text() for g in t.generators] == list(FIG2_GENERATORS)
    assert t.generators[2] == t.generators[3]  # the published duplicate
    with pytest.raises(ValidationError, match="dependent"):
        t.validate()
    assert "9 independent" in FIG2_DEFECT_NOTE


def test_fig2_completion_search_finds_repairs():
    found = search_fig2_completions()
    assert found, "expected at least one valid tenth generator"
    # every candidate acts only on the first six qubits
    for cand in found:
        assert max(cand.support) <= 5


def test_fig2_completed_reproduces_target():
    t = fig2_completed()
    t.validate()
    assert build_diagram(t) == fig2_target_diagram()
    m = metrics_report(build_diagram(t))
    assert m.depth == 6
    assert m.layers_per_root == (3, 1)
    assert m.min_weight == 2


def test_five_qubit_code_has_weight3_group_elements():
    t = five_qubit_code_logical_x()
    weights = set()
    for combo_bits in range(1, 1 << 5):
        acc = None
        for i in range(5):
            if (combo_bits >> i) & 1:
                g = t.generators[i]
                acc = g if acc is None else acc * g
        weights.add(acc.weight)
    assert min(weights) == 3  # distance-3 code state, 2-uniform
