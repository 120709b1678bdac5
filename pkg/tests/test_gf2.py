import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entstruct.gf2 import BitMatrix, rank_of_ints


def bits(*rows):
    return BitMatrix.from_bits([[int(c) for c in r] for r in rows])


def test_rank_hand_example():
    # rows 0011 / 1100 / 0001 written column-0-first
    m = bits("0011", "1100", "0001")
    assert m.rank() == 3


def test_rank_zero_matrix():
    for nrows, ncols in [(0, 0), (3, 0), (0, 5), (4, 7)]:
        m = BitMatrix([0] * nrows, ncols)
        assert m.rank() == 0


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_rank_identity(n):
    m = BitMatrix([1 << i for i in range(n)], n)
    assert m.rank() == n


def test_row_reduce_hand_examples():
    assert bits("11", "01").row_reduce() == bits("10", "01")
    assert bits("11", "11").row_reduce() == bits("11", "00")


matrices = st.integers(1, 8).flatmap(
    lambda c: st.lists(st.integers(0, (1 << c) - 1), min_size=0, max_size=10).map(
        lambda rows: BitMatrix(rows, c)
    )
)


@given(matrices)
def test_row_reduce_preserves_rank(m):
    assert m.row_reduce().rank() == m.rank()


@given(matrices)
def test_row_reduce_shape_and_structure(m):
    r = m.row_reduce()
    assert (r.nrows, r.ncols) == (m.nrows, m.ncols)
    pivots = [(row & -row).bit_length() - 1 for row in r.rows if row]
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    assert all(v == 0 for v in r.rows[len(pivots):])
    # pivot columns are cleared in every other row
    for col, row in zip(pivots, r.rows):
        for other in r.rows:
            if other != row:
                assert not (other >> col) & 1
    # same row space: stacking changes nothing
    assert rank_of_ints(m.rows + r.rows) == m.rank()


@given(matrices)
def test_row_reduce_idempotent(m):
    r = m.row_reduce()
    assert r.row_reduce() == r


@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_row_ops(m, pyrand):
    rows = list(m.rows)
    for _ in range(10):
        if not rows:
            break
        op = pyrand.randrange(3)
        i = pyrand.randrange(len(rows))
        j = pyrand.randrange(len(rows))
        if op == 0:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 1 and i != j:
            rows[i] ^= rows[j]
        else:
            cols = list(range(m.ncols))
            pyrand.shuffle(cols)
            rows = BitMatrix(rows, m.ncols).select_columns(cols).rows
    assert rank_of_ints(rows) == m.rank()


@given(matrices)
def test_rank_bounds(m):
    assert 0 <= m.rank() <= min(m.nrows, m.ncols)


@given(matrices)
def test_select_all_columns_identity(m):
    assert m.select_columns(range(m.ncols)) == m
    assert m.select_columns(range(m.ncols)).rank() == m.rank()


@given(matrices)
def test_select_no_columns(m):
    empty = m.select_columns([])
    assert (empty.nrows, empty.ncols) == (m.nrows, 0)
    assert empty.rank() == 0


def test_select_columns_errors():
    m = bits("101", "010")
    with pytest.raises(ValueError):
        m.select_columns([0, 3])
    with pytest.raises(ValueError):
        m.select_columns([1, 1])


def test_select_columns_reorders():
    m = bits("100", "010")
    assert m.select_columns([2, 0]) == bits("01", "00")


def test_constructor_rejects_stray_bits():
    with pytest.raises(ValueError):
        BitMatrix([0b100], 2)


def test_from_bits_round_trip():
    m = bits("1010", "0110")
    assert BitMatrix.from_bits(m.to_bits()) == m


def test_fig1_reduced_pair_matrix():
    # x|z columns of qubits 1 and 2 of the four-qubit worked example
    m = BitMatrix.from_bits(
        [[0, 0, 1, 1], [0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1]]
    )
    assert m.rank() == 3
