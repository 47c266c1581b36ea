"""Unit tests for the bit-packed GF(2) layer."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pressgraph import (
    BitMatrix,
    BitRow,
    DimensionError,
    MatrixFormatError,
    gf2_dot,
    instructional_root,
    iter_support,
    leading_principal_minors,
    principal_submatrix,
    transpose_mul,
)
from conftest import dense_det2


def bitrows(max_len=64):
    return st.integers(1, max_len).flatmap(
        lambda n: st.builds(BitRow, st.just(n), st.integers(0, (1 << n) - 1))
    )


def random_matrix(rng, n):
    return BitMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))


# ---------------------------------------------------------------- BitRow


def test_bitrow_from_values_round_trip():
    r = BitRow.from_values([1, 0, 1, 1])
    assert r.length == 4
    assert r.bits == 0b1101
    assert r.values() == [1, 0, 1, 1]
    assert r.support() == (1, 3, 4)
    assert r.weight() == 3
    assert [r.bit(j) for j in (1, 2, 3, 4)] == [1, 0, 1, 1]


def test_bitrow_rejects_bad_input():
    with pytest.raises(ValueError):
        BitRow.from_values([0, 2])
    with pytest.raises(ValueError):
        BitRow(2, 0b100)  # bit above the declared length
    with pytest.raises(DimensionError):
        BitRow(-1, 0)
    with pytest.raises(IndexError):
        BitRow(3, 0b101).bit(4)
    with pytest.raises(IndexError):
        BitRow(3, 0b101).bit(0)


def test_bitrow_xor_requires_equal_length():
    assert (BitRow(3, 0b110) ^ BitRow(3, 0b011)).bits == 0b101
    with pytest.raises(DimensionError):
        BitRow(3, 0) ^ BitRow(4, 0)


def test_iter_support_orders_ascending():
    assert list(iter_support(0)) == []
    assert list(iter_support(0b101001)) == [1, 4, 6]


@given(bitrows())
@settings(max_examples=100)
def test_weight_matches_support(r):
    assert r.weight() == len(r.support())
    assert sum(r.values()) == r.weight()


# ---------------------------------------------------------------- gf2_dot


def test_gf2_dot_known_values():
    a = BitRow.from_values([1, 1, 0, 1])
    b = BitRow.from_values([1, 0, 1, 1])
    assert gf2_dot(a, b) == 0  # overlap {1, 4}, even
    assert gf2_dot(a, a) == 1  # weight 3, odd
    with pytest.raises(DimensionError):
        gf2_dot(BitRow(3, 0), BitRow(4, 0))


@given(st.integers(1, 48).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
    )
))
@settings(max_examples=150)
def test_gf2_dot_commutative_and_bilinear(nabc):
    n, a, b, c = nabc
    ra, rb, rc = BitRow(n, a), BitRow(n, b), BitRow(n, c)
    assert gf2_dot(ra, rb) == gf2_dot(rb, ra)
    # <a ^ b, c> = <a, c> + <b, c> over GF(2)
    assert gf2_dot(ra ^ rb, rc) == gf2_dot(ra, rc) ^ gf2_dot(rb, rc)


# ---------------------------------------------------------------- BitMatrix


def test_matrix_constructors_and_accessors():
    m = BitMatrix.from_rows([[0, 1], [1, 1]])
    assert m.bit(1, 2) == 1 and m.bit(1, 1) == 0
    assert m.row(2).values() == [1, 1]
    assert m.column(1).values() == [0, 1]
    assert BitMatrix.zero(3).row_bits == (0, 0, 0)
    assert BitMatrix.identity(3).row_bits == (1, 2, 4)
    assert BitMatrix.identity(3).is_symmetric()
    assert BitMatrix.identity(3).is_upper_triangular()
    assert not m.is_upper_triangular()
    assert m.to_dense() == [[0, 1], [1, 1]]


def test_matrix_validation():
    with pytest.raises(DimensionError):
        BitMatrix(2, (0,))
    with pytest.raises(ValueError):
        BitMatrix(2, (0b100, 0))
    with pytest.raises(DimensionError):
        BitMatrix.from_rows([[0, 1], [1]])
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[2]])
    with pytest.raises(IndexError):
        BitMatrix.identity(2).bit(3, 1)
    with pytest.raises(IndexError):
        BitMatrix.identity(2).row(0)
    with pytest.raises(IndexError):
        BitMatrix.identity(2).column(3)


def test_transpose_involution(example5):
    assert example5.transpose().transpose() == example5
    u = BitMatrix.from_rows([[1, 1], [0, 1]])
    assert u.transpose().row_bits == (0b01, 0b11)
    assert not u.is_symmetric()


def test_matrix_text_round_trip(example5):
    assert BitMatrix.from_text(example5.to_text()) == example5
    assert BitMatrix.from_text("0\n") == BitMatrix.zero(0)
    assert BitMatrix.zero(0).to_text() == "0\n"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "line 1"),
        ("x\n", "line 1"),
        ("-2\n", "line 1"),
        ("2\n10\n", "line 3"),
        ("2\n10\n012\n", "line 3"),
        ("1\n2\n", "line 2"),
        ("1\n1\n\nleftover\n", "after the matrix"),
    ],
)
def test_matrix_parse_errors_name_the_line(text, fragment):
    with pytest.raises(MatrixFormatError, match=fragment):
        BitMatrix.from_text(text)


# ------------------------------------------------------------ matrix ops


def test_transpose_mul_recovers_example(example5, example5_root):
    assert transpose_mul(example5_root) == example5


def test_transpose_mul_entry_is_column_dot(good4):
    prod = transpose_mul(good4)
    for i in range(1, 5):
        for j in range(1, 5):
            assert prod.bit(i, j) == gf2_dot(good4.column(i), good4.column(j))


@given(st.integers(1, 64), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_transpose_mul_always_symmetric(n, rng):
    assert transpose_mul(random_matrix(rng, n)).is_symmetric()


def test_leading_principal_minors_known_values():
    assert leading_principal_minors(BitMatrix.from_rows([[1, 1], [1, 0]])) == (1, 1)
    assert leading_principal_minors(BitMatrix.zero(3)) == (0, 0, 0)
    assert leading_principal_minors(BitMatrix.identity(4)) == (1, 1, 1, 1)
    assert leading_principal_minors(BitMatrix.zero(0)) == ()


@given(st.integers(1, 8), st.randoms(use_true_random=False))
@settings(max_examples=120)
def test_leading_principal_minors_match_dense_determinants(n, rng):
    m = random_matrix(rng, n)
    dense = m.to_dense()
    expect = tuple(
        dense_det2([row[: k + 1] for row in dense[: k + 1]]) for k in range(n)
    )
    assert leading_principal_minors(m) == expect


@given(st.integers(1, 32), st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_all_ones_minors_iff_natural_order_presses(n, rng):
    """All leading minors are 1 exactly when elimination in vertex order
    runs the full n steps with every diagonal it meets equal to 1."""
    bits = [rng.getrandbits(n) for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if (bits[i] >> j) & 1:
                bits[j] |= 1 << i
            else:
                bits[j] &= ~(1 << i)
    a = BitMatrix(n, tuple(bits))
    minors = leading_principal_minors(a)
    try:
        root = instructional_root(a)
        full = all(root.matrix.bit(k, k) == 1 for k in range(1, n + 1))
    except ValueError:
        full = False
    assert (minors == (1,) * n) == full


def test_principal_submatrix(example5):
    sub = principal_submatrix(example5, 2, 4)
    assert sub == BitMatrix.from_rows([[1, 0, 1], [0, 0, 0], [1, 0, 1]])
    assert principal_submatrix(example5, 1, 5) == example5
    assert principal_submatrix(example5, 3, 3) == BitMatrix.zero(1)
    with pytest.raises(IndexError):
        principal_submatrix(example5, 0, 3)
    with pytest.raises(IndexError):
        principal_submatrix(example5, 4, 6)
    with pytest.raises(IndexError):
        principal_submatrix(example5, 4, 2)
