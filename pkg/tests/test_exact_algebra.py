from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrlie.errors import HRError
from hrlie.exact_algebra import (
    COMPLEX, QUATERNION, REAL, I, J, K, ExactMatrix, Quaternion, anticommutator, block,
    block_diag, complexify, conj_transpose, ipq, jn, kron, mat_mul, matrix_from_json,
    matrix_to_json, nullspace, rank, realify,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
quats = st.builds(Quaternion, small, small, small, small)


def matrices(field, n, m=None):
    m = n if m is None else m
    elem = small if field == REAL else (
        st.builds(Quaternion, small, small) if field == COMPLEX else quats)
    return st.lists(st.lists(elem, min_size=m, max_size=m), min_size=n, max_size=n).map(
        lambda rows: ExactMatrix.from_rows(field, rows))


def test_hamilton_relations():
    assert I * I == J * J == K * K == Quaternion(-1)
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K


@given(quats, quats, quats)
def test_quaternion_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).norm() == a.norm() * b.norm()


@given(quats)
def test_quaternion_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == Quaternion(1)


@settings(max_examples=40)
@given(matrices(QUATERNION, 2), matrices(QUATERNION, 2), matrices(QUATERNION, 2))
def test_matrix_product_is_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@settings(max_examples=40)
@given(matrices(QUATERNION, 2), matrices(QUATERNION, 2))
def test_complexify_and_realify_are_multiplicative(a, b):
    ab = mat_mul(a, b)
    assert complexify(ab) == mat_mul(complexify(a), complexify(b))
    assert realify(complexify(ab)) == mat_mul(realify(complexify(a)), realify(complexify(b)))


@settings(max_examples=40)
@given(matrices(QUATERNION, 2))
def test_complexify_respects_adjoint(a):
    assert complexify(conj_transpose(a)) == conj_transpose(complexify(a))


@settings(max_examples=30)
@given(matrices(REAL, 2), matrices(REAL, 2), matrices(REAL, 2), matrices(REAL, 2))
def test_kron_mixed_product(a, b, c, d):
    assert mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d))


@settings(max_examples=60)
@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=0, max_size=4))
def test_nullspace_is_kernel_of_full_dimension(rows):
    eqs = [{i: x for i, x in enumerate(r) if x} for r in rows]
    basis = nullspace(eqs, 5)
    for v in basis:
        for eq in eqs:
            assert sum(c * v.get(i, 0) for i, c in eq.items()) == 0
    assert rank(basis) == len(basis)
    assert len(basis) == 5 - rank(eqs)


def test_standard_forms():
    j = jn(2)
    assert mat_mul(j, j) == -ExactMatrix.identity(REAL, 4)
    i21 = ipq(2, 1)
    assert mat_mul(i21, i21) == ExactMatrix.identity(REAL, 3)
    assert i21.trace() == 1


def test_blocks():
    a = ExactMatrix.identity(REAL, 1)
    z = ExactMatrix.zeros(REAL, 1)
    assert block([[a, z], [z, a]]) == ExactMatrix.identity(REAL, 2)
    assert block_diag(a, a.scale(2)).trace() == 3


def test_anticommutator_of_pauli_matrices():
    s1 = ExactMatrix.from_rows(REAL, [[0, 1], [1, 0]])
    s3 = ExactMatrix.from_rows(REAL, [[1, 0], [0, -1]])
    assert anticommutator(s1, s3).is_zero()
    assert anticommutator(s1, s1) == ExactMatrix.scalar(REAL, 2, 2)


def test_json_round_trip():
    m = ExactMatrix.from_rows(QUATERNION, [[Quaternion(1, Fraction(1, 2)), J], [K, 0]])
    assert matrix_from_json(matrix_to_json(m)) == m


def test_dimension_mismatch():
    with pytest.raises(HRError):
        mat_mul(ExactMatrix.identity(REAL, 2), ExactMatrix.identity(REAL, 3))
