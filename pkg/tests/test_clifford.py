import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrlie.clifford import (
    CliffordElement, blade_product, bracket, certify_type, cl_mul, clifford_type,
    complexified_even_closed_form, eta, eta_check, even_clifford_type, grade_involution,
    p_part_basis_n1, spin_dimension, spin_lie_basis, transpose_antiinvolution,
)
from hrlie.errors import HRError

SIGS = [(p, n - p) for n in range(0, 6) for p in range(n + 1)]


def test_blade_products_are_associative():
    for p, q in SIGS:
        top = 1 << (p + q)
        for a in range(top):
            for b in range(top):
                sab, ab = blade_product(a, b, p, q)
                for c in range(top):
                    s1, x = blade_product(ab, c, p, q)
                    sbc, bc = blade_product(b, c, p, q)
                    s2, y = blade_product(a, bc, p, q)
                    assert x == y and sab * s1 == sbc * s2


@pytest.mark.parametrize("sig", SIGS)
def test_involution_laws(sig):
    top = 1 << sum(sig)
    blades = [CliffordElement(sig, {m: 1}) for m in range(top)]
    for x in blades:
        assert grade_involution(grade_involution(x)) == x
        assert transpose_antiinvolution(transpose_antiinvolution(x)) == x
        for y in blades:
            xy = cl_mul(x, y)
            assert grade_involution(xy) == cl_mul(grade_involution(x), grade_involution(y))
            assert transpose_antiinvolution(xy) == cl_mul(transpose_antiinvolution(y),
                                                          transpose_antiinvolution(x))


def test_generator_relations():
    for p, q in SIGS:
        for i in range(1, p + q + 1):
            e = CliffordElement.gen((p, q), i)
            assert cl_mul(e, e) == CliffordElement.scalar((p, q), 1 if i <= p else -1)


@pytest.mark.parametrize("n", range(1, 7))
def test_eta_is_an_isomorphism_onto_the_even_part(n):
    r = eta_check(n)
    assert r["pass"], r["checks"]


def test_eta_sends_vectors_to_p():
    n = 4
    images = [eta(CliffordElement.gen((n, 0), i)) for i in range(1, n + 1)]
    assert images == p_part_basis_n1(n)


def test_eta_needs_a_definite_source():
    with pytest.raises(HRError):
        eta(CliffordElement.gen((2, 1), 1))


def test_spin_algebra_closes_under_bracket():
    basis = spin_lie_basis(3, 1)
    allowed = {frozenset(b.coeffs) for b in basis}
    for x in basis:
        for y in basis:
            z = bracket(x, y)
            assert all(frozenset([m]) in allowed for m in z.coeffs)


@pytest.mark.parametrize("m", range(1, 13))
def test_complexified_even_part_matches_closed_form(m):
    for p in range(m + 1):
        assert even_clifford_type(p, m - p).complexified() == complexified_even_closed_form(m)


@pytest.mark.parametrize("sig", [(p, n - p) for n in range(0, 7) for p in range(n + 1)])
def test_type_agrees_with_explicit_model(sig):
    assert certify_type(*sig) == clifford_type(*sig)


def test_known_types():
    assert clifford_type(8, 0).to_json() == {"kind": "MAT_R", "block_size": 16}
    assert clifford_type(3, 0).to_json() == {"kind": "MAT_C", "block_size": 2}
    assert clifford_type(0, 2).kind == "MAT_H"
    assert certify_type(8, 0) == clifford_type(8, 0)


@given(st.integers(0, 12), st.integers(0, 12))
def test_real_dimension_is_two_to_the_n(p, q):
    assert clifford_type(p, q).real_dim() == 2 ** (p + q)


@given(st.integers(0, 10), st.integers(0, 10))
def test_bott_periodicity(p, q):
    a, b = clifford_type(p, q), clifford_type(p + 8, q)
    assert a.kind == b.kind and b.block_size == 16 * a.block_size


def test_spin_dimension():
    assert [spin_dimension(m) for m in range(1, 9)] == [1, 1, 2, 2, 4, 4, 8, 8]


def test_json_round_trip():
    x = CliffordElement.blade((2, 1), [3, 1], coef="2/3") + CliffordElement.scalar((2, 1), 5)
    assert CliffordElement.from_json(x.to_json()) == x
