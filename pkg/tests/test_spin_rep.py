from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrlie.clifford import clifford_type
from hrlie.errors import HRError
from hrlie.exact_algebra import COMPLEX, ExactMatrix, Quaternion
from hrlie.spin_rep import (
    ALL, ALTERNATING, CONJ, CONJDUAL, DUAL, ID, NONE, SIGN_MAPS, SYMMETRIC, DominantWeight,
    RepMultiplicity, N_dagger, character_product, divisibility_check, embed_G_dagger_eps,
    embed_U, embed_real_form, freudenthal, gamma_matrices, half_integral_weights,
    in_N_dagger, index_general, index_spin, invariant_form_type, self_dagger, spin_type,
    spin_weights, spinify, weyl_dimension,
)

H = Fraction(1, 2)


def W(letter, *coords):
    return DominantWeight(letter, tuple(Fraction(c) for c in coords))


@pytest.mark.parametrize("letter,coords,dim", [
    ("B", (H, H), 4), ("D", (H,) * 4, 8), ("B", (0, 0), 1), ("B", (1, 1), 10), ("B", (1, 0), 5),
    ("C", (1, 0), 4), ("D", (1, 0, 0), 6), ("B", (H,) * 3, 8),
])
def test_weyl_dimension_values(letter, coords, dim):
    assert weyl_dimension(letter, len(coords), W(letter, *coords)) == dim


def small_weights():
    out = []
    for letter, r in (("B", 2), ("C", 2), ("D", 3), ("B", 3)):
        for a in range(0, 4):
            for b in range(0, a + 1):
                tail = (0,) * (r - 2)
                out.append(W(letter, a, b, *tail))
                if letter != "C":
                    out.append(W(letter, a + H, b + H, *((H,) * (r - 2))))
    return out


@pytest.mark.parametrize("lam", small_weights(), ids=str)
def test_weyl_formula_agrees_with_weight_multiplicities(lam):
    mults = freudenthal(lam.letter, lam.rank, lam)
    assert sum(mults.values()) == weyl_dimension(lam.letter, lam.rank, lam)


def test_non_dominant_weights_rejected():
    with pytest.raises(HRError):
        W("B", 0, 1)
    with pytest.raises(HRError):
        W("D", 1, H)
    with pytest.raises(HRError):
        W("C", H, H)


def test_cartan_product_has_multiplicity_one():
    for letter, lam, mu in (("B", (H, H), (1, 0)), ("D", (H,) * 4, (1, 0, 0, 0)),
                            ("D", (H, H, H, -H), (H,) * 4)):
        a, b = W(letter, *lam), W(letter, *mu)
        prod = character_product(letter, len(lam), a, b)
        top = tuple(x + y for x, y in zip(a.coords, b.coords))
        assert prod[top] == 1


def test_divisibility_small():
    for n in (3, 4, 5):
        for lam in half_integral_weights(n, 3):
            assert divisibility_check(n, 1, lam)


def test_n_dagger():
    assert in_N_dagger(5, CONJ) and in_N_dagger(3, DUAL)
    assert not in_N_dagger(3, CONJ) and not in_N_dagger(5, DUAL)
    assert not any(in_N_dagger(n, CONJDUAL) for n in range(3, 20, 2))
    assert N_dagger(CONJ)["residues_mod_8"] == [1, 5]
    assert N_dagger(DUAL)["residues_mod_8"] == [3, 7]


def test_self_dagger():
    assert self_dagger(4, CONJ) == ALL == self_dagger(4, DUAL)
    assert self_dagger(3, CONJ) == NONE
    assert self_dagger(3, DUAL) == ALL


@pytest.mark.parametrize("n", range(3, 40, 2))
def test_complex_clifford_type_iff_outside_n_conj(n):
    complex_type = clifford_type(n, 0).kind == "MAT_C"
    assert complex_type == (not in_N_dagger(n, CONJ))


@pytest.mark.parametrize("n", range(2, 10))
@pytest.mark.parametrize("d", [CONJ, DUAL])
def test_index_routes_agree(n, d):
    if self_dagger(n, d) == NONE:
        with pytest.raises(HRError):
            index_spin(n, d)
        return
    assert index_spin(n, d, route="clifford") == index_spin(n, d, route="model")


def test_index_values():
    assert index_spin(2, DUAL) == -1
    assert index_spin(2, CONJ) == 1
    assert index_spin(4, CONJ) == -1


def test_invariant_forms_on_small_models():
    # so(3) acting on R^3: the dot product
    e = lambda i, j: ExactMatrix._from_data(COMPLEX, 3, 3, {i * 3 + j: Quaternion(1),
                                                            j * 3 + i: Quaternion(-1)})
    assert invariant_form_type([e(0, 1), e(0, 2), e(1, 2)]) == SYMMETRIC
    # spin(2,1) on C^2 preserves a symplectic form
    assert invariant_form_type(gamma_matrices(2, 1)) == ALTERNATING


def test_semispin_of_spin31_is_symplectic():
    assert index_spin(3, DUAL, route="model") == -1


@given(st.integers(2, 9), st.data())
@settings(max_examples=40, deadline=None)
def test_index_is_constant_over_half_integral_weights(n, data):
    d = data.draw(st.sampled_from([CONJ, DUAL]))
    if self_dagger(n, d) == NONE:
        return
    lam = data.draw(st.sampled_from(half_integral_weights(n, 3)))
    assert index_general(n, lam, d) == index_spin(n, d)


def multiplicities(n):
    ws = half_integral_weights(n, 3)
    return st.dictionaries(st.sampled_from(ws), st.integers(0, 3), max_size=4).map(
        lambda m: RepMultiplicity(n, {w: c for w, c in m.items() if c}))


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(multiplicities(n),
                                                     st.sampled_from([CONJ, DUAL, CONJDUAL, ID]))))
@settings(max_examples=120, deadline=None)
def test_spinify_preserves_dimension_and_is_idempotent(args):
    tau, d = args
    try:
        s = spinify(tau, d)
    except HRError as e:
        assert e.code == "NOT_SELF_DAGGER"
        return
    assert s.dimension() == tau.dimension()
    assert spinify(s, d).entries == s.entries


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(multiplicities(n),
                                                     st.sampled_from([CONJ, DUAL]),
                                                     st.sampled_from([1, -1]))))
@settings(max_examples=120, deadline=None)
def test_spinify_keeps_the_image_inside(args):
    tau, d, eps = args
    if not embed_G_dagger_eps(tau, d, eps):
        return
    assert embed_G_dagger_eps(spinify(tau, d), d, eps)


def test_spinify_examples():
    tau = RepMultiplicity.from_labels(2, {"S": 1, "(3/2)": 1})
    assert spinify(tau, CONJ).labelled() == {"S": 3}
    tau = RepMultiplicity.from_labels(3, {"(3/2,1/2)": 1})
    assert set(spinify(tau, DUAL).labelled()) == {"S1"}
    tau = RepMultiplicity.from_labels(3, {"S1": 1, "S2": 1})
    assert spinify(tau, CONJ).labelled() == {"S1": 1, "S2": 1}


def test_spinify_rejects_integral_weights():
    with pytest.raises(HRError):
        spinify(RepMultiplicity.from_labels(2, {"(1)": 1}), CONJ)


def test_embedding_conditions():
    s2 = RepMultiplicity.from_labels(2, {"S": 2})
    s1 = RepMultiplicity.from_labels(2, {"S": 1})
    assert embed_G_dagger_eps(s2, DUAL, 1)
    assert not embed_G_dagger_eps(s1, DUAL, 1)
    pair = RepMultiplicity.from_labels(3, {"S1": 1, "S2": 1})
    assert embed_G_dagger_eps(pair, CONJ, 1)
    assert not embed_U(RepMultiplicity.from_labels(5, {"S1": 1}))


def test_real_form_embeddings():
    s2 = RepMultiplicity.from_labels(2, {"S": 2})
    assert embed_real_form(s2, "SP_R") == (True, None)
    # R^2 (x) R^2 carries the product of two symplectic forms, of signature (2,2)
    assert embed_real_form(s2, "SO_SPLIT") == (True, (2, 2))
    assert embed_real_form(RepMultiplicity.from_labels(2, {"S": 1}), "SO_SPLIT")[0] is False
    ok, sig = embed_real_form(RepMultiplicity.from_labels(2, {"S": 4}), "SP")
    assert ok and sig == (2, 2)
    with pytest.raises(HRError) as exc:
        embed_real_form(RepMultiplicity.from_labels(2, {"(1)": 1}), "SO_SPLIT")
    assert exc.value.code == "ODD_TOTAL_DIMENSION"
    assert set(SIGN_MAPS) == {"SO_SPLIT", "SO_STAR", "SP_R", "SP"}


def test_spin_weights():
    assert spin_type(4) == ("B", 2) and spin_type(5) == ("D", 3)
    assert set(spin_weights(5)) == {"S1", "S2"}


@given(st.sampled_from([3, 5, 7, 9]).flatmap(lambda n: st.tuples(multiplicities(n),
                                                                 st.sampled_from([CONJ, DUAL]))))
@settings(max_examples=80, deadline=None)
def test_spinify_ignores_the_choice_of_orbit_representative(args):
    import hrlie.spin_rep as sr
    tau, d = args
    # close tau under the dagger so that spinify applies
    sym = {}
    for w, c in tau.entries.items():
        for v in {w, sr.dagger_weight(tau.n, w, d)}:
            sym[v] = sym.get(v, 0) + c
    tau = RepMultiplicity(tau.n, sym)
    low = spinify(tau, d)
    original = sr._orbit_representative
    sr._orbit_representative = lambda n, w, dd: max(w, sr.dagger_weight(n, w, dd),
                                                    key=lambda x: x.coords)
    try:
        high = spinify(tau, d)
    finally:
        sr._orbit_representative = original
    assert high.entries == low.entries
    assert high.dimension() == tau.dimension()
