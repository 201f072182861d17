import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrlie.errors import HRError
from hrlie.hurwitz_radon import SO, SP, SU, ClassicalAlgebra
from hrlie.satake import (
    SatakeDiagram, alignment_report, c_dual, catalog_entries, diagram_automorphisms,
    enumerate_instances, evaluate, get_entry, graph_automorphism, instantiate, load_catalog,
    matches, matching_space_dim, parse_real_form, satake, satake_pair,
)
from hrlie.sl2_orbits import WeightedDiagram


def A(f, *ps):
    return ClassicalAlgebra(f, ps)


# real ranks of the classical real forms from their standard realizations
def known_real_rank(g):
    f, ps = g.family, g.params
    if f in ("SO", "SU", "SP"):
        return min(ps)
    if f in ("SL_R", "SL_H"):
        return ps[0] - 1
    if f == "SP_R":
        return ps[0]
    if f == "SO_STAR":
        return ps[0] // 4
    raise AssertionError(f)


def forms():
    out = []
    for n in range(2, 9):
        out += [A("SL_R", n), A("SL_H", n)]
        out += [SU(p, n - p) for p in range(n + 1)]
        out.append(A("SP_R", n))
        out += [SP(p, n - p) for p in range(n + 1)]
    for n in range(5, 17):
        out += [SO(p, n - p) for p in range(n + 1)]
    out += [A("SO_STAR", 2 * m) for m in range(3, 9)]
    return out


@pytest.mark.parametrize("g", forms(), ids=str)
def test_real_rank_from_diagram(g):
    assert satake(g).real_rank() == known_real_rank(g)


@pytest.mark.parametrize("g", forms(), ids=str)
def test_arrows_join_white_nodes_and_form_an_automorphism(g):
    s = satake(g)
    for a, b in s.arrow_pairs():
        assert a not in s.black and b not in s.black
    pairing = {}
    for a, b in s.arrow_pairs():
        pairing[a], pairing[b] = b, a
    whites = s.white()

    def extends(sig):
        if {sig.get(i, i) for i in s.black} != set(s.black):
            return False
        return all(sig.get(i, i) == pairing.get(i, i) for i in whites)

    assert any(extends(sig) for sig in diagram_automorphisms(s.letter, s.rank))


def test_drawn_diagrams():
    s = satake(SO(5, 3))
    assert not s.black and s.arrow_pairs() == [(3, 4)]
    s = satake(SU(4, 2))
    assert s.black == {3} and s.arrow_pairs() == [(1, 5), (2, 4)]
    s = satake(SO(4, 4))
    assert not s.black and not s.arrows


def test_unknown_form():
    with pytest.raises(HRError):
        satake(A("SL_C", 3))


def split_diagrams():
    return st.sampled_from([satake(g) for g in (A("SL_R", 5), SO(4, 4), SO(5, 4), A("SP_R", 3))])


@given(split_diagrams(), st.data())
def test_everything_matches_a_split_diagram(s, data):
    w = data.draw(st.lists(st.integers(0, 2), min_size=s.rank, max_size=s.rank))
    assert matches(WeightedDiagram(s.letter, tuple(w)), s)
    assert matching_space_dim(s, s) == s.rank


def test_matching_examples():
    assert matches(WeightedDiagram("D", (0, 2, 0, 0)), satake(SO(6, 2)))
    assert not matches(WeightedDiagram("D", (2, 2, 2, 2)), satake(SO(7, 1)))
    with pytest.raises(HRError):
        matches(WeightedDiagram("A", (0, 2)), satake(SO(6, 2)))


def test_c_dual_lookup():
    assert c_dual("t4-4", N=4, p=1) == SO(5, 3)
    assert c_dual("t4-2", N=2) == SU(6, 2)
    assert c_dual("t4-7", N=3, p=1) == A("SO_STAR", 12)


def test_so_star_pair_depends_on_parity():
    even = satake_pair("so-star-split", N=3, p=2)[1]
    odd = satake_pair("so-star-split", N=3, p=1)[1]
    assert even.black != odd.black


def test_fork_swap_for_complex_pair():
    r = graph_automorphism("t1-10", N=4, p=1)
    assert r["permutation"] == [1, 2, 4, 3] and not r["trivial"]


def test_graph_automorphism_needs_case_a():
    with pytest.raises(HRError):
        graph_automorphism("t4-4", N=4, p=1)


def test_catalog_lemma_dimension_and_unique_alignment():
    n = 0
    for e in catalog_entries(case="C"):
        for inst in enumerate_instances(e):
            r = alignment_report(inst)
            assert r["pass"], r
            assert not r["ambiguous"], r
            n += 1
    assert n > 300


def test_catalog_lookup_errors():
    with pytest.raises(HRError):
        get_entry("nope")
    with pytest.raises(HRError):
        instantiate("t4-4", N=4)
    with pytest.raises(HRError):
        instantiate("t4-4", N=4, p=9)


def test_catalog_ids_unique():
    ids = [e["id"] for e in catalog_entries()]
    assert len(ids) == len(set(ids)) == len(load_catalog())


def test_expression_evaluator_is_restricted():
    assert evaluate("2*N-1", {"N": 3}) == 5
    with pytest.raises(HRError):
        evaluate("__import__('os')", {})


def test_real_form_parser():
    assert parse_real_form(["so*", "8"]) == A("SO_STAR", 8)
    assert parse_real_form(["sl", "4", "R"]) == A("SL_R", 4)
    assert parse_real_form(["sp", "3", "R"]) == A("SP_R", 3)
    with pytest.raises(HRError):
        parse_real_form(["xx"])


def test_diagram_json():
    d = satake(SU(3, 1)).to_json()
    assert d == {"type": "A3", "name": "su(3,1)", "black": [2], "arrows": [[1, 3]]}
    assert isinstance(satake(SU(3, 1)), SatakeDiagram)
