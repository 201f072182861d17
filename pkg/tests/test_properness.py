from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrlie.errors import HRError
from hrlie.hurwitz_radon import SO, SU, rho
from hrlie.properness import (
    classify_spin, classify_spin_space, direct_instances, find_row, has_zero_subsum, parse_space, proper,
    proper_case_b, sl_direct, sp_direct, space, table1_instances, table6_witness, verify_ve,
)
from hrlie.satake import catalog_entries
from hrlie.sl2_orbits import Partition


@given(st.lists(st.integers(-6, 6), max_size=8), st.integers(0, 8))
def test_zero_subsum_against_brute_force(values, k):
    brute = k <= len(values) and any(sum(c) == 0 for c in combinations(values, k))
    assert has_zero_subsum(values, k) == brute


def test_every_table1_space_has_property_ve():
    for sp in table1_instances() + direct_instances(12):
        r = verify_ve(sp)
        assert r["passed"], (sp.name(), r["counterexamples"])


def test_vacuous_rows_are_the_odd_ones():
    # odd N leaves no very-even partition realizable, so nothing can act properly
    vac = set()
    for sp in table1_instances():
        if verify_ve(sp)["vacuous"]:
            vac.add(find_row(sp))
            assert sp.instance.params["N"] % 2 == 1
    assert vac == {5, 6, 10}


@pytest.mark.parametrize("e", [e for e in catalog_entries(table=6)], ids=lambda e: e["id"])
def test_table6_witnesses(e):
    for params in e["minimal"]:
        w = table6_witness(e, **params)
        assert w["pass"], w


def test_split_hyperboloid_verdicts():
    sp = space("hyperboloid", p=4, q=3)
    assert proper(sp, "2,2,2,2").proper
    assert not proper(sp, "3,1,1,1,1,1").proper
    v = proper(sp, "4,4")
    assert [o.label for o in v.orbits] == ["VERY_EVEN_I", "VERY_EVEN_II"]


def test_non_realizable_orbits_are_not_proper():
    # so(6,2) has black fork nodes, so the principal orbit of so(8,C) is not realized
    sp = parse_space("H 6 1".split())
    v = proper(sp, "7,1")
    assert not v.realizable and not v.proper


@pytest.mark.parametrize("N", range(3, 9))
def test_h_n_n1_has_proper_sl2_iff_n_even(N):
    sp = space("t4-4", N=N, p=0)
    some = any(proper(sp, p).proper for p, _ in sp.partitions())
    assert some == (N % 2 == 0)


def test_classification_examples():
    assert classify_spin_space(parse_space("H 4 3".split()))["n"] == [2, 3, 4]
    assert classify_spin_space(space("t4-5", N=4, p=0))["n"] == [2, 3, 4, 5, 6]
    assert classify_spin(SO(8, 8)) == set(range(2, rho(8) + 1))
    assert classify_spin(SU(3, 3)) == {2}
    assert classify_spin(SO(3, 3)) == set()


def test_classification_needs_property_ve():
    with pytest.raises(HRError) as exc:
        classify_spin_space(space("hyperboloid", p=5, q=2))
    assert exc.value.code == "NOT_VE_ASSERTED"


def test_direct_sl_family():
    sp = sl_direct("R", 3, 1, 5)
    assert proper(sp, "2,2,2").proper
    assert not proper(sp, "3,2,1").proper


def test_direct_sp_family():
    sp = sp_direct("R", 3, [1, 1])
    assert proper(sp, "2,2,2").proper
    assert not proper(sp, "2,2,1,1").proper
    with pytest.raises(HRError):
        sp_direct("R", 3, [1])


def test_case_checks():
    with pytest.raises(HRError):
        proper_case_b(space("hyperboloid", p=4, q=3), Partition((2, 2, 2, 2)))
    with pytest.raises(HRError):
        proper(space("hyperboloid", p=4, q=3), "3,3")


@pytest.mark.parametrize("text", [
    "H 4 3", "X 4 1", "t1 2 3", "t6 15", "entry t4-4 N=4 p=1", "sl-direct H 2 1 3",
    "sp-direct C 4 2 1", "pair so 4 4 / so 4 3", "pair su 4 4 / u 3 4 + u 1 0",
])
def test_space_grammar(text):
    assert parse_space(text.split()).name()


def test_space_grammar_errors():
    with pytest.raises(HRError) as exc:
        parse_space("foo 1".split())
    assert exc.value.code == "USAGE"
    with pytest.raises(HRError) as exc:
        parse_space("pair su 4 4 / u 4 3".split())
    assert exc.value.code == "NOT_IN_CATALOG"
