from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrlie.errors import HRError
from hrlie.hurwitz_radon import ClassicalAlgebra
from hrlie.sl2_orbits import (
    VERY_EVEN_I, VERY_EVEN_II, Partition, clebsch_gordan, decompose_weights,
    diagonal_restriction, eigenvalues, is_even_hom, is_valid, is_very_even, parse_type,
    partitions_of, render_dynkin, tensor_brute_force, valid_partitions,
    very_even_from_diagram, very_even_under_triality, weighted_diagram,
)


def P(text):
    return Partition.parse(text)


def test_partition_parsing():
    assert P("[4,2,1^2]").parts == (4, 2, 1, 1)
    assert P("3 3 1").parts == (3, 3, 1)
    assert str(P("1,3,3")) == "[3^2,1]"
    assert Partition.from_multiplicities([(2, 3), (1, 1)]) == P("2,2,2,1")
    with pytest.raises(HRError):
        Partition((2, 0))


# orbit counts from the standard classification tables
@pytest.mark.parametrize("t,count", [("B2", 4), ("B3", 7), ("C3", 8), ("D4", 12), ("B4", 13),
                                     ("C4", 14)])
def test_orbit_counts(t, count):
    assert sum(c for _, c in valid_partitions(parse_type(t))) == count


@pytest.mark.parametrize("n", range(2, 10))
def test_type_a_orbits_are_all_partitions(n):
    assert len(valid_partitions(parse_type(f"sl{n}"))) == len(partitions_of(n))


# D4 weighted diagrams as tabulated (Bourbaki order, fork nodes 3 and 4)
D4_TABLE = {
    "[7,1]": [(2, 2, 2, 2)], "[5,3]": [(2, 0, 2, 2)], "[5,1^3]": [(2, 2, 0, 0)],
    "[4^2]": [(0, 2, 2, 0), (0, 2, 0, 2)], "[3^2,1^2]": [(0, 2, 0, 0)],
    "[3,2^2,1]": [(1, 0, 1, 1)], "[3,1^5]": [(2, 0, 0, 0)],
    "[2^4]": [(0, 0, 2, 0), (0, 0, 0, 2)], "[2^2,1^4]": [(0, 1, 0, 0)],
    "[1^8]": [(0, 0, 0, 0)],
}


@pytest.mark.parametrize("part", sorted(D4_TABLE))
def test_d4_diagrams(part):
    g = parse_type("D4")
    assert [d.weights for d in weighted_diagram(g, P(part))] == D4_TABLE[part]


def test_very_even_labels():
    ds = weighted_diagram(parse_type("so8"), P("4,4"))
    assert [d.orbit_label for d in ds] == [VERY_EVEN_I, VERY_EVEN_II]


@pytest.mark.parametrize("t", ["sl5", "so9", "sp3", "so10"])
def test_principal_orbit_has_all_twos(t):
    g = parse_type(t)
    top = max(valid_partitions(g), key=lambda x: x[0].parts)[0]
    assert set(weighted_diagram(g, top)[0].weights) == {2}


def all_types(max_n):
    for n in range(2, max_n + 1):
        yield parse_type(f"sl{n}")
    for n in range(1, max_n // 2 + 1):
        yield parse_type(f"sp{n}")
    for n in range(3, max_n + 1):
        if n != 4:
            yield parse_type(f"so{n}")


def test_very_even_read_off_the_diagram():
    for g in all_types(16):
        for p, _ in valid_partitions(g):
            for d in weighted_diagram(g, p):
                assert very_even_from_diagram(g, d) == is_very_even(p), (g, p)


@given(st.sampled_from(list(all_types(12))), st.data())
def test_eigenvalues_are_symmetric(g, data):
    parts = data.draw(st.sampled_from(valid_partitions(g)))[0]
    ev = eigenvalues(parts)
    assert Counter(ev) == Counter(-x for x in ev)
    assert len(ev) == g.complex_dim()


def test_validity_rules():
    so8 = parse_type("so8")
    assert not is_valid(so8, P("4,2,1,1"))
    assert is_valid(so8, P("4,4"))
    sp2 = parse_type("sp2")
    assert not is_valid(sp2, P("3,1"))
    assert is_valid(sp2, P("2,1,1"))


def test_even_homomorphisms():
    assert is_even_hom(parse_type("so8"), P("4,4"))
    assert not is_even_hom(parse_type("so8"), P("3,2,2,1"))


def test_triality_caveat():
    d = weighted_diagram(parse_type("D4"), P("3,3,1,1"))[0]
    assert not very_even_under_triality(d)
    d = weighted_diagram(parse_type("D4"), P("3,1,1,1,1,1"))[0]
    assert very_even_under_triality(d)


@pytest.mark.parametrize("k", range(1, 13))
@pytest.mark.parametrize("l", range(1, 13))
def test_clebsch_gordan_against_weights(k, l):
    assert clebsch_gordan(k, l) == tensor_brute_force(k, l)
    if k % 2 == 0 and l % 2 == 0:
        assert all(d % 2 for d in clebsch_gordan(k, l))


@given(st.integers(1, 30), st.integers(1, 30))
def test_clebsch_gordan_dimension(k, l):
    assert sum(clebsch_gordan(k, l)) == k * l


def test_decompose_rejects_non_characters():
    with pytest.raises(HRError):
        decompose_weights(Counter({2: 1}))


def test_diagonal_restriction():
    assert diagonal_restriction({2: 1}, {2: 1}) == {3: 1, 1: 1}


def test_rendering():
    text = render_dynkin("D", 4, (0, 2, 2, 0))
    assert "/o 2" in text and "\\o 0" in text
    assert "○" in render_dynkin("A", 2, unicode=True)


def test_non_simple_rejected():
    with pytest.raises(HRError):
        valid_partitions(ClassicalAlgebra("SO_C", (4,)))
