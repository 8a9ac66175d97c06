import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from booltop import fixtures as F
from booltop.boolsemi import (BoolMatrix, Semimodule, bits_from_str, bits_to_str, canonical_matrix, coevaluation,
                              double_dual_map, dual, flatness_probes, identity_in_rank_one_span, irreducibles,
                              is_distributive, is_distributive_birkhoff, lattice, reduced_tensor, retract_witness,
                              span_rows, tensor, tensor_cardinality)
from booltop.errors import NotProjective


def vectors(*texts):
    return [bits_from_str(t) for t in texts]


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r).map(
            lambda rows: BoolMatrix(r, c, tuple(rows)))))


def test_bit_strings_put_coordinate_zero_first():
    assert bits_from_str("100") == 1
    assert bits_to_str(1, 3) == "100"


def test_span_of_a1():
    s = F.spans()["A1"]
    assert set(s.elements) == set(vectors("00", "01", "11"))


def test_span_of_zero_matrix():
    assert span_rows(BoolMatrix.from_rows(["000", "000"])).cardinality == 1


@pytest.mark.parametrize("name,size", [("A1", 3), ("A2", 5), ("A3", 4), ("A4", 5)])
def test_fixture_span_sizes(name, size):
    assert F.spans()[name].cardinality == size


def test_a4_irreducibles_are_its_rows():
    s = F.spans()["A4"]
    assert sorted(s.irreducibles) == sorted(F.A4.data)
    assert len(irreducibles(s)) == 3


def test_free_irreducibles_are_unit_vectors():
    assert sorted(Semimodule.free(3).irreducibles) == [1, 2, 4]


def test_canonical_matrix_keeps_reduced_and_drops_duplicates():
    eye = BoolMatrix.from_rows(["100", "010", "001"])
    assert canonical_matrix(eye).to_strings() == eye.to_strings()
    dup = BoolMatrix.from_rows(["110", "110", "011"])
    assert canonical_matrix(dup).rows == 2


def test_weight_two_columns_of_b4():
    cols = [(1 << i) | (1 << j) for i in range(4) for j in range(i + 1, 4)]
    m = BoolMatrix.from_columns(cols, 4)
    assert canonical_matrix(m).cols == 6
    s = Semimodule.span(4, cols)
    assert len(s.irreducibles) == 6
    assert len(dual(s)[0].irreducibles) == 4


def test_free_is_self_dual():
    d, pairing = dual(Semimodule.free(2))
    assert d.cardinality == 4 and d.is_free()
    assert pairing.rows == pairing.cols == 4


def test_a1_dual_reverses_order():
    d, _ = dual(F.spans()["A1"])
    assert d.cardinality == 3


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4"])
def test_dual_size_and_double_dual(name):
    s = F.spans()[name]
    d, _ = dual(s)
    assert d.cardinality == s.cardinality == oracles.dual_count(s.elements)
    dd, _ = dual(d)
    assert oracles.isomorphic(s.elements, dd.elements)
    ev = double_dual_map(s)
    assert len(set(ev.values())) == s.cardinality


def test_meets_in_a4_span_are_zero():
    s = F.spans()["A4"]
    lat = lattice(s)
    rows = F.A4.data
    assert all(lat.meet(a, b) == 0 for a in rows for b in rows if a != b)


def test_free_meet_is_and():
    lat = lattice(Semimodule.free(2))
    assert all(lat.meet(a, b) == a & b for a in range(4) for b in range(4))


@pytest.mark.parametrize("name,expected", [("A1", True), ("A2", True), ("A3", True), ("A4", False)])
def test_projectivity_of_fixtures(name, expected):
    s = F.spans()[name]
    assert is_distributive(s) is expected
    assert is_distributive_birkhoff(s) is expected
    assert oracles.distributive(s.elements) is expected
    assert identity_in_rank_one_span(s) is expected
    assert (retract_witness(s) is not None) is expected


def test_a1_section():
    s = F.spans()["A1"]
    iota, proj = retract_witness(s)
    x, y = vectors("01", "11")
    assert iota[x] != iota[y] and iota[x] & ~iota[y] == 0
    assert all(p in s.elements for p in proj)


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_coevaluation_snake(name):
    c = coevaluation(F.spans()[name])
    assert c.snake_holds()


def test_coevaluation_of_b1():
    c = coevaluation(Semimodule.free(1))
    assert len(c.pairs) == 1 and c.snake_holds() and c.circle_value() == 1


def test_a4_has_no_coevaluation():
    with pytest.raises(NotProjective) as e:
        coevaluation(F.spans()["A4"])
    assert e.value.to_dict()["error"] == "NotProjective"


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_random_spans_against_oracles(m):
    s = span_rows(m)
    assert set(s.elements) == oracles.span(m.data)
    assert sorted(s.irreducibles) == oracles.irreducibles(s.elements)
    d, _ = dual(s)
    assert d.cardinality == s.cardinality == oracles.dual_count(s.elements)
    assert oracles.isomorphic(s.elements, dual(d)[0].elements)
    dist = oracles.distributive(s.elements)
    assert is_distributive(s) is dist
    assert is_distributive_birkhoff(s) is dist
    assert identity_in_rank_one_span(s) is dist


def test_free_tensor_free():
    t = tensor(Semimodule.free(2), Semimodule.free(3))
    assert t.space.cardinality == 2 ** 6
    assert tensor_cardinality(Semimodule.free(2), Semimodule.free(3)) == 2 ** 6


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4"])
def test_tensor_with_unit(name):
    s = F.spans()[name]
    assert tensor(s, Semimodule.free(1)).space.cardinality == s.cardinality
    assert tensor_cardinality(s, Semimodule.free(1)) == s.cardinality


def test_m3_tensor_square_is_not_flat():
    full = tensor(F.M3, F.M3).space.cardinality
    red = reduced_tensor(F.M3, F.M3).space.cardinality
    assert (full, red) == (50, 44)
    assert tensor_cardinality(F.M3, F.M3) == 50


def test_flatness_probes():
    m3 = flatness_probes(F.M3)
    assert not m3.flat and not m3.m3_probe_injective
    n5 = flatness_probes(F.N5)
    assert not n5.flat and not n5.n5_probe_injective
    free = flatness_probes(Semimodule.free(3))
    assert free.flat and free.m3_probe_injective and free.n5_probe_injective


def test_reduced_tensor_of_free():
    assert reduced_tensor(Semimodule.free(2), Semimodule.free(2)).space.cardinality == 16


@given(matrices, matrices)
@settings(max_examples=40, deadline=None)
def test_tensor_routes_agree(m1, m2):
    s, t = span_rows(m1), span_rows(m2)
    full = tensor(s, t).space.cardinality
    assert tensor_cardinality(s, t) == full
    red = reduced_tensor(s, t).space.cardinality
    assert red <= full
    if is_distributive(s) or is_distributive(t):
        assert red == full


def test_tensor_cardinality_cap():
    assert tensor_cardinality(F.M3, F.M3, cap=10) == 11


def test_semimodule_json_round_trip():
    s = F.spans()["A2"]
    assert set(Semimodule.from_json(s.to_json()).elements) == set(s.elements)


def test_fixture_matrices_match_numpy_span():
    # row span by brute force over all row subsets
    m = F.A2
    rows = np.array(m.to_lists(), dtype=bool)
    seen = set()
    for mask in range(1 << m.rows):
        acc = np.zeros(m.cols, dtype=bool)
        for i in range(m.rows):
            if mask >> i & 1:
                acc |= rows[i]
        seen.add(int(sum(1 << j for j in range(m.cols) if acc[j])))
    assert seen == set(F.spans()["A2"].elements)
