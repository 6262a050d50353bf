import json
import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ntdom.enumerate import enumerate_trees
from ntdom.family import (
    P2_UNIT,
    STAR_UNIT,
    InvalidCertificate,
    InvalidSpec,
    TCertificate,
    TSpec,
    build_member,
    certificate_ntd_set,
    certificate_violations,
    count_units,
    is_member,
    random_spec,
    recognize_T,
    validate_certificate,
)
from ntdom.graph import Graph, canonical_tree_code, popcount, vset
from ntdom.named import double_star, example_member_certificate, example_member, path, star
from ntdom.solvers import is_ntd_set
from ntdom.treedp import ntd_number_tree_dp

import oracles


def same_tree(a: Graph, b: Graph) -> bool:
    return canonical_tree_code(a) == canonical_tree_code(b)


def test_build_p4_from_k1():
    T, cert = build_member(TSpec([], {0: P2_UNIT}, {(0, "leaf"): 1}))
    assert same_tree(T, path(4))
    assert cert.A == vset([0]) and cert.L1 == vset([1])
    assert validate_certificate(T, cert)


def test_build_star_unit_on_k1():
    T, cert = build_member(TSpec([], {0: STAR_UNIT}))
    assert same_tree(T, star(3))
    assert cert.B1 == vset([1])
    assert certificate_ntd_set(T, cert) == vset([0, 1])


def test_build_p8():
    T, cert = build_member(TSpec([(0, 1)], {0: P2_UNIT, 1: P2_UNIT}, {(0, "leaf"): 1, (1, "leaf"): 1}))
    assert same_tree(T, path(8))
    assert count_units(cert) == (2, 0, 2)
    D = certificate_ntd_set(T, cert)
    assert popcount(D) == 4 and is_ntd_set(T, D)


def test_build_rejects_bad_specs():
    with pytest.raises(InvalidSpec):
        build_member(TSpec([(0, 1)], {0: P2_UNIT}))  # unit_of misses vertex 1
    with pytest.raises(InvalidSpec):
        build_member(TSpec([], {0: P2_UNIT}, {(0, "a"): 1}))  # no star leaf on a P2-unit
    with pytest.raises(InvalidSpec):
        build_member(TSpec([(0, 1)], {0: P2_UNIT, 1: P2_UNIT}, {(0, "t0"): 1}))  # not a leaf of T1
    with pytest.raises(InvalidSpec):
        # the two outer leaves of a star-unit are at distance 2
        build_member(TSpec([], {0: STAR_UNIT}, {(0, "a"): 1, (0, "b"): 1}))
    with pytest.raises(InvalidSpec):
        build_member(TSpec([], {0: P2_UNIT}, {(0, "leaf"): 0}))


def test_k1_t0_vertex_may_carry_the_appended_pairs():
    spec = TSpec([], {0: P2_UNIT}, {(0, "t0"): 2})
    T, cert = build_member(spec)
    spider = Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])
    assert same_tree(T, spider)
    assert validate_certificate(T, cert)
    # the literal A ∪ B1 ∪ C1 misses the NTD condition; the swapped reading fixes it
    literal = cert.A | cert.B1 | cert.C1
    assert not is_ntd_set(T, literal)
    D = certificate_ntd_set(T, cert)
    assert popcount(D) == T.n // 2 and is_ntd_set(T, D)


def test_star_leaf_with_appended_pairs_blocks_its_twin():
    T, cert = build_member(TSpec([], {0: STAR_UNIT}, {(0, "b"): 1}))
    (unit,) = cert.unit_partition
    a, b = cert.star_leaves(unit)
    assert a in cert.appended_p2s and b not in cert.appended_p2s
    assert cert.blocked == vset([unit.added[0], b])
    assert cert.appended_type(a) == 2


def test_appended_type_for_p2_units():
    T, cert = build_member(TSpec([], {0: P2_UNIT}, {(0, "leaf"): 1}))
    assert cert.appended_type(1) == 1
    with pytest.raises(KeyError):
        cert.appended_type(99)


def test_validate_negatives():
    T, cert = build_member(TSpec([], {0: P2_UNIT}, {(0, "leaf"): 1}))
    broken = TCertificate(cert.A, cert.unit_partition, vset([0]), {0: cert.appended_p2s[1]})
    assert certificate_violations(T, broken)
    assert not validate_certificate(star(3), cert)
    with pytest.raises(InvalidCertificate):
        certificate_ntd_set(star(3), cert)


def test_example_member_certificate():
    T, cert = example_member(), example_member_certificate()
    assert T.n == 36 and T.m == 35
    assert certificate_violations(T, cert) == []
    assert count_units(cert) == (3, 3, 9)
    D = certificate_ntd_set(T, cert)
    assert popcount(D) == 18 and is_ntd_set(T, D)


@pytest.mark.parametrize("T", [path(4), star(3), path(6), path(8), double_star(1, 1)])
def test_recognize_accepts(T):
    cert = recognize_T(T)
    assert cert is not None and validate_certificate(T, cert)
    assert is_member(T)


@pytest.mark.parametrize("T", [double_star(2, 2), star(5), path(10)])
def test_recognize_rejects(T):
    assert 2 * ntd_number_tree_dp(T).value < T.n
    assert recognize_T(T) is None
    assert not is_member(T)


def test_recognize_preconditions():
    with pytest.raises(ValueError):
        recognize_T(path(5))
    with pytest.raises(ValueError):
        recognize_T(path(2))
    with pytest.raises(ValueError):
        recognize_T(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert not is_member(path(5))


def test_recognizer_agrees_with_definition():
    # every tree built straight from the definition, and nothing else, is accepted
    for n in range(4, 13, 2):
        accepted = {canonical_tree_code(T) for T in enumerate_trees(n) if recognize_T(T) is not None}
        assert accepted == oracles.member_codes(n), n


def test_certificate_json_round_trip():
    T, cert = example_member(), example_member_certificate()
    doc = json.loads(cert.dumps())
    again = TCertificate.from_json(doc)
    assert again.to_json() == cert.to_json()
    doc["B1"] = []
    with pytest.raises(InvalidCertificate):
        TCertificate.from_json(doc)
    with pytest.raises(InvalidCertificate):
        TCertificate.from_json({"A": [0]})


def test_spec_json_round_trip():
    spec = TSpec([(0, 1)], {0: STAR_UNIT, 1: P2_UNIT}, {(0, "a"): 2, (1, "leaf"): 1})
    doc = json.loads(json.dumps(spec.to_json()))
    assert doc["appended"] == {"0.a": 2, "1.leaf": 1}
    assert TSpec.from_json(doc) == spec
    with pytest.raises(InvalidSpec):
        TSpec.from_json({"t0_edges": [], "unit_of": {"0": "P2_UNIT"}, "appended": {"0.nope": 1}})
    with pytest.raises(InvalidSpec):
        TSpec.from_json({"unit_of": {}})


specs = st.integers(0, 2**32 - 1).map(lambda seed: random_spec(random.Random(seed), max_order=18))


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(specs)
def test_members_are_extremal_and_round_trip(spec):
    T, cert = build_member(spec)
    assert T.n == spec.order() == cert.order
    assert T.n % 2 == 0
    assert validate_certificate(T, cert)
    assert 2 * ntd_number_tree_dp(T).value == T.n
    D = certificate_ntd_set(T, cert)
    assert 2 * popcount(D) == T.n and is_ntd_set(T, D)
    found = recognize_T(T)
    assert found is not None and validate_certificate(T, found)
    assert 2 * popcount(certificate_ntd_set(T, found)) == T.n


@settings(max_examples=60, deadline=None)
@given(specs)
def test_appended_leaves_are_a_2_packing(spec):
    T, cert = build_member(spec)
    adj = oracles.adjacency(T)
    L1 = [v for v in range(T.n) if cert.L1 >> v & 1]
    for i, u in enumerate(L1):
        for v in L1[i + 1 :]:
            assert oracles.bfs_distance(adj, u, v) >= 3


def test_order_below_four_is_not_a_member_spec():
    with pytest.raises(InvalidSpec):
        build_member(TSpec([], {0: P2_UNIT}))
    rng = random.Random(3)
    assert all(random_spec(rng, max_order=6).order() >= 4 for _ in range(200))
