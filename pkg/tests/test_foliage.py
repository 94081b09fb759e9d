import random

import pytest

from conftest import (
    parts_as_sets,
    partition_by_definition,
    random_graph,
    random_weighted,
    related_by_definition,
)
from lcfoliage.foliage import (
    PartType,
    foliage_graph,
    foliage_partition,
    foliage_representation,
    foliage_set,
    lifted_local_complement,
    normal_form,
    partition_text,
    reconstruct_graph,
    representation_json,
    representation_text,
    saturation,
    vertices_related,
)
from lcfoliage.graph import build_graph, build_weighted_graph, local_complement, mask_of
from lcfoliage.orbits import nonisomorphic_graphs


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n):
    return build_graph(n, [(0, i) for i in range(1, n)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


K23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


# ---------------------------------------------------------------------------
# the pairwise relation

def test_relation_anchors():
    k5 = complete(5)
    assert vertices_related(k5, 0, 3)
    assert vertices_related(k5, 2, 4)
    p4 = path(4)
    assert vertices_related(p4, 0, 1)   # leaf and axil
    assert not vertices_related(p4, 1, 2)
    two_isolated = build_graph(2, [])
    assert not vertices_related(two_isolated, 0, 1)


def test_relation_validates_arguments():
    g = path(3)
    with pytest.raises(ValueError):
        vertices_related(g, 1, 1)
    with pytest.raises(ValueError):
        vertices_related(g, 0, 3)


def test_relation_matches_definition_exhaustively():
    for n in range(2, 7):
        for g in nonisomorphic_graphs(n):
            for v in range(n):
                for w in range(v + 1, n):
                    assert vertices_related(g, v, w) == related_by_definition(g, v, w)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_relation_matches_definition_weighted(d):
    rng = random.Random(d)
    for _ in range(100):
        g = random_weighted(rng.randrange(2, 8), d, rng.random(), rng)
        for v in range(g.n):
            for w in range(v + 1, g.n):
                assert vertices_related(g, v, w) == related_by_definition(g, v, w)


def test_relation_is_transitive_on_random_weighted_graphs():
    rng = random.Random(99)
    for _ in range(1000):
        d = rng.choice([2, 3, 5])
        g = random_weighted(rng.randrange(3, 9), d, rng.random(), rng)
        rel = {
            (v, w): vertices_related(g, v, w)
            for v in range(g.n)
            for w in range(g.n)
            if v != w
        }
        for u in range(g.n):
            for v in range(g.n):
                for w in range(g.n):
                    if len({u, v, w}) == 3 and rel[(u, v)] and rel[(v, w)]:
                        assert rel[(u, w)]


# ---------------------------------------------------------------------------
# the partition

def test_partition_anchors():
    assert foliage_partition(complete(5)).parts == ((0, 1, 2, 3, 4),)
    assert foliage_partition(K23).parts == ((0, 1), (2, 3, 4))
    assert foliage_partition(cycle(5)).parts == ((0,), (1,), (2,), (3,), (4,))
    assert foliage_partition(path(4)).parts == ((0, 1), (2, 3))


def test_partition_matches_definition_exhaustively():
    for n in range(1, 7):
        for g in nonisomorphic_graphs(n):
            assert parts_as_sets(foliage_partition(g).parts) == partition_by_definition(g)


def test_partition_matches_definition_weighted():
    rng = random.Random(4242)
    for _ in range(500):
        d = rng.choice([2, 3, 5])
        g = random_weighted(rng.randrange(1, 9), d, rng.random(), rng)
        assert parts_as_sets(foliage_partition(g).parts) == partition_by_definition(g)


def test_parts_are_ordered_by_least_member():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(8, 0.4, rng)
        parts = foliage_partition(g).parts
        heads = [p[0] for p in parts]
        assert heads == sorted(heads)
        assert all(list(p) == sorted(p) for p in parts)


def test_partition_helpers():
    part = foliage_partition(K23)
    assert part.part_of(3) == 1
    assert part.sizes() == (2, 3)
    assert part.masks == (0b00011, 0b11100)
    assert not part.is_trivial
    assert foliage_partition(cycle(5)).is_trivial


def test_foliage_set():
    assert foliage_set(path(4)) == 0b1111
    assert foliage_set(cycle(5)) == 0
    assert foliage_set(star(4)) == 0b1111
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    # a chorded 6-cycle: no leaves and no twins, so the set is empty
    assert foliage_set(g) == 0


# ---------------------------------------------------------------------------
# representation

def test_representation_anchors():
    rep = foliage_representation(complete(5))
    assert rep.types == (PartType.K,)
    assert rep.axils == ()

    rep = foliage_representation(star(5))
    assert rep.types == (PartType.AL,)
    assert rep.axils == (0,)

    rep = foliage_representation(K23)
    assert rep.types == (PartType.D, PartType.D)
    assert rep.axils == ()
    assert rep.quotient.edges() == [(0, 1)]

    rep = foliage_representation(path(4))
    assert rep.types == (PartType.AL, PartType.AL)
    assert rep.axils == (1, 2)

    rep = foliage_representation(build_graph(3, []))
    assert rep.types == (PartType.Z, PartType.Z, PartType.Z)


def test_isolated_edge_is_typed_k_without_axil():
    rep = foliage_representation(build_graph(2, [(0, 1)]))
    assert rep.types == (PartType.K,)
    assert rep.axils == ()
    # and in a larger graph with other components
    g = build_graph(5, [(0, 1), (2, 3), (2, 4)])
    rep = foliage_representation(g)
    assert rep.types[rep.partition.part_of(0)] == PartType.K
    assert rep.types[rep.partition.part_of(2)] == PartType.AL


def test_reconstruct_roundtrip_exhaustive():
    for n in range(1, 8):
        for g in nonisomorphic_graphs(n):
            assert reconstruct_graph(foliage_representation(g)) == g


def test_reconstruct_rejects_malformed_axils():
    rep = foliage_representation(path(4))
    broken = type(rep)(rep.partition, rep.quotient, rep.types, ())
    with pytest.raises(ValueError):
        reconstruct_graph(broken)
    rep_k = foliage_representation(complete(3))
    broken_k = type(rep_k)(rep_k.partition, rep_k.quotient, rep_k.types, (0,))
    with pytest.raises(ValueError):
        reconstruct_graph(broken_k)


# ---------------------------------------------------------------------------
# lifted local complementation

def test_lifted_matches_recomputation_exhaustively():
    for n in range(1, 7):
        for g in nonisomorphic_graphs(n):
            rep = foliage_representation(g)
            for a in range(n):
                assert lifted_local_complement(rep, a) == foliage_representation(
                    local_complement(g, a)
                )


def test_lifted_type_flips():
    rep = foliage_representation(complete(5))
    lifted = lifted_local_complement(rep, 2)
    assert lifted.types == (PartType.AL,)
    assert lifted.axils == (2,)
    back = lifted_local_complement(lifted, 2)
    assert back == rep
    # complementing at a leaf of a star does nothing
    s = foliage_representation(star(5))
    assert lifted_local_complement(s, 3) == s


def test_lifted_toggles_neighbour_twins():
    # quotient edge between the axil part of a star and a twin pair
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
    rep = foliage_representation(g)
    i_axil = rep.partition.part_of(0)
    i_pair = rep.partition.part_of(2)
    assert rep.types[i_axil] == PartType.AL
    assert rep.types[i_pair] == PartType.K
    lifted = lifted_local_complement(rep, 0)
    assert lifted.types[i_pair] == PartType.D


# ---------------------------------------------------------------------------
# normal form

def test_normal_form_anchors():
    assert normal_form(star(5)) == complete(5)
    assert normal_form(complete(5)) == complete(5)
    assert normal_form(build_graph(2, [(0, 1)])) == build_graph(2, [(0, 1)])


def test_normal_form_has_no_axils_exhaustive():
    for n in range(1, 7):
        for g in nonisomorphic_graphs(n):
            rep = foliage_representation(normal_form(g))
            assert rep.axils == ()
            assert PartType.AL not in rep.types


def test_normal_form_keeps_the_partition():
    rng = random.Random(17)
    for _ in range(50):
        g = random_graph(rng.randrange(2, 9), rng.random(), rng)
        assert foliage_partition(normal_form(g)).parts == foliage_partition(g).parts


# ---------------------------------------------------------------------------
# saturation

def test_saturation_anchors():
    assert saturation(complete(5)).chain == (5, 1)
    assert saturation(K23).chain == (5, 2, 1)
    assert saturation(cycle(5)).chain == (5,)
    sat = saturation(complete(5))
    assert (sat.time, sat.size) == (1, 1)
    assert (saturation(K23).time, saturation(K23).size) == (2, 1)
    assert (saturation(cycle(5)).time, saturation(cycle(5)).size) == (0, 5)


@pytest.mark.parametrize("n", range(4, 11))
def test_path_saturation_time(n):
    assert saturation(path(n)).time == n // 2


def test_saturation_of_disconnected_graphs():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert saturation(g).chain == (4, 2)
    h = build_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                    + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert saturation(h).chain == (10,)


def test_foliage_graph_quotient():
    assert foliage_graph(K23).edges() == [(0, 1)]
    assert foliage_graph(cycle(5)).n == 5


# ---------------------------------------------------------------------------
# LC invariance of the partition

def test_partition_is_lc_invariant_qubit():
    rng = random.Random(31337)
    for _ in range(200):
        g = random_graph(rng.randrange(2, 11), rng.random(), rng)
        before = foliage_partition(g).parts
        h = g
        for _ in range(rng.randrange(1, 21)):
            h = local_complement(h, rng.randrange(h.n))
        assert foliage_partition(h).parts == before


# ---------------------------------------------------------------------------
# serialization

def test_serialization_text_forms():
    assert partition_text(foliage_partition(K23)) == "parts=[{0,1},{2,3,4}]"
    rep = foliage_representation(path(4))
    assert representation_text(rep) == "parts=[{0,1}AL:a1,{2,3}AL:a2] edges=[(0,1)]"
    assert representation_text(foliage_representation(K23)) == (
        "parts=[{0,1}D,{2,3,4}D] edges=[(0,1)]"
    )


def test_serialization_json_form():
    rep = foliage_representation(path(4))
    assert representation_json(rep) == (
        '{"n":4,"parts":[{"vertices":[0,1],"type":"AL","axil":1},'
        '{"vertices":[2,3],"type":"AL","axil":2}],"edges":[[0,1]]}'
    )


def test_weighted_partition_strong_twins():
    # proportional rows with different scalars are still one part
    g = build_weighted_graph(4, 5, [(0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 1)])
    # rows of 0 and 1 against {2,3}: (1,2) vs (3,1): 3*(1,2) = (3,6%5=1) -> twins
    part = foliage_partition(g)
    assert part.part_of(0) == part.part_of(1)
    g2 = build_weighted_graph(4, 5, [(0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 2)])
    part2 = foliage_partition(g2)
    assert part2.part_of(0) != part2.part_of(1)
