import pytest

from homcurve.errors import TooLarge, Unreachable
from homcurve.oracle import (
    bfs_distance,
    delta_to_target,
    enumerate_vertices,
    shortest_simple_path,
    simple_adjacent,
)
from homcurve.overlap import chain_distance
from homcurve.pathfinder import middle_path
from homcurve.surface import disjoint

from conftest import bp, cob, qf


def test_catalog_contents():
    cat = enumerate_vertices(cob(1), 1)
    assert {v.chain for v in cat.vertices} == {cob(1).first, cob(1).second}
    cat0 = enumerate_vertices(bp(1), 0)
    assert len(cat0) == 1 and cat0.vertices[0].chain == bp(1).first and cat0.target is None
    cat = enumerate_vertices(bp(1), 2)
    for v in middle_path(bp(1)).vertices:
        assert cat.index(v.chain) is not None


def test_potentials_are_normalized():
    cat = enumerate_vertices(bp(2))
    assert all(min(p) == 0 for p in cat.potentials)
    assert len(set(cat.potentials)) == len(cat)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bounding_pair_distances(n):
    cat = enumerate_vertices(bp(n))
    assert shortest_simple_path(cat) == n + 1
    assert bfs_distance(cat) == n + 1


def test_disjoint_pair_distance():
    cat = enumerate_vertices(cob(2))
    assert shortest_simple_path(cat) == bfs_distance(cat) == 1


def test_delta_to_target_matches_chain_field():
    cfg = qf(2).v2v3
    cat = enumerate_vertices(cfg)
    for i, v in enumerate(cat.vertices):
        assert delta_to_target(cat, i) == chain_distance(cfg, cfg.second - v.chain)


def test_simple_adjacency_implies_disjoint():
    cat = enumerate_vertices(bp(2))
    for i in range(len(cat)):
        for j in range(len(cat)):
            if simple_adjacent(cat, i, j):
                assert disjoint(cat.vertices[i], cat.vertices[j])


def test_errors():
    with pytest.raises(Unreachable):
        shortest_simple_path(enumerate_vertices(bp(2), 1))
    with pytest.raises(TooLarge):
        enumerate_vertices(bp(8))
