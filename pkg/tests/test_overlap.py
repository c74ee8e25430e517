import pytest

from homcurve.errors import BigonPresent, NotHomologous
from homcurve.grid import Grid
from homcurve.instances import BP_ORIGAMI
from homcurve.overlap import (
    HORIZONTAL,
    VERTICAL,
    arcs_of,
    chain_distance,
    classify_arcs,
    extremal_regions,
    homological_distance,
    intersection_number,
    overlap_field,
    transport_chain,
)
from homcurve.surface import FIRST, LEFT, RIGHT, SECOND, boundary

from conftest import all_fixtures, bp, bumped_pair, cob, qf


@pytest.mark.parametrize("name, cfg", all_fixtures())
def test_field_solves_boundary_equation(name, cfg):
    f = overlap_field(cfg)
    assert f.min == 0
    assert boundary(cfg, f.as_chain()) == cfg.second - cfg.first


def test_non_homologous_pair():
    g = Grid(BP_ORIGAMI, 4)
    v = g.walk(g.cell(0, 1, 0), "N" * 16)
    h = g.horizontal_line(0, 2)
    with pytest.raises(NotHomologous):
        overlap_field(g.configuration(v, h))


def test_bounding_pair_distances():
    for n in (1, 2, 5):
        assert homological_distance(bp(n)) == n + 1
        assert intersection_number(bp(n)) == 2 * n


def test_disjoint_pair_field_is_zero_one():
    for g in (0, 1, 2):
        f = overlap_field(cob(g))
        assert set(f.values) == {0, 1} and f.max == 1


def test_swapped_field_is_reflected():
    cfg = bp(3)
    f = overlap_field(cfg)
    g = overlap_field(cfg.swapped())
    assert all(a + b == f.max for a, b in zip(f.values, g.values))


def test_extremal_regions_on_smallest_bounding_pair():
    cfg = bp(1)
    ext = extremal_regions(overlap_field(cfg))
    assert len(ext.smax) == 1 and ext.horizontal
    assert boundary(cfg, {f: 1 for f in ext.smax}) == ext.smax_boundary
    e2a = {cfg.map.edge_of[d]: a for a in arcs_of(cfg) for d in a.darts}
    on_boundary = {e2a[e] for e in ext.smax_boundary}
    assert sorted(a.owner for a in on_boundary) == [FIRST, SECOND]
    sides = {a.owner: a.side for a in on_boundary}
    # the first multicurve's arc on the boundary of S_max lies left of the second
    assert sides == {FIRST: LEFT, SECOND: RIGHT}
    assert all(a.kind == HORIZONTAL for a in on_boundary)


def test_disjoint_pair_smax_boundary_is_difference():
    cfg = cob(1)
    ext = extremal_regions(overlap_field(cfg))
    assert ext.smax_boundary == cfg.second - cfg.first


def test_arc_kinds_on_twist_family():
    arcs = arcs_of(bp(3))
    assert len(arcs) == 12  # two arcs per crossing
    assert {a.kind for a in arcs} == {HORIZONTAL, VERTICAL}


@pytest.mark.parametrize("name, cfg", all_fixtures())
def test_arc_class_bound(name, cfg):
    bound = -3 * cfg.map.euler
    classes = classify_arcs(cfg)
    assert len(classes) <= bound
    assert sum(c.multiplicity for c in classes) == len(arcs_of(cfg))
    for owner in (FIRST, SECOND):
        assert sum(1 for c in classes if c.owner == owner) <= bound


def test_bigon_blocks_intersection_number():
    with pytest.raises(BigonPresent):
        intersection_number(bumped_pair())


def test_transport_chain_between_quasiflat_pairs():
    from homcurve.instances import gen_quasiflat
    q = gen_quasiflat(2, simplify=False)
    assert q.v1v2.map is q.v1v3.map or q.v1v2.map == q.v1v3.map
    chain = q.v1v2.second
    back = transport_chain(transport_chain(chain, q.v1v2, q.v1v3), q.v1v3, q.v1v2)
    assert back == chain
    assert chain_distance(q.v1v3, q.v1v3.first - q.v1v3.first) == 0


def test_quasiflat_distances():
    for cfg in qf(2):
        assert homological_distance(cfg) == 3
