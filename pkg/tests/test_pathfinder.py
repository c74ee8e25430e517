from fractions import Fraction

import pytest

from homcurve.errors import DegenerateEqual, EmptyResult, NotDisjoint, NotReducedInput, NotSimple
from homcurve.grid import Grid
from homcurve.instances import BP_ORIGAMI
from homcurve.overlap import extremal_regions, overlap_field
from homcurve.pathfinder import (
    CC,
    HC,
    bounds_report,
    cc_geodesic,
    decompose_edge,
    is_reduced,
    is_tight,
    make_path,
    middle_path,
    middle_path_iterative,
    reduce_multicurve,
    reverse_path,
    verify_simple_edge,
)
from homcurve.surface import EdgeChain, FaceChain, boundary, disjoint, resolve_embedded

from conftest import all_fixtures, bp, cob, qf


def strip_lines(count=4, k=6):
    g = Grid(BP_ORIGAMI, k)
    return g, [g.horizontal_line(0, j) for j in range(1, count + 1)]


def lines_cfg(first_idx, second_idx, count=4):
    g, lines = strip_lines(count)
    first = [d for i in first_idx for d in lines[i]]
    second = [d for i in second_idx for d in lines[i]]
    extra = [d for i in range(count) if i not in first_idx + second_idx for d in lines[i]]
    return g.configuration(first, second, extra), lines


def chain_of(cfg, darts, sign=1):
    return EdgeChain({cfg.map.edge_of[d]: sign * cfg.sign(d) for d in darts})


def with_trivial_loop():
    """m1 = vertical curve plus a small disk-bounding loop; m2 = parallel copy."""
    g = Grid(BP_ORIGAMI, 6)
    a = g.walk(g.cell(0, 1, 0), "N" * 24)
    loop = g.walk(g.cell(0, 3, 3), "ENWS")
    b = g.walk(g.cell(0, 5, 0), "N" * 24)
    return g.configuration(a + loop, b)


@pytest.mark.parametrize("name, cfg", all_fixtures())
def test_middle_path_matches_iterative_and_is_simple(name, cfg):
    path = middle_path(cfg)
    assert path.length == overlap_field(cfg).max
    assert path.chains == middle_path_iterative(cfg)
    assert path.vertices[0].chain == cfg.first and path.vertices[-1].chain == cfg.second
    for a, b, z in zip(path.vertices, path.vertices[1:], path.witnesses):
        assert verify_simple_edge(a, b) == z
        assert boundary(cfg, z) == b.chain - a.chain


def test_middle_path_lengths():
    assert middle_path(bp(5)).length == 6
    assert middle_path(bp(2)).length == 3
    assert middle_path(cob(1)).length == 1


def test_first_step_is_smax():
    cfg = bp(2)
    path = middle_path(cfg)
    smax = extremal_regions(overlap_field(cfg)).smax
    assert verify_simple_edge(path.vertices[0], path.vertices[1]) == FaceChain({f: 1 for f in smax})


def test_degenerate_equal():
    g = Grid(BP_ORIGAMI, 2)
    with pytest.raises(DegenerateEqual):
        middle_path(g.configuration([], []))


def test_verify_simple_edge_cases():
    cfg, lines = lines_cfg([1, 2], [0, 3])
    gamma = resolve_embedded(cfg, cfg.first)
    gamma2 = resolve_embedded(cfg, cfg.second)
    assert verify_simple_edge(gamma, gamma) == FaceChain()
    with pytest.raises(NotSimple):
        verify_simple_edge(gamma, gamma2)
    pieces = decompose_edge(gamma, gamma2)
    assert len(pieces) == 3  # two simple edges
    for a, b in zip(pieces, pieces[1:]):
        verify_simple_edge(a, b)
    assert pieces[-1].chain == gamma2.chain
    assert decompose_edge(gamma, gamma) == [gamma]


def test_decompose_simple_edge_is_unchanged():
    cfg = cob(1)
    a, b = resolve_embedded(cfg, cfg.first), resolve_embedded(cfg, cfg.second)
    assert [p.chain for p in decompose_edge(a, b)] == [a.chain, b.chain]


def test_crossing_curves_are_not_an_edge():
    cfg = bp(1)
    a, b = resolve_embedded(cfg, cfg.first), resolve_embedded(cfg, cfg.second)
    assert not disjoint(a, b)
    with pytest.raises(NotDisjoint):
        verify_simple_edge(a, b)
    with pytest.raises(NotDisjoint):
        decompose_edge(a, b)


@pytest.mark.parametrize("cfg", [bp(1), bp(3), qf(2).v1v2, qf(2).v2v3, cob(2)])
def test_reverse_path(cfg):
    path = middle_path(cfg)
    rev = reverse_path(path)
    assert rev.chains == path.chains[::-1]


def test_reduce_multicurve():
    cfg = with_trivial_loop()
    m1 = resolve_embedded(cfg, cfg.first)
    assert len(m1.components) == 2 and not is_reduced(m1)
    reduced = reduce_multicurve(m1)
    assert len(reduced.components) == 1 and is_reduced(reduced)
    assert reduce_multicurve(reduced) is reduced

    base = resolve_embedded(bp(2), bp(2).first)
    assert reduce_multicurve(base) is base

    lcfg, lines = lines_cfg([1], [2])
    pair = resolve_embedded(lcfg, chain_of(lcfg, lines[1]) - chain_of(lcfg, lines[2]))
    with pytest.raises(EmptyResult):
        reduce_multicurve(pair)


def test_trivial_curves_are_flagged_and_removable():
    cfg = with_trivial_loop()
    path = middle_path(cfg)
    flagged = [i for i, flags in enumerate(path.trivial) if any(flags)]
    assert 0 in flagged
    for i in flagged:
        v = path.vertices[i]
        cleaned = reduce_multicurve(v)
        assert not any(make_path(cfg, [cleaned]).trivial[0])
    with pytest.raises(NotReducedInput):
        cc_geodesic(cfg)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cc_geodesic_bounding_pair(n):
    path = cc_geodesic(bp(n))
    assert path.flavor == CC and path.length == n + 1
    assert all(is_reduced(v) for v in path.vertices)


def test_cc_geodesic_small_cases():
    assert cc_geodesic(cob(1)).length == 1
    cfg = qf(2).v2v3
    assert cc_geodesic(cfg).length == overlap_field(cfg).max


@pytest.mark.parametrize("name, cfg", all_fixtures())
def test_middle_paths_are_tight(name, cfg):
    assert all(is_tight(middle_path(cfg)))


def test_untight_path():
    cfg, lines = lines_cfg([0], [2])
    vs = [resolve_embedded(cfg, chain_of(cfg, lines[i])) for i in (0, 1, 2)]
    path = make_path(cfg, vs, HC)
    assert is_tight(path) == [False]
    assert is_tight(make_path(cfg, vs[:2], HC)) == []


def test_bounds_report():
    cfg = bp(5)
    rep = bounds_report(cfg, middle_path(cfg))
    assert (rep.delta, rep.path_length, rep.upper_bound) == (6, 6, 6)
    assert rep.lower_bound == Fraction(6, 12) and rep.K == 12 and rep.C == 0
    assert rep.drops == (1,) * 6
    rep = bounds_report(cob(1), middle_path(cob(1)))
    assert rep.lower_bound == Fraction(1, 12) and rep.upper_bound == 1
    rep = bounds_report(qf(2).v1v2, middle_path(qf(2).v1v2))
    assert rep.drops == (1, 1, 1)
