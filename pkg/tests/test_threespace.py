import itertools

import pytest

from homcurve.errors import LengthMismatch, NonSimplePath, SelfTouchingRegion
from homcurve.grid import Grid
from homcurve.overlap import overlap_field
from homcurve.pathfinder import make_path, middle_path
from homcurve.surface import LEFT, RIGHT, resolve_embedded
from homcurve.threespace import euler_integral, minimal_genus, preimage_field, trace_surface

from conftest import TORUS, bp, cob, qf
from test_pathfinder import lines_cfg


def closure_cells(cmap, faces):
    """V - E + F of the closure of a face set, counted directly."""
    faces = set(faces)
    darts = [d for f in faces for d in cmap.faces[f]]
    verts = {cmap.vertex_of[d] for d in darts}
    edges = {frozenset((d, cmap.twin[d])) for d in darts}
    return len(verts) - len(edges) + len(faces)


def test_preimage_fields():
    cfg = bp(2)
    path = middle_path(cfg)
    f = overlap_field(cfg)
    left = preimage_field(path, [LEFT] * 3)
    right = preimage_field(path, [RIGHT] * 3)
    assert left.values == f.values and left.max == 3
    assert right.values == tuple(v - 3 for v in f.values)
    one = preimage_field(middle_path(cob(1)), [LEFT])
    assert set(one.values) == {0, 1}


def test_preimage_errors():
    path = middle_path(bp(1))
    with pytest.raises(LengthMismatch):
        preimage_field(path, [LEFT])
    with pytest.raises(ValueError):
        preimage_field(path, [LEFT, "up"])
    cfg, lines = lines_cfg([1, 2], [0, 3])
    bad = make_path(cfg, [resolve_embedded(cfg, cfg.first), resolve_embedded(cfg, cfg.second)])
    with pytest.raises(NonSimplePath):
        preimage_field(bad, [LEFT])
    with pytest.raises(NonSimplePath):
        trace_surface(bad, [LEFT])


def test_euler_integral_basics():
    g = Grid(TORUS, 3)
    m = g.map
    assert euler_integral([1] + [0] * (m.face_count - 1), m) == 1
    assert euler_integral([0] * m.face_count, m) == 0
    assert euler_integral([2] + [0] * (m.face_count - 1), m) == 2
    assert euler_integral([-1] + [0] * (m.face_count - 1), m) == 1
    pinched = [0] * m.face_count
    pinched[m.face_of[g.h_dart(g.cell(0, 0, 0), True)]] = 1
    pinched[m.face_of[g.h_dart(g.cell(0, 1, 1), True)]] = 1
    with pytest.raises(SelfTouchingRegion):
        euler_integral(pinched, m)


def test_euler_integral_of_overlap_matches_level_counts():
    cfg = bp(2)
    f = overlap_field(cfg)
    expected = sum(closure_cells(cfg.map, f.level_set(j)) for j in range(1, f.max + 1))
    assert euler_integral(f) == expected


def test_trace_surface_of_cobounded_region():
    path = middle_path(cob(1))
    s = trace_surface(path, [LEFT])
    assert (s.euler, s.boundary_count, s.components, s.genus_per_component) == (-2, 2, 1, (1,))
    s0 = trace_surface(middle_path(cob(0)), [LEFT])
    assert (s0.euler, s0.genus_per_component) == (0, (0,))


def test_trace_all_left_matches_integral():
    for cfg in (bp(1), bp(2), qf(2).v2v3):
        path = middle_path(cfg)
        s = trace_surface(path, [LEFT] * path.length)
        assert s.euler == euler_integral(overlap_field(cfg))


def test_trace_genus_formula():
    cfg = bp(3)
    path = middle_path(cfg)
    for choice in itertools.product((LEFT, RIGHT), repeat=path.length):
        s = trace_surface(path, choice)
        assert s.boundary_count == 2
        assert 2 * s.components - 2 * sum(s.genus_per_component) - s.boundary_count == s.euler


def test_minimal_genus_small_cases():
    s = minimal_genus(bp(1))
    assert [c for c, _ in s.integrals] == [-2, -1, 0]
    assert s.euler == max(v for _, v in s.integrals)
    assert s.shift == -1 and s.genus_per_component == (1,)

    c = minimal_genus(cob(2))
    assert c.shift in (-1, 0) and c.abs_euler == 2
    assert minimal_genus(cob(0)).euler == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sweep_is_palindromic_for_symmetric_family(n):
    vals = [v for _, v in minimal_genus(bp(n)).integrals]
    assert vals == vals[::-1]


def test_swapping_reflects_the_sweep():
    cfg = qf(2).v2v3
    a = [v for _, v in minimal_genus(cfg).integrals]
    b = [v for _, v in minimal_genus(cfg.swapped()).integrals]
    assert a == b[::-1]
