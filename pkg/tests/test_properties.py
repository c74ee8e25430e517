"""Randomized checks of identities that must hold on every configuration."""

from hypothesis import given, settings, strategies as st

from homcurve.instances import parse, serialize
from homcurve.overlap import chain_field, intersection_number, overlap_field
from homcurve.pathfinder import level_chain, middle_path
from homcurve.surface import LEFT, RIGHT, CombinatorialMap, Configuration, FaceChain, boundary
from homcurve.threespace import euler_integral, preimage_field

from conftest import all_fixtures

FIXTURES = all_fixtures()
fixture = st.sampled_from(FIXTURES).map(lambda pair: pair[1])


def relabel(cfg: Configuration, perm: list[int]) -> Configuration:
    """The same configuration with dart ``d`` renamed ``perm[d]``."""
    cmap = cfg.map
    n = cmap.dart_count
    twin, nxt = [0] * n, [0] * n
    for d in range(n):
        twin[perm[d]] = perm[cmap.twin[d]]
        nxt[perm[d]] = perm[cmap.next[d]]
    new = CombinatorialMap(twin, nxt)
    owner = [None] * new.edge_count
    forward = [None] * new.edge_count
    for e, fwd in enumerate(cfg.forward):
        e2 = new.edge_of[perm[fwd]]
        owner[e2] = cfg.owner[e]
        forward[e2] = perm[fwd]
    return Configuration(new, owner, forward)


@st.composite
def relabelled(draw):
    name, cfg = draw(st.sampled_from(FIXTURES))
    perm = draw(st.permutations(range(cfg.map.dart_count)))
    return cfg, relabel(cfg, list(perm))


@settings(max_examples=30, deadline=None)
@given(relabelled())
def test_invariants_survive_relabelling(pair):
    cfg, other = pair
    assert other.map.euler == cfg.map.euler
    assert overlap_field(other).max == overlap_field(cfg).max
    assert intersection_number(other) == intersection_number(cfg)
    assert middle_path(other).length == middle_path(cfg).length


@settings(max_examples=30, deadline=None)
@given(relabelled())
def test_serialization_round_trip(pair):
    _, cfg = pair
    text = serialize(cfg)
    assert parse(text) == cfg
    assert serialize(parse(text)) == text


@settings(max_examples=50, deadline=None)
@given(fixture, st.data())
def test_face_chain_recovered_from_its_boundary(cfg, data):
    faces = cfg.map.face_count
    z = data.draw(st.lists(st.integers(-3, 3), min_size=faces, max_size=faces))
    vals = chain_field(cfg, boundary(cfg, FaceChain(dict(enumerate(z)))))
    low = min(z)
    assert list(vals) == [v - low for v in z]


@settings(max_examples=50, deadline=None)
@given(fixture, st.data())
def test_level_chain_closed_form(cfg, data):
    field = overlap_field(cfg)
    t = data.draw(st.integers(-1, field.max + 1))
    cut = FaceChain({f: max(v - t, 0) for f, v in enumerate(field.values)})
    assert level_chain(cfg, field.values, t) == cfg.first + boundary(cfg, cut)


@settings(max_examples=50, deadline=None)
@given(fixture, st.data())
def test_monotone_preimage_is_shifted_overlap(cfg, data):
    path = middle_path(cfg)
    top = path.length
    k = data.draw(st.integers(0, top))
    pre = preimage_field(path, [LEFT] * k + [RIGHT] * (top - k))
    assert list(pre.values) == [v + k - top for v in overlap_field(cfg).values]


@settings(max_examples=50, deadline=None)
@given(fixture, st.data())
def test_euler_integral_is_sign_symmetric(cfg, data):
    field = overlap_field(cfg)
    c = data.draw(st.integers(-field.max, 0))
    vals = [v + c for v in field.values]
    assert euler_integral(vals, cfg.map) == euler_integral([-v for v in vals], cfg.map)
