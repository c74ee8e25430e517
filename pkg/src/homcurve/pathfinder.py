"""Middle paths between homologous multicurves and checks on paths.

The middle path from ``m1`` to ``m2`` is read off the overlap function ``f``
(``boundary(f) == m2 - m1``, maximum ``M``):

    gamma_i = m1 + boundary(max(f - (M - i), 0)),

so each step adds the boundary of the superlevel set ``{f >= M - i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateEqual,
    EmptyResult,
    NotDisjoint,
    NotHomologous,
    NotReducedInput,
    NotSimple,
)
from .overlap import chain_distance, chain_field, overlap_field
from .surface import (
    FIRST,
    SECOND,
    Configuration,
    EdgeChain,
    FaceChain,
    Multicurve,
    boundary,
    disjoint,
    face_partition,
    open_euler,
    resolve_embedded,
)

HC = "HC"
CC = "CC"


@dataclass(frozen=True)
class MulticurvePath:
    cfg: Configuration
    vertices: tuple[Multicurve, ...]
    flavor: str = HC
    differences: tuple[EdgeChain, ...] = ()
    witnesses: tuple[FaceChain | None, ...] = ()
    trivial: tuple[tuple[bool, ...], ...] = ()
    construction: str = "custom"

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def chains(self) -> list[EdgeChain]:
        return [v.chain for v in self.vertices]


def make_path(cfg: Configuration, vertices, flavor: str = HC,
              construction: str = "custom") -> MulticurvePath:
    """Package a vertex sequence, computing differences, witnesses and flags."""
    vertices = tuple(vertices)
    diffs = tuple(b.chain - a.chain for a, b in zip(vertices, vertices[1:]))
    witnesses = []
    for d in diffs:
        try:
            witnesses.append(_zero_one_field(cfg, d))
        except NotSimple:
            witnesses.append(None)
    return MulticurvePath(cfg, vertices, flavor, diffs, tuple(witnesses),
                          tuple(trivial_components(v) for v in vertices), construction)


def _component_chain(mc: Multicurve, comp: tuple[int, ...]) -> EdgeChain:
    cfg = mc.cfg
    return EdgeChain({cfg.map.edge_of[d]: cfg.sign(d) for d in comp})


def trivial_components(mc: Multicurve) -> tuple[bool, ...]:
    """Per component: does it bound a disk?"""
    cmap = mc.cfg.map
    out = []
    for comp in mc.components:
        try:
            vals = chain_field(mc.cfg, _component_chain(mc, comp))
        except NotHomologous:
            out.append(False)
            continue
        ones = [f for f, v in enumerate(vals) if v == 1]
        zeros = [f for f, v in enumerate(vals) if v == 0]
        out.append(open_euler(cmap, ones) == 1 or open_euler(cmap, zeros) == 1)
    return tuple(out)


def level_chain(cfg: Configuration, values, threshold: int) -> EdgeChain:
    """``m1 + boundary(max(values - threshold, 0))`` in closed form."""
    cmap = cfg.map
    out = {}
    for e, owner in enumerate(cfg.owner):
        fwd = cfg.forward[e]
        if owner == FIRST and values[cmap.right_face(fwd)] <= threshold:
            out[e] = 1
        elif owner == SECOND and values[cmap.face_of[fwd]] >= threshold + 1:
            out[e] = 1
    return EdgeChain(out)


def middle_path(cfg: Configuration) -> MulticurvePath:
    field = overlap_field(cfg)
    top = field.max
    if top == 0:
        raise DegenerateEqual("the two multicurves coincide; the path is a single vertex")
    vertices = [resolve_embedded(cfg, level_chain(cfg, field.values, top - i))
                for i in range(top + 1)]
    diffs, witnesses = [], []
    for i in range(top):
        z = FaceChain({f: 1 for f in field.level_set(top - i)})
        d = vertices[i + 1].chain - vertices[i].chain
        assert boundary(cfg, z) == d, "middle-path step is not a level-set boundary"
        diffs.append(d)
        witnesses.append(z)
    return MulticurvePath(cfg, tuple(vertices), HC, tuple(diffs), tuple(witnesses),
                          tuple(trivial_components(v) for v in vertices), "middle")


def middle_path_iterative(cfg: Configuration) -> list[EdgeChain]:
    """Chains of the middle path built step by step (reference implementation).

    Each step recomputes the overlap of the current vertex with ``m2`` and
    adds the boundary of the region where it is largest.
    """
    current = cfg.first
    target = cfg.second
    out = [current]
    while current != target:
        vals = chain_field(cfg, target - current)
        top = max(vals)
        z = {f: 1 for f, v in enumerate(vals) if v == top}
        current = current + boundary(cfg, z)
        out.append(current)
    return out


def _zero_one_field(cfg: Configuration, chain: EdgeChain) -> FaceChain:
    try:
        vals = chain_field(cfg, chain)
    except NotHomologous as exc:
        raise NotSimple(f"difference is not a boundary: {exc}") from None
    if max(vals, default=0) > 1:
        raise NotSimple("difference bounds a nested family of subsurfaces, not one subsurface")
    return FaceChain({f: 1 for f, v in enumerate(vals) if v == 1})


def verify_simple_edge(a: Multicurve, b: Multicurve) -> FaceChain:
    """The 0/1 face chain ``Z`` with ``boundary(Z) == b - a``."""
    if not disjoint(a, b):
        raise NotDisjoint("the multicurves cross")
    return _zero_one_field(a.cfg, b.chain - a.chain)


def decompose_edge(a: Multicurve, b: Multicurve) -> list[Multicurve]:
    """Split an edge into simple edges along superlevel sets of its overlap."""
    if not disjoint(a, b):
        raise NotDisjoint("the multicurves cross")
    cfg = a.cfg
    vals = chain_field(cfg, b.chain - a.chain)
    out = [a]
    current = a.chain
    for j in range(1, max(vals, default=0) + 1):
        current = current + boundary(cfg, {f: 1 for f, v in enumerate(vals) if v >= j})
        out.append(resolve_embedded(cfg, current))
    return out


def reverse_path(path: MulticurvePath) -> MulticurvePath:
    """Middle path of the configuration with the two multicurves exchanged."""
    return middle_path(path.cfg.swapped())


def _bounding_region(mc: Multicurve) -> list[int] | None:
    """Edges of the first complementary region bounded consistently by ``mc``."""
    cfg = mc.cfg
    cmap = cfg.map
    labels = face_partition(cmap, mc.edges)
    regions: dict[int, list[int]] = {}
    for f, lab in enumerate(labels):
        regions.setdefault(lab, []).append(f)
    for lab in sorted(regions, key=lambda r: regions[r][0]):
        sides = set()
        edges = []
        for d in mc.darts:
            left = labels[cmap.face_of[d]] == lab
            right = labels[cmap.right_face(d)] == lab
            if left and right:
                sides.add("both")
            elif left:
                sides.add("left")
            elif right:
                sides.add("right")
            else:
                continue
            edges.append(cmap.edge_of[d])
        if edges and len(sides) == 1 and "both" not in sides:
            return edges
    return None


def is_reduced(mc: Multicurve) -> bool:
    return _bounding_region(mc) is None


def reduce_multicurve(mc: Multicurve) -> Multicurve:
    """Delete bounding submulticurves until none is left."""
    while True:
        edges = _bounding_region(mc)
        if edges is None:
            return mc
        chain = EdgeChain({e: c for e, c in mc.chain.items() if e not in set(edges)})
        if not chain:
            raise EmptyResult("the multicurve is null homologous")
        mc = resolve_embedded(mc.cfg, chain)


def cc_geodesic(cfg: Configuration) -> MulticurvePath:
    """Middle path with every vertex reduced, checked edge by edge."""
    for label, chain in (("first", cfg.first), ("second", cfg.second)):
        if not is_reduced(resolve_embedded(cfg, chain)):
            raise NotReducedInput(f"the {label} multicurve is not reduced")
    base = middle_path(cfg)
    vertices = [reduce_multicurve(v) for v in base.vertices]
    for a, b in zip(vertices, vertices[1:]):
        verify_simple_edge(a, b)
    return make_path(cfg, vertices, CC, "cc")


def is_tight(path: MulticurvePath) -> list[bool]:
    """Tightness at each interior index, via disk complements."""
    cfg = path.cfg
    cmap = cfg.map
    out = []
    for i in range(1, path.length):
        union = path.vertices[i - 1].edges | path.vertices[i + 1].edges
        extra = path.vertices[i].edges - union
        if not extra:
            out.append(True)
            continue
        labels = face_partition(cmap, union)
        touched = {labels[cmap.face_of[d]] for e in extra for d in cmap.edge_darts[e]}
        ok = True
        for lab in touched:
            faces = [f for f, l in enumerate(labels) if l == lab]
            if open_euler(cmap, faces, union) != 1:
                ok = False
                break
        out.append(ok)
    return out


@dataclass(frozen=True)
class BoundsReport:
    delta: int
    path_length: int
    lower_bound: Fraction
    upper_bound: int
    K: int
    C: int
    drops: tuple[int, ...]


def bounds_report(cfg: Configuration, path: MulticurvePath) -> BoundsReport:
    delta = overlap_field(cfg).max
    k = -3 * cfg.map.euler
    to_target = [chain_distance(cfg, cfg.second - v.chain) for v in path.vertices]
    drops = tuple(a - b for a, b in zip(to_target, to_target[1:]))
    for d in drops:
        assert d <= k, f"a step dropped the distance by {d} > {k}"
    if path.construction == "middle":
        assert all(d == 1 for d in drops), f"middle-path drops {drops} are not all 1"
    return BoundsReport(delta, path.length, Fraction(delta, k), delta, k, 0, drops)


__all__ = [
    "BoundsReport", "CC", "HC", "MulticurvePath", "bounds_report", "cc_geodesic",
    "decompose_edge", "is_reduced", "is_tight", "level_chain", "make_path", "middle_path",
    "middle_path_iterative", "reduce_multicurve", "reverse_path", "trivial_components",
    "verify_simple_edge",
]
