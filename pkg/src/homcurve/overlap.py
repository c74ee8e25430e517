"""Overlap function, homological distance, extremal regions and arc classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BigonPresent, NotHomologous
from .surface import (
    AUX,
    FIRST,
    LEFT,
    RIGHT,
    SECOND,
    Configuration,
    EdgeChain,
    FaceChain,
    _UnionFind,
    boundary,
)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def chain_field(cfg: Configuration, chain: EdgeChain) -> tuple[int, ...]:
    """Solve ``boundary(f) == chain`` for an integer function on faces.

    Each connected component of the surface is normalized to minimum zero.
    Raises :class:`NotHomologous` when ``chain`` is not a boundary.
    """
    cmap = cfg.map
    values: list[int | None] = [None] * cmap.face_count
    for root in range(cmap.face_count):
        if values[root] is not None:
            continue
        values[root] = 0
        comp = [root]
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for d in cmap.faces[f]:
                g = cmap.face_of[cmap.twin[d]]
                # f(left(d)) - f(right(d)) = coefficient of the chain along d
                want = values[f] - chain[cmap.edge_of[d]] * cfg.sign(d)
                if values[g] is None:
                    values[g] = want
                    comp.append(g)
                    queue.append(g)
                elif values[g] != want:
                    raise NotHomologous(
                        f"inconsistent overlap values on face {g}: {values[g]} vs {want}")
        low = min(values[f] for f in comp)
        for f in comp:
            values[f] -= low
    return tuple(values)


def chain_distance(cfg: Configuration, chain: EdgeChain) -> int:
    """Maximum of the normalized overlap function of a null-homologous chain."""
    vals = chain_field(cfg, chain)
    return max(vals, default=0)


@dataclass(frozen=True)
class OverlapField:
    cfg: Configuration
    values: tuple[int, ...]

    @property
    def max(self) -> int:
        return max(self.values, default=0)

    @property
    def min(self) -> int:
        return min(self.values, default=0)

    def __getitem__(self, face: int) -> int:
        return self.values[face]

    def level_set(self, at_least: int) -> frozenset[int]:
        return frozenset(f for f, v in enumerate(self.values) if v >= at_least)

    def region_values(self) -> tuple[int, ...]:
        """Value on each region of the complement of the two multicurves."""
        return tuple(self.values[faces[0]] for faces in self.cfg.regions)

    def as_chain(self) -> FaceChain:
        return FaceChain(dict(enumerate(self.values)))


def overlap_field(cfg: Configuration) -> OverlapField:
    return OverlapField(cfg, chain_field(cfg, cfg.second - cfg.first))


def homological_distance(cfg: Configuration) -> int:
    return overlap_field(cfg).max


@dataclass(frozen=True)
class ExtremalRegions:
    smax: frozenset[int]
    smin: frozenset[int]
    smax_boundary: EdgeChain
    smin_boundary: EdgeChain
    horizontal: bool


def extremal_regions(field: OverlapField) -> ExtremalRegions:
    """Faces where the overlap is maximal/minimal and their oriented boundaries.

    Each boundary chain has its region on the left.
    """
    cfg = field.cfg
    top, bottom = field.max, field.min
    smax = frozenset(f for f, v in enumerate(field.values) if v == top)
    smin = frozenset(f for f, v in enumerate(field.values) if v == bottom)
    dmax = boundary(cfg, {f: 1 for f in smax})
    dmin = boundary(cfg, {f: 1 for f in smin})
    arcs = {a.id: a for a in arcs_of(cfg)}
    edge_arc = _edge_to_arc(cfg)
    touched = {edge_arc[e] for e in (set(dmax) | set(dmin)) if e in edge_arc}
    horizontal = all(arcs[i].kind == HORIZONTAL for i in touched)
    return ExtremalRegions(smax, smin, dmax, dmin, horizontal)


# ---------------------------------------------------------------------------
# arcs


@dataclass(frozen=True)
class Arc:
    id: int
    owner: str
    darts: tuple[int, ...]
    start: int | None  # crossing vertex, None for crossing-free curves
    end: int | None
    kind: str
    side: str | None


@dataclass(frozen=True)
class ArcClass:
    owner: str
    kind: str
    side: str | None
    multiplicity: int
    arcs: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.arcs[0]


def _other(owner: str) -> str:
    return SECOND if owner == FIRST else FIRST


def _compute_arcs(cfg: Configuration) -> tuple[Arc, ...]:
    cmap = cfg.map
    crossing = set(cfg.crossings)
    out: list[Arc] = []
    for owner in (FIRST, SECOND):
        other = _other(owner)
        for curve in cfg.owner_curves(owner):
            starts = [i for i, d in enumerate(curve) if cmap.tail(d) in crossing]
            if not starts:
                out.append(Arc(len(out), owner, curve, None, None, HORIZONTAL, None))
                continue
            for j, s in enumerate(starts):
                stop = starts[(j + 1) % len(starts)]
                darts = []
                i = s
                while True:
                    darts.append(curve[i])
                    i = (i + 1) % len(curve)
                    if i == stop:
                        break
                first, last = darts[0], darts[-1]
                vs, ve = cmap.tail(first), cmap.head(last)
                side_start = cfg.side_of(first, *cfg.strand(vs, other))
                side_end = cfg.side_of(cmap.twin[last], *cfg.strand(ve, other))
                if side_start == side_end:
                    kind, side = HORIZONTAL, side_start
                else:
                    kind, side = VERTICAL, None
                out.append(Arc(len(out), owner, tuple(darts), vs, ve, kind, side))
    return tuple(out)


def arcs_of(cfg: Configuration) -> tuple[Arc, ...]:
    """Maximal runs of one multicurve between crossings with the other."""
    cached = cfg.__dict__.get("_arcs")
    if cached is None:
        cached = cfg.__dict__["_arcs"] = _compute_arcs(cfg)
    return cached


def _edge_to_arc(cfg: Configuration) -> dict[int, int]:
    return {cfg.map.edge_of[d]: a.id for a in arcs_of(cfg) for d in a.darts}


def classify_arcs(cfg: Configuration) -> list[ArcClass]:
    """Group arcs into classes of parallel arcs.

    Two arcs with endpoints are parallel when they are opposite sides of a
    rectangle region; crossing-free curves are parallel when they cobound an
    annulus region.  Classes are the transitive closure.
    """
    arcs = arcs_of(cfg)
    edge_arc = _edge_to_arc(cfg)
    uf = _UnionFind(len(arcs))
    for r, cycles in enumerate(cfg.region_boundaries):
        chi = cfg.region_euler(r)
        if chi == 1 and len(cycles) == 1:
            sides = cfg.cycle_sides(cycles[0])
            if len(sides) == 4:
                for i in (0, 1):
                    a = edge_arc[cfg.map.edge_of[sides[i][0]]]
                    b = edge_arc[cfg.map.edge_of[sides[i + 2][0]]]
                    uf.union(a, b)
        elif chi == 0 and len(cycles) == 2 and not any(cfg.cycle_sides(c) for c in cycles):
            a = edge_arc[cfg.map.edge_of[cycles[0][0]]]
            b = edge_arc[cfg.map.edge_of[cycles[1][0]]]
            if arcs[a].owner == arcs[b].owner:
                uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for a in arcs:
        groups.setdefault(uf.find(a.id), []).append(a.id)
    out = []
    for members in sorted(groups.values()):
        rep = arcs[members[0]]
        out.append(ArcClass(rep.owner, rep.kind, rep.side, len(members), tuple(members)))
    return out


def intersection_number(cfg: Configuration) -> int:
    """Number of crossings; equals the geometric intersection number when bigon-free."""
    if cfg.bigons:
        raise BigonPresent(f"{len(cfg.bigons)} bigon region(s); crossing count overestimates i")
    return len(cfg.crossings)


def region_sides(cfg: Configuration) -> list[tuple[int, int, int]]:
    """``(region, euler, sides)`` per region, for reporting."""
    out = []
    for r, cycles in enumerate(cfg.region_boundaries):
        out.append((r, cfg.region_euler(r), sum(len(cfg.cycle_sides(c)) for c in cycles)))
    return out


__all__ = [
    "AUX", "Arc", "ArcClass", "ExtremalRegions", "HORIZONTAL", "LEFT", "OverlapField",
    "RIGHT", "VERTICAL", "arcs_of", "chain_distance", "chain_field", "classify_arcs",
    "extremal_regions", "homological_distance", "intersection_number", "overlap_field",
    "transport_chain",
]


def transport_chain(chain: EdgeChain, src: Configuration, dst: Configuration) -> EdgeChain:
    """Re-express an edge chain of ``src`` in the orientation of ``dst`` (same map)."""
    if src.map != dst.map:
        raise ValueError("configurations live on different maps")
    return EdgeChain({e: c if src.forward[e] == dst.forward[e] else -c for e, c in chain.items()})
