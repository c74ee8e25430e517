"""Brute-force distances over multicurves carried by a configuration.

Every vertex considered here has the form ``m1 + boundary(Z)`` for an
integer function ``Z`` on the complementary regions of ``m1 u m2``.  The
distances are exact over this finite catalog and are upper bounds for the
distance in the full complex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotSimple, TooLarge, Unreachable, Unresolvable
from .overlap import overlap_field
from .surface import FIRST, Configuration, EdgeChain, Multicurve, disjoint, resolve_embedded

MAX_REGIONS = 14

SCOPE_NOTE = ("distances are exact over multicurves carried by m1 u m2 and "
              "upper bounds for the distance in the full complex")


@dataclass(frozen=True)
class VertexCatalog:
    cfg: Configuration
    zmax: int
    vertices: tuple[Multicurve, ...]
    potentials: tuple[tuple[int, ...], ...]  # Z per region, minimum 0
    start: int
    target: int | None

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, chain: EdgeChain) -> int | None:
        for i, v in enumerate(self.vertices):
            if v.chain == chain:
                return i
        return None


def enumerate_vertices(cfg: Configuration, zmax: int | None = None) -> VertexCatalog:
    """All ``m1 + boundary(Z)`` with coefficients in ``{-1, 0, 1}`` and ``0 <= Z <= zmax``."""
    regions = cfg.regions
    if len(regions) > MAX_REGIONS:
        raise TooLarge(f"{len(regions)} regions; the oracle handles at most {MAX_REGIONS}")
    if zmax is None:
        zmax = overlap_field(cfg).max
    if zmax < 0:
        raise ValueError("zmax must be nonnegative")
    cmap = cfg.map
    region_of = cfg.region_of_face

    # curve edges as (left region, right region, allowed Z(left) - Z(right))
    constraints: list[tuple[int, int, frozenset[int]]] = []
    for e in sorted(cfg.curve_edges):
        fwd = cfg.forward[e]
        left, right = region_of[cmap.face_of[fwd]], region_of[cmap.right_face(fwd)]
        allowed = frozenset({-2, -1, 0}) if cfg.owner[e] == FIRST else frozenset({-1, 0, 1})
        constraints.append((left, right, allowed))

    # order regions so that each one is adjacent to an earlier one when possible
    nbrs: dict[int, set[int]] = {r: set() for r in range(len(regions))}
    for a, b, _ in constraints:
        nbrs[a].add(b)
        nbrs[b].add(a)
    order: list[int] = []
    seen: set[int] = set()
    for root in range(len(regions)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            r = queue.popleft()
            order.append(r)
            for s in sorted(nbrs[r]):
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
    pos = {r: i for i, r in enumerate(order)}
    checks: list[list[tuple[int, int, frozenset[int]]]] = [[] for _ in order]
    for a, b, allowed in constraints:
        checks[max(pos[a], pos[b])].append((a, b, allowed))

    found: list[tuple[int, ...]] = []
    z = [0] * len(regions)

    def extend(i: int) -> None:
        if i == len(order):
            if min(z) == 0:
                found.append(tuple(z))
            return
        r = order[i]
        for value in range(zmax + 1):
            z[r] = value
            if all(z[a] - z[b] in allowed for a, b, allowed in checks[i]):
                extend(i + 1)
        z[r] = 0

    extend(0)

    vertices, potentials = [], []
    for pot in sorted(found):
        chain = {}
        for e in cfg.curve_edges:
            fwd = cfg.forward[e]
            c = (1 if cfg.owner[e] == FIRST else 0) \
                + pot[region_of[cmap.face_of[fwd]]] - pot[region_of[cmap.right_face(fwd)]]
            if c:
                chain[e] = c
        try:
            mc = resolve_embedded(cfg, EdgeChain(chain))
        except Unresolvable:
            continue
        vertices.append(mc)
        potentials.append(pot)
    cat = VertexCatalog(cfg, zmax, tuple(vertices), tuple(potentials), 0, None)
    start = cat.index(cfg.first)
    target = cat.index(cfg.second)
    return VertexCatalog(cfg, zmax, tuple(vertices), tuple(potentials), start, target)


def _bfs(catalog: VertexCatalog, adjacent) -> int:
    if catalog.target is None:
        raise Unreachable(f"m2 is not in the catalog for zmax={catalog.zmax}; raise zmax")
    dist = {catalog.start: 0}
    queue = deque([catalog.start])
    while queue:
        i = queue.popleft()
        if i == catalog.target:
            return dist[i]
        for j in range(len(catalog)):
            if j not in dist and adjacent(i, j):
                dist[j] = dist[i] + 1
                queue.append(j)
    raise Unreachable("m2 cannot be reached from m1 inside the catalog")


def _potential_range(catalog: VertexCatalog, i: int, j: int) -> int:
    diff = [b - a for a, b in zip(catalog.potentials[i], catalog.potentials[j])]
    return max(diff) - min(diff)


def simple_adjacent(catalog: VertexCatalog, i: int, j: int) -> bool:
    """Whether vertices ``i`` and ``j`` span a simple edge."""
    if _potential_range(catalog, i, j) > 1:
        return False
    return disjoint(catalog.vertices[i], catalog.vertices[j])


def shortest_simple_path(catalog: VertexCatalog) -> int:
    return _bfs(catalog, lambda i, j: simple_adjacent(catalog, i, j))


def bfs_distance(catalog: VertexCatalog) -> int:
    return _bfs(catalog, lambda i, j: disjoint(catalog.vertices[i], catalog.vertices[j]))


def delta_to_target(catalog: VertexCatalog, i: int) -> int:
    """Overlap maximum between vertex ``i`` and ``m2``: the range of ``f - Z``."""
    field = overlap_field(catalog.cfg).region_values()
    diff = [f - z for f, z in zip(field, catalog.potentials[i])]
    return max(diff) - min(diff)


__all__ = [
    "MAX_REGIONS", "NotSimple", "SCOPE_NOTE", "VertexCatalog", "bfs_distance",
    "delta_to_target", "enumerate_vertices", "shortest_simple_path", "simple_adjacent",
]
