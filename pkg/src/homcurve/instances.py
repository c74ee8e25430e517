"""Parametric example configurations and the instance file format.

Generated curves are drawn as lattice paths on subdivided square-tiled
surfaces (see :mod:`homcurve.grid`) and then simplified to a small map.

* bounding pair: genus 3; ``c1`` crosses the two curves ``t1``, ``t2`` of a
  bounding pair once each and ``c2`` is ``c1`` twisted ``n`` times around
  ``t1`` and ``-n`` times around ``t2``.
* quasi-flat: genus 4 with two bounding pairs ``(t1, t2)`` and ``(t3, t4)``;
  ``v2`` and ``v3`` are ``v1`` twisted around the first and second pair.
* disjoint cobounding: two disjoint homologous curves cobounding a
  subsurface of a chosen genus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InstanceSyntaxError, OddParameter, SemanticError, TopologyError
from .grid import Grid, Origami, column_curve_moves
from .overlap import overlap_field
from .surface import (
    AUX,
    FIRST,
    OWNERS,
    SECOND,
    CombinatorialMap,
    Configuration,
    _UnionFind,
    open_euler,
)

BOUNDING_PAIR = "BoundingPair"
QUASI_FLAT = "QuasiFlat"
DISJOINT_COBOUNDING = "DisjointCobounding"

# Genus 3, six squares.  Cutting along the midlines of the strips through
# squares 0 and 5 leaves two genus-one pieces, so those midlines are a
# bounding pair; the column (0, 4, 5, 2) crosses each of them once.
BP_ORIGAMI = Origami((3, 5, 2, 0, 4, 1), (4, 3, 0, 1, 5, 2))
BP_COLUMN = (0, 4, 5, 2)
BP_T1, BP_T2 = 0, 5

# Genus 4, nine squares.  The strip midlines through squares 0 and 5 bound a
# genus-one piece, those through 1 and 4 another, and all four together cut
# off a four-holed sphere.
QF_ORIGAMI = Origami((7, 1, 6, 3, 4, 8, 2, 0, 5), (1, 2, 4, 0, 5, 3, 6, 8, 7))
QF_COLUMN = (0, 1, 2, 4, 5, 3)
QF_T1, QF_T2, QF_T3, QF_T4 = 0, 5, 1, 4


def _twist_spirals(ta: int, tb: int, west: int, east: int, n: int) -> dict:
    """Spirals for ``n`` twists around ``ta`` and ``-n`` around ``tb``.

    The twisted curve sits at column ``east`` outside the stretch from ``ta``
    to ``tb`` and at ``west`` inside it; each spiral crosses the untwisted
    vertical line between the two columns exactly ``n`` times.
    """
    return {
        ta: ("E", [east - j for j in range(1, n + 1)] + [west]),
        tb: ("W", [west + j for j in range(1, n + 1)] + [east]),
    }


def _vertical(grid: Grid, column: tuple[int, ...], x: int) -> list[int]:
    return grid.walk(grid.cell(column[0], x, 0), "N" * (len(column) * grid.k))


def _twisted(grid: Grid, column: tuple[int, ...], spirals: dict, east: int) -> list[int]:
    moves = column_curve_moves(grid, column, east, spirals)
    return grid.walk(grid.cell(column[0], east, 0), moves)


def gen_bounding_pair(n: int, simplify: bool = True) -> Configuration:
    """``c1`` and its image under ``n`` twists about ``t1`` and ``-n`` about ``t2``."""
    if n < 1:
        raise ValueError("bounding-pair family needs n >= 1")
    k = 2 * n + 4
    west, x0, east = 1, n + 2, 2 * n + 3
    grid = Grid(BP_ORIGAMI, k)
    c1 = _vertical(grid, BP_COLUMN, x0)
    c2 = _twisted(grid, BP_COLUMN, _twist_spirals(BP_T1, BP_T2, west, east, n), east)
    cfg = grid.configuration(c1, c2)
    return simplify_configuration(cfg) if simplify else cfg


class QuasiFlat(NamedTuple):
    v1v2: Configuration
    v1v3: Configuration
    v2v3: Configuration


def gen_quasiflat(n: int, simplify: bool = True) -> QuasiFlat:
    """Pairwise configurations of ``v1``, ``v2``, ``v3``.

    With ``simplify=False`` all three share one underlying map, so chains
    from different configurations can be compared (see
    :func:`homcurve.overlap.transport_chain`).
    """
    if n < 2 or n % 2:
        raise OddParameter(f"quasi-flat family needs an even n >= 2, got {n}")
    gap = n + 1
    k = 5 * gap + 2
    q3, q2, x0, p3, p2 = (1 + i * gap for i in range(5))
    grid = Grid(QF_ORIGAMI, k)
    v1 = _vertical(grid, QF_COLUMN, x0)
    v2 = _twisted(grid, QF_COLUMN, _twist_spirals(QF_T1, QF_T2, q2, p2, n), p2)
    v3 = _twisted(grid, QF_COLUMN, _twist_spirals(QF_T3, QF_T4, q3, p3, n), p3)
    cfgs = [grid.configuration(a, b, extra) for a, b, extra in
            ((v1, v2, v3), (v1, v3, v2), (v2, v3, v1))]
    if simplify:
        cfgs = [simplify_configuration(c) for c in cfgs]
    return QuasiFlat(*cfgs)


def gen_disjoint_cobounding(genus_of_region: int, simplify: bool = True) -> Configuration:
    """Disjoint homologous curves whose overlap is 1 on a region of the given genus.

    Supported region genera are 0 (annulus), 1 and 2.
    """
    if genus_of_region == 0:
        grid = Grid(BP_ORIGAMI, 4)
        a, b = grid.horizontal_line(BP_T1, 2), grid.horizontal_line(BP_T1, 1)
    elif genus_of_region == 1:
        grid = Grid(BP_ORIGAMI, 4)
        a, b = grid.horizontal_line(BP_T1, 2), grid.horizontal_line(BP_T2, 2)
    elif genus_of_region == 2:
        grid = Grid(QF_ORIGAMI, 4)
        a, b = grid.horizontal_line(QF_T1, 2), grid.horizontal_line(QF_T2, 2)
    else:
        raise ValueError(f"region genus {genus_of_region} is not available (0, 1 or 2)")
    cfg = grid.configuration(a, b)
    field = overlap_field(cfg)
    top = [f for f, v in enumerate(field.values) if v == 1]
    if open_euler(cfg.map, top) != -2 * genus_of_region:
        cfg = cfg.swapped()
    return simplify_configuration(cfg) if simplify else cfg


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int = 0
    genus: int = 0

    def __post_init__(self):
        if self.family == BOUNDING_PAIR:
            if self.n < 1:
                raise ValueError("BoundingPair needs n >= 1")
            object.__setattr__(self, "genus", 3)
        elif self.family == QUASI_FLAT:
            if self.n < 2 or self.n % 2:
                raise OddParameter(f"QuasiFlat needs an even n >= 2, got {self.n}")
            object.__setattr__(self, "genus", 4)
        elif self.family == DISJOINT_COBOUNDING:
            if self.n < 0:
                raise ValueError("region genus must be nonnegative")
            object.__setattr__(self, "genus", 4 if self.n == 2 else 3)
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def build(self):
        if self.family == BOUNDING_PAIR:
            return gen_bounding_pair(self.n)
        if self.family == QUASI_FLAT:
            return gen_quasiflat(self.n)
        return gen_disjoint_cobounding(self.n)


# ---------------------------------------------------------------------------
# simplification


class _MutableMap:
    """Dart arrays supporting edge deletion and vertex smoothing."""

    def __init__(self, cfg: Configuration):
        m = cfg.map
        self.twin = list(m.twin)
        self.next = list(m.next)
        self.prev = list(m.prev)
        self.alive = [True] * m.dart_count
        self.owner = list(cfg.dart_owner)
        self.forward = [cfg.forward[m.edge_of[d]] == d for d in range(m.dart_count)]

    def delete_edge(self, d: int) -> None:
        for x in (d, self.twin[d]):
            p, q = self.prev[x], self.next[x]
            if p != x:
                self.next[p] = q
                self.prev[q] = p
            self.alive[x] = False

    def degree(self, d: int) -> int:
        count, x = 1, self.next[d]
        while x != d:
            count += 1
            x = self.next[x]
        return count

    def smooth(self, a: int) -> bool:
        """Remove the degree-2 vertex at the tail of ``a`` if that keeps things simple."""
        b = self.next[a]
        if b == a or self.next[b] != a:
            return False
        ta, tb = self.twin[a], self.twin[b]
        if ta == b or self.owner[a] != self.owner[b]:
            return False
        va, vb = self._vertex(ta), self._vertex(tb)
        here = self._vertex(a)
        if va == here or vb == here or va == vb:
            return False
        if self.owner[a] != AUX and self.forward[ta] != self.forward[b]:
            return False
        self.twin[ta], self.twin[tb] = tb, ta
        self.forward[tb] = not self.forward[ta]
        self.alive[a] = self.alive[b] = False
        return True

    def _vertex(self, d: int) -> int:
        best, x = d, self.next[d]
        while x != d:
            best = min(best, x)
            x = self.next[x]
        return best

    def build(self) -> Configuration:
        live = [d for d, ok in enumerate(self.alive) if ok]
        index = {d: i for i, d in enumerate(live)}
        twin = [index[self.twin[d]] for d in live]
        nxt = [index[self.next[d]] for d in live]
        cmap = CombinatorialMap(twin, nxt)
        owner, forward = [], []
        for lo, hi in cmap.edge_darts:
            old = live[lo]
            owner.append(self.owner[old])
            forward.append(lo if self.forward[old] else hi)
        return Configuration(cmap, owner, forward)


def simplify_configuration(cfg: Configuration) -> Configuration:
    """Shrink the scaffolding without changing the surface or the curves.

    Scaffold edges separating two different faces are deleted (merging two
    disks), pendant scaffold edges are pruned, and degree-2 vertices between
    two edges of the same kind are smoothed.  Smoothing never creates a loop,
    so every crossing-free curve keeps two marker vertices.
    """
    m = cfg.map
    mm = _MutableMap(cfg)
    uf = _UnionFind(m.face_count)
    for e, (lo, hi) in enumerate(m.edge_darts):
        if cfg.owner[e] == AUX and uf.union(m.face_of[lo], m.face_of[hi]):
            mm.delete_edge(lo)

    changed = True
    while changed:
        changed = False
        for d in range(m.dart_count):
            if mm.alive[d] and mm.owner[d] == AUX and mm.next[d] == d:
                mm.delete_edge(d)
                changed = True

    for d in range(m.dart_count):
        if mm.alive[d]:
            mm.smooth(d)
    return mm.build()


# ---------------------------------------------------------------------------
# instance file format


def serialize(cfg: Configuration) -> str:
    """Deterministic JSON text for a configuration."""
    m = cfg.map
    lines = [
        "{",
        f'  "dart_count": {m.dart_count},',
        f'  "twin": {json.dumps(list(m.twin))},',
        f'  "next": {json.dumps(list(m.next))},',
        '  "edges": [',
    ]
    rows = []
    for e, (lo, hi) in enumerate(m.edge_darts):
        rows.append("    " + json.dumps(
            {"darts": [lo, hi], "owner": cfg.owner[e], "forward": cfg.forward[e]}))
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int_list(doc: dict, key: str) -> list[int]:
    value = doc.get(key)
    if not isinstance(value, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise SemanticError(f"{key!r} must be an array of integers", key)
    return value


def parse(text: str) -> Configuration:
    """Read the JSON instance format; raises InstanceSyntaxError or SemanticError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SemanticError("top level must be an object", "")
    count = doc.get("dart_count")
    if not isinstance(count, int) or isinstance(count, bool) or count < 0:
        raise SemanticError("'dart_count' must be a nonnegative integer", "dart_count")
    twin = _int_list(doc, "twin")
    nxt = _int_list(doc, "next")
    for key, arr in (("twin", twin), ("next", nxt)):
        if len(arr) != count:
            raise SemanticError(f"{key!r} has {len(arr)} entries, expected {count}", key)
    try:
        cmap = CombinatorialMap(twin, nxt)
    except TopologyError as exc:
        field = "next" if "next" in str(exc) else "twin"
        raise SemanticError(str(exc), field) from None

    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise SemanticError("'edges' must be an array", "edges")
    owner: list[str | None] = [None] * cmap.edge_count
    forward = [lo for lo, _ in cmap.edge_darts]
    for i, item in enumerate(edges):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise SemanticError("edge entry must be an object", where)
        darts = item.get("darts")
        if (not isinstance(darts, list) or len(darts) != 2
                or not all(isinstance(x, int) and 0 <= x < count for x in darts)
                or cmap.twin[darts[0]] != darts[1]):
            raise SemanticError("'darts' must be a pair of twin darts", where + ".darts")
        e = cmap.edge_of[darts[0]]
        own = item.get("owner")
        if own not in OWNERS:
            raise SemanticError(f"owner must be one of {', '.join(OWNERS)}", where + ".owner")
        if owner[e] is not None:
            raise SemanticError(f"edge {darts} listed twice", where)
        fwd = item.get("forward", darts[0])
        if fwd not in darts:
            raise SemanticError("'forward' must be one of the edge's darts", where + ".forward")
        owner[e] = own
        forward[e] = fwd
    missing = [e for e, o in enumerate(owner) if o is None]
    if missing:
        lo, hi = cmap.edge_darts[missing[0]]
        raise SemanticError(f"owner missing for edge [{lo}, {hi}]", "edges")
    return Configuration(cmap, owner, forward)


__all__ = [
    "BOUNDING_PAIR", "DISJOINT_COBOUNDING", "FIRST", "GeneratorSpec", "QUASI_FLAT",
    "QuasiFlat", "SECOND", "gen_bounding_pair", "gen_disjoint_cobounding", "gen_quasiflat",
    "parse", "serialize", "simplify_configuration",
]
