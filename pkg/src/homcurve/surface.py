"""Combinatorial maps carrying two oriented multicurves.

A :class:`CombinatorialMap` is a rotation system: darts, a fixed-point-free
involution ``twin`` pairing darts into edges and a permutation ``next``
rotating darts about their common vertex.  The face traced by
``d -> next(twin(d))`` is the face on the LEFT of ``d``; this is the only
left/right convention used anywhere in the package.  Consequently, the darts
that follow an outgoing dart ``o`` in ``next`` order (until the dart of the
incoming half of the same strand) lie on the RIGHT of the strand.

A :class:`Configuration` labels each edge as belonging to the first
multicurve, the second multicurve, or to the auxiliary scaffold.  Scaffold
edges carry no curve; they only exist so that every face of the map is a
disk while the complementary regions of ``m1 | m2`` may have topology.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    CoefficientOutOfRange,
    FixedPointInTwin,
    MalformedPermutation,
    SelfTouchingRegion,
    UnknownFace,
    Unresolvable,
)

FIRST = "first"
SECOND = "second"
AUX = "aux"
OWNERS = (FIRST, SECOND, AUX)

LEFT = "left"
RIGHT = "right"


def _orbits(perm: list[int]) -> tuple[list[int], list[list[int]]]:
    label = [-1] * len(perm)
    orbits = []
    for start in range(len(perm)):
        if label[start] != -1:
            continue
        orbit = []
        d = start
        while label[d] == -1:
            label[d] = len(orbits)
            orbit.append(d)
            d = perm[d]
        orbits.append(orbit)
    return label, orbits


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def labels(self) -> list[int]:
        """Dense labels ordered by smallest member."""
        mapping: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in mapping:
                mapping[r] = len(mapping)
            out.append(mapping[r])
        return out


class CombinatorialMap:
    """Rotation system of a closed oriented surface with an embedded graph.

    Vertices, edges and faces are numbered in order of their smallest dart.
    Edge ``e`` has darts ``edge_darts[e] == (lo, hi)`` with ``lo < hi``.
    """

    def __init__(self, twin: Iterable[int], next: Iterable[int]):
        twin = list(twin)
        nxt = list(next)
        n = len(twin)
        if len(nxt) != n:
            raise MalformedPermutation(
                f"twin has {n} entries but next has {len(nxt)}")
        for name, perm in (("twin", twin), ("next", nxt)):
            if sorted(perm) != list(range(n)):
                raise MalformedPermutation(f"{name} is not a permutation of 0..{n - 1}")
        for d in range(n):
            if twin[d] == d:
                raise FixedPointInTwin(f"twin fixes dart {d}")
            if twin[twin[d]] != d:
                raise MalformedPermutation(f"twin is not an involution at dart {d}")
        self.dart_count = n
        self.twin = tuple(twin)
        self.next = tuple(nxt)
        prev = [0] * n
        for d, e in enumerate(nxt):
            prev[e] = d
        self.prev = tuple(prev)

        self.vertex_of, self.vertices = _orbits(nxt)
        self.face_of, self.faces = _orbits([nxt[twin[d]] for d in range(n)])
        self.edge_of = [-1] * n
        self.edge_darts: list[tuple[int, int]] = []
        for d in range(n):
            if self.edge_of[d] == -1:
                self.edge_of[d] = self.edge_of[twin[d]] = len(self.edge_darts)
                self.edge_darts.append((d, twin[d]))

        uf = _UnionFind(n)
        for d in range(n):
            uf.union(d, twin[d])
            uf.union(d, nxt[d])
        self.component_of_dart = uf.labels()
        ncomp = max(self.component_of_dart, default=-1) + 1
        v = [0] * ncomp
        e = [0] * ncomp
        f = [0] * ncomp
        for orbit in self.vertices:
            v[self.component_of_dart[orbit[0]]] += 1
        for lo, _ in self.edge_darts:
            e[self.component_of_dart[lo]] += 1
        for orbit in self.faces:
            f[self.component_of_dart[orbit[0]]] += 1
        self.component_euler = tuple(a - b + c for a, b, c in zip(v, e, f))
        self.component_genus = tuple((2 - x) // 2 for x in self.component_euler)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edge_darts)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def face_component(self, face: int) -> int:
        return self.component_of_dart[self.faces[face][0]]

    def rotation(self, vertex: int) -> list[int]:
        """Darts at ``vertex`` in ``next`` order, starting from the smallest."""
        start = min(self.vertices[vertex])
        out = [start]
        d = self.next[start]
        while d != start:
            out.append(d)
            d = self.next[d]
        return out

    def left_face(self, dart: int) -> int:
        return self.face_of[dart]

    def right_face(self, dart: int) -> int:
        return self.face_of[self.twin[dart]]

    def head(self, dart: int) -> int:
        return self.vertex_of[self.twin[dart]]

    def tail(self, dart: int) -> int:
        return self.vertex_of[dart]

    def __eq__(self, other):
        if not isinstance(other, CombinatorialMap):
            return NotImplemented
        return self.twin == other.twin and self.next == other.next

    def __hash__(self):
        return hash((self.twin, self.next))

    def __repr__(self):
        return (f"CombinatorialMap(V={self.vertex_count}, E={self.edge_count}, "
                f"F={self.face_count}, chi={self.euler})")


def build_map(dart_count: int, twin: Iterable[int], next: Iterable[int]) -> CombinatorialMap:
    twin = list(twin)
    next = list(next)
    if len(twin) != dart_count or len(next) != dart_count:
        raise MalformedPermutation(
            f"expected {dart_count} darts, got twin={len(twin)} next={len(next)}")
    return CombinatorialMap(twin, next)


# ---------------------------------------------------------------------------
# chains


class _Chain(Mapping[int, int]):
    """Immutable finitely supported integer chain; zero entries are dropped."""

    __slots__ = ("_data", "_hash")

    def __init__(self, data: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = data.items() if isinstance(data, Mapping) else data
        clean: dict[int, int] = {}
        for k, v in items:
            v = int(v)
            if v:
                clean[int(k)] = clean.get(int(k), 0) + v
        self._data = {k: v for k, v in sorted(clean.items()) if v}
        self._hash = None

    def __getitem__(self, key: int) -> int:
        return self._data.get(key, 0)

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def __eq__(self, other):
        if isinstance(other, _Chain):
            return type(self) is type(other) and self._data == other._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._data.items())))
        return self._hash

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._data)
        for k, v in other._data.items():
            out[k] = out.get(k, 0) + sign * v
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._data.items()})

    def __repr__(self):
        return f"{type(self).__name__}({self._data})"

    def support(self) -> frozenset[int]:
        return frozenset(self._data)

    def max_abs(self) -> int:
        return max((abs(v) for v in self._data.values()), default=0)


class EdgeChain(_Chain):
    """Integer 1-chain; coefficients are relative to each edge's forward dart."""


class FaceChain(_Chain):
    """Integer 2-chain on the faces of a map."""


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def add(self, kind: str, detail: str) -> None:
        self.violations.append(Violation(kind, detail))


class Configuration:
    """A combinatorial map whose edges are split between two multicurves.

    ``owner[e]`` is :data:`FIRST`, :data:`SECOND` or :data:`AUX`;
    ``forward[e]`` is the dart of edge ``e`` pointing along the curve.
    """

    def __init__(self, cmap: CombinatorialMap, owner: Iterable[str], forward: Iterable[int]):
        owner = tuple(owner)
        forward = tuple(forward)
        if len(owner) != cmap.edge_count or len(forward) != cmap.edge_count:
            raise MalformedPermutation("owner/forward arrays must have one entry per edge")
        for e, (o, f) in enumerate(zip(owner, forward)):
            if o not in OWNERS:
                raise ValueError(f"edge {e}: unknown owner {o!r}")
            if cmap.edge_of[f] != e:
                raise MalformedPermutation(f"edge {e}: forward dart {f} is not on this edge")
        self.map = cmap
        self.owner = owner
        self.forward = forward

    # -- basic derived data -------------------------------------------------

    @functools.cached_property
    def dart_owner(self) -> tuple[str, ...]:
        return tuple(self.owner[self.map.edge_of[d]] for d in range(self.map.dart_count))

    def sign(self, dart: int) -> int:
        """+1 if ``dart`` is its edge's forward dart, else -1."""
        return 1 if self.forward[self.map.edge_of[dart]] == dart else -1

    @functools.cached_property
    def first(self) -> EdgeChain:
        return EdgeChain({e: 1 for e, o in enumerate(self.owner) if o == FIRST})

    @functools.cached_property
    def second(self) -> EdgeChain:
        return EdgeChain({e: 1 for e, o in enumerate(self.owner) if o == SECOND})

    @functools.cached_property
    def curve_edges(self) -> frozenset[int]:
        return frozenset(e for e, o in enumerate(self.owner) if o != AUX)

    def swapped(self) -> "Configuration":
        """Same map with the roles of the two multicurves exchanged."""
        flip = {FIRST: SECOND, SECOND: FIRST, AUX: AUX}
        return Configuration(self.map, (flip[o] for o in self.owner), self.forward)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (self.map == other.map and self.owner == other.owner
                and self.forward == other.forward)

    def __hash__(self):
        return hash((self.map, self.owner, self.forward))

    def __repr__(self):
        m = self.map
        return (f"Configuration(V={m.vertex_count}, E={m.edge_count}, F={m.face_count}, "
                f"crossings={len(self.crossings)}, regions={len(self.regions)})")

    # -- vertices -----------------------------------------------------------

    def owner_darts(self, vertex: int, owner: str) -> list[int]:
        return [d for d in self.map.rotation(vertex) if self.dart_owner[d] == owner]

    def is_outgoing(self, dart: int) -> bool:
        """True if a curve traverses ``dart`` away from its tail vertex."""
        return self.sign(dart) == 1

    @functools.cached_property
    def crossings(self) -> tuple[int, ...]:
        out = []
        for v in range(self.map.vertex_count):
            if len(self.owner_darts(v, FIRST)) == 2 and len(self.owner_darts(v, SECOND)) == 2:
                out.append(v)
        return tuple(out)

    def strand(self, vertex: int, owner: str) -> tuple[int, int] | None:
        """``(out_dart, in_dart)`` of ``owner``'s strand at ``vertex``."""
        ds = self.owner_darts(vertex, owner)
        if len(ds) != 2:
            return None
        a, b = ds
        if self.is_outgoing(a) and not self.is_outgoing(b):
            return a, b
        if self.is_outgoing(b) and not self.is_outgoing(a):
            return b, a
        return None

    def side_of(self, dart: int, out_dart: int, in_dart: int) -> str:
        """Side of the strand ``(out_dart, in_dart)`` on which ``dart`` lies."""
        d = self.map.next[out_dart]
        while d != in_dart:
            if d == dart:
                return RIGHT
            d = self.map.next[d]
        return LEFT

    # -- regions of S minus (m1 | m2) ---------------------------------------

    @functools.cached_property
    def region_of_face(self) -> tuple[int, ...]:
        return tuple(face_partition(self.map, self.curve_edges))

    @functools.cached_property
    def regions(self) -> tuple[tuple[int, ...], ...]:
        out: dict[int, list[int]] = {}
        for f, r in enumerate(self.region_of_face):
            out.setdefault(r, []).append(f)
        return tuple(tuple(out[r]) for r in sorted(out))

    def region_euler(self, region: int) -> int:
        return open_euler(self.map, self.regions[region], self.curve_edges)

    def boundary_successor(self, dart: int) -> int:
        """Next curve dart along the boundary of the region left of ``dart``."""
        x = self.map.next[self.map.twin[dart]]
        while self.dart_owner[x] == AUX:
            x = self.map.next[x]
        return x

    @functools.cached_property
    def region_boundaries(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Per region, the boundary cycles as tuples of curve darts."""
        seen: set[int] = set()
        per_region: dict[int, list[tuple[int, ...]]] = {r: [] for r in range(len(self.regions))}
        for d in range(self.map.dart_count):
            if self.dart_owner[d] == AUX or d in seen:
                continue
            cycle = []
            x = d
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.boundary_successor(x)
            per_region[self.region_of_face[self.map.face_of[d]]].append(tuple(cycle))
        return tuple(tuple(per_region[r]) for r in range(len(self.regions)))

    def cycle_sides(self, cycle: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Split a boundary cycle into maximal single-owner runs."""
        n = len(cycle)
        owners = [self.dart_owner[d] for d in cycle]
        changes = [i for i in range(n) if owners[i] != owners[i - 1]]
        if not changes:
            return []
        runs = []
        for j, start in enumerate(changes):
            stop = changes[(j + 1) % len(changes)]
            run = []
            i = start
            while True:
                run.append(cycle[i])
                i = (i + 1) % n
                if i == stop:
                    break
            runs.append(tuple(run))
        return runs

    @functools.cached_property
    def bigons(self) -> tuple[int, ...]:
        out = []
        for r, cycles in enumerate(self.region_boundaries):
            if len(cycles) == 1 and len(self.cycle_sides(cycles[0])) == 2 \
                    and self.region_euler(r) == 1:
                out.append(r)
        return tuple(out)

    # -- curve components ---------------------------------------------------

    def owner_curves(self, owner: str) -> list[tuple[int, ...]]:
        """Components of one multicurve as cyclic tuples of forward darts."""
        chain = self.first if owner == FIRST else self.second
        return resolve_embedded(self, chain).components


def face_partition(cmap: CombinatorialMap, cut_edges: Iterable[int]) -> list[int]:
    """Label faces by connected component of the surface minus ``cut_edges``."""
    cut = set(cut_edges)
    uf = _UnionFind(cmap.face_count)
    for e, (a, b) in enumerate(cmap.edge_darts):
        if e not in cut:
            uf.union(cmap.face_of[a], cmap.face_of[b])
    return uf.labels()


def open_euler(cmap: CombinatorialMap, faces: Iterable[int], removed_edges: Iterable[int] = ()) -> int:
    """Euler characteristic of the open region formed by ``faces``.

    Counts the faces, the edges with both sides in the region and not removed,
    and the vertices all of whose edges are interior.  For the interior of a
    compact surface whose boundary is a union of circles this equals the
    Euler characteristic of that surface.
    """
    fs = set(faces)
    removed = set(removed_edges)
    interior_edges = set()
    for e, (a, b) in enumerate(cmap.edge_darts):
        if e not in removed and cmap.face_of[a] in fs and cmap.face_of[b] in fs:
            interior_edges.add(e)
    v = 0
    for orbit in cmap.vertices:
        if all(cmap.edge_of[d] in interior_edges for d in orbit):
            v += 1
    return v - len(interior_edges) + len(fs)


def closure_euler(cmap: CombinatorialMap, faces: Iterable[int]) -> int:
    """``V - E + F`` of the closure of a face set.

    Raises :class:`SelfTouchingRegion` when the closure meets itself at a
    vertex, i.e. the region's corners at some vertex are not one block.
    """
    fs = set(faces)
    if not fs:
        return 0
    for f in fs:
        if not 0 <= f < cmap.face_count:
            raise UnknownFace(f"face {f} out of range")
    edges = set()
    verts = set()
    for f in fs:
        for d in cmap.faces[f]:
            edges.add(cmap.edge_of[d])
            verts.add(cmap.vertex_of[d])
    for v in verts:
        rot = cmap.rotation(v)
        # corner between rot[i] and rot[i+1] belongs to the left face of rot[i+1]
        inside = [cmap.face_of[rot[(i + 1) % len(rot)]] in fs for i in range(len(rot))]
        if all(inside):
            continue
        blocks = sum(1 for i in range(len(inside)) if inside[i] and not inside[i - 1])
        if blocks > 1:
            raise SelfTouchingRegion(f"region touches itself at vertex {v}")
    return len(verts) - len(edges) + len(fs)


# ---------------------------------------------------------------------------
# boundaries and multicurves


def boundary(cfg: Configuration, chain: FaceChain | Mapping[int, int]) -> EdgeChain:
    """Boundary of a 2-chain: on edge ``e``, ``Z(left) - Z(right)`` of its forward dart."""
    cmap = cfg.map
    for f in chain:
        if not 0 <= f < cmap.face_count:
            raise UnknownFace(f"face {f} out of range")
    out = {}
    for e, fwd in enumerate(cfg.forward):
        c = chain.get(cmap.face_of[fwd], 0) - chain.get(cmap.right_face(fwd), 0)
        if c:
            out[e] = c
    return EdgeChain(out)


def _match_stack(slots: list[tuple[int, bool]]) -> list[tuple[int, int]]:
    """Greedy non-crossing in/out pairing on a linear sequence of slots."""
    stack: list[tuple[int, bool]] = []
    pairs = []
    for dart, is_out in slots:
        if stack and stack[-1][1] != is_out:
            other, other_out = stack.pop()
            pairs.append((dart, other) if not is_out else (other, dart))
        else:
            stack.append((dart, is_out))
    assert not stack
    return pairs


class Multicurve:
    """An oriented embedded subcomplex of a configuration.

    ``chain`` has coefficients in ``{-1, 1}``; the traversal darts are the
    forward dart where the coefficient is +1 and its twin where it is -1.
    At each vertex incoming darts are paired with outgoing ones by a
    non-crossing pairing in rotation order.
    """

    def __init__(self, cfg: Configuration, chain: EdgeChain, resolution: dict[int, int]):
        self.cfg = cfg
        self.chain = chain
        self.resolution = resolution  # in-dart (at vertex, pointing back) -> out-dart

    @functools.cached_property
    def darts(self) -> frozenset[int]:
        fwd = self.cfg.forward
        tw = self.cfg.map.twin
        return frozenset(fwd[e] if c > 0 else tw[fwd[e]] for e, c in self.chain.items())

    @functools.cached_property
    def components(self) -> list[tuple[int, ...]]:
        tw = self.cfg.map.twin
        seen: set[int] = set()
        out = []
        for start in sorted(self.darts):
            if start in seen:
                continue
            comp = []
            d = start
            while d not in seen:
                seen.add(d)
                comp.append(d)
                d = self.resolution[tw[d]]
            out.append(tuple(comp))
        return out

    @property
    def edges(self) -> frozenset[int]:
        return self.chain.support()

    def __eq__(self, other):
        if not isinstance(other, Multicurve):
            return NotImplemented
        return self.cfg is other.cfg and self.chain == other.chain

    def __hash__(self):
        return hash(self.chain)

    def __len__(self):
        return len(self.components)

    def signed_edges(self) -> list[int]:
        """Sorted edge ids, negated where traversed against the forward dart."""
        return sorted((e if c > 0 else -e - 1) for e, c in self.chain.items())

    def __repr__(self):
        return f"Multicurve(curves={len(self.components)}, edges={len(self.chain)})"


def resolve_embedded(cfg: Configuration, chain: EdgeChain) -> Multicurve:
    """Resolve a {-1, 0, 1} 1-chain into an embedded oriented multicurve."""
    if chain.max_abs() > 1:
        raise CoefficientOutOfRange("multicurve chains need coefficients in {-1, 0, 1}")
    cmap = cfg.map
    tw = cmap.twin
    out_darts = {cfg.forward[e] if c > 0 else tw[cfg.forward[e]] for e, c in chain.items()}
    in_darts = {tw[d] for d in out_darts}
    resolution: dict[int, int] = {}
    touched = {cmap.vertex_of[d] for d in out_darts}
    for v in sorted(touched):
        slots = [(d, d in out_darts) for d in cmap.rotation(v) if d in out_darts or d in in_darts]
        n_out = sum(1 for _, o in slots if o)
        if 2 * n_out != len(slots):
            raise Unresolvable(f"vertex {v} has {len(slots) - n_out} incoming and {n_out} outgoing darts")
        for a, b in _match_stack(slots):
            resolution[a] = b
    for v in {cmap.vertex_of[d] for d in in_darts} - touched:
        raise Unresolvable(f"vertex {v} has incoming darts only")
    return Multicurve(cfg, chain, resolution)


def multicurve_from_chain(cfg: Configuration, chain: Mapping[int, int]) -> Multicurve:
    return resolve_embedded(cfg, EdgeChain(chain))


# ---------------------------------------------------------------------------
# disjointness of two multicurves on the same configuration


@functools.lru_cache(maxsize=None)
def _matchable(seq: tuple[tuple[int, bool], ...]) -> bool:
    """Whether slots ``(curve, is_out)`` admit a non-crossing same-curve in/out matching."""
    if not seq:
        return True
    if len(seq) % 2:
        return False
    c0, o0 = seq[0]
    for j in range(1, len(seq), 2):
        c, o = seq[j]
        if c == c0 and o != o0 and _matchable(seq[1:j]) and _matchable(seq[j + 1:]):
            return True
    return False


def _vertex_usage(mc: Multicurve, dart: int) -> bool | None:
    if dart in mc.darts:
        return True
    if mc.cfg.map.twin[dart] in mc.darts:
        return False
    return None


def disjoint(a: Multicurve, b: Multicurve) -> bool:
    """Whether ``a`` and ``b`` can be pushed off each other without crossings.

    Shared edges become parallel copies; the left/right order of the copies
    along each shared edge is a boolean unknown, and each vertex constrains
    the unknowns on its edges.  The small constraint problem is solved by
    backtracking.
    """
    cfg = a.cfg
    if cfg.map is not b.cfg.map:
        raise ValueError("multicurves live on different maps")
    cmap = cfg.map
    shared = sorted(a.chain.support() & b.chain.support())
    verts_a = {cmap.vertex_of[d] for d in a.darts} | {cmap.head(d) for d in a.darts}
    verts_b = {cmap.vertex_of[d] for d in b.darts} | {cmap.head(d) for d in b.darts}
    common = sorted(verts_a & verts_b)

    vertex_vars: dict[int, list[int]] = {}
    local: dict[int, list[tuple[int, bool | None, bool | None]]] = {}
    for v in common:
        rows = []
        evars = []
        for d in cmap.rotation(v):
            ua, ub = _vertex_usage(a, d), _vertex_usage(b, d)
            if ua is None and ub is None:
                continue
            rows.append((d, ua, ub))
            if ua is not None and ub is not None:
                evars.append(cmap.edge_of[d])
        local[v] = rows
        vertex_vars[v] = sorted(set(evars))

    def vertex_ok(v: int, assign: dict[int, bool]) -> bool:
        seq = []
        for d, ua, ub in local[v]:
            if ua is not None and ub is not None:
                a_left = assign[cmap.edge_of[d]]
                a_first = a_left if cfg.sign(d) == 1 else not a_left
                pair = [(0, ua), (1, ub)]
                seq.extend(pair if a_first else pair[::-1])
            elif ua is not None:
                seq.append((0, ua))
            else:
                seq.append((1, ub))
        return _matchable(tuple(seq))

    # vertices without unknowns
    for v in common:
        if not vertex_vars[v] and not vertex_ok(v, {}):
            return False
    if not shared:
        return True

    var_vertices: dict[int, list[int]] = {e: [] for e in shared}
    for v in common:
        for e in vertex_vars[v]:
            var_vertices[e].append(v)

    order = []
    seen: set[int] = set()
    for e0 in shared:
        if e0 in seen:
            continue
        queue = deque([e0])
        seen.add(e0)
        while queue:
            e = queue.popleft()
            order.append(e)
            for v in var_vertices[e]:
                for e2 in vertex_vars[v]:
                    if e2 not in seen:
                        seen.add(e2)
                        queue.append(e2)
    position = {e: i for i, e in enumerate(order)}
    ready_at: dict[int, list[int]] = {}
    for v in common:
        if vertex_vars[v]:
            last = max(position[e] for e in vertex_vars[v])
            ready_at.setdefault(last, []).append(v)

    assign: dict[int, bool] = {}

    def solve(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for value in (True, False):
            assign[e] = value
            if all(vertex_ok(v, assign) for v in ready_at.get(i, ())) and solve(i + 1):
                return True
        del assign[e]
        return False

    return solve(0)


# ---------------------------------------------------------------------------
# validation


def validate_configuration(cfg: Configuration) -> ValidationReport:
    report = ValidationReport()
    cmap = cfg.map
    for comp, g in enumerate(cmap.component_genus):
        if g < 2:
            report.add("genus<2", f"component {comp} has genus {g}")
    for v in range(cmap.vertex_count):
        by_owner = {o: cfg.owner_darts(v, o) for o in (FIRST, SECOND)}
        for o, ds in by_owner.items():
            if len(ds) not in (0, 2):
                report.add("not_simple", f"{o} uses {len(ds)} darts at vertex {v}")
            elif len(ds) == 2 and cfg.strand(v, o) is None:
                report.add("orientation_break", f"{o} strand at vertex {v} is not in/out")
        f, s = by_owner[FIRST], by_owner[SECOND]
        if len(f) == 2 and len(s) == 2:
            seq = [cfg.dart_owner[d] for d in cmap.rotation(v) if cfg.dart_owner[d] != AUX]
            if any(seq[i] == seq[i - 1] for i in range(len(seq))):
                report.add("non_alternating", f"curves touch without crossing at vertex {v}")
    for r in cfg.bigons:
        report.add("bigon", f"region {r} is a bigon")
    for r, cycles in enumerate(cfg.region_boundaries):
        if len(cycles) == 1 and not cfg.cycle_sides(cycles[0]) and cfg.region_euler(r) == 1:
            report.add("trivial_curve", f"region {r} is a disk bounded by one curve")
    return report
