"""Surfaces in S x I built from simple paths, and minimal-genus surfaces.

A simple path ``gamma_0, ..., gamma_j`` with step subsurfaces ``C_i``
(``boundary(C_i) == gamma_{i+1} - gamma_i``) and a side choice per step
determines a surface in ``S x I``: step ``i`` uses ``C_i`` (Left) or its
complement (Right), and curves shared by consecutive vertices are joined by
cylinders.  Everything is computed from this two-dimensional data.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DegenerateEqual, LengthMismatch, NonSimplePath
from .overlap import overlap_field
from .pathfinder import MulticurvePath, middle_path
from .surface import LEFT, RIGHT, CombinatorialMap, _UnionFind, closure_euler, open_euler


@dataclass(frozen=True)
class PreimageField:
    values: tuple[int, ...]
    side_choices: tuple[str, ...]

    @property
    def max(self) -> int:
        return max(self.values, default=0)

    @property
    def min(self) -> int:
        return min(self.values, default=0)


@dataclass(frozen=True)
class SurfaceSummary:
    euler: int
    boundary_count: int
    components: int
    genus_per_component: tuple[int, ...]
    side_choices: tuple[str, ...]
    shift: int | None = None
    integrals: tuple[tuple[int, int], ...] = dc_field(default=())
    delta: int | None = None

    @property
    def abs_euler(self) -> int:
        return abs(self.euler)


def _step_regions(path: MulticurvePath) -> list[frozenset[int]]:
    out = []
    for i, z in enumerate(path.witnesses):
        if z is None:
            raise NonSimplePath(f"step {i} is not the boundary of a subsurface")
        out.append(frozenset(z))
    if len(out) != path.length:
        raise NonSimplePath("path carries no subsurface witnesses")
    return out


def _check_choices(path: MulticurvePath, side_choices) -> tuple[str, ...]:
    choices = tuple(side_choices)
    if len(choices) != path.length:
        raise LengthMismatch(f"{len(choices)} side choices for a path of length {path.length}")
    for c in choices:
        if c not in (LEFT, RIGHT):
            raise ValueError(f"side choice must be {LEFT!r} or {RIGHT!r}, got {c!r}")
    return choices


def preimage_field(path: MulticurvePath, side_choices) -> PreimageField:
    choices = _check_choices(path, side_choices)
    regions = _step_regions(path)
    vals = [0] * path.cfg.map.face_count
    for region, side in zip(regions, choices):
        for f in range(len(vals)):
            if side == LEFT and f in region:
                vals[f] += 1
            elif side == RIGHT and f not in region:
                vals[f] -= 1
    return PreimageField(tuple(vals), choices)


def euler_integral(field, cmap: CombinatorialMap | None = None) -> int:
    """Integral of ``|field|`` against Euler characteristic.

    Sums, over ``j >= 1``, the closure Euler characteristics of
    ``{field >= j}`` and of ``{field <= -j}``; the positive and negative parts
    are separate surfaces and are integrated separately.
    """
    if cmap is None:
        cmap = field.cfg.map
    values = getattr(field, "values", field)
    total = 0
    top = max((abs(v) for v in values), default=0)
    for j in range(1, top + 1):
        pos = [f for f, v in enumerate(values) if v >= j]
        neg = [f for f, v in enumerate(values) if v <= -j]
        total += closure_euler(cmap, pos) + closure_euler(cmap, neg)
    return total


def _face_components(cmap: CombinatorialMap, faces: frozenset[int]) -> list[int]:
    """Component label per face of the set, joined across interior edges."""
    uf = _UnionFind(cmap.face_count)
    for a, b in cmap.edge_darts:
        fa, fb = cmap.face_of[a], cmap.face_of[b]
        if fa in faces and fb in faces:
            uf.union(fa, fb)
    return uf.labels()


def trace_surface(path: MulticurvePath, side_choices) -> SurfaceSummary:
    choices = _check_choices(path, side_choices)
    regions = _step_regions(path)
    cfg = path.cfg
    cmap = cfg.map
    all_faces = frozenset(range(cmap.face_count))

    # nodes: curve components of each vertex, then step-region components
    nodes: dict[tuple, int] = {}

    def node(key) -> int:
        return nodes.setdefault(key, len(nodes))

    curve_of_edge: list[dict[int, int]] = []
    for i, v in enumerate(path.vertices):
        table = {}
        for c, comp in enumerate(v.components):
            node(("curve", i, c))
            for d in comp:
                table[cmap.edge_of[d]] = c
        curve_of_edge.append(table)

    links = []
    euler = 0
    chi_of: dict[int, int] = {}
    for i, (region, side) in enumerate(zip(regions, choices)):
        chosen = region if side == LEFT else all_faces - region
        labels = _face_components(cmap, chosen)
        comps: dict[int, list[int]] = {}
        for f in chosen:
            comps.setdefault(labels[f], []).append(f)
        for lab, faces in comps.items():
            chi = open_euler(cmap, faces)
            euler += chi
            chi_of[node(("step", i, lab))] = chi
        for e in path.differences[i]:
            a, b = cmap.edge_darts[e]
            f = cmap.face_of[a] if cmap.face_of[a] in chosen else cmap.face_of[b]
            step_node = node(("step", i, labels[f]))
            for j in (i, i + 1):
                if e in curve_of_edge[j]:
                    links.append((step_node, node(("curve", j, curve_of_edge[j][e]))))
        # cylinders between curves shared by consecutive vertices
        for e, c in curve_of_edge[i].items():
            if e in curve_of_edge[i + 1] and e not in path.differences[i]:
                links.append((node(("curve", i, c)), node(("curve", i + 1, curve_of_edge[i + 1][e]))))

    uf = _UnionFind(len(nodes))
    for a, b in links:
        uf.union(a, b)
    comp_chi: dict[int, int] = {}
    comp_b: dict[int, int] = {}
    for key, idx in nodes.items():
        root = uf.find(idx)
        comp_chi.setdefault(root, 0)
        comp_b.setdefault(root, 0)
        if key[0] == "step":
            comp_chi[root] += chi_of[idx]
        elif key[1] in (0, path.length):
            comp_b[root] += 1
    roots = sorted(comp_chi)
    genus = tuple((2 - comp_chi[r] - comp_b[r]) // 2 for r in roots)
    b = len(path.vertices[0].components) + len(path.vertices[-1].components)
    return SurfaceSummary(euler, b, len(roots), genus, choices)


def minimal_genus(cfg) -> SurfaceSummary:
    """Least-genus surface among the monotone side choices on the middle path.

    With Left for the first ``K`` steps and Right afterwards the preimage
    field is ``f + c`` with ``c = K - M``; the sweep over ``c`` in
    ``-M..0`` picks the largest Euler characteristic.  The first step whose
    complement beats its region (the ``k``-rule) must pick the same value.
    """
    field = overlap_field(cfg)
    top = field.max
    if top == 0:
        raise DegenerateEqual("the two multicurves coincide")
    cmap = cfg.map
    everything = set(range(cmap.face_count))
    chi_c, chi_r = [], []
    for s in range(top):
        level = field.level_set(top - s)
        chi_c.append(open_euler(cmap, level))
        chi_r.append(open_euler(cmap, everything - level))

    integrals = []
    for k in range(top + 1):
        shift = k - top
        value = euler_integral([v + shift for v in field.values], cmap)
        assert value == sum(chi_c[:k]) + sum(chi_r[k:]), "Euler integral disagrees with cell counts"
        integrals.append((shift, value))
    best = max(v for _, v in integrals)

    k_rule = next((s for s in range(top) if chi_r[s] > chi_c[s]), top)
    assert integrals[k_rule][1] == best, (
        f"k-rule picks K={k_rule} ({integrals[k_rule][1]}) but the sweep optimum is {best}")

    path = middle_path(cfg)
    choices = [LEFT] * k_rule + [RIGHT] * (top - k_rule)
    summary = trace_surface(path, choices)
    assert summary.euler == best
    return SurfaceSummary(summary.euler, summary.boundary_count, summary.components,
                          summary.genus_per_component, summary.side_choices,
                          k_rule - top, tuple(integrals), top)


__all__ = [
    "PreimageField", "SurfaceSummary", "euler_integral", "minimal_genus", "preimage_field",
    "trace_surface",
]
