"""Command-line interface.

Exit status: 0 on success, 1 on domain errors, 2 on usage or parse errors.
Data goes to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import instances, oracle, pathfinder, threespace
from .errors import InstanceSyntaxError, SemanticError, TopologyError
from .overlap import classify_arcs, extremal_regions, overlap_field
from .surface import AUX, FIRST, Configuration, validate_configuration

OWNER_COLOR = {FIRST: "blue", "second": "red", AUX: "gray"}


class UsageError(Exception):
    pass


def _read_instance(source: str) -> Configuration:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    return instances.parse(text)


def _tsv(out, *fields) -> None:
    out.write("\t".join(str(f) for f in fields) + "\n")


def cmd_validate(args, out) -> int:
    cfg = _read_instance(args.instance)
    report = validate_configuration(cfg)
    if report.ok:
        _tsv(out, "ok", "true")
        return 0
    _tsv(out, "kind", "detail")
    for v in sorted(report.violations, key=lambda v: (v.kind, v.detail)):
        _tsv(out, v.kind, v.detail)
    return 1


def cmd_delta(args, out) -> int:
    cfg = _read_instance(args.instance)
    field = overlap_field(cfg)
    ext = extremal_regions(field)
    _tsv(out, "delta", field.max)
    _tsv(out, "smax_faces", len(ext.smax))
    _tsv(out, "smin_faces", len(ext.smin))
    _tsv(out, "crossings", len(cfg.crossings))
    _tsv(out, "kind", "side", "owner", "multiplicity")
    rows = sorted((c.kind, c.side or "-", c.owner, c.multiplicity) for c in classify_arcs(cfg))
    for row in rows:
        _tsv(out, *row)
    return 0


def _path_dot(path: pathfinder.MulticurvePath, out) -> None:
    cmap = path.cfg.map
    for i, v in enumerate(path.vertices):
        out.write(f"digraph vertex_{i} {{\n")
        for e, (lo, _) in enumerate(cmap.edge_darts):
            c = v.chain.get(e, 0)
            fwd = path.cfg.forward[e]
            d = fwd if c >= 0 else cmap.twin[fwd]
            style = 'color="black", penwidth=2' if c else 'color="gray80"'
            out.write(f"  v{cmap.tail(d)} -> v{cmap.head(d)} [label=\"e{e}\", {style}];\n")
        out.write("}\n")


def cmd_path(args, out) -> int:
    cfg = _read_instance(args.instance)
    path = pathfinder.cc_geodesic(cfg) if args.cc else pathfinder.middle_path(cfg)
    if args.format == "dot":
        _path_dot(path, out)
        return 0
    for i, v in enumerate(path.vertices):
        flags = ",".join("trivial" if t else "-" for t in path.trivial[i])
        _tsv(out, i, ",".join(str(e) for e in v.signed_edges()), flags)
    return 0


def cmd_genus(args, out) -> int:
    cfg = _read_instance(args.instance)
    s = threespace.minimal_genus(cfg)
    _tsv(out, "delta", s.delta)
    _tsv(out, "c", s.shift)
    _tsv(out, "abs_euler", s.abs_euler)
    _tsv(out, "boundary", s.boundary_count)
    _tsv(out, "components", s.components)
    _tsv(out, "genus", ",".join(str(g) for g in s.genus_per_component))
    _tsv(out, "shift", "integral")
    for c, value in s.integrals:
        _tsv(out, c, value)
    return 0


def cmd_gen(args, out) -> int:
    if args.family == "bp":
        cfg = instances.gen_bounding_pair(args.n)
    elif args.family == "quasiflat":
        triple = instances.gen_quasiflat(args.n)
        cfg = {"12": triple.v1v2, "13": triple.v1v3, "23": triple.v2v3}[args.pair]
    else:
        cfg = instances.gen_disjoint_cobounding(args.region_genus)
    out.write(instances.serialize(cfg))
    return 0


def cmd_oracle(args, out) -> int:
    cfg = _read_instance(args.instance)
    cat = oracle.enumerate_vertices(cfg, args.zmax)
    delta = overlap_field(cfg).max
    k = -3 * cfg.map.euler
    _tsv(out, "catalog", len(cat))
    simple = oracle.shortest_simple_path(cat)
    if not args.simple_only:
        _tsv(out, "distance", oracle.bfs_distance(cat))
    _tsv(out, "simple", simple)
    _tsv(out, "bracket", Fraction(delta, k), delta)
    _tsv(out, "note", oracle.SCOPE_NOTE)
    return 0


def cmd_export(args, out) -> int:
    cfg = _read_instance(args.instance)
    cmap = cfg.map
    values = overlap_field(cfg).values if args.overlap else None
    out.write("digraph configuration {\n")
    for e, owner in enumerate(cfg.owner):
        d = cfg.forward[e]
        attrs = [f'label="e{e}', f'color="{OWNER_COLOR[owner]}"', f'owner="{owner}"']
        if values is not None:
            attrs[0] += f" L{values[cmap.face_of[d]]} R{values[cmap.right_face(d)]}"
        attrs[0] += '"'
        if owner == AUX:
            attrs.append('style="dashed"')
        out.write(f"  v{cmap.tail(d)} -> v{cmap.head(d)} [{', '.join(attrs)}];\n")
    out.write("}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="homcurve",
                                 description="Homologous multicurves on combinatorial surfaces")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check minimal-position conditions")
    p.add_argument("instance", help="instance file, or - for standard input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("delta", help="overlap maximum and arc classes")
    p.add_argument("instance")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("path", help="middle path between the two multicurves")
    p.add_argument("instance")
    p.add_argument("--cc", action="store_true", help="reduce every vertex (cyclic cycle complex)")
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("genus", help="minimal-genus surface summary")
    p.add_argument("instance")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("gen", help="generate an example instance")
    gen = p.add_subparsers(dest="family", required=True)
    g = gen.add_parser("bp", help="bounding-pair twist family")
    g.add_argument("--n", type=int, required=True)
    g = gen.add_parser("quasiflat", help="two bounding pairs, genus 4")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--pair", choices=["12", "13", "23"], default="12")
    g = gen.add_parser("cobound", help="disjoint cobounding curves")
    g.add_argument("--region-genus", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force distances over carried multicurves")
    p.add_argument("instance")
    p.add_argument("--zmax", type=int, default=None, help="largest potential value (default: delta)")
    p.add_argument("--simple-only", action="store_true", help="skip the all-edges BFS")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", help="export a configuration")
    exp = p.add_subparsers(dest="format", required=True)
    e = exp.add_parser("dot", help="Graphviz DOT")
    e.add_argument("instance")
    e.add_argument("--overlap", action="store_true", help="label edges with face overlap values")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, sys.stdout)
    except InstanceSyntaxError as exc:
        print(f"InstanceSyntaxError: line {exc.line}, column {exc.column}: {exc}", file=sys.stderr)
        return 2
    except SemanticError as exc:
        print(f"SemanticError: {exc.field}: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TopologyError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
