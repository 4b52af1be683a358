"""Command-line entry point: file I/O, exports, verification reports.

Exit codes: 0 on success, 1 on a domain error (bad geometry, violated
preconditions), 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import io as lio
from .angles import (angle_map, classify_da3, reconstruct_da, reconstruct_ua,
                     six_slopes, slope_config_from_points, tn_membership,
                     triangle_residual)
from .hooks import (chi, clickable_diagram, draw, fiber, hooked_tree,
                    nest_of, normal_form_sites, read, roundtrip_check, tv,
                    xah_of)
from .hull import combinatorial_convex_hull, direction_hull
from .korder import (all_order_diagrams, count_vectors, verify_symmetries,
                     voronoi_poset)
from .limitdiag import (compute_type, continuity_probe, delaunay_graph,
                        outside_edges, plug, zero_cluster_shape)
from .sites import general_position

VERSION = "0.1.0"


def max_workers() -> int:
    """Parallelism cap from LIMITVOR_THREADS (computation stays deterministic)."""
    try:
        value = int(os.environ.get("LIMITVOR_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, min(value, os.cpu_count() or 1))


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write(path, text: str) -> None:
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_bbox(text):
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 4:
        raise ValueError("bbox needs x0,y0,x1,y1")
    return tuple(parts)


def _triple_str(tri) -> str:
    return "(%s)" % ",".join(str(v) for v in tri.labels)


def cmd_sites_check(args) -> int:
    s = lio.siteset_from_json(_load_json(args.input))
    v = general_position(s)
    if v is None:
        print("ok: %d sites in general position" % len(s))
        return 0
    print("violation: %s sites %s" % (v.kind, list(v.labels)))
    return 1


def cmd_limit(args) -> int:
    s = lio.siteset_from_json(_load_json(args.input))
    bbox = _parse_bbox(args.bbox) if args.bbox else (-5.0, -5.0, 5.0, 5.0)
    diagram = None
    payload = None

    if args.what == "type":
        t = compute_type(s, workers=max_workers())
        print("type: {%s}" % ", ".join(_triple_str(tr) for tr in t.sorted()))
        g = delaunay_graph(t)
        payload = {"type": [list(tr.labels) for tr in t.sorted()],
                   "multiplicities": {"%d,%d" % e: m
                                      for e, m in sorted(g.multiplicity.items())}}
    elif args.what in ("hull", "dh"):
        cch = combinatorial_convex_hull(s)
        dh = direction_hull(s) if s.is_zero_cluster() else cch
        print("cch: %s" % (list(cch.labels),))
        if s.is_zero_cluster():
            print("dh: %s" % (list(dh.labels),))
        payload = lio.hull_to_json(cch, dh)
    elif args.what == "shape":
        diagram = zero_cluster_shape(s)
        payload = lio.diagram_to_json(diagram)
        print("shape: %d skeleton elements" % len(diagram.skeleton))
    elif args.what == "outside":
        edges = outside_edges(s)
        payload = {"outside_edges": [lio.outside_edge_to_json(e) for e in edges]}
        for e in edges:
            kind = "zero-length" if e.zero_length else (
                "unbounded" if e.unbounded else "bounded")
            print("e(%d,%d): %s" % (e.pair[0], e.pair[1], kind))
    elif args.what == "plug":
        diagram = plug(s)
        payload = lio.diagram_to_json(diagram)
        print("plug: %d cells, %d skeleton elements"
              % (len(diagram.cells), len(diagram.skeleton)))
    else:
        raise ValueError("unknown limit subcommand %r" % args.what)

    if args.json:
        _write(args.json, lio.dumps(payload))
    if args.svg:
        if diagram is None:
            diagram = plug(s)
        pts = [st.at_zero() for st in s.sites]
        _write(args.svg, lio.svg_diagram(diagram, bbox, pts))
    return 0


def cmd_korder(args) -> int:
    s = lio.points_from_json(_load_json(args.input))
    if args.what == "verify":
        report = verify_symmetries(s)
        cv = count_vectors(s)
        for entry in report:
            print("%s: %s%s" % ("PASS" if entry.ok else "FAIL", entry.name,
                                " [%s]" % entry.detail if entry.detail else ""))
        print("f~ = %s" % (list(cv.reduced_f()),))
        print("c~ = %s" % (list(cv.reduced_c()),))
        return 0 if all(e.ok for e in report) else 1
    if args.what == "poset":
        poset = voronoi_poset(s)
        cv = count_vectors(s)
        payload = lio.poset_to_json(poset, cv)
        _write(args.json, lio.dumps(payload))
        if args.json:
            print("poset: %d elements, f = %s" % (len(poset.elements), list(cv.f)))
        return 0
    if args.what == "all":
        diags = all_order_diagrams(s)
        ks = [args.k] if args.k else sorted(diags)
        for k in ks:
            d = diags[k]
            print("V_%d: %d vertices (%d new), %d edges, %d cells"
                  % (k, len(d.vertices),
                     sum(1 for v in d.vertices if v.kind == "new"),
                     len(d.edges), len(d.cells)))
            for cell in sorted(d.cells, key=sorted):
                print("  cell %s" % sorted(cell))
        return 0
    raise ValueError("unknown korder subcommand %r" % args.what)


def cmd_angles(args) -> int:
    data = _load_json(args.input)
    if args.what == "map":
        pts = [(Fraction(x), Fraction(y)) for x, y in data["points"]]
        av = angle_map(pts, mode=args.mode)
        _write(args.json, lio.dumps(lio.angles_to_json(av)))
        if args.json:
            print("angles: %d pairs (%s)" % (len(av.values), av.mode))
        return 0
    if args.what == "recon":
        av = lio.angles_from_json(data)
        rec = reconstruct_ua(av) if av.mode == "ua" else reconstruct_da(av)
        if rec.kind == "points":
            for i, p in enumerate(rec.points, start=1):
                print("p%d = (%s, %s)" % (i, p[0], p[1]))
            return 0
        if rec.kind == "collinear":
            print("collinear, order %s" % (list(rec.order),))
            return 0
        print("not realizable")
        return 1
    if args.what == "classify":
        av = lio.angles_from_json(data)
        if av.n != 3:
            raise ValueError("classify expects angles on three labels")
        result = classify_da3(av.dir(1, 2), av.dir(1, 3), av.dir(2, 3))
        print(result.value)
        return 0
    if args.what == "sixslopes":
        pts = [(Fraction(x), Fraction(y)) for x, y in data["points"]]
        cfg = slope_config_from_points(pts, shear_if_vertical=True)
        n = cfg.n
        for i in range(1, n):
            for j in range(i + 1, n):
                print("t_%d%d = %s" % (i, j, triangle_residual(cfg, i, j)))
        import itertools
        for combo in itertools.combinations(range(n), 4):
            print("Delta_%s = %s" % ("".join(map(str, combo)),
                                     six_slopes(cfg, *combo)))
        print("member of the residual variety: %s" % tn_membership(cfg))
        return 0
    raise ValueError("unknown angles subcommand %r" % args.what)


def cmd_fm(args) -> int:
    s = lio.siteset_from_json(_load_json(args.input))
    x = chi(s)
    if args.what == "chi":
        nest = nest_of(x)
        print("pairs: %d, hooks: %d" % (len(x.pair_angles), len(x.hooks)))
        print("nest: %s" % _nest_str(nest))
        return 0
    if args.what == "nest":
        print(_nest_str(nest_of(x)))
        return 0
    if args.what == "tree":
        tree = hooked_tree(x)
        for lbl in sorted(tree.tags):
            print("site %d: %s" % (lbl, tree.tags[lbl].pretty()))
        print("dim Dom = %d" % tree.dom_dimension())
        return 0
    if args.what in ("draw", "read", "roundtrip"):
        tree = hooked_tree(x)
        fill = draw(x, tv(x, tree), tree)
        if args.what == "draw":
            for cluster in fill.screens():
                print("screen %s (depth %d, orientation %.6f):"
                      % (sorted(cluster), fill.depth(cluster),
                         fill.orientations[cluster]))
                for lbl, (px, py) in sorted(fill.coords[cluster].items()):
                    print("  p%d = (%.6f, %.6f)" % (lbl, px, py))
            return 0
        back = read(x, fill)
        if args.what == "read":
            for pair in sorted(back.pair_angles):
                print("alpha_%d,%d = %.6f" % (pair[0], pair[1],
                                              back.pair_angles[pair]))
            return 0
        rep = roundtrip_check(x, tv(x, tree), tree)
        print("roundtrip %s, max error %.3g"
              % ("ok" if rep.ok else "FAILED", rep.max_error))
        return 0 if rep.ok else 1
    if args.what == "fiber":
        pts = fiber(xah_of(x))
        print("fiber size: %d" % len(pts))
        for p in pts:
            angles = ", ".join("%.6f" % p.angle(i, j)
                               for (i, j) in sorted(p.pair_angles))
            print("  (%s)" % angles)
        return 0
    if args.what == "export-click":
        root = clickable_diagram(x)
        _write(args.json, lio.dumps(lio.clickable_to_json(root)))
        if args.json:
            print("clickable diagram: %d top-level positions, %d children"
                  % (len(root.positions), len(root.children)))
        return 0
    if args.what == "normal-form":
        nf = normal_form_sites(x)
        _write(args.json, lio.dumps(lio.siteset_to_json(nf)))
        return 0
    raise ValueError("unknown fm subcommand %r" % args.what)


def _nest_str(nest) -> str:
    inner = [c for c in nest.sorted_clusters()
             if 1 < len(c) < nest.n]
    return "<%s>" % ", ".join("{%s}" % ",".join(map(str, sorted(c)))
                              for c in inner) if inner else "<trivial>"


def cmd_continuity(args) -> int:
    gamma = lio.gamma_from_json(_load_json(args.input))
    deltas = [float(v) for v in args.deltas.split(",")]
    result = continuity_probe(gamma, Fraction(args.N), deltas,
                              seed=args.seed, samples=args.samples)
    for d, h, ok in zip(result.deltas, result.hausdorff,
                        result.outside_identical):
        print("delta %.1e: hausdorff %.6f, outside-N identical: %s"
              % (d, h, "yes" if ok else "NO"))
    print("non-increasing: %s" % ("yes" if result.non_increasing else "NO"))
    ok = result.non_increasing and all(result.outside_identical)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limitvor")
    p.add_argument("--version", action="version", version="limitvor " + VERSION)
    sub = p.add_subparsers(dest="command", required=True)

    sites = sub.add_parser("sites", help="site-set checks")
    sites_sub = sites.add_subparsers(dest="what", required=True)
    chk = sites_sub.add_parser("check")
    chk.add_argument("input")
    chk.set_defaults(func=cmd_sites_check)

    limit = sub.add_parser("limit", help="limit diagrams of polynomial sites")
    limit.add_argument("what", choices=["type", "hull", "dh", "shape",
                                        "outside", "plug"])
    limit.add_argument("input")
    limit.add_argument("--svg")
    limit.add_argument("--json")
    limit.add_argument("--bbox")
    limit.set_defaults(func=cmd_limit)

    kd = sub.add_parser("korder", help="higher-order diagrams of static points")
    kd.add_argument("what", choices=["all", "poset", "verify"])
    kd.add_argument("input")
    kd.add_argument("--k", type=int)
    kd.add_argument("--json")
    kd.set_defaults(func=cmd_korder)

    ang = sub.add_parser("angles", help="angle maps and slope residuals")
    ang.add_argument("what", choices=["map", "recon", "classify", "sixslopes"])
    ang.add_argument("input")
    ang.add_argument("--mode", choices=["da", "ua"], default="da")
    ang.add_argument("--json")
    ang.set_defaults(func=cmd_angles)

    fm = sub.add_parser("fm", help="hooks, screens and clickable diagrams")
    fm.add_argument("what", choices=["chi", "nest", "tree", "draw", "read",
                                     "roundtrip", "fiber", "export-click",
                                     "normal-form"])
    fm.add_argument("input")
    fm.add_argument("--json")
    fm.set_defaults(func=cmd_fm)

    cont = sub.add_parser("continuity", help="desk-scale continuity probe")
    cont_sub = cont.add_subparsers(dest="what", required=True)
    probe = cont_sub.add_parser("probe")
    probe.add_argument("input")
    probe.add_argument("--N", default="10")
    probe.add_argument("--deltas", default="1e-1,1e-2,1e-3,1e-4")
    probe.add_argument("--seed", type=int, default=0)
    probe.add_argument("--samples", type=int, default=512)
    probe.set_defaults(func=cmd_continuity)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError) as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
