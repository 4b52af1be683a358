"""JSON (de)serialization for all file formats plus a small SVG writer.

Exact values travel as strings ("p/q" or "p"); float data (clickable
diagrams) stays as JSON numbers.  All dumps are deterministic: keys sorted,
fixed float formatting via repr.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .cells import PointEl, RayEl, SegmentEl
from .exactnum import Poly, rational_to_str
from .hooks import ScreenDiagram
from .korder import CountVectors, StaticPointSet, VoronoiPoset
from .limitdiag import GammaDataSet, LimitDiagram, OutsideEdge
from .sites import DirectionVector, PolySite, SiteSet


def _frac(s) -> Fraction:
    return Fraction(str(s))


# ---------------------------------------------------------------------------
# site sets

def siteset_to_json(s: SiteSet) -> dict:
    return {"sites": [{"label": st.label,
                       "x": st.x.to_strings(),
                       "y": st.y.to_strings()} for st in s.sites]}


def siteset_from_json(data: dict) -> SiteSet:
    sites = []
    for entry in data["sites"]:
        sites.append(PolySite(int(entry["label"]),
                              Poly.from_strings(entry["x"]),
                              Poly.from_strings(entry["y"])))
    return SiteSet(sites)


# ---------------------------------------------------------------------------
# static points and gamma data

def points_from_json(data: dict) -> StaticPointSet:
    pts = [(_frac(x), _frac(y)) for x, y in data["points"]]
    return StaticPointSet(pts)


def points_to_json(s: StaticPointSet) -> dict:
    return {"points": [[rational_to_str(x), rational_to_str(y)]
                       for x, y in s.points]}


def gamma_from_json(data: dict) -> GammaDataSet:
    pts = [(_frac(x), _frac(y)) for x, y in data["points"]]
    dirs = {}
    for key, vec in data.get("directions", {}).items():
        i, j = (int(v) for v in key.split(","))
        dirs[(i, j)] = DirectionVector.from_fractions(
            Fraction(int(vec[0])), Fraction(int(vec[1])))
    n = len(pts)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in dirs:
                pi, pj = pts[i - 1], pts[j - 1]
                if pi == pj:
                    raise ValueError(
                        "coincident pair (%d,%d) needs an explicit direction" % (i, j))
                dirs[(i, j)] = DirectionVector.from_fractions(
                    pj[0] - pi[0], pj[1] - pi[1])
    return GammaDataSet(pts, dirs)


def gamma_to_json(g: GammaDataSet) -> dict:
    return {
        "points": [[rational_to_str(x), rational_to_str(y)] for x, y in g.points],
        "directions": {"%d,%d" % k: [v.dx, v.dy]
                       for k, v in sorted(g.directions.items())},
    }


# ---------------------------------------------------------------------------
# diagrams

def _point_json(p) -> list:
    return [rational_to_str(p[0]), rational_to_str(p[1])]


def element_to_json(el) -> dict:
    if isinstance(el, PointEl):
        return {"kind": "point", "p": _point_json(el.p)}
    if isinstance(el, SegmentEl):
        return {"kind": "segment", "p": _point_json(el.p), "q": _point_json(el.q)}
    if isinstance(el, RayEl):
        return {"kind": "ray", "p": _point_json(el.p), "d": list(el.d)}
    return {"kind": "line", "p": _point_json(el.p), "d": list(el.d)}


def diagram_to_json(d: LimitDiagram) -> dict:
    cells = {}
    for lbl, rec in sorted(d.cells.items()):
        shape = rec.shape
        cells[str(lbl)] = {
            "kind": shape.kind,
            "vertices": [_point_json(v) for v in shape.vertices()],
            "rays": [list(r) for r in shape.ray_directions()],
        }
    out = {
        "cells": cells,
        "skeleton": [element_to_json(el) for el in d.skeleton],
    }
    if d.outside_edges:
        out["outside_edges"] = [outside_edge_to_json(e) for e in d.outside_edges]
    return out


def outside_edge_to_json(e: OutsideEdge) -> dict:
    def pt(p):
        return [p.cx.to_str(), p.cy.to_str()]
    out = {"pair": list(e.pair), "endpoints": [pt(e.endpoints[0]), pt(e.endpoints[1])]}
    if e.direction is not None:
        out["direction"] = [e.direction.dx, e.direction.dy]
    return out


def hull_to_json(cch, dh) -> dict:
    return {
        "cch": list(cch.labels),
        "dh": list(dh.labels),
        "dh_directions": [[d.dx, d.dy] for d in dh.edge_directions],
    }


# ---------------------------------------------------------------------------
# poset / counting

def poset_to_json(poset: VoronoiPoset, cv: CountVectors) -> dict:
    return {
        "elements": sorted([sorted(el) for el in poset.elements],
                           key=lambda e: (len(e), e)),
        "f": list(cv.f),
        "c": list(cv.c),
        "v": list(cv.v[1:]),
        "e": list(cv.e[1:]),
        "f_inf": list(cv.f_inf[1:]),
    }


# ---------------------------------------------------------------------------
# angle data

def angles_to_json(av) -> dict:
    return {
        "mode": av.mode,
        "pairs": {"%d,%d" % k: {"dir": [d.dx, d.dy]}
                  for k, d in sorted(av.values.items())},
    }


def angles_from_json(data: dict):
    from .angles import AngleVector
    mode = data["mode"]
    values = {}
    n = 0
    for key, entry in data["pairs"].items():
        i, j = (int(v) for v in key.split(","))
        values[(i, j)] = DirectionVector.from_fractions(
            Fraction(int(entry["dir"][0])), Fraction(int(entry["dir"][1])))
        n = max(n, i, j)
    return AngleVector(n, mode, values)


# ---------------------------------------------------------------------------
# clickable diagrams

def clickable_to_json(sd: ScreenDiagram, bbox_pad: float = 1.5) -> dict:
    xs = [p[1] for p in sd.sites]
    ys = [p[2] for p in sd.sites]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = span * bbox_pad
    bbox = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)

    cells = []
    for lbl, rec in sorted(sd.diagram.cells.items()):
        owner = sd.owners[lbl]
        polygon = _clipped_polygon(rec, bbox)
        rays = [[float(d[0]), float(d[1])] for d in rec.shape.ray_directions()]
        cells.append({"owner": list(owner), "polygon": polygon, "rays": rays})

    return {
        "cluster": list(sd.cluster),
        "orientation": sd.orientation,
        "sites": [{"label": lbl, "x": x, "y": y} for lbl, x, y in sd.sites],
        "cells": cells,
        "paste_rays": [{
            "at": [pr["at"][0], pr["at"][1]],
            "cluster": list(pr["cluster"]),
            "dirs": [[dx, dy] for dx, dy in pr["dirs"]],
        } for pr in sd.paste_rays],
        "children": [clickable_to_json(c, bbox_pad) for c in sd.children],
    }


def _clipped_polygon(rec, bbox) -> list:
    """Cell clipped to the bbox as an ordered float vertex list."""
    from .cells import cell_shape, halfplane

    x0, y0, x1, y1 = (Fraction(repr(v)) for v in bbox)
    cons = list(rec.constraints) + [
        halfplane(1, 0, x1), halfplane(-1, 0, -x0),
        halfplane(0, 1, y1), halfplane(0, -1, -y0)]
    shape = cell_shape(cons)
    verts = [(float(x), float(y)) for x, y in shape.vertices()]
    if len(verts) < 3:
        return [[x, y] for x, y in verts]
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    verts.sort(key=lambda v: math.atan2(v[1] - cy, v[0] - cx))
    return [[x, y] for x, y in verts]


# ---------------------------------------------------------------------------
# SVG

def svg_diagram(d: LimitDiagram, bbox, site_points=None) -> str:
    """Skeleton plus degenerate cells (dashed); rays truncated at the bbox."""
    x0, y0, x1, y1 = (float(v) for v in bbox)
    w, h = x1 - x0, y1 - y0
    lines = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="%g %g %g %g">'
             % (x0, -y1, w, h)]
    lines.append('<g stroke="black" stroke-width="%g" fill="none">' % (w / 400))

    def emit(el, dashed=False):
        seg = _element_clip(el, (x0, y0, x1, y1))
        if seg is None:
            return
        (ax, ay), (bx, by) = seg
        dash = ' stroke-dasharray="%g %g"' % (w / 80, w / 80) if dashed else ""
        lines.append('<line x1="%g" y1="%g" x2="%g" y2="%g"%s/>'
                     % (ax, -ay, bx, -by, dash))

    degenerate = set()
    for lbl, rec in d.cells.items():
        if rec.kind in ("point", "segment", "ray", "line"):
            if rec.kind == "point":
                p = rec.shape.element.p
                lines.append('<circle cx="%g" cy="%g" r="%g" fill="black"/>'
                             % (float(p[0]), -float(p[1]), w / 150))
            else:
                emit(rec.shape.element, dashed=True)
                degenerate.add(rec.shape.element.key())
    for el in d.skeleton:
        if el.key() in degenerate:
            continue
        if isinstance(el, PointEl):
            lines.append('<circle cx="%g" cy="%g" r="%g" fill="black"/>'
                         % (float(el.p[0]), -float(el.p[1]), w / 150))
        else:
            emit(el)
    if site_points:
        for x, y in site_points:
            lines.append('<circle cx="%g" cy="%g" r="%g" fill="red" stroke="none"/>'
                         % (float(x), -float(y), w / 120))
    lines.append("</g></svg>")
    return "\n".join(lines)


def _element_clip(el, bbox):
    x0, y0, x1, y1 = bbox
    if isinstance(el, PointEl):
        return None
    if isinstance(el, SegmentEl):
        p = (float(el.p[0]), float(el.p[1]))
        q = (float(el.q[0]), float(el.q[1]))
        d = (q[0] - p[0], q[1] - p[1])
        lo, hi = 0.0, 1.0
    elif isinstance(el, RayEl):
        p = (float(el.p[0]), float(el.p[1]))
        d = (float(el.d[0]), float(el.d[1]))
        lo, hi = 0.0, math.inf
    else:
        p = (float(el.p[0]), float(el.p[1]))
        d = (float(el.d[0]), float(el.d[1]))
        lo, hi = -math.inf, math.inf
    for nx, ny, c in ((1, 0, x1), (-1, 0, -x0), (0, 1, y1), (0, -1, -y0)):
        coeff = nx * d[0] + ny * d[1]
        rhs = c - (nx * p[0] + ny * p[1])
        if abs(coeff) < 1e-30:
            if rhs < 0:
                return None
            continue
        bound = rhs / coeff
        if coeff > 0:
            hi = min(hi, bound)
        else:
            lo = max(lo, bound)
    if lo > hi:
        return None
    return ((p[0] + lo * d[0], p[1] + lo * d[1]),
            (p[0] + hi * d[0], p[1] + hi * d[1]))


def dumps(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=True)
