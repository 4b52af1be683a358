"""Exact intersection of half-planes in the plane.

A cell is handed around as a list of constraints n.x <= c over rationals.
Everything is decided exactly:

* faces: each constraint boundary clipped by the others (1D interval work);
* emptiness: with at least one constraint, the cell is nonempty iff some
  face is nonempty;
* full-dimensionality: the cell has interior iff it stays feasible after
  shrinking every constraint by a symbolic infinitesimal; the shifted
  interval endpoints are exactly linear in the infinitesimal, so lexicographic
  (value, slope) pairs decide every comparison;
* degenerate cells: a nonempty cell without interior is contained in one of
  its constraint boundaries and equals that line clipped by all constraints.

Skeleton elements (points, segments, rays, lines) carry canonical keys so
unions of boundaries can be compared as exact point sets after merging
collinear pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union


@dataclass(frozen=True)
class Constraint:
    """Half-plane n . x <= c with n = (nx, ny) nonzero."""

    nx: Fraction
    ny: Fraction
    c: Fraction

    def holds(self, x: Fraction, y: Fraction) -> bool:
        return self.nx * x + self.ny * y <= self.c

    def holds_strict(self, x: Fraction, y: Fraction) -> bool:
        return self.nx * x + self.ny * y < self.c


def halfplane(nx, ny, c) -> Constraint:
    nx, ny, c = Fraction(nx), Fraction(ny), Fraction(c)
    if nx == 0 and ny == 0:
        raise ValueError("half-plane needs a nonzero normal")
    return Constraint(nx, ny, c)


Point = tuple[Fraction, Fraction]


def primitive(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    if dx == 0 and dy == 0:
        raise ValueError("null vector")
    den = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * den), int(dy * den)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


# ---------------------------------------------------------------------------
# skeleton elements

@dataclass(frozen=True)
class PointEl:
    p: Point

    def key(self):
        return ("point", self.p)


@dataclass(frozen=True)
class SegmentEl:
    p: Point
    q: Point

    def __post_init__(self):
        if self.q < self.p:
            p, q = self.p, self.q
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    def key(self):
        return ("seg", self.p, self.q)


@dataclass(frozen=True)
class RayEl:
    p: Point
    d: tuple[int, int]

    def key(self):
        return ("ray", self.p, self.d)


@dataclass(frozen=True)
class LineEl:
    p: Point
    d: tuple[int, int]

    def key(self):
        return ("line", line_key(self.p, self.d))


Element = Union[PointEl, SegmentEl, RayEl, LineEl]


def line_key(p: Point, d: tuple[int, int]) -> tuple[int, int, int]:
    """Canonical (a, b, c) with a*x + b*y = c, primitive, first nonzero positive."""
    a = Fraction(-d[1])
    b = Fraction(d[0])
    c = a * p[0] + b * p[1]
    den = c.denominator
    ia, ib, ic = int(a * den), int(b * den), int(c * den)
    g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return (ia, ib, ic)


def line_anchor_dir(key: tuple[int, int, int]) -> tuple[Point, tuple[int, int]]:
    """Canonical anchor (foot of the origin perpendicular) and direction."""
    a, b, c = key
    nn = Fraction(a * a + b * b)
    anchor = (Fraction(a) * c / nn, Fraction(b) * c / nn)
    return anchor, (b, -a)


# ---------------------------------------------------------------------------
# symbolic infinitesimal values a + b*eps

class Eps:
    __slots__ = ("a", "b")

    def __init__(self, a: Fraction, b: Fraction = Fraction(0)):
        self.a = a
        self.b = b

    def __lt__(self, other: "Eps") -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def __le__(self, other: "Eps") -> bool:
        return (self.a, self.b) <= (other.a, other.b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Eps) and (self.a, self.b) == (other.a, other.b)

    def __repr__(self):
        return "Eps(%s, %s)" % (self.a, self.b)


# ---------------------------------------------------------------------------
# 1D clipping

_NEG_INF = object()
_POS_INF = object()


def _clip_param(constraints: Sequence[Constraint], p: Point, d: tuple[Fraction, Fraction],
                skip: int = -1):
    """Clip the parametrized line p + s d by all constraints (skip one index).

    Returns (lo, hi) with None meaning unbounded on that side, or None if the
    intersection is empty.
    """
    lo = None
    hi = None
    for idx, cons in enumerate(constraints):
        if idx == skip:
            continue
        coeff = cons.nx * d[0] + cons.ny * d[1]
        rhs = cons.c - (cons.nx * p[0] + cons.ny * p[1])
        if coeff == 0:
            if rhs < 0:
                return None
            continue
        bound = rhs / coeff
        if coeff > 0:
            if hi is None or bound < hi:
                hi = bound
        else:
            if lo is None or bound > lo:
                lo = bound
    if lo is not None and hi is not None and lo > hi:
        return None
    return (lo, hi)


def _interval_to_element(p: Point, d: tuple[Fraction, Fraction], lo, hi) -> Element:
    def at(s: Fraction) -> Point:
        return (p[0] + s * d[0], p[1] + s * d[1])

    if lo is None and hi is None:
        return LineEl(p, primitive(*d))
    if lo is None:
        return RayEl(at(hi), primitive(-d[0], -d[1]))
    if hi is None:
        return RayEl(at(lo), primitive(*d))
    if lo == hi:
        return PointEl(at(lo))
    a, b = at(lo), at(hi)
    if b < a:
        a, b = b, a
    return SegmentEl(a, b)


def eps_feasible(constraints: Sequence[Constraint]) -> bool:
    """Whether the system n.x <= c - eps is feasible for an infinitesimal eps.

    Equivalent to the original cell being full-dimensional.
    """
    if not constraints:
        return True
    zero = Fraction(0)
    for i, ci in enumerate(constraints):
        nn = ci.nx * ci.nx + ci.ny * ci.ny
        # point on the shifted boundary line: n_i (c_i - eps) / |n_i|^2
        px = (Eps(ci.c * ci.nx / nn, -ci.nx / nn))
        py = (Eps(ci.c * ci.ny / nn, -ci.ny / nn))
        d = (-ci.ny, ci.nx)
        lo: Optional[Eps] = None
        hi: Optional[Eps] = None
        empty = False
        for j, cj in enumerate(constraints):
            if j == i:
                continue
            coeff = cj.nx * d[0] + cj.ny * d[1]
            # rhs = (c_j - eps) - n_j . p  as a linear function of eps
            rhs = Eps(cj.c - (cj.nx * px.a + cj.ny * py.a),
                      Fraction(-1) - (cj.nx * px.b + cj.ny * py.b))
            if coeff == 0:
                if rhs < Eps(zero):
                    empty = True
                    break
                continue
            bound = Eps(rhs.a / coeff, rhs.b / coeff)
            if coeff > 0:
                if hi is None or bound < hi:
                    hi = bound
            else:
                if lo is None or bound > lo:
                    lo = bound
        if empty:
            continue
        if lo is not None and hi is not None and hi < lo:
            continue
        return True
    return False


# ---------------------------------------------------------------------------
# full cell classification

@dataclass
class CellShape:
    """Exact shape of an intersection of half-planes.

    kind is one of "empty", "point", "segment", "ray", "line", "region",
    "plane".  For degenerate kinds `element` carries the cell itself; for
    "region" `faces` lists (constraint index, boundary element) pairs.
    """

    kind: str
    element: Optional[Element] = None
    faces: Optional[list[tuple[int, Element]]] = None

    def boundary_elements(self) -> list[Element]:
        """The cell boundary as skeleton elements (the cell itself when it is
        lower-dimensional, nothing for the whole plane)."""
        if self.kind in ("empty", "plane"):
            return []
        if self.kind == "region":
            return [el for _, el in self.faces]
        return [self.element]

    def vertices(self) -> list[Point]:
        out = set()
        for el in self.boundary_elements():
            if isinstance(el, PointEl):
                out.add(el.p)
            elif isinstance(el, SegmentEl):
                out.add(el.p)
                out.add(el.q)
            elif isinstance(el, RayEl):
                out.add(el.p)
        return sorted(out)

    def ray_directions(self) -> list[tuple[int, int]]:
        out = []
        for el in self.boundary_elements():
            if isinstance(el, RayEl):
                out.append(el.d)
            elif isinstance(el, LineEl):
                out.append(el.d)
                out.append((-el.d[0], -el.d[1]))
        return out

    @property
    def is_full_dimensional(self) -> bool:
        return self.kind in ("region", "plane")


def cell_shape(constraints: Sequence[Constraint]) -> CellShape:
    """Classify the intersection of half-planes exactly."""
    constraints = list(constraints)
    if not constraints:
        return CellShape("plane")

    faces: list[tuple[int, Element]] = []
    for i, cons in enumerate(constraints):
        nn = cons.nx * cons.nx + cons.ny * cons.ny
        p = (cons.c * cons.nx / nn, cons.c * cons.ny / nn)
        d = (-cons.ny, cons.nx)
        clip = _clip_param(constraints, p, d, skip=i)
        if clip is None:
            continue
        faces.append((i, _interval_to_element(p, d, *clip)))

    if not faces:
        return CellShape("empty")

    if eps_feasible(constraints):
        # full-dimensional: drop point faces, they are vertices of 1D faces
        dedup: dict = {}
        for i, el in faces:
            if isinstance(el, PointEl):
                continue
            dedup.setdefault(el.key(), (i, el))
        return CellShape("region", faces=list(dedup.values()))

    # no interior: the cell lives inside one of its boundary lines
    one_dim = [(i, el) for i, el in faces if not isinstance(el, PointEl)]
    if not one_dim:
        pts = {el.p for _, el in faces}
        assert len(pts) == 1, "point faces of a degenerate cell must agree"
        return CellShape("point", element=PointEl(next(iter(pts))))
    i, el = one_dim[0]
    cons = constraints[i]
    nn = cons.nx * cons.nx + cons.ny * cons.ny
    p = (cons.c * cons.nx / nn, cons.c * cons.ny / nn)
    d = (-cons.ny, cons.nx)
    clip = _clip_param(constraints, p, d, skip=i)
    assert clip is not None
    cell = _interval_to_element(p, d, *clip)
    kind = {PointEl: "point", SegmentEl: "segment", RayEl: "ray", LineEl: "line"}[type(cell)]
    return CellShape(kind, element=cell)


def feasible(constraints: Sequence[Constraint]) -> bool:
    """Nonempty intersection (any dimension)."""
    if not constraints:
        return True
    for i, cons in enumerate(constraints):
        nn = cons.nx * cons.nx + cons.ny * cons.ny
        p = (cons.c * cons.nx / nn, cons.c * cons.ny / nn)
        d = (-cons.ny, cons.nx)
        if _clip_param(constraints, p, d, skip=i) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# canonical merging of skeleton element sets

def _param(p0: Point, d0: tuple[int, int], x: Point) -> Fraction:
    return (x[0] - p0[0]) * d0[0] + (x[1] - p0[1]) * d0[1]


def merge_elements(elements: Iterable[Element]) -> set:
    """Canonical form of a union of elements, as a set of hashable keys.

    Collinear overlapping pieces are merged into maximal intervals per
    supporting line; isolated points absorbed by some piece are dropped.
    Two element unions cover the same subset of the plane iff their merged
    forms are equal.
    """
    by_line: dict[tuple[int, int, int], list] = {}
    points: set[Point] = set()
    for el in elements:
        if isinstance(el, PointEl):
            points.add(el.p)
            continue
        if isinstance(el, SegmentEl):
            key = line_key(el.p, primitive(el.q[0] - el.p[0], el.q[1] - el.p[1]))
        else:
            key = line_key(el.p, el.d)
        p0, d0 = line_anchor_dir(key)
        if isinstance(el, SegmentEl):
            iv = sorted((_param(p0, d0, el.p), _param(p0, d0, el.q)))
        elif isinstance(el, RayEl):
            s = _param(p0, d0, el.p)
            forward = el.d[0] * d0[0] + el.d[1] * d0[1] > 0
            iv = [s, _POS_INF] if forward else [_NEG_INF, s]
        else:
            iv = [_NEG_INF, _POS_INF]
        by_line.setdefault(key, []).append(iv)

    out = set()
    covered_pointset = []
    for key, ivs in by_line.items():
        def lo_key(iv):
            return (0,) if iv[0] is _NEG_INF else (1, iv[0])
        ivs.sort(key=lo_key)
        merged = []
        for iv in ivs:
            if merged and _le(iv[0], merged[-1][1]):
                if _lt(merged[-1][1], iv[1]):
                    merged[-1][1] = iv[1]
            else:
                merged.append(list(iv))
        p0, d0 = line_anchor_dir(key)
        for lo, hi in merged:
            if lo is _NEG_INF and hi is _POS_INF:
                out.add(("line", key))
            elif lo is _NEG_INF:
                out.add(("rayneg", key, hi))
            elif hi is _POS_INF:
                out.add(("raypos", key, lo))
            else:
                out.add(("seg", key, lo, hi))
            covered_pointset.append((key, lo, hi))

    for p in points:
        absorbed = False
        for key, lo, hi in covered_pointset:
            a, b, c = key
            if Fraction(a) * p[0] + Fraction(b) * p[1] != c:
                continue
            p0, d0 = line_anchor_dir(key)
            s = _param(p0, d0, p)
            if _le(lo, s) and _le(s, hi):
                absorbed = True
                break
        if not absorbed:
            out.add(("point", p))
    return out


def _lt(a, b) -> bool:
    if a is _NEG_INF:
        return b is not _NEG_INF
    if a is _POS_INF:
        return False
    if b is _POS_INF:
        return True
    if b is _NEG_INF:
        return False
    return a < b


def _le(a, b) -> bool:
    return not _lt(b, a)
