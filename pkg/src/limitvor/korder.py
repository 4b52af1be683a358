"""Higher-order Voronoi diagrams of static rational points and their poset.

Order-k cells are the regions whose k nearest sites form a fixed subset.
Everything is derived exactly from the C(n,3) circles: a circle through
a, b, c strictly enclosing the set H places a vertex of orders |H|+1 and
|H|+2 at its center with incident cells H+a, H+b, H+c and H+ab, H+ac, H+bc.
Under general position with n >= 3 every proper cell owns such a vertex, so
collecting these label sets enumerates all cells; a direct half-plane
feasibility test is kept alongside as the independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cells import Constraint, Element, RayEl, SegmentEl, eps_feasible
from .sites import GeneralPositionViolation

Point = tuple[Fraction, Fraction]


def _orient(a: Point, b: Point, c: Point) -> int:
    det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
    return 0 if det == 0 else (1 if det > 0 else -1)


def _sq_dist(a: Point, b: Point) -> Fraction:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    d = 2 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
    if d == 0:
        raise GeneralPositionViolation("collinear points have no circumcenter")
    na = a[0] * a[0] + a[1] * a[1]
    nb = b[0] * b[0] + b[1] * b[1]
    nc = c[0] * c[0] + c[1] * c[1]
    ux = (na * (b[1] - c[1]) + nb * (c[1] - a[1]) + nc * (a[1] - b[1])) / d
    uy = (na * (c[0] - b[0]) + nb * (a[0] - c[0]) + nc * (b[0] - a[0])) / d
    return (ux, uy)


class StaticPointSet:
    """Distinct rational points labeled 1..n, kept in general position."""

    def __init__(self, points: Sequence[Point], *, checked: bool = True):
        self.points = [(Fraction(x), Fraction(y)) for x, y in points]
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        if checked:
            v = self.general_position_violation()
            if v:
                raise GeneralPositionViolation(v)
        self._circles: Optional[list[CircleRecord]] = None

    def __len__(self) -> int:
        return len(self.points)

    def point(self, label: int) -> Point:
        return self.points[label - 1]

    def labels(self) -> list[int]:
        return list(range(1, len(self.points) + 1))

    def general_position_violation(self) -> Optional[str]:
        n = len(self.points)
        for a, b, c in itertools.combinations(range(n), 3):
            if _orient(self.points[a], self.points[b], self.points[c]) == 0:
                return "collinear points %s" % ([a + 1, b + 1, c + 1],)
        for a, b, c, d in itertools.combinations(range(n), 4):
            center = circumcenter(self.points[a], self.points[b], self.points[c])
            if (_sq_dist(center, self.points[d])
                    == _sq_dist(center, self.points[a])):
                return "cocircular points %s" % ([a + 1, b + 1, c + 1, d + 1],)
        return None

    def has_distinct_circumcenters(self) -> bool:
        """Whether all C(n,3) circle centers are pairwise distinct points.

        Vertex counting identifies vertices with circle centers; sampled
        instances are drawn with this extra nondegeneracy.
        """
        seen = set()
        for rec in circles(self):
            if rec.center in seen:
                return False
            seen.add(rec.center)
        return True


@dataclass(frozen=True)
class CircleRecord:
    labels: tuple[int, int, int]      # sorted
    center: Point
    inside: frozenset[int]            # labels strictly inside

    @property
    def order(self) -> int:
        return len(self.inside)


def circles(s: StaticPointSet) -> list[CircleRecord]:
    """All circumcircles with their strictly enclosed label sets."""
    if s._circles is not None:
        return s._circles
    n = len(s)
    out = []
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        center = circumcenter(s.point(a), s.point(b), s.point(c))
        r2 = _sq_dist(center, s.point(a))
        inside = frozenset(z for z in range(1, n + 1)
                           if z not in (a, b, c)
                           and _sq_dist(center, s.point(z)) < r2)
        out.append(CircleRecord((a, b, c), center, inside))
    s._circles = out
    return out


def clockwise_triple(s: StaticPointSet, a: int, b: int, c: int) -> tuple[int, int, int]:
    """The labels in clockwise order on their circle, least label first."""
    if _orient(s.point(a), s.point(b), s.point(c)) > 0:
        b, c = c, b
    cyc = [(a, b, c), (b, c, a), (c, a, b)]
    return min(cyc, key=lambda t: t[0])


# ---------------------------------------------------------------------------
# cells

def cell_constraints(a: frozenset[int], s: StaticPointSet) -> list[Constraint]:
    cons = []
    rest = [y for y in s.labels() if y not in a]
    for x in a:
        px = s.point(x)
        nx_ = px[0] * px[0] + px[1] * px[1]
        for y in rest:
            py = s.point(y)
            ny_ = py[0] * py[0] + py[1] * py[1]
            cons.append(Constraint(2 * (py[0] - px[0]), 2 * (py[1] - px[1]),
                                   ny_ - nx_))
    return cons


def cell_nonempty(a, s: StaticPointSet) -> tuple[bool, bool]:
    """(has interior, unbounded) for the order-|A| cell of label set A.

    Nonempty means nonempty interior (general position rules out lower
    dimensional cells); unboundedness is decided by the existence of a line
    separating A from its complement, i.e. disjointness of the convex hulls.
    """
    a = frozenset(a)
    if not a or not a.issubset(set(s.labels())):
        raise ValueError("A must be a nonempty subset of the labels")
    if len(a) == len(s):
        return True, True
    nonempty = eps_feasible(cell_constraints(a, s))
    if not nonempty:
        return False, False
    pa = [s.point(x) for x in sorted(a)]
    pb = [s.point(y) for y in sorted(set(s.labels()) - a)]
    return True, hulls_disjoint(pa, pb)


def convex_hull_cycle(points: Sequence[Point]) -> list[Point]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    upper = chain(pts)
    lower = chain(reversed(pts))
    return upper[:-1] + lower[:-1]


def point_in_convex(p: Point, cycle: Sequence[Point]) -> bool:
    """Closed containment in the convex hull given as a cycle (ccw or degenerate)."""
    if len(cycle) == 1:
        return p == cycle[0]
    if len(cycle) == 2:
        a, b = cycle
        if _orient(a, b, p) != 0:
            return False
        return min(a, b) <= p <= max(a, b)
    n = len(cycle)
    sign = 0
    for i in range(n):
        o = _orient(cycle[i], cycle[(i + 1) % n], p)
        if o == 0:
            continue
        if sign == 0:
            sign = o
        elif o != sign:
            return False
    return True


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True

    def on_seg(a, b, c):
        return (_orient(a, b, c) == 0
                and min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    return (on_seg(q1, q2, p1) or on_seg(q1, q2, p2)
            or on_seg(p1, p2, q1) or on_seg(p1, p2, q2))


def hulls_disjoint(a: Sequence[Point], b: Sequence[Point]) -> bool:
    ha, hb = convex_hull_cycle(a), convex_hull_cycle(b)
    for p in ha:
        if point_in_convex(p, hb):
            return False
    for p in hb:
        if point_in_convex(p, ha):
            return False

    def edges(cycle):
        if len(cycle) == 1:
            return []
        if len(cycle) == 2:
            return [(cycle[0], cycle[1])]
        return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]

    for e1 in edges(ha):
        for e2 in edges(hb):
            if segments_intersect(*e1, *e2):
                return False
    return True


def cells_by_order(s: StaticPointSet) -> dict[int, set[frozenset[int]]]:
    """All nonempty cells per order, from the circle incidence structure.

    Each circle center is a vertex of two consecutive orders; since every
    proper cell has a vertex (n >= 3, general position), the union over
    circles is complete.  Order n is the whole plane.
    """
    n = len(s)
    out: dict[int, set[frozenset[int]]] = {k: set() for k in range(1, n + 1)}
    out[n].add(frozenset(s.labels()))
    if n < 3:
        if n == 2:
            out[1] = {frozenset([1]), frozenset([2])}
        return out
    for rec in circles(s):
        h = rec.inside
        k = rec.order
        a, b, c = rec.labels
        if k + 1 <= n:
            for x in (a, b, c):
                out[k + 1].add(h | {x})
        if k + 2 <= n:
            for pair in ((a, b), (a, c), (b, c)):
                out[k + 2].add(h | set(pair))
    return out


# ---------------------------------------------------------------------------
# full diagrams: vertices, edges, cells per order

@dataclass(frozen=True)
class KVertex:
    triple: tuple[int, int, int]          # clockwise, least label first
    center: Point
    kind: str                             # "new" (order k-1) or "old" (order k-2)
    cells: tuple[frozenset[int], ...]     # the three incident cells in V_k


@dataclass(frozen=True)
class KEdge:
    pair: tuple[int, int]
    closer: frozenset[int]                # the sites strictly closer on the edge
    element: Element                      # segment / ray / line geometry

    @property
    def cells(self) -> tuple[frozenset[int], frozenset[int]]:
        a, b = self.pair
        return (self.closer | {a}, self.closer | {b})


@dataclass
class KOrderDiagram:
    k: int
    vertices: list[KVertex]
    edges: list[KEdge]
    cells: set[frozenset[int]]


def _bisector_pieces(s: StaticPointSet, a: int, b: int) -> list[KEdge]:
    """Split the bisector of (a, b) at the circle centers through a and b."""
    pa, pb = s.point(a), s.point(b)
    mid = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
    d = (pa[1] - pb[1], pb[0] - pa[0])           # perpendicular to b - a
    dd = d[0] * d[0] + d[1] * d[1]
    params = []
    for z in s.labels():
        if z in (a, b):
            continue
        center = circumcenter(pa, pb, s.point(z))
        u = ((center[0] - mid[0]) * d[0] + (center[1] - mid[1]) * d[1]) / dd
        params.append(u)
    params.sort()

    def at(u: Fraction) -> Point:
        return (mid[0] + u * d[0], mid[1] + u * d[1])

    def closer_set(u: Fraction) -> frozenset[int]:
        x = at(u)
        ra = _sq_dist(x, pa)
        return frozenset(z for z in s.labels()
                         if z not in (a, b) and _sq_dist(x, s.point(z)) < ra)

    pieces: list[KEdge] = []
    pair = (a, b)
    if not params:
        pieces.append(KEdge(pair, closer_set(Fraction(0)),
                            _full_line(mid, d)))
        return pieces
    first = params[0]
    pieces.append(KEdge(pair, closer_set(first - 1),
                        RayEl(at(first), _prim(-d[0], -d[1]))))
    for u1, u2 in zip(params, params[1:]):
        pieces.append(KEdge(pair, closer_set((u1 + u2) / 2),
                            SegmentEl(at(u1), at(u2))))
    last = params[-1]
    pieces.append(KEdge(pair, closer_set(last + 1),
                        RayEl(at(last), _prim(d[0], d[1]))))
    return pieces


def _prim(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    from .cells import primitive
    return primitive(Fraction(dx), Fraction(dy))


def _full_line(p: Point, d) -> Element:
    from .cells import LineEl
    return LineEl(p, _prim(Fraction(d[0]), Fraction(d[1])))


def all_order_diagrams(s: StaticPointSet) -> dict[int, KOrderDiagram]:
    """Vertices (old/new), edges and cells of every V_k, k = 1..n-1 (plus V_n)."""
    n = len(s)
    cells = cells_by_order(s)
    edges_by_order: dict[int, list[KEdge]] = {k: [] for k in range(1, n + 1)}
    for a, b in itertools.combinations(s.labels(), 2):
        for piece in _bisector_pieces(s, a, b):
            edges_by_order[len(piece.closer) + 1].append(piece)

    verts_by_order: dict[int, list[KVertex]] = {k: [] for k in range(1, n + 1)}
    for rec in circles(s):
        tri = clockwise_triple(s, *rec.labels)
        h = rec.inside
        k = rec.order
        a, b, c = rec.labels
        if k + 1 <= n:
            verts_by_order[k + 1].append(KVertex(
                tri, rec.center, "new",
                tuple(h | {x} for x in (a, b, c))))
        if k + 2 <= n:
            verts_by_order[k + 2].append(KVertex(
                tri, rec.center, "old",
                tuple(h | set(p) for p in ((a, b), (a, c), (b, c)))))

    return {k: KOrderDiagram(k, verts_by_order[k], edges_by_order[k], cells[k])
            for k in range(1, n + 1)}


# ---------------------------------------------------------------------------
# counting and the poset

@dataclass
class CountVectors:
    n: int
    f: list[int]        # f[0..n]
    c: list[int]        # c[0..n-3] (empty for n < 3)
    v: list[int]        # v[k] for k = 1..n-1 at v[k]; v[0] unused
    e: list[int]        # e[k] for k = 1..n-1 at e[k]; e[0] unused
    f_inf: list[int]    # f_inf[k] for k = 1..n-1; f_inf[0] = 0

    def reduced_f(self) -> tuple[int, ...]:
        return tuple(self.f[k] + self.f[self.n - k + 1]
                     for k in range(1, (self.n + 1) // 2 + 1))

    def reduced_c(self) -> tuple[int, ...]:
        return tuple(self.c[i] + self.c[self.n - i - 3]
                     for i in range(0, (self.n - 3) // 2 + 1))


def count_vectors(s: StaticPointSet) -> CountVectors:
    n = len(s)
    cs = circles(s)
    c = [0] * max(n - 2, 0)
    for rec in cs:
        c[rec.order] += 1

    cells = cells_by_order(s)
    f = [1] + [len(cells[k]) for k in range(1, n + 1)]

    # distinct vertex points per order (centers of old and new circles)
    v = [0] * n
    centers: dict[int, set[Point]] = {}
    for rec in cs:
        centers.setdefault(rec.order, set()).add(rec.center)
    for k in range(1, n):
        pts = centers.get(k - 1, set()) | centers.get(k - 2, set())
        v[k] = len(pts)

    e = [0] * n
    for a, b in itertools.combinations(s.labels(), 2):
        for piece in _bisector_pieces(s, a, b):
            e[len(piece.closer) + 1] += 1

    f_inf = [0] * n
    for k in range(1, n):
        for cell in cells[k]:
            pa = [s.point(x) for x in sorted(cell)]
            pb = [s.point(y) for y in sorted(set(s.labels()) - cell)]
            if hulls_disjoint(pa, pb):
                f_inf[k] += 1
    return CountVectors(n, f, c, v, e, f_inf)


def f_vector(s: StaticPointSet) -> list[int]:
    return count_vectors(s).f


def c_vector(s: StaticPointSet) -> list[int]:
    return count_vectors(s).c


def v_vector(s: StaticPointSet) -> list[int]:
    return count_vectors(s).v[1:]


def e_vector(s: StaticPointSet) -> list[int]:
    return count_vectors(s).e[1:]


@dataclass
class VoronoiPoset:
    n: int
    elements: frozenset[frozenset[int]]

    def rank(self, element) -> int:
        return len(element)

    def f_vector(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for el in self.elements:
            out[len(el)] += 1
        return tuple(out)

    def leq(self, a, b) -> bool:
        return frozenset(a) <= frozenset(b)

    def is_graded(self) -> bool:
        """Every nonempty element must cover one of rank exactly one less."""
        for el in self.elements:
            if not el:
                continue
            if not any((el - {x}) in self.elements for x in el):
                return False
        return True


def voronoi_poset(s: StaticPointSet) -> VoronoiPoset:
    cells = cells_by_order(s)
    elements = {frozenset()}
    for k in range(1, len(s) + 1):
        elements.update(cells[k])
    return VoronoiPoset(len(s), frozenset(elements))


# ---------------------------------------------------------------------------
# identity verification

@dataclass
class IdentityReport:
    name: str
    ok: bool
    detail: str = ""


def verify_symmetries(s: StaticPointSet) -> list[IdentityReport]:
    """Check every counting identity exactly on one instance."""
    n = len(s)
    cv = count_vectors(s)
    f, c, v, e, f_inf = cv.f, cv.c, cv.v, cv.e, cv.f_inf

    def c_at(i):
        return c[i] if 0 <= i < len(c) else 0

    out = []

    def check(name, ok, detail=""):
        out.append(IdentityReport(name, bool(ok), detail))

    check("f_k + f_{n-k+1} = 2k(n-k+1)+1-n",
          all(f[k] + f[n - k + 1] == 2 * k * (n - k + 1) + 1 - n
              for k in range(1, n + 1)))
    check("v_k + v_{n-k} = 4k(n-k)-2n",
          all(v[k] + v[n - k] == 4 * k * (n - k) - 2 * n
              for k in range(1, n)))
    check("c_i + c_{n-i-3} = 2(i+1)(n-2-i)",
          all(c_at(i) + c_at(n - i - 3) == 2 * (i + 1) * (n - 2 - i)
              for i in range(0, max(n - 2, 0))))
    check("f_k = n-k+1+c_{k-2}",
          all(f[k] == n - k + 1 + c_at(k - 2) for k in range(1, n + 1)))
    check("f_i_inf + c_{i-1} - c_{i-2} = 2(n-i)",
          all(f_inf[i] + c_at(i - 1) - c_at(i - 2) == 2 * (n - i)
              for i in range(1, n)))
    check("v_k = c_{k-1} + c_{k-2}",
          all(v[k] == c_at(k - 1) + c_at(k - 2) for k in range(1, n)))
    check("v_k = 2(f_k-1) - f_k_inf",
          all(v[k] == 2 * (f[k] - 1) - f_inf[k] for k in range(1, n)))
    check("e_k = 3(f_k-1) - f_k_inf",
          all(e[k] == 3 * (f[k] - 1) - f_inf[k] for k in range(1, n)))
    check("f_k_inf = f_{n-k}_inf",
          all(f_inf[k] == f_inf[n - k] for k in range(1, n)))
    check("sum f_inf = n(n-1)", sum(f_inf[1:n]) == n * (n - 1))
    check("sum v = n(n-1)(n-2)/3", sum(v[1:n]) == n * (n - 1) * (n - 2) // 3)
    check("sum e = n(n-1)^2/2", sum(e[1:n]) == n * (n - 1) ** 2 // 2)
    check("sum f = n(n^2+5)/6", sum(f[1:n + 1]) == n * (n * n + 5) // 6)

    alternating = sum((-1) ** (k + 1) * f[k] for k in range(0, n + 1))
    if n % 2 == 1:
        check("alternating f-sum = 0 (odd n)", alternating == 0,
              "A=%d" % alternating)
    elif n % 4 == 0:
        check("A(S) odd (n = 0 mod 4)", alternating % 2 == 1,
              "A=%d" % alternating)
    else:
        check("A(S) even (n = 2 mod 4)", alternating % 2 == 0,
              "A=%d" % alternating)
    return out
