"""Limit Voronoi diagrams: type, abstract Delaunay graph, shapes and plugging.

The type of a degenerating site set is the set of clockwise triples whose
circle is empty at t=0+; it fixes the whole combinatorics.  The geometric
shape is computed from points-plus-angles data (gamma data sets) by exact
half-plane intersection, and the shape of an arbitrary set is assembled by
plugging each cluster's zero-cluster shape into its cell of the
cluster-location diagram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import cells as _c
from .cells import (CellShape, Constraint, Element, LineEl, PointEl, RayEl,
                    SegmentEl, merge_elements)
from .exactnum import ExtendedRational, Poly
from .hull import direction_hull
from .sites import (DirectionVector, ExtendedPoint, NotZeroCluster, PolySite,
                    SiteSet, _det3_collinear, _iadd, _imul, _incircle_minors,
                    _iruling_sign, _isub, circle_center, direction,
                    require_general_position)


class EmptySkeleton(ValueError):
    pass


class PointOutsideUnitDisk(ValueError):
    pass


class NTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class OrientedTriple:
    """Clockwise cyclic triple of labels, rotated to start at the least label."""

    labels: tuple[int, int, int]

    @staticmethod
    def clockwise(a: int, b: int, c: int) -> "OrientedTriple":
        cyc = [(a, b, c), (b, c, a), (c, a, b)]
        return OrientedTriple(min(cyc, key=lambda t: t[0]))

    def pairs(self) -> list[tuple[int, int]]:
        a, b, c = self.labels
        return [tuple(sorted(p)) for p in ((a, b), (b, c), (c, a))]

    def directed_edges(self) -> list[tuple[int, int]]:
        a, b, c = self.labels
        return [(a, b), (b, c), (c, a)]

    def __iter__(self):
        return iter(self.labels)


@dataclass(frozen=True)
class TypeSet:
    triples: frozenset[OrientedTriple]

    def __contains__(self, item) -> bool:
        if isinstance(item, OrientedTriple):
            return item in self.triples
        return OrientedTriple.clockwise(*item) in self.triples

    def __len__(self) -> int:
        return len(self.triples)

    def sorted(self) -> list[OrientedTriple]:
        return sorted(self.triples, key=lambda t: t.labels)


@dataclass
class AbstractDelaunayGraph:
    vertices: list[int]
    multiplicity: dict[tuple[int, int], int]

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.multiplicity)

    def hull_edges(self) -> list[tuple[int, int]]:
        return sorted(e for e, m in self.multiplicity.items() if m == 1)


def compute_type(s: SiteSet, workers: int = 1) -> TypeSet:
    """All empty clockwise circles at t=0+, by brute force over triples.

    The triple scan is embarrassingly parallel; with workers > 1 the outer
    index range is chunked over a thread pool and merged in chunk order, so
    the result does not depend on the schedule.
    """
    require_general_position(s)
    sites = s.sites
    n = len(sites)
    ints = s._int_polys()
    by = [ints[x.label] for x in sites]

    def scan(i_range) -> list[OrientedTriple]:
        found = []
        for i in i_range:
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    o = _iruling_sign(_det3_collinear(by[i], by[j], by[k]))
                    # counterclockwise triples are normalized by a swap
                    a, b, c = (i, j, k) if o < 0 else (i, k, j)
                    m1, m2, m3, m4 = _incircle_minors(by[a], by[b], by[c])
                    empty = True
                    for q in range(n):
                        if q in (i, j, k):
                            continue
                        qx, qy, qn = by[q]
                        total = _iadd(_isub(_imul(qy, m2), _imul(qx, m1)),
                                      _isub(m4, _imul(qn, m3)))
                        if _iruling_sign(total) < 0:
                            empty = False
                            break
                    if empty:
                        found.append(OrientedTriple.clockwise(
                            sites[a].label, sites[b].label, sites[c].label))
        return found

    if workers <= 1 or n < 8:
        out = scan(range(n))
    else:
        from concurrent.futures import ThreadPoolExecutor
        chunks = [range(i, n, workers) for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, chunks))
        out = [tri for chunk in results for tri in chunk]
    return TypeSet(frozenset(out))


def delaunay_graph(t: TypeSet) -> AbstractDelaunayGraph:
    mult: dict[tuple[int, int], int] = {}
    verts = set()
    for tri in t.triples:
        verts.update(tri.labels)
        for pair in tri.pairs():
            mult[pair] = mult.get(pair, 0) + 1
    return AbstractDelaunayGraph(sorted(verts), mult)


# ---------------------------------------------------------------------------
# gamma data sets: points plus one direction per pair

@dataclass(frozen=True)
class HalfPlane:
    """vh(p_i, p_j): membership n . (x - b) <= 0 with n along the angle."""

    normal: DirectionVector
    base: tuple[Fraction, Fraction]

    def constraint(self) -> Constraint:
        nx, ny = Fraction(self.normal.dx), Fraction(self.normal.dy)
        return Constraint(nx, ny, nx * self.base[0] + ny * self.base[1])

    def contains(self, x, y) -> bool:
        return self.constraint().holds(Fraction(x), Fraction(y))


class GammaDataSet:
    """n labeled points (not necessarily distinct) plus a direction per pair.

    The direction stored for (i, j) with i < j points from i to j; distinct
    points must carry exactly the direction of their difference vector.
    """

    def __init__(self, points: Sequence[tuple[Fraction, Fraction]],
                 directions: dict[tuple[int, int], DirectionVector]):
        self.points = [(Fraction(x), Fraction(y)) for x, y in points]
        self.directions = dict(directions)
        n = len(self.points)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if (i, j) not in self.directions:
                    raise ValueError("missing direction for pair (%d,%d)" % (i, j))
                pi, pj = self.points[i - 1], self.points[j - 1]
                if pi != pj:
                    expected = DirectionVector.from_fractions(pj[0] - pi[0], pj[1] - pi[1])
                    if self.directions[(i, j)] != expected:
                        raise ValueError(
                            "direction for distinct pair (%d,%d) must follow the points"
                            % (i, j))

    def __len__(self) -> int:
        return len(self.points)

    def point(self, label: int) -> tuple[Fraction, Fraction]:
        return self.points[label - 1]

    def dir(self, i: int, j: int) -> DirectionVector:
        if i < j:
            return self.directions[(i, j)]
        return -self.directions[(j, i)]


def gamma_of(s: SiteSet) -> GammaDataSet:
    """The points-at-zero plus pairwise limit directions of a site set."""
    require_general_position(s)
    pts = [st.at_zero() for st in s.sites]
    dirs = {}
    labels = s.labels()
    for ii, i in enumerate(labels):
        for j in labels[ii + 1:]:
            dirs[(i, j)] = direction(s[i], s[j])
    return GammaDataSet(pts, dirs)


def gamma_of_points(points: Sequence[tuple[Fraction, Fraction]]) -> GammaDataSet:
    """Classical gamma data from distinct points."""
    dirs = {}
    n = len(points)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pi, pj = points[i - 1], points[j - 1]
            dirs[(i, j)] = DirectionVector.from_fractions(
                Fraction(pj[0]) - Fraction(pi[0]), Fraction(pj[1]) - Fraction(pi[1]))
    return GammaDataSet(points, dirs)


def half_plane(gamma: GammaDataSet, i: int, j: int) -> HalfPlane:
    pi, pj = gamma.point(i), gamma.point(j)
    base = ((pi[0] + pj[0]) / 2, (pi[1] + pj[1]) / 2)
    return HalfPlane(gamma.dir(i, j), base)


def bisector(gamma: GammaDataSet, i: int, j: int) -> LineEl:
    hp = half_plane(gamma, i, j)
    return LineEl(hp.base, hp.normal.perp().as_tuple())


@dataclass
class CellRecord:
    label: int
    shape: CellShape
    constraints: list[Constraint]
    # constraint index -> opposing label, to name edges e(i, j)
    opponents: list[int] = field(default_factory=list)

    @property
    def kind(self) -> str:
        return self.shape.kind


@dataclass
class OutsideEdge:
    pair: tuple[int, int]
    endpoints: tuple[ExtendedPoint, ExtendedPoint]
    direction: Optional[DirectionVector] = None  # set for unbounded edges

    @property
    def unbounded(self) -> bool:
        return not (self.endpoints[0].is_finite and self.endpoints[1].is_finite)

    @property
    def zero_length(self) -> bool:
        a, b = self.endpoints
        return a.is_finite and b.is_finite and a == b


@dataclass
class LimitDiagram:
    cells: dict[int, CellRecord]
    skeleton: list[Element]
    outside_edges: list[OutsideEdge] = field(default_factory=list)

    def merged_skeleton(self) -> set:
        return merge_elements(self.skeleton)

    def cell_kind(self, label: int) -> str:
        return self.cells[label].kind


def voronoi_from_gamma(gamma: GammaDataSet) -> LimitDiagram:
    """Exact diagram of a gamma data set: every cell is an intersection of
    the half-planes vh(p_i, p_j), degenerate cells classified exactly."""
    n = len(gamma)
    if n < 2:
        raise ValueError("need at least two points")
    cells: dict[int, CellRecord] = {}
    skeleton: list[Element] = []
    seen = set()
    for i in range(1, n + 1):
        cons = []
        opp = []
        for j in range(1, n + 1):
            if j == i:
                continue
            cons.append(half_plane(gamma, i, j).constraint())
            opp.append(j)
        shape = _c.cell_shape(cons)
        cells[i] = CellRecord(i, shape, cons, opp)
        for el in shape.boundary_elements():
            key = el.key()
            if key not in seen:
                seen.add(key)
                skeleton.append(el)
    return LimitDiagram(cells, skeleton)


def zero_cluster_shape(s: SiteSet) -> LimitDiagram:
    """Shape of the limit diagram of a zero cluster.

    Positive-area cells belong exactly to the direction-hull sites; each is
    cut out by the two half-planes against its hull neighbors, and every
    bisector passes through the origin.  Remaining sites get their exact
    (zero-area) cells from the full half-plane intersection.
    """
    if not s.is_zero_cluster():
        raise NotZeroCluster("zero_cluster_shape needs all sites at the origin")
    require_general_position(s)
    gamma = gamma_of(s)
    if len(s) == 1:
        raise ValueError("need at least two sites")
    dh = direction_hull(s)
    labels = list(dh.labels)
    m = len(labels)
    cells: dict[int, CellRecord] = {}
    skeleton: list[Element] = []
    seen = set()
    for idx, lbl in enumerate(labels):
        prev = labels[(idx - 1) % m]
        nxt = labels[(idx + 1) % m]
        neighbors = [prev, nxt] if prev != nxt else [prev]
        cons = [half_plane(gamma, lbl, j).constraint() for j in neighbors]
        shape = _c.cell_shape(cons)
        cells[lbl] = CellRecord(lbl, shape, cons, list(neighbors))
        for el in shape.boundary_elements():
            key = el.key()
            if key not in seen:
                seen.add(key)
                skeleton.append(el)
    # zero-area cells of the remaining sites, classified exactly
    for lbl in s.labels():
        if lbl in cells:
            continue
        cons = []
        opp = []
        for j in s.labels():
            if j == lbl:
                continue
            cons.append(half_plane(gamma, lbl, j).constraint())
            opp.append(j)
        shape = _c.cell_shape(cons)
        cells[lbl] = CellRecord(lbl, shape, cons, opp)
    return LimitDiagram(cells, skeleton)


def cluster_locations(s: SiteSet) -> list[tuple[tuple[Fraction, Fraction], list[int]]]:
    """Distinct positions at t=0 with their site labels, in first-seen order."""
    out: list[tuple[tuple[Fraction, Fraction], list[int]]] = []
    index: dict[tuple[Fraction, Fraction], int] = {}
    for st in s.sites:
        loc = st.at_zero()
        if loc not in index:
            index[loc] = len(out)
            out.append((loc, []))
        out[index[loc]][1].append(st.label)
    return out


def clip_element(el: Element, constraints: Sequence[Constraint]) -> Optional[Element]:
    """Intersection of a skeleton element with a convex cell, if nonempty."""
    if isinstance(el, PointEl):
        if all(c.holds(*el.p) for c in constraints):
            return el
        return None
    if isinstance(el, SegmentEl):
        p, d = el.p, (el.q[0] - el.p[0], el.q[1] - el.p[1])
        base = _c._clip_param(constraints, p, d)
        lo, hi = Fraction(0), Fraction(1)
    elif isinstance(el, RayEl):
        p, d = el.p, (Fraction(el.d[0]), Fraction(el.d[1]))
        base = _c._clip_param(constraints, p, d)
        lo, hi = Fraction(0), None
    else:
        p, d = el.p, (Fraction(el.d[0]), Fraction(el.d[1]))
        base = _c._clip_param(constraints, p, d)
        lo, hi = None, None
    if base is None:
        return None
    blo, bhi = base
    nlo = blo if lo is None else (lo if blo is None else max(lo, blo))
    nhi = bhi if hi is None else (hi if bhi is None else min(hi, bhi))
    if nlo is not None and nhi is not None and nlo > nhi:
        return None
    return _c._interval_to_element(p, d, nlo, nhi)


def plug(s: SiteSet) -> LimitDiagram:
    """Shape of the limit diagram of an arbitrary site set by plugging.

    The classical diagram of the cluster locations is computed first; each
    nontrivial cluster's zero-cluster shape is then translated to its
    location and clipped to that location's cell.
    """
    require_general_position(s)
    locs = cluster_locations(s)
    if len(locs) == 1:
        # single cluster: the whole plane is its location cell
        loc, labels = locs[0]
        moved = SiteSet([st.translate(-loc[0], -loc[1]) for st in s.sites])
        shape = zero_cluster_shape(moved)
        if loc == (0, 0):
            return shape
        cells = {}
        for lbl, rec in shape.cells.items():
            cons = [_translate_constraint(c, loc[0], loc[1]) for c in rec.constraints]
            cells[lbl] = CellRecord(lbl, _c.cell_shape(cons), cons, list(rec.opponents))
        return LimitDiagram(
            cells, [_translate_element(el, loc[0], loc[1]) for el in shape.skeleton])

    loc_points = [loc for loc, _ in locs]
    loc_gamma = gamma_of_points(loc_points)
    loc_diag = voronoi_from_gamma(loc_gamma)

    skeleton: list[Element] = list(loc_diag.skeleton)
    cells: dict[int, CellRecord] = {}
    for li, (loc, labels) in enumerate(locs, start=1):
        loc_cons = loc_diag.cells[li].constraints
        if len(labels) == 1:
            lbl = labels[0]
            cells[lbl] = CellRecord(lbl, loc_diag.cells[li].shape, list(loc_cons),
                                    list(loc_diag.cells[li].opponents))
            continue
        # relabel the cluster 1..k for the zero-cluster computation
        members = [s[lbl] for lbl in labels]
        relabeled = SiteSet([
            PolySite(k + 1,
                     m.x - Poly.constant(loc[0]),
                     m.y - Poly.constant(loc[1]))
            for k, m in enumerate(members)])
        cluster_shape = zero_cluster_shape(relabeled)
        for el in cluster_shape.skeleton:
            moved = _translate_element(el, loc[0], loc[1])
            clipped = clip_element(moved, loc_cons)
            if clipped is not None:
                skeleton.append(clipped)
        for k, m in enumerate(members):
            sub = cluster_shape.cells[k + 1]
            cons = list(loc_cons) + [_translate_constraint(c, loc[0], loc[1])
                                     for c in sub.constraints]
            shape = _c.cell_shape(cons)
            cells[m.label] = CellRecord(m.label, shape, cons)
    dedup: dict = {}
    for el in skeleton:
        dedup.setdefault(el.key(), el)
    return LimitDiagram(cells, list(dedup.values()))


def _translate_element(el: Element, dx: Fraction, dy: Fraction) -> Element:
    def mv(p):
        return (p[0] + dx, p[1] + dy)
    if isinstance(el, PointEl):
        return PointEl(mv(el.p))
    if isinstance(el, SegmentEl):
        return SegmentEl(mv(el.p), mv(el.q))
    if isinstance(el, RayEl):
        return RayEl(mv(el.p), el.d)
    return LineEl(mv(el.p), el.d)


def _translate_constraint(c: Constraint, dx: Fraction, dy: Fraction) -> Constraint:
    return Constraint(c.nx, c.ny, c.c + c.nx * dx + c.ny * dy)


# ---------------------------------------------------------------------------
# outside edges of a zero cluster

def outside_edges(s: SiteSet) -> list[OutsideEdge]:
    """Edges of a zero cluster's diagram reaching outside the origin.

    Multiplicity-1 Delaunay edges give unbounded edges starting at their
    unique circle's center, perpendicular to the pair direction; pairs in
    positive-radius circles connect the two centers, or a center with the
    origin when the pair occurs only once.
    """
    if not s.is_zero_cluster():
        raise NotZeroCluster("outside edges are defined for zero clusters")
    tset = compute_type(s)
    graph = delaunay_graph(tset)
    by_pair: dict[tuple[int, int], list[OrientedTriple]] = {}
    for tri in tset.triples:
        for pair in tri.pairs():
            by_pair.setdefault(pair, []).append(tri)

    centers: dict[OrientedTriple, ExtendedPoint] = {}
    for tri in tset.triples:
        a, b, c = tri.labels
        centers[tri] = circle_center(s[a], s[b], s[c]).point

    edges: list[OutsideEdge] = []
    drawn: set[tuple[int, int]] = set()

    for pair in graph.hull_edges():
        tri = by_pair[pair][0]
        center = centers[tri]
        u, v = _directed_in_triple(pair, tri)
        d = direction(s[u], s[v]).perp()
        edges.append(OutsideEdge(pair, (center, _at_infinity(center, d)), d))
        drawn.add(pair)

    positive = [tri for tri in tset.sorted() if _is_positive_radius(centers[tri])]
    pair_hits: dict[tuple[int, int], list[OrientedTriple]] = {}
    for tri in positive:
        for pair in tri.pairs():
            pair_hits.setdefault(pair, []).append(tri)
    origin = ExtendedPoint.finite(0, 0)
    for pair in sorted(pair_hits):
        if pair in drawn:
            continue
        hits = pair_hits[pair]
        if len(hits) == 2:
            edges.append(OutsideEdge(pair, (centers[hits[0]], centers[hits[1]])))
        else:
            edges.append(OutsideEdge(pair, (centers[hits[0]], origin)))
        drawn.add(pair)
    return edges


def _is_positive_radius(center: ExtendedPoint) -> bool:
    return center.cx.sign() != 0 or center.cy.sign() != 0


def _directed_in_triple(pair: tuple[int, int], tri: OrientedTriple) -> tuple[int, int]:
    for a, b in tri.directed_edges():
        if (min(a, b), max(a, b)) == pair:
            return a, b
    raise KeyError(pair)


def _at_infinity(start: ExtendedPoint, d: DirectionVector) -> ExtendedPoint:
    def coord(cur: ExtendedRational, comp: int) -> ExtendedRational:
        if comp == 0:
            return cur
        return ExtendedRational(infinite_sign=1 if comp > 0 else -1)
    return ExtendedPoint(coord(start.cx, d.dx), coord(start.cy, d.dy))


# ---------------------------------------------------------------------------
# skeleton sampling, Hausdorff distance, camera points

def skeleton_sample(diagram_or_elements, bbox: tuple[float, float, float, float],
                    step: Optional[float] = None) -> "list[tuple[float, float]]":
    """Sample the skeleton inside bbox on per-line canonical grids.

    Points are laid out at integer multiples of `step` along each supporting
    line measured from the projection of the origin, plus the exact clipped
    endpoints.  Lines that do not move under a perturbation therefore yield
    bitwise identical samples.  Default step: bbox diagonal / 512.
    """
    if isinstance(diagram_or_elements, LimitDiagram):
        elements = diagram_or_elements.skeleton
    else:
        elements = list(diagram_or_elements)
    if not elements:
        raise EmptySkeleton("no skeleton elements to sample")
    x0, y0, x1, y1 = (float(v) for v in bbox)
    if step is None:
        step = math.hypot(x1 - x0, y1 - y0) / 512.0
    if step <= 0:
        raise ValueError("step must be positive")
    out: list[tuple[float, float]] = []
    for el in elements:
        if isinstance(el, PointEl):
            x, y = float(el.p[0]), float(el.p[1])
            if x0 <= x <= x1 and y0 <= y <= y1:
                out.append((x, y))
            continue
        if isinstance(el, SegmentEl):
            d = (el.q[0] - el.p[0], el.q[1] - el.p[1])
            key = _c.line_key(el.p, _c.primitive(*d))
        else:
            key = _c.line_key(el.p, el.d)
        anchor, pdir = _c.line_anchor_dir(key)
        ax, ay = float(anchor[0]), float(anchor[1])
        norm = math.hypot(pdir[0], pdir[1])
        ux, uy = pdir[0] / norm, pdir[1] / norm

        def s_of(p) -> float:
            return (float(p[0]) - ax) * ux + (float(p[1]) - ay) * uy

        if isinstance(el, SegmentEl):
            lo, hi = sorted((s_of(el.p), s_of(el.q)))
        elif isinstance(el, RayEl):
            s = s_of(el.p)
            forward = el.d[0] * pdir[0] + el.d[1] * pdir[1] > 0
            lo, hi = (s, math.inf) if forward else (-math.inf, s)
        else:
            lo, hi = -math.inf, math.inf
        # clip [lo, hi] to the bbox along this line
        blo, bhi = _bbox_param_clip(ax, ay, ux, uy, x0, y0, x1, y1)
        if blo is None:
            continue
        lo2, hi2 = max(lo, blo), min(hi, bhi)
        if lo2 > hi2:
            continue
        k0 = math.ceil(lo2 / step)
        k1 = math.floor(hi2 / step)
        ss = [lo2] + [k * step for k in range(k0, k1 + 1)] + [hi2]
        for sv in ss:
            out.append((ax + sv * ux, ay + sv * uy))
    if not out:
        raise EmptySkeleton("skeleton does not meet the bbox")
    return out


def _bbox_param_clip(ax, ay, ux, uy, x0, y0, x1, y1):
    lo, hi = -math.inf, math.inf
    for nx, ny, c in ((1.0, 0.0, x1), (-1.0, 0.0, -x0), (0.0, 1.0, y1), (0.0, -1.0, -y0)):
        coeff = nx * ux + ny * uy
        rhs = c - (nx * ax + ny * ay)
        if abs(coeff) < 1e-30:
            if rhs < 0:
                return None, None
            continue
        bound = rhs / coeff
        if coeff > 0:
            hi = min(hi, bound)
        else:
            lo = max(lo, bound)
    if lo > hi:
        return None, None
    return lo, hi


def hausdorff(a: Sequence[tuple[float, float]], b: Sequence[tuple[float, float]]) -> float:
    """Symmetric discrete Hausdorff distance between two point clouds."""
    import numpy as np

    pa = np.asarray(a, dtype=float)
    pb = np.asarray(b, dtype=float)
    if pa.size == 0 or pb.size == 0:
        raise EmptySkeleton("empty point cloud")

    def one_sided(p, q):
        worst = 0.0
        chunk = 2048
        for s in range(0, len(p), chunk):
            block = p[s:s + chunk]
            d2 = ((block[:, None, :] - q[None, :, :]) ** 2).sum(axis=2)
            worst = max(worst, float(d2.min(axis=1).max()))
        return worst

    return math.sqrt(max(one_sided(pa, pb), one_sided(pb, pa)))


@dataclass
class ProbeResult:
    deltas: list[float]
    hausdorff: list[float]
    outside_identical: list[bool]

    @property
    def non_increasing(self) -> bool:
        return all(a >= b for a, b in zip(self.hausdorff, self.hausdorff[1:]))


def perturb_gamma(gamma: GammaDataSet, delta, rng_seeded_vectors,
                  rng_seeded_spins) -> GammaDataSet:
    """Move every point along its seeded target by delta; clusters of
    coincident points move rigidly and their free directions rotate by delta.

    With p' = (1-delta) p + delta v for v in the unit disk, points stay in
    the disk and the data set converges to gamma as delta -> 0.
    """
    delta = Fraction(repr(float(delta))) if not isinstance(delta, Fraction) else delta
    pts = gamma.points
    locations = {}
    for p in pts:
        if p not in locations:
            locations[p] = rng_seeded_vectors[len(locations) % len(rng_seeded_vectors)]
    moved = []
    for p in pts:
        v = locations[p]
        moved.append(((1 - delta) * p[0] + delta * v[0],
                      (1 - delta) * p[1] + delta * v[1]))
    dirs = {}
    n = len(pts)
    spin_idx = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pi, pj = moved[i - 1], moved[j - 1]
            if pi != pj:
                dirs[(i, j)] = DirectionVector.from_fractions(pj[0] - pi[0],
                                                              pj[1] - pi[1])
            else:
                base = gamma.directions[(i, j)]
                spin = rng_seeded_spins[spin_idx % len(rng_seeded_spins)]
                spin_idx += 1
                ang = math.atan2(base.dy, base.dx) + spin * float(delta)
                dirs[(i, j)] = DirectionVector.from_fractions(
                    Fraction(round(math.cos(ang) * 10 ** 9), 10 ** 9),
                    Fraction(round(math.sin(ang) * 10 ** 9), 10 ** 9))
    return GammaDataSet(moved, dirs)


def continuity_probe(gamma: GammaDataSet, n_value, deltas, seed: int,
                     samples: int = 512) -> ProbeResult:
    """Desk-scale continuity check with camera points.

    Samples the skeleton before and after seeded perturbations of size delta
    and reports the discrete Hausdorff distances; sampled points outside the
    radius-N disk must be untouched (the cameras pin the diagram there).
    """
    import random as _random

    rng = _random.Random(seed)
    big_n = float(Fraction(n_value))
    base = camera_extend(gamma, n_value)
    span = 1.4 * big_n
    bbox = (-span, -span, span, span)
    step = math.hypot(2 * span, 2 * span) / samples
    base_samples = skeleton_sample(voronoi_from_gamma(base), bbox, step)
    base_out = {p for p in base_samples if p[0] ** 2 + p[1] ** 2 > big_n ** 2}

    vectors = [(Fraction(rng.randint(-500, 500), 1000),
                Fraction(rng.randint(-500, 500), 1000))
               for _ in range(len(gamma.points))]
    spins = [rng.choice([-1, 1]) for _ in range(len(gamma.points) ** 2)]

    hs = []
    outside_ok = []
    for delta in deltas:
        moved = perturb_gamma(gamma, Fraction(repr(float(delta))), vectors, spins)
        diag = voronoi_from_gamma(camera_extend(moved, n_value))
        pert_samples = skeleton_sample(diag, bbox, step)
        hs.append(hausdorff(base_samples, pert_samples))
        pert_out = {p for p in pert_samples if p[0] ** 2 + p[1] ** 2 > big_n ** 2}
        outside_ok.append(pert_out == base_out)
    return ProbeResult([float(d) for d in deltas], hs, outside_ok)


def camera_extend(gamma: GammaDataSet, n_value) -> GammaDataSet:
    """Append the four camera points (+-N, 0), (0, +-N) and their directions.

    Requires every point inside the closed unit disk and N > 2 + 2*sqrt(2),
    checked exactly as N > 2 and N^2 - 4N - 4 > 0; the cameras then pin the
    diagram outside the radius-N disk against perturbations inside the disk.
    """
    big_n = Fraction(n_value)
    if not (big_n > 2 and big_n * big_n - 4 * big_n - 4 > 0):
        raise NTooSmall("camera distance must exceed 2 + 2*sqrt(2)")
    for p in gamma.points:
        if p[0] * p[0] + p[1] * p[1] > 1:
            raise PointOutsideUnitDisk(str(p))
    cams = [(-big_n, Fraction(0)), (Fraction(0), big_n),
            (big_n, Fraction(0)), (Fraction(0), -big_n)]
    points = list(gamma.points) + cams
    n_old = len(gamma.points)
    dirs = dict(gamma.directions)
    total = len(points)
    for i in range(1, total + 1):
        for j in range(max(i + 1, n_old + 1), total + 1):
            pi, pj = points[i - 1], points[j - 1]
            dirs[(i, j)] = DirectionVector.from_fractions(pj[0] - pi[0], pj[1] - pi[1])
    return GammaDataSet(points, dirs)
