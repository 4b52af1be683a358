from __future__ import annotations

import random
from fractions import Fraction

import pytest

from limitvor.cells import LineEl, PointEl, RayEl, SegmentEl, merge_elements
from limitvor.limitdiag import (EmptySkeleton, NTooSmall, OrientedTriple,
                                PointOutsideUnitDisk, camera_extend,
                                cluster_locations, compute_type,
                                delaunay_graph, gamma_of, gamma_of_points,
                                half_plane, hausdorff, outside_edges, plug,
                                skeleton_sample, voronoi_from_gamma,
                                zero_cluster_shape)
from limitvor.sites import DirectionVector, SiteSet, site


F = Fraction


def triples(*tuples):
    return {OrientedTriple.clockwise(*t) for t in tuples}


TWENTY_TYPE = [
    (1, 5, 6), (1, 17, 5), (1, 6, 17), (2, 8, 4), (2, 4, 18), (2, 14, 8),
    (2, 18, 14), (3, 20, 7), (3, 11, 10), (3, 10, 20), (4, 7, 18), (5, 13, 6),
    (5, 17, 13), (6, 13, 15), (6, 15, 14), (6, 14, 20), (6, 16, 17),
    (6, 19, 16), (6, 20, 19), (7, 20, 18), (8, 12, 9), (8, 14, 12),
    (9, 13, 11), (9, 12, 15), (9, 15, 13), (10, 11, 13), (10, 13, 20),
    (12, 14, 15), (13, 17, 16), (13, 16, 19), (13, 19, 20), (14, 18, 20),
]


def test_type_four_sites(four_sites):
    t = compute_type(four_sites)
    assert t.triples == triples((1, 4, 2), (1, 3, 4), (2, 4, 3))
    assert (1, 3, 2) not in t


def test_type_three_noncollinear_sites():
    s = SiteSet([
        site(1, [], [(1, -1)]),
        site(2, [(1, -1)], []),
        site(3, [(1, 1), (2, -1)], [(1, -2)]),
    ])
    t = compute_type(s)
    assert len(t) == 1


def test_type_twenty_sites(twenty_sites):
    t = compute_type(twenty_sites)
    assert t.triples == triples(*TWENTY_TYPE)


def test_delaunay_graph_four_sites(four_sites):
    g = delaunay_graph(compute_type(four_sites))
    assert g.vertices == [1, 2, 3, 4]
    assert {e: m for e, m in g.multiplicity.items()} == {
        (1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 4): 2, (2, 4): 2, (3, 4): 2}
    assert g.hull_edges() == [(1, 2), (1, 3), (2, 3)]


def test_delaunay_graph_twenty_sites(twenty_sites):
    g = delaunay_graph(compute_type(twenty_sites))
    assert g.hull_edges() == [(3, 7), (3, 11), (4, 7), (4, 8), (8, 9), (9, 11)]
    for e, m in g.multiplicity.items():
        assert m == 2 or e in {(3, 7), (3, 11), (4, 7), (4, 8), (8, 9), (9, 11)}


def test_delaunay_single_triple():
    g = delaunay_graph(compute_type(SiteSet([
        site(1, [], []), site(2, [(0, 2)], []), site(3, [], [(0, 2)])])))
    assert all(m == 1 for m in g.multiplicity.values())
    assert len(g.multiplicity) == 3


def test_half_planes_table(four_sites):
    """The six half-plane inequalities of the colliding four-site example."""
    g = gamma_of(four_sites)
    # (pair) -> (normal as primitive vector, test point satisfying, violating)
    expected = {
        (1, 2): ((-2, 1), (1, 0), (0, 1)),      # 2x >= y
        (1, 3): ((-2, -3), (1, 1), (-1, -1)),   # -(2/3)x <= y
        (1, 4): ((-1, 0), (1, 0), (-1, 0)),     # x >= 0
        (2, 3): ((2, -5), (0, 1), (1, -1)),     # (2/5)x <= y
        (2, 4): ((1, -1), (0, 1), (1, 0)),      # x <= y
        (3, 4): ((0, 1), (0, -1), (0, 1)),      # y <= 0
    }
    for (i, j), (nvec, inside, outside) in expected.items():
        hp = half_plane(g, i, j)
        assert hp.normal == DirectionVector(*nvec)
        assert hp.base == (0, 0)
        assert hp.contains(*inside)
        assert not hp.contains(*outside)


def test_bisector_is_perpendicular_through_base(four_sites):
    from limitvor.limitdiag import bisector
    g = gamma_of(four_sites)
    for (i, j) in [(1, 2), (1, 4), (3, 4)]:
        line = bisector(g, i, j)
        hp = half_plane(g, i, j)
        assert line.p == hp.base
        # direction orthogonal to the pair direction
        assert line.d[0] * hp.normal.dx + line.d[1] * hp.normal.dy == 0


def test_voronoi_from_gamma_four_sites(four_sites):
    d = voronoi_from_gamma(gamma_of(four_sites))
    assert d.cell_kind(4) == "point"
    assert d.cells[4].shape.element.p == (0, 0)
    for lbl in (1, 2, 3):
        assert d.cell_kind(lbl) == "region"


def test_voronoi_from_gamma_line_cell():
    # u=(0,-t), v=(-t,0), w=(t-t^2,-2t): V(u) is the line y=x
    s = SiteSet([
        site(1, [], [(1, -1)]),
        site(2, [(1, -1)], []),
        site(3, [(1, 1), (2, -1)], [(1, -2)]),
    ])
    d = voronoi_from_gamma(gamma_of(s))
    assert d.cell_kind(1) == "line"
    el = d.cells[1].shape.element
    assert el.p[0] == el.p[1]  # on y = x
    assert abs(el.d[0]) == abs(el.d[1])
    for lbl in (2, 3):
        assert d.cell_kind(lbl) == "region"


def test_voronoi_two_points():
    d = voronoi_from_gamma(gamma_of_points([(F(0), F(0)), (F(2), F(0))]))
    assert d.cell_kind(1) == "region" and d.cell_kind(2) == "region"
    assert merge_elements(d.skeleton) == merge_elements(
        [LineEl((F(1), F(0)), (0, 1))])


def test_zero_cluster_shape_four_sites(four_sites):
    d = zero_cluster_shape(four_sites)
    assert d.cell_kind(4) == "point"
    for lbl in (1, 2, 3):
        assert d.cell_kind(lbl) == "region"
    # all bisectors pass through the origin
    for el in d.skeleton:
        assert isinstance(el, RayEl) and el.p == (0, 0)
    # same shape as the full half-plane diagram (positive-area cells are DH's)
    full = voronoi_from_gamma(gamma_of(four_sites))
    assert merge_elements(d.skeleton) == merge_elements(full.skeleton)


def test_zero_cluster_shape_merged_line():
    s = SiteSet([
        site(1, [(1, -1)], []),
        site(2, [], [(2, 1)]),
        site(3, [(1, 1)], [(2, -1)]),
    ])
    d = zero_cluster_shape(s)
    assert merge_elements(d.skeleton) == merge_elements([LineEl((F(0), F(0)), (0, 1))])


def test_zero_cluster_shape_exlinevor():
    s = SiteSet([
        site(1, [], [(1, -1)]),
        site(2, [(1, -1)], []),
        site(3, [(1, 1), (2, -1)], [(1, -2)]),
    ])
    d = zero_cluster_shape(s)
    assert merge_elements(d.skeleton) == merge_elements([LineEl((F(0), F(0)), (1, 1))])


def test_cluster_locations(explug_sites):
    locs = cluster_locations(explug_sites)
    assert [(float(x), float(y)) for (x, y), _ in locs] == [
        (-6.0, 4.0), (-2.0, -6.0), (-1.0, -2.0), (0.0, 0.0), (3.0, 5.0), (6.0, -3.0)]
    by_loc = {loc: labels for loc, labels in locs}
    assert by_loc[(F(0), F(0))] == [4, 8, 9, 10, 11]
    assert by_loc[(F(-1), F(-2))] == [3, 7, 12]


def test_cluster_locations_trivial():
    s = SiteSet([site(1, [], []), site(2, [(0, 1)], [])])
    assert [labels for _, labels in cluster_locations(s)] == [[1], [2]]
    z = SiteSet([site(1, [(1, 1)], []), site(2, [(1, -1)], [])])
    assert [labels for _, labels in cluster_locations(z)] == [[1, 2]]


def test_plug_matches_direct_diagram(explug_sites):
    plugged = plug(explug_sites)
    direct = voronoi_from_gamma(gamma_of(explug_sites))
    assert merge_elements(plugged.skeleton) == merge_elements(direct.skeleton)


def test_plug_all_distinct_equals_classical():
    pts = [(F(0), F(0)), (F(4), F(0)), (F(1), F(3)), (F(-2), F(-1))]
    s = SiteSet([site(i + 1, [(0, p[0])], [(0, p[1])]) for i, p in enumerate(pts)])
    plugged = plug(s)
    classical = voronoi_from_gamma(gamma_of_points(pts))
    assert merge_elements(plugged.skeleton) == merge_elements(classical.skeleton)


def test_plug_single_cluster(four_sites):
    plugged = plug(four_sites)
    assert merge_elements(plugged.skeleton) == merge_elements(
        zero_cluster_shape(four_sites).skeleton)


def test_outside_edges_shortedge(shortedge_sites):
    """Both circle centers sit at (0,2); e(p,r) has zero length there."""
    eds = outside_edges(shortedge_sites)
    by_pair = {e.pair: e for e in eds}
    pr = by_pair[(1, 3)]
    assert pr.zero_length
    assert pr.endpoints[0].finite_tuple() == (F(0), F(2))
    for pair in [(1, 2), (2, 3), (3, 4), (1, 4)]:
        assert by_pair[pair].unbounded
        start = by_pair[pair].endpoints[0]
        assert start.finite_tuple() == (F(0), F(2))
    assert set(by_pair) == {(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)}


def test_outside_edges_twenty_sites(twenty_sites):
    eds = outside_edges(twenty_sites)
    by_pair = {e.pair: e for e in eds}
    # only circle (8,12,9) has its center outside the origin: at infinity
    assert not by_pair[(8, 9)].endpoints[0].is_finite
    for pair in [(8, 12), (9, 12)]:
        e = by_pair[pair]
        finite = [p for p in e.endpoints if p.is_finite]
        assert len(finite) == 1 and finite[0].finite_tuple() == (F(0), F(0))
    for pair in [(4, 8), (4, 7)]:
        e = by_pair[pair]
        assert e.endpoints[0].finite_tuple() == (F(0), F(0))
        assert not e.endpoints[1].is_finite
        assert e.direction.dy > 0  # both run upwards
    hull_pairs = {(3, 7), (3, 11), (4, 7), (4, 8), (8, 9), (9, 11)}
    assert hull_pairs | {(8, 12), (9, 12)} == set(by_pair)


def test_outside_edges_no_positive_radius():
    # symmetric cluster: single circle with center at the origin
    s = SiteSet([
        site(1, [(1, 1)], []),
        site(2, [], [(1, 1)]),
        site(3, [(1, -1)], []),
    ])
    eds = outside_edges(s)
    assert {e.pair for e in eds} == {(1, 2), (2, 3), (1, 3)}
    for e in eds:
        assert e.unbounded
        assert e.endpoints[0].finite_tuple() == (F(0), F(0))


def test_hausdorff_basics():
    assert hausdorff([(0.0, 0.0), (1.0, 1.0)], [(0.0, 0.0), (1.0, 1.0)]) == 0.0
    assert hausdorff([(0.0, 0.0)], [(3.0, 4.0)]) == 5.0


def test_skeleton_sample_grid_is_canonical():
    a = skeleton_sample([LineEl((F(0), F(0)), (1, 0))], (-2, -2, 2, 2), step=0.5)
    b = skeleton_sample([RayEl((F(-5), F(0)), (1, 0))], (-2, -2, 2, 2), step=0.5)
    assert set(a) == set(b)
    with pytest.raises(EmptySkeleton):
        skeleton_sample([], (-1, -1, 1, 1))


def test_camera_extend():
    g = gamma_of_points([(F(0), F(0)), (F(1, 2), F(0)), (F(0), F(1, 2))])
    ext = camera_extend(g, 10)
    assert len(ext) == 7
    assert ext.point(4) == (-10, 0) and ext.point(5) == (0, 10)
    assert ext.point(6) == (10, 0) and ext.point(7) == (0, -10)
    with pytest.raises(NTooSmall):
        camera_extend(g, 4)
    far = gamma_of_points([(F(0), F(0)), (F(3), F(0))])
    with pytest.raises(PointOutsideUnitDisk):
        camera_extend(far, 10)


def test_camera_complement_is_stable():
    """Perturbing inside the unit disk leaves samples outside radius N alone."""
    rng = random.Random(99)
    pts = [(F(1, 4), F(0)), (F(-1, 8), F(1, 5)), (F(0), F(-1, 3))]
    base = camera_extend(gamma_of_points(pts), 10)
    d0 = voronoi_from_gamma(base)
    moved = [(x + F(1, 100), y - F(1, 200)) for x, y in pts]
    d1 = voronoi_from_gamma(camera_extend(gamma_of_points(moved), 10))
    bbox = (-14.0, -14.0, 14.0, 14.0)
    s0 = {p for p in skeleton_sample(d0, bbox) if p[0] ** 2 + p[1] ** 2 > 100.0}
    s1 = {p for p in skeleton_sample(d1, bbox) if p[0] ** 2 + p[1] ** 2 > 100.0}
    assert s0 == s1 and s0


def test_classical_type_matches_bruteforce_oracle():
    """For constant sites the type equals the empty-circumcircle triples."""
    rng = random.Random(61)
    from limitvor.sites import general_position
    done = 0
    while done < 40:
        n = rng.randint(4, 7)
        pts = [(F(rng.randint(-30, 30)), F(rng.randint(-30, 30))) for _ in range(n)]
        if len(set(pts)) < n:
            continue
        s = SiteSet([site(i + 1, [(0, p[0])], [(0, p[1])]) for i, p in enumerate(pts)])
        if general_position(s) is not None:
            continue
        t = compute_type(s)
        # oracle: classical empty-circumcircle scan with Fractions
        expected = set()
        import itertools
        for a, b, c in itertools.combinations(range(n), 3):
            pa, pb, pc = pts[a], pts[b], pts[c]
            det = ((pb[0] - pa[0]) * (pc[1] - pa[1])
                   - (pc[0] - pa[0]) * (pb[1] - pa[1]))
            if det > 0:  # counterclockwise: swap to clockwise
                pb, pc = pc, pb
                lb = (a + 1, c + 1, b + 1)
            else:
                lb = (a + 1, b + 1, c + 1)
            def lift(p):
                return (p[0], p[1], p[0] * p[0] + p[1] * p[1])
            la, lb_, lc = lift(pa), lift(pb), lift(pc)
            empty = True
            for q in range(n):
                if q in (a, b, c):
                    continue
                lq = lift(pts[q])
                rows = [
                    (la[0] - lq[0], la[1] - lq[1], la[2] - lq[2]),
                    (lb_[0] - lq[0], lb_[1] - lq[1], lb_[2] - lq[2]),
                    (lc[0] - lq[0], lc[1] - lq[1], lc[2] - lq[2]),
                ]
                det3 = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
                if det3 < 0:
                    empty = False
                    break
            if empty:
                expected.add(OrientedTriple.clockwise(*lb))
        assert t.triples == expected
        done += 1


def test_multiplicity_one_edges_match_hull(four_sites, twenty_sites):
    from limitvor.hull import combinatorial_convex_hull
    for s in (four_sites, twenty_sites):
        g = delaunay_graph(compute_type(s))
        hull = combinatorial_convex_hull(s)
        hull_pairs = {tuple(sorted(e)) for e in hull.edges()}
        assert set(g.hull_edges()) == hull_pairs
