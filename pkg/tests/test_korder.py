from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from limitvor.korder import (CountVectors, StaticPointSet, all_order_diagrams,
                             cell_nonempty, cells_by_order, circles,
                             count_vectors, hulls_disjoint, verify_symmetries,
                             voronoi_poset)
from limitvor.sites import GeneralPositionViolation

F = Fraction


def fset(*xs):
    return frozenset(xs)


# Reduced f/c vectors per n (independent of the configuration).
REDUCED = {
    3: ((4, 6), (2,)),
    4: ((5, 9), (4,)),
    5: ((6, 12, 14), (6, 8)),
    6: ((7, 15, 19), (8, 12)),
    7: ((8, 18, 24, 26), (10, 16, 18)),
    8: ((9, 21, 29, 33), (12, 20, 24)),
    9: ((10, 24, 34, 40, 42), (14, 24, 30, 32)),
    10: ((11, 27, 39, 47, 51), (16, 28, 36, 40)),
    11: ((12, 30, 44, 54, 60, 62), (18, 32, 42, 48, 50)),
    12: ((13, 33, 49, 61, 69, 73), (20, 36, 48, 56, 60)),
}


def random_general_position(rng: random.Random, n: int) -> StaticPointSet:
    """Random integer points: general position plus distinct circumcenters."""
    while True:
        pts = {(rng.randint(-60, 60), rng.randint(-60, 60)) for _ in range(n)}
        if len(pts) != n:
            continue
        try:
            s = StaticPointSet(sorted(pts))
        except GeneralPositionViolation:
            continue
        if n >= 3 and not s.has_distinct_circumcenters():
            continue
        return s


def fig_a_points():
    """Convex position; empty circles 124 and 143, order-1 circles 123 and 243."""
    return StaticPointSet([(0, 0), (1, 1), (1, F(-6, 5)), (2, 0)])


def fig_b_points():
    """Site 4 inside triangle 123; empty circles 124, 134, 234."""
    return StaticPointSet([(0, 0), (4, 0), (2, 3), (2, 1)])


def test_circles_orders_fig_a():
    s = fig_a_points()
    cv = count_vectors(s)
    assert cv.c == [2, 2]
    empty = {rec.labels for rec in circles(s) if rec.order == 0}
    assert empty == {(1, 2, 4), (1, 3, 4)}


def test_circles_orders_fig_b():
    s = fig_b_points()
    cv = count_vectors(s)
    assert cv.c == [3, 1]
    assert {rec.labels for rec in circles(s) if rec.order == 1} == {(1, 2, 3)}


def test_circles_n3():
    s = StaticPointSet([(0, 0), (3, 1), (1, 4)])
    cv = count_vectors(s)
    assert cv.c == [1]


def test_third_order_cells_of_example():
    s = StaticPointSet([(45, 86), (76, 40), (40, 42), (1, 9)])
    cells = cells_by_order(s)
    assert cells[3] == {fset(1, 2, 3), fset(1, 3, 4), fset(2, 3, 4)}


def test_second_order_type_fig_a():
    s = fig_a_points()
    diags = all_order_diagrams(s)
    v2 = diags[2]
    old = {v.triple for v in v2.vertices if v.kind == "old"}
    new = {v.triple for v in v2.vertices if v.kind == "new"}
    assert {frozenset(t) for t in old} == {fset(1, 2, 4), fset(1, 4, 3)}
    assert {frozenset(t) for t in new} == {fset(1, 2, 3), fset(2, 4, 3)}


def test_k_equals_n_single_cell():
    s = fig_a_points()
    diags = all_order_diagrams(s)
    assert diags[4].cells == {fset(1, 2, 3, 4)}
    assert diags[4].vertices == []
    assert diags[4].edges == []


def test_cell_nonempty_examples():
    s1 = fig_a_points()
    assert cell_nonempty({2, 3}, s1) == (False, False)
    ok, unbounded = cell_nonempty({1, 2, 3, 4}, s1)
    assert ok and unbounded
    s2 = fig_b_points()
    assert cell_nonempty({1, 2, 3}, s2)[0] is False
    assert cell_nonempty({4}, s2) == (True, False)  # the inner site is bounded


def test_poset_fig_a_missing_23():
    s = fig_a_points()
    poset = voronoi_poset(s)
    assert poset.f_vector() == (1, 4, 5, 4, 1)
    all_subsets = {frozenset(c) for r in range(5)
                   for c in itertools.combinations(range(1, 5), r)}
    assert all_subsets - set(poset.elements) == {fset(2, 3)}
    assert poset.is_graded()


def test_poset_fig_b_missing_123():
    s = fig_b_points()
    poset = voronoi_poset(s)
    assert poset.f_vector() == (1, 4, 6, 3, 1)
    all_subsets = {frozenset(c) for r in range(5)
                   for c in itertools.combinations(range(1, 5), r)}
    assert all_subsets - set(poset.elements) == {fset(1, 2, 3)}


def test_poset_n3_full_boolean_lattice():
    s = StaticPointSet([(0, 0), (3, 1), (1, 4)])
    poset = voronoi_poset(s)
    assert len(poset.elements) == 8
    assert poset.f_vector() == (1, 3, 3, 1)


def test_cells_match_feasibility_oracle():
    """Circle-route cells equal exact feasibility on every subset (small n)."""
    rng = random.Random(271)
    for n in (4, 5, 6, 7, 8):
        s = random_general_position(rng, n)
        cells = cells_by_order(s)
        for r in range(1, n + 1):
            for combo in itertools.combinations(range(1, n + 1), r):
                a = frozenset(combo)
                nonempty, _ = cell_nonempty(a, s)
                assert nonempty == (a in cells[r]), (n, sorted(a))


def test_identities_on_random_instances():
    rng = random.Random(97)
    for n in range(3, 9):
        for _ in range(3):
            s = random_general_position(rng, n)
            report = verify_symmetries(s)
            assert all(r.ok for r in report), [r for r in report if not r.ok]
            cv = count_vectors(s)
            assert cv.reduced_f() == REDUCED[n][0]
            assert cv.reduced_c() == REDUCED[n][1]
            poset = voronoi_poset(s)
            assert poset.is_graded()
            assert poset.f_vector() == tuple(cv.f)
            assert poset.rank(frozenset({1, 2})) == 2
            assert poset.leq({1}, {1, 2})


def test_f7_reduced_row():
    rng = random.Random(450)
    s = random_general_position(rng, 7)
    cv = count_vectors(s)
    assert cv.reduced_f() == (8, 18, 24, 26)
    assert cv.reduced_c() == (10, 16, 18)


def test_edges_consistent_with_cells():
    rng = random.Random(333)
    s = random_general_position(rng, 6)
    diags = all_order_diagrams(s)
    for k in range(1, 6):
        cells = diags[k].cells
        for edge in diags[k].edges:
            c1, c2 = edge.cells
            assert c1 in cells and c2 in cells
        for v in diags[k].vertices:
            for c in v.cells:
                assert c in cells


def test_vertices_old_new_partition():
    rng = random.Random(12)
    s = random_general_position(rng, 6)
    diags = all_order_diagrams(s)
    recs = circles(s)
    for k in range(1, 6):
        news = sum(1 for r in recs if r.order == k - 1)
        olds = sum(1 for r in recs if r.order == k - 2)
        assert sum(1 for v in diags[k].vertices if v.kind == "new") == news
        assert sum(1 for v in diags[k].vertices if v.kind == "old") == olds


def test_hulls_disjoint_basic():
    a = [(F(0), F(0)), (F(1), F(0))]
    b = [(F(3), F(0)), (F(3), F(1))]
    assert hulls_disjoint(a, b)
    c = [(F(0), F(-1)), (F(0), F(1)), (F(2), F(0))]
    d = [(F(1), F(0)), (F(5), F(5))]
    assert not hulls_disjoint(c, d)


def test_general_position_rejects():
    with pytest.raises(GeneralPositionViolation):
        StaticPointSet([(0, 0), (1, 0), (2, 0), (1, 5)])
    with pytest.raises(GeneralPositionViolation):
        StaticPointSet([(1, 0), (-1, 0), (0, 1), (0, -1)])
