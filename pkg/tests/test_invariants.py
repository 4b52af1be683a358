"""Cross-module property checks that do not belong to a single module."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from conftest import random_nest, sites_with_nest
from limitvor.hooks import (Hook, chi, draw, hooked_tree, is_accepted, nest_of,
                            roundtrip_check, standard_form, tv, xah_of)
from limitvor.korder import (StaticPointSet, c_vector, count_vectors, e_vector,
                             f_vector, v_vector)
from limitvor.sites import (SiteSet, circle_center, direction, site)

F = Fraction


def test_zero_cluster_center_at_origin_when_directions_split():
    """Triples of a zero cluster with two non-parallel pairwise directions
    have their limit circumcenter at the origin (feeds the outside-edge
    algorithm, whose centers-at-origin cases come from exactly this)."""
    rng = random.Random(404)
    done = 0
    while done < 120:
        def rnd(lbl):
            return site(lbl,
                        [(d, rng.randint(-2, 2)) for d in range(1, 4)],
                        [(d, rng.randint(-2, 2)) for d in range(1, 4)])
        u, v, w = rnd(1), rnd(2), rnd(3)
        try:
            duv = direction(u, v)
            duw = direction(u, w)
            dvw = direction(v, w)
            cc = circle_center(u, v, w)
        except Exception:
            continue
        if duv.parallel(duw) and duv.parallel(dvw):
            continue
        assert cc.point.is_finite
        assert cc.point.finite_tuple() == (0, 0)
        done += 1


def test_separating_cluster_is_smallest_containing():
    rng = random.Random(77)
    done = 0
    while done < 40:
        n = rng.randint(3, 7)
        nest_sets = random_nest(rng, n)
        s = sites_with_nest(rng, nest_sets)
        x = chi(s)
        nest = nest_of(x)
        if {tuple(sorted(c)) for c in nest.clusters} != \
                {tuple(sorted(c)) for c in nest_sets}:
            continue
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                # C_ij as computed from the ratios
                c_ij = {i, j}
                for k in range(1, n + 1):
                    if k not in (i, j) and not x.ratio_is_zero(i, k, j):
                        c_ij.add(k)
                smallest = min((c for c in nest.clusters if {i, j} <= c),
                               key=len)
                assert frozenset(c_ij) == smallest
        done += 1


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_roundtrip_200_random_draws_per_n(n):
    """Consistency of draw/read on 200 accepted random (nest, q) pairs."""
    rng = random.Random(5000 + n)
    done = 0
    while done < 200:
        nest_sets = random_nest(rng, n)
        s = sites_with_nest(rng, nest_sets)
        x = chi(s)
        if {tuple(sorted(c)) for c in nest_of(x).clusters} != \
                {tuple(sorted(c)) for c in nest_sets}:
            continue
        xa = xah_of(x)
        tree = hooked_tree(xa)
        base = tv(standard_form(xa, tree), tree)
        q = base.copy()
        q.angle = base.angle + rng.uniform(-0.7, 0.7)
        for key, h in base.hooks.items():
            if h.beta == 0.0:
                q.hooks[key] = Hook(rng.uniform(-0.8, 0.8),
                                    h.alpha + rng.uniform(-0.7, 0.7))
            else:
                q.hooks[key] = Hook(
                    h.beta * rng.choice([-1, 1]) * math.exp(rng.uniform(-0.5, 0.5)),
                    h.alpha + rng.uniform(-1.5, 1.5))
        fill = draw(xa, q, tree)
        if not is_accepted(fill):
            continue
        # draw invariant: first subcluster site at the origin, second at
        # unit distance, in every screen
        for cluster, pts in fill.coords.items():
            subs = fill.tree.nest.maximal_subclusters(cluster)
            first = pts[min(subs[0])]
            second = pts[min(subs[1])]
            assert first == (0.0, 0.0)
            assert abs(math.hypot(*second) - 1.0) < 1e-12
        rep = roundtrip_check(xa, q, tree)
        assert rep.ok and rep.max_error < 1e-9, rep.per_coordinate
        done += 1


def test_count_vector_aliases():
    s = StaticPointSet([(0, 0), (4, 0), (2, 3), (2, 1)])
    cv = count_vectors(s)
    assert f_vector(s) == cv.f
    assert c_vector(s) == cv.c
    assert v_vector(s) == cv.v[1:]
    assert e_vector(s) == cv.e[1:]


def test_eps_feasibility_matches_concrete_shrink():
    """The symbolic-infinitesimal interior test agrees with shrinking by a
    concrete rational far below any slack expressible in the input data."""
    from limitvor.cells import cell_shape, eps_feasible, feasible, halfplane

    rng = random.Random(12345)
    for _ in range(800):
        cons = []
        for _ in range(rng.randint(1, 6)):
            nx, ny = rng.randint(-4, 4), rng.randint(-4, 4)
            if nx == 0 and ny == 0:
                nx = 1
            cons.append(halfplane(nx, ny, rng.randint(-5, 5)))
        got = eps_feasible(cons)
        eps = F(1, 10 ** 18)
        shrunk = [halfplane(c.nx, c.ny, c.c - eps) for c in cons]
        assert got == feasible(shrunk), cons
        shape = cell_shape(cons)
        assert shape.is_full_dimensional == got
        assert (shape.kind == "empty") == (not feasible(cons))


def test_unboundedness_matches_recession_cone():
    """Hull-disjointness unboundedness agrees with a nonzero recession
    direction (which, for a 2D cone, can be searched among the boundary
    perpendiculars of the constraints)."""
    import itertools

    from limitvor.korder import cell_constraints, cell_nonempty

    def recession_nonzero(cons):
        for c in cons:
            for d in ((-c.ny, c.nx), (c.ny, -c.nx)):
                if d != (0, 0) and all(k.nx * d[0] + k.ny * d[1] <= 0
                                       for k in cons):
                    return True
        return False

    rng = random.Random(777)
    for _ in range(6):
        n = rng.randint(4, 7)
        while True:
            pts = {(rng.randint(-60, 60), rng.randint(-60, 60)) for _ in range(n)}
            if len(pts) != n:
                continue
            try:
                s = StaticPointSet(sorted(pts))
                break
            except Exception:
                continue
        for r in range(1, n):
            for combo in itertools.combinations(range(1, n + 1), r):
                a = frozenset(combo)
                nonempty, unbounded = cell_nonempty(a, s)
                if nonempty:
                    assert unbounded == recession_nonzero(cell_constraints(a, s))
