from __future__ import annotations

import random
from fractions import Fraction

import pytest

from limitvor.exactnum import Poly
from limitvor.sites import PolySite, SiteSet, site


def P(*pairs):
    """Poly from (degree, coeff) pairs."""
    return Poly.from_pairs(pairs)


def random_nest(rng: random.Random, n: int) -> frozenset[frozenset[int]]:
    """A random nest on 1..n (all singletons and the full set included)."""
    clusters = {frozenset(range(1, n + 1))}
    clusters.update(frozenset([i]) for i in range(1, n + 1))

    def split(labels: list[int]):
        if len(labels) < 2:
            return
        k = rng.randint(2, len(labels))
        rng.shuffle(labels)
        cuts = sorted(rng.sample(range(1, len(labels)), k - 1))
        blocks = []
        prev = 0
        for c in cuts + [len(labels)]:
            blocks.append(labels[prev:c])
            prev = c
        for b in blocks:
            if len(b) >= 2 and rng.random() < 0.7:
                clusters.add(frozenset(b))
                split(list(b))

    split(list(range(1, n + 1)))
    return frozenset(clusters)


def sites_with_nest(rng: random.Random,
                    nest: frozenset[frozenset[int]]) -> SiteSet:
    """Polynomial sites realizing a prescribed nest of collision clusters.

    Each nontrivial cluster places its maximal subclusters at distinct
    rational positions scaled by one more power of t.
    """
    labels = sorted(max(nest, key=len))
    n = len(labels)
    polys: dict[int, tuple[Poly, Poly]] = {
        lbl: (Poly.zero(), Poly.zero()) for lbl in labels}

    def maximal_subclusters(c):
        subs = [d for d in nest if d < c]
        return sorted((d for d in subs if not any(d < e for e in subs)), key=min)

    def place(cluster: frozenset[int], depth: int):
        subs = maximal_subclusters(cluster)
        taken = set()
        for sub in subs:
            while True:
                pos = (Fraction(rng.randint(-8, 8), 4),
                       Fraction(rng.randint(-8, 8), 4))
                if pos not in taken and pos != (0, 0):
                    break
            taken.add(pos)
            for lbl in sub:
                px, py = polys[lbl]
                polys[lbl] = (px + Poly.t(depth, pos[0]),
                              py + Poly.t(depth, pos[1]))
            if len(sub) >= 2:
                place(sub, depth + 1)

    place(frozenset(labels), 1)
    return SiteSet([PolySite(lbl, *polys[lbl]) for lbl in labels])


@pytest.fixture
def four_sites() -> SiteSet:
    """Four sites colliding at the origin whose limit diagram has one point cell.

    q1 = (2t, 2t^3 + t^4), q2 = (-2t - t^3, 2t),
    q3 = (-2t^2 - 2t^4, -3t + 2t^2 - t^3 + t^4), q4 = (t^2 - 2t^3 + t^5, -t^4).
    """
    return SiteSet([
        site(1, [(1, 2)], [(3, 2), (4, 1)]),
        site(2, [(1, -2), (3, -1)], [(1, 2)]),
        site(3, [(2, -2), (4, -2)], [(1, -3), (2, 2), (3, -1), (4, 1)]),
        site(4, [(2, 1), (3, -2), (5, 1)], [(4, -1)]),
    ])


@pytest.fixture
def twenty_sites() -> SiteSet:
    """Twenty sites, all at the origin at t=0."""
    spec = [
        ([(5, 1)], []),                                   # p1 = (0, t^5) -- x and y swapped below
    ]
    # written out explicitly for readability
    data = {
        1: ([], [(5, 1)]),
        2: ([], [(1, 2), (4, 1), (5, 2)]),
        3: ([(1, 2)], [(3, 2), (4, 1)]),
        4: ([(2, 1)], [(1, 2), (2, 2), (3, -1)]),
        5: ([(4, -2)], [(5, -1)]),
        6: ([(5, 3)], [(2, 1), (3, 2), (5, 3)]),
        7: ([(1, 2), (2, 3), (3, -2)], [(1, 2), (2, -2), (3, -1)]),
        8: ([(1, -2), (3, -1)], [(1, 2)]),
        9: ([(1, -2), (3, 1)], [(1, -2), (3, -1)]),
        10: ([(1, 1), (2, 2), (3, 2)], [(1, -1), (3, 3)]),
        11: ([(2, -2), (4, -2)], [(1, -3), (2, 2), (3, -1), (4, 1)]),
        12: ([(1, -2), (4, -1)], [(2, 3), (3, 3), (5, -1)]),
        13: ([(2, -2), (4, -1)], [(2, -2), (3, 3)]),
        14: ([(1, -1), (2, 3), (3, -2), (4, 3)], [(1, 1), (2, 3), (5, -3)]),
        15: ([(1, -1), (5, -2)], [(3, -3), (5, 2)]),
        16: ([(2, 1), (3, -2), (5, 1)], [(4, -1)]),
        17: ([(3, 3), (5, 2)], [(4, -1)]),
        18: ([(3, 3), (4, 3), (5, 2)], [(1, 2), (3, -2), (4, -1)]),
        19: ([(2, 1), (3, 1), (5, 3)], []),
        20: ([(2, 3), (3, 2), (5, 3)], [(2, 1), (3, 3), (4, 2)]),
    }
    del spec
    return SiteSet([site(lbl, xs, ys) for lbl, (xs, ys) in sorted(data.items())])


@pytest.fixture
def explug_sites() -> SiteSet:
    """Twelve sites forming six clusters at t=0 (two of them nontrivial)."""
    f = Fraction
    raw = [
        ((f(-6),), (f(4),)),
        ((f(-2),), (f(-6),)),
        ((f(-1),), (f(-2), f(-3))),
        ((f(0),), (f(0), f(-3))),
        ((f(3),), (f(5),)),
        ((f(6),), (f(-3),)),
        ((f(-1), f(-3)), (f(-2), f(1))),
        ((f(0), f(-2)), (f(0), f(-2))),
        ((f(0), f(-2)), (f(0), f(2))),
        ((f(0), f(2)), (f(0),)),
        ((f(0), f(2)), (f(0), f(2))),
        ((f(-1), f(2)), (f(-2),)),
    ]
    return SiteSet([PolySite(i + 1, Poly(xs), Poly(ys)) for i, (xs, ys) in enumerate(raw)])


@pytest.fixture
def shortedge_sites() -> SiteSet:
    """p=(-2t,0), q=(-t,-t^2/4), r=(0,0), s=(2t,2t^2); labels 1..4 in this order."""
    return SiteSet([
        site(1, [(1, -2)], []),
        site(2, [(1, -1)], [(2, Fraction(-1, 4))]),
        site(3, [], []),
        site(4, [(1, 2)], [(2, 2)]),
    ])
