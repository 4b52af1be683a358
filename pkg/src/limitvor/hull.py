"""Combinatorial convex hull of polynomial sites and the direction hull.

The combinatorial convex hull is the ordinary convex hull of S(eps) for all
small enough eps > 0, computed by a monotone-chain sweep whose sort key and
right-turn test are the exact polynomial-site predicates.  The direction hull
of a zero cluster keeps only the corner sites, i.e. hull vertices whose
incoming and outgoing edge directions differ; these are exactly the sites
whose limit Voronoi cells have positive area.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .sites import (DirectionVector, NotZeroCluster, Orientation, PolySite,
                    SiteSet, direction, orientation, require_general_position,
                    site_order)


@dataclass(frozen=True)
class CircuitHull:
    """Cyclically ordered hull labels (clockwise) with one direction per edge.

    edge_directions[i] is the direction of the edge labels[i] -> labels[i+1]
    (indices mod len).  The rotation starts at the smallest label.
    """

    labels: tuple[int, ...]
    edge_directions: tuple[DirectionVector, ...]

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.labels)
        return [(self.labels[i], self.labels[(i + 1) % n]) for i in range(n)]


def right_turn(u: PolySite, v: PolySite, w: PolySite) -> bool:
    """Whether u, v, w (ordered by O_<) make a right turn at t=0."""
    return orientation(u, v, w) is Orientation.RIGHT


def _canonical_rotation(labels: list[int]) -> list[int]:
    k = labels.index(min(labels))
    return labels[k:] + labels[:k]


def combinatorial_convex_hull(s: SiteSet, *, checked: bool = True) -> CircuitHull:
    """Hull circuit of a degenerating site set, clockwise (Alg. monotone chain).

    Sorting uses the lexicographic-for-small-t order O_<; the upper and lower
    chains keep only right turns, so collinear middles get popped and the
    result matches CH(S(eps)) for small eps > 0.
    """
    if checked:
        require_general_position(s)
    pts = sorted(s.sites, key=cmp_to_key(site_order))
    if len(pts) < 2:
        raise ValueError("hull needs at least two sites")

    def chain(seq):
        out: list[PolySite] = []
        for p in seq:
            while len(out) >= 2 and not right_turn(out[-2], out[-1], p):
                out.pop()
            out.append(p)
        return out

    upper = chain(pts)
    lower = chain(reversed(pts))
    cycle = [p.label for p in upper] + [p.label for p in lower[1:-1]]
    cycle = _canonical_rotation(cycle)
    dirs = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        dirs.append(direction(s[a], s[b]))
    return CircuitHull(tuple(cycle), tuple(dirs))


def direction_hull(s: SiteSet, *, checked: bool = True) -> CircuitHull:
    """Corner sites of the combinatorial hull of a zero cluster.

    A hull vertex stays iff its incoming and outgoing edge directions differ
    as primitive vectors; runs of equal directions are merged away.
    """
    if not s.is_zero_cluster():
        raise NotZeroCluster("direction hull is defined for zero clusters")
    cch = combinatorial_convex_hull(s, checked=checked)
    labels = list(cch.labels)
    n = len(labels)
    if n == 2:
        return cch
    corners = []
    for i, lbl in enumerate(labels):
        incoming = cch.edge_directions[(i - 1) % n]
        outgoing = cch.edge_directions[i]
        if incoming != outgoing:
            corners.append(lbl)
    # the circuit closes up, so edge directions must reverse somewhere;
    # at least the two extremes in the O_< order survive as corners
    assert len(corners) >= 2
    cycle = _canonical_rotation(corners)
    dirs = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        dirs.append(direction(s[a], s[b]))
    return CircuitHull(tuple(cycle), tuple(dirs))
