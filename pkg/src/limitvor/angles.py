"""Directed/undirected angle data of point configurations and their algebra.

Angles are carried as exact primitive direction vectors (radians are derived
for display), so reconstruction of a configuration from its angles, the
triangle-residual identities on the slope charts and the singularity
conditions are all decided exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .sites import DirectionVector

Point = tuple[Fraction, Fraction]


class CoincidentPoints(ValueError):
    pass


class InfiniteSlopeOnChart(ValueError):
    pass


class DegenerateDenominator(ZeroDivisionError):
    pass


def _vec(p: Point, q: Point) -> DirectionVector:
    if p == q:
        raise CoincidentPoints("%s" % (p,))
    return DirectionVector.from_fractions(q[0] - p[0], q[1] - p[1])


def _ua_canonical(d: DirectionVector) -> DirectionVector:
    """Representative of {d, -d} with dx > 0, or dx == 0 and dy > 0."""
    if d.dx < 0 or (d.dx == 0 and d.dy < 0):
        return -d
    return d


@dataclass(frozen=True)
class AngleVector:
    """Per-pair exact directions; mode "da" (mod 2pi) or "ua" (mod pi)."""

    n: int
    mode: str
    values: dict[tuple[int, int], DirectionVector]

    def dir(self, i: int, j: int) -> DirectionVector:
        if i < j:
            return self.values[(i, j)]
        d = self.values[(j, i)]
        return -d if self.mode == "da" else d

    def radians(self, i: int, j: int) -> float:
        return self.dir(i, j).angle()

    def pairs(self):
        return sorted(self.values)


def angle_map(points: Sequence[Point], mode: str = "da") -> AngleVector:
    """Exact direction per unordered pair; "ua" canonicalizes the sign."""
    if mode not in ("da", "ua"):
        raise ValueError("mode must be 'da' or 'ua'")
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    values = {}
    n = len(pts)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = _vec(pts[i - 1], pts[j - 1])
            values[(i, j)] = _ua_canonical(d) if mode == "ua" else d
    return AngleVector(n, mode, values)


# ---------------------------------------------------------------------------
# reconstruction

@dataclass(frozen=True)
class Reconstruction:
    kind: str                      # "points" | "collinear" | "unrealizable"
    points: Optional[tuple[Point, ...]] = None
    order: Optional[tuple[int, ...]] = None


def _line_intersection(p: Point, d1: DirectionVector,
                       q: Point, d2: DirectionVector) -> Optional[Point]:
    det = d1.dx * d2.dy - d1.dy * d2.dx
    if det == 0:
        return None
    # p + s d1 = q + t d2
    rx, ry = q[0] - p[0], q[1] - p[1]
    s = Fraction(rx * d2.dy - ry * d2.dx, det)
    return (p[0] + s * d1.dx, p[1] + s * d1.dy)


def _collinear_test(a: AngleVector, i: int, j: int, k: int) -> bool:
    """Eq. test: the three pairwise angles agree mod pi."""
    dij = _ua_canonical(a.dir(i, j))
    dik = _ua_canonical(a.dir(i, k))
    djk = _ua_canonical(a.dir(j, k))
    return dij == dik == djk


def reconstruct_da(a: AngleVector) -> Reconstruction:
    """Rebuild the configuration (up to translation and positive scale).

    Output points are rational: p1 = (0,0) and p2 is the primitive direction
    vector of alpha_12, a canonical positive-scale choice of the standard
    representative.  All-collinear data returns the order of the labels along
    the line; inconsistent data returns "unrealizable".
    """
    rec = _reconstruct_points(a)
    if rec.kind != "points":
        return rec
    check = angle_map(rec.points, "da")
    if check.values != a.values:
        return Reconstruction("unrealizable")
    return rec


def _reconstruct_points(a: AngleVector) -> Reconstruction:
    n = a.n
    if n < 2:
        raise ValueError("need n >= 2")
    d12 = a.dir(1, 2)
    pts: dict[int, Point] = {1: (Fraction(0), Fraction(0)),
                             2: (Fraction(d12.dx), Fraction(d12.dy))}
    if n == 2:
        return Reconstruction("points", tuple(pts[i] for i in (1, 2)))

    anchor = None
    for i in range(3, n + 1):
        if not _collinear_test(a, 1, 2, i):
            anchor = i
            break
    if anchor is None:
        return _reconstruct_collinear(a)

    order = [1, 2, anchor] + [i for i in range(3, n + 1) if i != anchor]
    for idx, i in enumerate(order):
        if i in pts:
            continue
        placed = False
        for u, v in itertools.combinations(order[:idx], 2):
            if u in pts and v in pts and not _collinear_test(a, u, v, i):
                p = _line_intersection(pts[u], a.dir(u, i), pts[v], a.dir(v, i))
                if p is None:
                    return Reconstruction("unrealizable")
                pts[i] = p
                placed = True
                break
        if not placed:
            return Reconstruction("unrealizable")

    result = tuple(pts[i] for i in range(1, n + 1))
    if len(set(result)) != n:
        return Reconstruction("unrealizable")
    return Reconstruction("points", result)


def _reconstruct_collinear(a: AngleVector) -> Reconstruction:
    n = a.n
    if a.mode != "da":
        # mod-pi angles carry no order information along the line
        return Reconstruction("unrealizable")
    delta = a.dir(1, 2)
    after: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            d = a.dir(i, j)
            if d == delta:
                after[i].add(j)
            elif d != -delta:
                return Reconstruction("unrealizable")
    # topological order along the directed line; must be a strict total order
    labels = sorted(range(1, n + 1), key=lambda i: len(after[i]), reverse=True)
    for idx, i in enumerate(labels):
        if len(after[i]) != n - 1 - idx:
            return Reconstruction("unrealizable")
        if set(labels[idx + 1:]) != after[i]:
            return Reconstruction("unrealizable")
    # report left-to-right (bottom-to-top for vertical lines)
    canonical = _ua_canonical(delta)
    if canonical != delta:
        labels.reverse()
    return Reconstruction("collinear", order=tuple(labels))


def reconstruct_ua(a: AngleVector) -> Reconstruction:
    """Reconstruction from mod-pi angles, canonical up to point reflection.

    Each undirected angle is lifted to its canonical directed representative
    before running the directed reconstruction."""
    if a.mode != "ua":
        raise ValueError("expects a ua-mode angle vector")
    lifted = AngleVector(a.n, "da",
                         {k: _ua_canonical(v) for k, v in a.values.items()})
    rec = _reconstruct_points(lifted)
    if rec.kind != "points":
        return rec
    check = angle_map(rec.points, "ua")
    if check.values != a.values:
        return Reconstruction("unrealizable")
    return rec


# ---------------------------------------------------------------------------
# DA_3 classification

class Da3Class(Enum):
    CLOCKWISE = "clockwise"
    ANTICLOCKWISE = "anticlockwise"
    COLLINEAR_VARIANT = "collinear"
    BOUNDARY_NON_REALIZABLE = "boundary-non-realizable"


def classify_da3(a12: DirectionVector, a13: DirectionVector,
                 a23: DirectionVector) -> Da3Class:
    """Realizability trichotomy for a directed angle triple on three labels.

    Clockwise triangles satisfy 0 < a13-a23 < a13-a21 < pi (mod 2pi), the
    anticlockwise chain swaps labels 1 and 2, and collinear data repeats one
    of the three coincidence patterns; everything else is not realizable.
    """
    a21 = -a12

    def in_open_halfturn(base: DirectionVector, other: DirectionVector) -> bool:
        # other - base in (0, pi) mod 2pi
        return base.cross(other) > 0

    if (in_open_halfturn(a23, a13) and in_open_halfturn(a21, a13)
            and in_open_halfturn(a21, a23)):
        return Da3Class.CLOCKWISE
    if (in_open_halfturn(a23, a21) and in_open_halfturn(a13, a21)
            and in_open_halfturn(a13, a23)):
        return Da3Class.ANTICLOCKWISE
    if a12 == a13 == a23 or a12 == a13 == -a23 or -a12 == a13 == a23:
        return Da3Class.COLLINEAR_VARIANT
    return Da3Class.BOUNDARY_NON_REALIZABLE


# ---------------------------------------------------------------------------
# slope charts and the triangle-residual identities

@dataclass(frozen=True)
class SlopeConfig:
    """x-coordinates x_0..x_{n-1} (x_0 = 0) and finite slopes per pair.

    Labels are 0-based here, matching the chart conventions; slopes a_i are
    shorthand for a_{0i}.
    """

    x: tuple[Fraction, ...]
    slopes: dict[tuple[int, int], Optional[Fraction]]  # None = infinite

    @property
    def n(self) -> int:
        return len(self.x)

    def slope(self, i: int, j: int) -> Fraction:
        key = (min(i, j), max(i, j))
        val = self.slopes[key]
        if val is None:
            raise InfiniteSlopeOnChart("pair %s" % (key,))
        return val


def slope_config_from_points(points: Sequence[Point],
                             shear_if_vertical: bool = False) -> SlopeConfig:
    """Chart data of a configuration; optionally shear away vertical pairs.

    The shear (x, y) -> (x + m*y, y) keeps all incidences and makes every
    slope finite for a suitable integer m.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    pts = [(x - pts[0][0], y - pts[0][1]) for x, y in pts]

    def has_vertical(ps):
        return any(ps[i][0] == ps[j][0]
                   for i in range(len(ps)) for j in range(i + 1, len(ps)))

    if has_vertical(pts):
        if not shear_if_vertical:
            raise InfiniteSlopeOnChart("vertical pair present")
        m = 1
        while True:
            sheared = [(x + m * y, y) for x, y in pts]
            if not has_vertical(sheared):
                pts = sheared
                break
            m += 1

    slopes = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[j][0] - pts[i][0]
            dy = pts[j][1] - pts[i][1]
            slopes[(i, j)] = None if dx == 0 else dy / dx
    return SlopeConfig(tuple(x for x, _ in pts), slopes)


def triangle_residual(cfg: SlopeConfig, i: int, j: int) -> Fraction:
    """t_ij = a_i x_i - a_j x_j - a_ij x_i + a_ij x_j; zero on realized charts."""
    if not (1 <= i < j <= cfg.n - 1):
        raise ValueError("need 1 <= i < j <= n-1")
    ai = cfg.slope(0, i)
    aj = cfg.slope(0, j)
    aij = cfg.slope(i, j)
    return ai * cfg.x[i] - aj * cfg.x[j] - aij * cfg.x[i] + aij * cfg.x[j]


def six_slopes(cfg: SlopeConfig, i: int, j: int, k: int, l: int) -> Fraction:
    """Delta_ijkl of the six pairwise slopes; zero for any four distinct points."""
    a1 = cfg.slope(i, j)
    a2 = cfg.slope(i, k)
    a3 = cfg.slope(i, l)
    a12 = cfg.slope(j, k)
    a13 = cfg.slope(j, l)
    a23 = cfg.slope(k, l)
    return ((a1 - a12) * (a2 - a23) * (a3 - a13)
            - (a1 - a13) * (a2 - a12) * (a3 - a23))


def a23_solve(a1: Fraction, a2: Fraction, a3: Fraction,
              a12: Fraction, a13: Fraction) -> Fraction:
    """The sixth slope forced by the other five (no three points collinear)."""
    a1, a2, a3 = Fraction(a1), Fraction(a2), Fraction(a3)
    a12, a13 = Fraction(a12), Fraction(a13)
    num = a3 * (a1 - a13) * (a2 - a12) - a2 * (a1 - a12) * (a3 - a13)
    den = (a1 - a13) * (a2 - a12) - (a1 - a12) * (a3 - a13)
    if den == 0:
        raise DegenerateDenominator("five-slope data is degenerate")
    return num / den


def tn_membership(cfg: SlopeConfig) -> bool:
    """All triangle residuals and all six-slope residuals vanish."""
    n = cfg.n
    for i in range(1, n):
        for j in range(i + 1, n):
            if triangle_residual(cfg, i, j) != 0:
                return False
    for combo in itertools.combinations(range(n), 4):
        if six_slopes(cfg, *combo) != 0:
            return False
    return True


def t3_singular(cfg: SlopeConfig) -> bool:
    """Singular iff all points and all slopes coincide."""
    if cfg.n != 3:
        raise ValueError("t3_singular expects n = 3")
    return (cfg.x[0] == cfg.x[1] == cfg.x[2]
            and cfg.slope(0, 1) == cfg.slope(0, 2) == cfg.slope(1, 2))


def t4_singular(cfg: SlopeConfig) -> bool:
    """Singular iff some three x's coincide with their three slopes equal."""
    if cfg.n != 4:
        raise ValueError("t4_singular expects n = 4")
    for i, j, k in itertools.combinations(range(4), 3):
        if (cfg.x[i] == cfg.x[j] == cfg.x[k]
                and cfg.slope(i, j) == cfg.slope(i, k) == cfg.slope(j, k)):
            return True
    return False
