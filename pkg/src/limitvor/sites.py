"""Polynomial sites and the exact predicates on pairs, triples and quadruples.

A polynomial site is a labeled pair of polynomials in t; every predicate below
is decided by the ruling sign of a determinant polynomial, which matches the
classical predicate at any small enough positive t.

The determinant-heavy predicates (orientation, in-circle) run on integer
coefficient lists obtained by scaling all coordinates by a common positive
integer; that homothety multiplies the determinants by a positive constant and
keeps every sign decision intact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .exactnum import ExtendedRational, Poly, limit_ratio, series_compare


class CoincidentSites(ValueError):
    pass


class CollinearTriple(ValueError):
    pass


class NotZeroCluster(ValueError):
    pass


class GeneralPositionViolation(ValueError):
    pass


class Orientation(Enum):
    COLLINEAR = 0
    LEFT = 1
    RIGHT = -1


class InCircle(Enum):
    INSIDE = -1
    OUTSIDE = 1
    COCIRCULAR = 0


@dataclass(frozen=True)
class DirectionVector:
    """Exact limit direction of a polynomial line, as a primitive integer vector.

    Angles in radians are a display projection only; all direction equality
    tests compare the primitive vectors.
    """

    dx: int
    dy: int

    @staticmethod
    def from_fractions(dx: Fraction, dy: Fraction) -> "DirectionVector":
        if dx == 0 and dy == 0:
            raise ValueError("null direction")
        scale = (dx.denominator * dy.denominator
                 // gcd(dx.denominator, dy.denominator))
        ix, iy = int(dx * scale), int(dy * scale)
        g = gcd(abs(ix), abs(iy))
        return DirectionVector(ix // g, iy // g)

    def angle(self) -> float:
        return math.atan2(self.dy, self.dx)

    def __neg__(self) -> "DirectionVector":
        return DirectionVector(-self.dx, -self.dy)

    def perp(self) -> "DirectionVector":
        """Rotation by +pi/2."""
        return DirectionVector(-self.dy, self.dx)

    def cross(self, other: "DirectionVector") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def dot(self, other: "DirectionVector") -> int:
        return self.dx * other.dx + self.dy * other.dy

    def parallel(self, other: "DirectionVector") -> bool:
        return self.cross(other) == 0

    def as_tuple(self) -> tuple[int, int]:
        return (self.dx, self.dy)


@dataclass(frozen=True)
class ExtendedPoint:
    cx: ExtendedRational
    cy: ExtendedRational

    @staticmethod
    def finite(x, y) -> "ExtendedPoint":
        return ExtendedPoint(ExtendedRational.finite(x), ExtendedRational.finite(y))

    @property
    def is_finite(self) -> bool:
        return self.cx.is_finite and self.cy.is_finite

    def finite_tuple(self) -> tuple[Fraction, Fraction]:
        if not self.is_finite:
            raise ValueError("point at infinity")
        return (self.cx.value, self.cy.value)

    def __iter__(self):
        yield self.cx
        yield self.cy


@dataclass(frozen=True)
class PolySite:
    label: int
    x: Poly
    y: Poly

    def at_zero(self) -> tuple[Fraction, Fraction]:
        cx = self.x.coeffs[0] if self.x.coeffs else Fraction(0)
        cy = self.y.coeffs[0] if self.y.coeffs else Fraction(0)
        return (cx, cy)

    def at(self, t: float) -> tuple[float, float]:
        return (float(self.x(t)), float(self.y(t)))

    def translate(self, dx: Fraction, dy: Fraction) -> "PolySite":
        return PolySite(self.label, self.x + Poly.constant(dx), self.y + Poly.constant(dy))


def site(label: int, x, y) -> PolySite:
    """Convenience constructor accepting (degree, coeff) pair lists or Poly."""
    px = x if isinstance(x, Poly) else Poly.from_pairs(x)
    py = y if isinstance(y, Poly) else Poly.from_pairs(y)
    return PolySite(label, px, py)


@dataclass(frozen=True)
class Violation:
    kind: str
    labels: tuple[int, ...]


class SiteSet:
    """An ordered set of pairwise distinct polynomial sites, labels 1..n."""

    def __init__(self, sites: Sequence[PolySite]):
        self.sites = tuple(sites)
        labels = [s.label for s in self.sites]
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError("site labels must be exactly 1..n")
        seen: dict[tuple, int] = {}
        for s in self.sites:
            key = (s.x.coeffs, s.y.coeffs)
            if key in seen:
                raise CoincidentSites(
                    "sites %d and %d are equal as polynomial pairs" % (seen[key], s.label))
            seen[key] = s.label
        self._by_label = {s.label: s for s in self.sites}
        self._int_cache: Optional[dict[int, tuple[list[int], list[int], list[int]]]] = None
        self._gp_verdict: Optional[tuple[bool, Optional["Violation"]]] = None

    def __len__(self) -> int:
        return len(self.sites)

    def __iter__(self):
        return iter(self.sites)

    def __getitem__(self, label: int) -> PolySite:
        return self._by_label[label]

    def labels(self) -> list[int]:
        return [s.label for s in self.sites]

    def is_zero_cluster(self) -> bool:
        return all(s.at_zero() == (0, 0) for s in self.sites)

    def _int_polys(self) -> dict[int, tuple[list[int], list[int], list[int]]]:
        """Integer (x, y, x^2+y^2) coefficient lists under a common homothety."""
        if self._int_cache is None:
            scale = 1
            for s in self.sites:
                for c in s.x.coeffs + s.y.coeffs:
                    scale = scale * c.denominator // gcd(scale, c.denominator)
            cache = {}
            for s in self.sites:
                ix = _int_coeffs(s.x, scale)
                iy = _int_coeffs(s.y, scale)
                norm = _iadd(_imul(ix, ix), _imul(iy, iy))
                cache[s.label] = (ix, iy, norm)
            self._int_cache = cache
        return self._int_cache


# ---------------------------------------------------------------------------
# integer coefficient-list helpers (ascending degree, trailing zeros allowed)

def _int_coeffs(p: Poly, scale: int) -> list[int]:
    out = []
    for c in p.coeffs:
        v = c * scale
        out.append(int(v))
    return out


def _imul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


def _iadd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _isub(a: list[int], b: list[int]) -> list[int]:
    return _iadd(a, [-c for c in b])


def _iruling_sign(a: list[int]) -> int:
    for c in a:
        if c:
            return 1 if c > 0 else -1
    return 0


def _common_ints(sites: Sequence[PolySite]):
    """(x, y, x^2+y^2) int lists for ad-hoc site tuples under one homothety."""
    scale = 1
    for s in sites:
        for c in s.x.coeffs + s.y.coeffs:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    out = []
    for s in sites:
        ix = _int_coeffs(s.x, scale)
        iy = _int_coeffs(s.y, scale)
        out.append((ix, iy, _iadd(_imul(ix, ix), _imul(iy, iy))))
    return out


def _det3_collinear(u, v, w) -> list[int]:
    """det [[1, ux, uy], [1, vx, vy], [1, wx, wy]] over int coefficient lists."""
    (ux, uy, _), (vx, vy, _), (wx, wy, _) = u, v, w
    return _isub(_imul(_isub(vx, ux), _isub(wy, uy)),
                 _imul(_isub(wx, ux), _isub(vy, uy)))


def _det3_cols(a1, b1, a2, b2, a3, b3) -> list[int]:
    """det [[a1, b1, 1], [a2, b2, 1], [a3, b3, 1]] over int coefficient lists."""
    return _iadd(
        _isub(_imul(a1, _isub(b2, b3)), _imul(b1, _isub(a2, a3))),
        _isub(_imul(a2, b3), _imul(a3, b2)))


# ---------------------------------------------------------------------------
# predicates

def direction(u: PolySite, v: PolySite) -> DirectionVector:
    """Limit direction of the line through u(t), v(t), as a primitive vector.

    With d = v - u and m the least degree carrying a nonzero coefficient in
    either component, the direction is the coefficient vector of t^m; this is
    lim d(t)/|d(t)| up to positive scale.
    """
    dx = v.x - u.x
    dy = v.y - u.y
    if dx.is_zero() and dy.is_zero():
        raise CoincidentSites("direction of coincident sites %d, %d" % (u.label, v.label))
    lx = dx.lowdeg()
    ly = dy.lowdeg()
    m = min(d for d in (lx, ly) if d is not None)
    cx = dx.coeffs[m] if m < len(dx.coeffs) else Fraction(0)
    cy = dy.coeffs[m] if m < len(dy.coeffs) else Fraction(0)
    return DirectionVector.from_fractions(cx, cy)


def orientation(u: PolySite, v: PolySite, w: PolySite) -> Orientation:
    """Side of w relative to the polynomial line through u then v at t=0+."""
    iu, iv, iw = _common_ints([u, v, w])
    sign = _iruling_sign(_det3_collinear(iu, iv, iw))
    return Orientation(sign)


def _center_determinants(u: PolySite, v: PolySite, w: PolySite):
    """The polynomials (d, e, D) of the circumcenter formulas, over Fractions."""
    nu = u.x * u.x + u.y * u.y
    nv = v.x * v.x + v.y * v.y
    nw = w.x * w.x + w.y * w.y

    def det3(a1, b1, a2, b2, a3, b3):
        return (a1 * (b2 - b3) - b1 * (a2 - a3)) + (a2 * b3 - a3 * b2)

    d = -det3(nu, u.y, nv, v.y, nw, w.y)
    e = det3(nu, u.x, nv, v.x, nw, w.x)
    big_d = (v.x - u.x) * (w.y - u.y) - (w.x - u.x) * (v.y - u.y)
    return d, e, big_d


@dataclass(frozen=True)
class CircleCenter:
    point: ExtendedPoint
    clockwise: bool


def circle_center(u: PolySite, v: PolySite, w: PolySite) -> CircleCenter:
    """Limit circumcenter of three non-collinear sites, possibly at infinity.

    The circle C(u,v,w) is clockwise at t=0 iff w is on the right of the line
    through u then v.
    """
    side = orientation(u, v, w)
    if side is Orientation.COLLINEAR:
        raise CollinearTriple("circle center of collinear sites %d,%d,%d"
                              % (u.label, v.label, w.label))
    d, e, big_d = _center_determinants(u, v, w)
    two_d = big_d.scale(2)
    cx = limit_ratio(-d, two_d)
    cy = limit_ratio(-e, two_d)
    return CircleCenter(ExtendedPoint(cx, cy), clockwise=(side is Orientation.RIGHT))


def positive_radius(u: PolySite, v: PolySite, w: PolySite) -> bool:
    """For a zero-cluster triple: does the limit circle keep positive radius?

    True iff the center limit has a nonzero or infinite coordinate.
    """
    for s in (u, v, w):
        if s.at_zero() != (0, 0):
            raise NotZeroCluster("positive_radius needs sites at the origin at t=0")
    c = circle_center(u, v, w).point
    return c.cx.sign() != 0 or c.cy.sign() != 0


def in_circle(u: PolySite, v: PolySite, w: PolySite, q: PolySite) -> InCircle:
    """Position of q relative to the circle through u, v, w at t=0+.

    The triple is normalized to clockwise orientation internally; odd
    permutations flip the sign of the in-circle determinant, so caller order
    does not matter.
    """
    side = orientation(u, v, w)
    if side is Orientation.COLLINEAR:
        raise CollinearTriple("in_circle with collinear sites %d,%d,%d"
                              % (u.label, v.label, w.label))
    if side is Orientation.LEFT:
        v, w = w, v
    ints = _common_ints([u, v, w, q])
    return InCircle(_incircle_sign(ints[0], ints[1], ints[2], ints[3]))


def _incircle_sign(iu, iv, iw, iq) -> int:
    """Ruling sign of the 4x4 in-circle determinant (rows u,v,w,q)."""
    # expand along the q row; the three 3x3 minors reuse the triple only
    m1, m2, m3, m4 = _incircle_minors(iu, iv, iw)
    qx, qy, qn = iq
    total = _iadd(_isub(_imul(qy, m2), _imul(qx, m1)),
                  _isub(m4, _imul(qn, m3)))
    return _iruling_sign(total)


def _incircle_minors(iu, iv, iw):
    """3x3 minors of the in-circle determinant for a fixed (u, v, w) triple.

    With rows (x, y, norm, 1) expanded along a fourth row (qx, qy, qn, 1):
    I = -qx*M1 + qy*M2 - qn*M3 + M4.
    """
    ux, uy, un = iu
    vx, vy, vn = iv
    wx, wy, wn = iw

    def det3(a1, b1, c1, a2, b2, c2, a3, b3, c3):
        return _iadd(
            _isub(_imul(a1, _isub(_imul(b2, c3), _imul(b3, c2))),
                  _imul(b1, _isub(_imul(a2, c3), _imul(a3, c2)))),
            _imul(c1, _isub(_imul(a2, b3), _imul(a3, b2))))

    one = [1]
    m1 = det3(uy, un, one, vy, vn, one, wy, wn, one)
    m2 = det3(ux, un, one, vx, vn, one, wx, wn, one)
    m3 = det3(ux, uy, one, vx, vy, one, wx, wy, one)
    m4 = det3(ux, uy, un, vx, vy, vn, wx, wy, wn)
    return m1, m2, m3, m4


def cocircular_poly_is_null(u: PolySite, v: PolySite, w: PolySite, q: PolySite) -> bool:
    """Whether the four sites are cocircular at t=0 (null in-circle polynomial)."""
    ints = _common_ints([u, v, w, q])
    m1, m2, m3, m4 = _incircle_minors(ints[0], ints[1], ints[2])
    qx, qy, qn = ints[3]
    total = _iadd(_isub(_imul(qy, m2), _imul(qx, m1)),
                  _isub(m4, _imul(qn, m3)))
    return _iruling_sign(total) == 0 and not any(total)


def general_position(s: SiteSet) -> Optional[Violation]:
    """Scan all triples and quadruples; return the first violation, if any."""
    if s._gp_verdict is not None:
        return s._gp_verdict[1]
    v = _general_position_scan(s)
    s._gp_verdict = (v is None, v)
    return v


def _general_position_scan(s: SiteSet) -> Optional[Violation]:
    sites = s.sites
    n = len(sites)
    ints = s._int_polys()
    by = [ints[x.label] for x in sites]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                det = _det3_collinear(by[i], by[j], by[k])
                if not any(det):
                    return Violation("collinear",
                                     (sites[i].label, sites[j].label, sites[k].label))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                m1, m2, m3, m4 = _incircle_minors(by[i], by[j], by[k])
                for l in range(k + 1, n):
                    qx, qy, qn = by[l]
                    total = _iadd(_isub(_imul(qy, m2), _imul(qx, m1)),
                                  _isub(m4, _imul(qn, m3)))
                    if not any(total):
                        return Violation("cocircular",
                                         (sites[i].label, sites[j].label,
                                          sites[k].label, sites[l].label))
    return None


def require_general_position(s: SiteSet) -> None:
    v = general_position(s)
    if v is not None:
        raise GeneralPositionViolation("%s sites %s" % (v.kind, list(v.labels)))


def site_order(u: PolySite, v: PolySite) -> int:
    """Lexicographic order for small positive t: x-components, then y."""
    c = series_compare(u.x, v.x)
    if c != 0:
        return c
    return series_compare(u.y, v.y)
