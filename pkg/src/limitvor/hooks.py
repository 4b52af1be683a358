"""Hooks, nests, hooked trees, screen filling and clickable Voronoi diagrams.

A hook hinged at p_i carries the ratio |p_i-p_k|/|p_i-p_j| and the turn from
leg p_i p_j to leg p_i p_k; vanishing ratios of a data point group the labels
into a nest of clusters, each nontrivial cluster gets a screen, and the
hooked tree prescribes one angle/hook per site for filling the screens.
Reading all angles and hooks back from the filled screens restores the
tagged coordinates (the consistency round trip).

This layer is metric, not combinatorial: coordinates are double precision,
with exact rational classification only for the zero / finite / infinite
ratio decisions coming from polynomial sites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import Poly
from .limitdiag import LimitDiagram, gamma_of_points, voronoi_from_gamma
from .cells import LineEl, RayEl
from .sites import PolySite, SiteSet, direction

TAU_PERP = 1e-6      # orthogonality margin for validity (radians)
TAU_SEP = 1e-9       # screen separation for acceptance
TAU_RT = 1e-9        # round-trip comparison tolerance
COORD_DENOMINATOR = 10 ** 6   # rationalization grid for exports / normal forms

TWO_PI = 2.0 * math.pi


class NotNested(ValueError):
    pass


class InvalidQ(ValueError):
    pass


class NotAccepted(ValueError):
    pass


class TooManyZeroRatios(ValueError):
    pass


class CoincidentWithHinge(ValueError):
    pass


def wrap2pi(a: float) -> float:
    """Wrap to (-pi, pi]."""
    w = -((-a + math.pi) % TWO_PI - math.pi)
    return math.pi if w == -math.pi else w


def wrap_pi_half(a: float) -> float:
    """Wrap modulo pi to [-pi/2, pi/2)."""
    return (a + math.pi / 2) % math.pi - math.pi / 2


def circ_dist(a: float, b: float) -> float:
    d = abs(wrap2pi(a - b))
    return d


@dataclass(frozen=True)
class Hook:
    """Klein-class representative (beta, alpha): (b, a) ~ (-b, a + pi)."""

    beta: float
    alpha: float

    def klein_swap(self) -> "Hook":
        return Hook(-self.beta, wrap2pi(self.alpha + math.pi))

    def positive(self) -> "Hook":
        return self if self.beta >= 0 else self.klein_swap()


def hook_of(p_i, p_j, p_k) -> Hook:
    """The hook hinged at p_i from p_j to p_k on plain points."""
    if tuple(p_i) == tuple(p_j) or tuple(p_i) == tuple(p_k):
        raise CoincidentWithHinge("hook legs need points distinct from the hinge")
    dij = (p_j[0] - p_i[0], p_j[1] - p_i[1])
    dik = (p_k[0] - p_i[0], p_k[1] - p_i[1])
    beta = math.hypot(*dik) / math.hypot(*dij)
    alpha = wrap2pi(math.atan2(dik[1], dik[0]) - math.atan2(dij[1], dij[0]))
    return Hook(beta, alpha)


# ---------------------------------------------------------------------------
# data points

@dataclass
class AHPoint:
    """Per-pair angles plus the six hooks per triple.

    mode "fm2": pair angles mod 2pi, ratios in [0, inf]; mode "xah": pair
    angles mod pi, hooks as Klein classes (a chosen representative is stored).
    ratio_kind carries the exact zero/finite/infinite classification when the
    point came from polynomial sites.
    """

    n: int
    mode: str
    pair_angles: dict[tuple[int, int], float]
    hooks: dict[tuple[int, int, int], Hook]
    ratio_kind: dict[tuple[int, int, int], str] = field(default_factory=dict)

    def angle(self, i: int, j: int) -> float:
        if i < j:
            return self.pair_angles[(i, j)]
        base = self.pair_angles[(j, i)]
        return wrap2pi(base + math.pi) if self.mode == "fm2" else base

    def hook(self, i: int, j: int, k: int) -> Hook:
        return self.hooks[(i, j, k)]

    def beta(self, i: int, j: int, k: int) -> float:
        return self.hooks[(i, j, k)].beta

    def ratio_is_zero(self, i: int, j: int, k: int) -> bool:
        kind = self.ratio_kind.get((i, j, k))
        if kind is not None:
            return kind == "zero"
        return self.hooks[(i, j, k)].beta == 0.0

    def labels(self) -> list[int]:
        return list(range(1, self.n + 1))


def ahpoint_from_points(points: Sequence[tuple[float, float]],
                        mode: str = "fm2") -> AHPoint:
    """Data map of a configuration of distinct points."""
    n = len(points)
    pair_angles = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pi_, pj = points[i - 1], points[j - 1]
            ang = math.atan2(pj[1] - pi_[1], pj[0] - pi_[0])
            pair_angles[(i, j)] = wrap2pi(ang) if mode == "fm2" else wrap_pi_half(ang)
    hooks = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) == 3:
                    hooks[(i, j, k)] = hook_of(points[i - 1], points[j - 1],
                                               points[k - 1])
    return AHPoint(n, mode, pair_angles, hooks)


def xah_of(x: AHPoint) -> AHPoint:
    """Forget directions: pair angles mod pi, hooks kept as Klein representatives."""
    if x.mode == "xah":
        return x
    return AHPoint(x.n, "xah",
                   {k: wrap_pi_half(v) for k, v in x.pair_angles.items()},
                   dict(x.hooks), dict(x.ratio_kind))


# ---------------------------------------------------------------------------
# chi: from polynomial sites to a data point

def ratios_from_polysites(s: SiteSet) -> dict[tuple[int, int, int], tuple[str, Optional[Fraction]]]:
    """Exact limit classification of every ordered-triple ratio.

    Returns (kind, squared value) with kind in zero / finite / infinite; the
    squared ratio of distance polynomials decides exactly.
    """
    from .exactnum import limit_ratio

    labels = s.labels()
    sq: dict[tuple[int, int], Poly] = {}
    for ii, i in enumerate(labels):
        for j in labels[ii + 1:]:
            dx = s[i].x - s[j].x
            dy = s[i].y - s[j].y
            sq[(i, j)] = dx * dx + dy * dy

    def sq_of(i, j):
        return sq[(i, j) if i < j else (j, i)]

    out = {}
    for i in labels:
        for j in labels:
            for k in labels:
                if len({i, j, k}) != 3:
                    continue
                lim = limit_ratio(sq_of(i, k), sq_of(i, j))
                if not lim.is_finite:
                    out[(i, j, k)] = ("infinite", None)
                elif lim.value == 0:
                    out[(i, j, k)] = ("zero", Fraction(0))
                else:
                    out[(i, j, k)] = ("finite", lim.value)
    return out


def chi(s: SiteSet) -> AHPoint:
    """Directed angles and limit ratios of a polynomial site set at t=0+."""
    labels = s.labels()
    n = len(labels)
    pair_angles = {}
    for ii, i in enumerate(labels):
        for j in labels[ii + 1:]:
            pair_angles[(i, j)] = direction(s[i], s[j]).angle()
    ratios = ratios_from_polysites(s)
    hooks = {}
    kinds = {}
    for (i, j, k), (kind, val2) in ratios.items():
        alpha = wrap2pi(_pair_angle(pair_angles, i, k) - _pair_angle(pair_angles, i, j))
        beta = math.inf if kind == "infinite" else math.sqrt(float(val2))
        hooks[(i, j, k)] = Hook(beta, alpha)
        kinds[(i, j, k)] = kind
    return AHPoint(n, "fm2", pair_angles, hooks, kinds)


def _pair_angle(pair_angles, i, j) -> float:
    if i < j:
        return pair_angles[(i, j)]
    return wrap2pi(pair_angles[(j, i)] + math.pi)


# ---------------------------------------------------------------------------
# nests

@dataclass(frozen=True)
class Nest:
    n: int
    clusters: frozenset[frozenset[int]]

    def sorted_clusters(self) -> list[frozenset[int]]:
        return sorted(self.clusters, key=lambda c: (-len(c), min(c)))

    def nontrivial(self) -> list[frozenset[int]]:
        return [c for c in self.sorted_clusters() if len(c) >= 2]

    def separating(self, labels) -> frozenset[int]:
        """Smallest cluster containing all the given labels."""
        best = None
        for c in self.clusters:
            if set(labels) <= c and (best is None or len(c) < len(best)):
                best = c
        assert best is not None
        return best

    def maximal_subclusters(self, c: frozenset[int]) -> list[frozenset[int]]:
        subs = [d for d in self.clusters if d < c]
        out = []
        for d in subs:
            if not any(d < e for e in subs):
                out.append(d)
        return sorted(out, key=min)

    def key(self) -> tuple:
        return tuple(sorted(tuple(sorted(c)) for c in self.clusters))


def nest_of(x: AHPoint) -> Nest:
    """Separating clusters C_ij = {k : |beta^ij_ik| > 0} + {i,j}, plus
    singletons; raises NotNested when the ratio data is inconsistent."""
    n = x.n
    clusters = {frozenset([i]) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = {i, j}
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                # beta^{ij}_{ik} is the hook at hinge i from k to j
                if not x.ratio_is_zero(i, k, j):
                    c.add(k)
            clusters.add(frozenset(c))
    for a in clusters:
        for b in clusters:
            if not (a <= b or b <= a or not (a & b)):
                raise NotNested("clusters %s and %s overlap" % (sorted(a), sorted(b)))
    return Nest(n, frozenset(clusters))


# ---------------------------------------------------------------------------
# hooked tree

@dataclass(frozen=True)
class Tag:
    """An x-tag: "top", a pair angle, or a hook reference with its x-type."""

    kind: str                 # "top" | "angle" | "hook"
    xtype: str                # "top" | "2.a" | "2.b" | "2.c" | "3"
    pair: Optional[tuple[int, int]] = None            # for angle tags
    hook: Optional[tuple[int, int, int]] = None       # (hinge, from, to)

    def pretty(self) -> str:
        if self.kind == "top":
            return "top"
        if self.kind == "angle":
            return "alpha_%d,%d" % self.pair
        i, j, k = self.hook
        return "h^{%d%d}_{%d%d}" % (i, k, i, j)


@dataclass
class HookedTree:
    nest: Nest
    tags: dict[int, Tag]                     # one tag per site label
    predecessor: dict[int, Optional[int]]
    screen_depth: dict[frozenset[int], int]  # nontrivial clusters only

    def dom_dimension(self) -> int:
        dims = 0
        for tag in self.tags.values():
            if tag.kind == "angle":
                dims += 1
            elif tag.kind == "hook":
                dims += 2
        return dims

    def hooked_path(self, label: int) -> list[int]:
        out = [label]
        while self.predecessor[out[-1]] is not None:
            out.append(self.predecessor[out[-1]])
        return out

    def dom_hooks(self) -> list[tuple[int, int, int]]:
        return [t.hook for t in self.tags.values() if t.kind == "hook"]

    def top_angle_pair(self) -> tuple[int, int]:
        for t in self.tags.values():
            if t.kind == "angle":
                return t.pair
        raise AssertionError("no angle tag")

    def site_of_tag(self, tag: Tag) -> int:
        for lbl, t in self.tags.items():
            if t == tag:
                return lbl
        raise KeyError(tag)


def hooked_tree(x: AHPoint) -> HookedTree:
    return hooked_tree_of_nest(nest_of(x))


def hooked_tree_of_nest(nest: Nest) -> HookedTree:
    n = nest.n
    full = frozenset(range(1, n + 1))
    tags: dict[int, Tag] = {}
    pred: dict[int, Optional[int]] = {1: None}
    parent_info: dict[frozenset[int], frozenset[int]] = {}

    for cluster in nest.sorted_clusters():
        if len(cluster) < 2:
            continue
        subs = nest.maximal_subclusters(cluster)
        minima = [min(c) for c in subs]
        for sub in subs:
            if len(sub) >= 2:
                parent_info[sub] = cluster
        j1 = minima[0]
        if cluster == full:
            tags[j1] = Tag("top", "top")
        for t, (sub, jt) in enumerate(zip(subs, minima)):
            if t == 0:
                continue
            if t == 1:
                if cluster == full:
                    tags[jt] = Tag("angle", "2.a", pair=(j1, jt))
                    pred[jt] = 1
                else:
                    parent = parent_info[cluster]
                    pminima = [min(c) for c in nest.maximal_subclusters(parent)]
                    i1, i2 = pminima[0], pminima[1]
                    if j1 > i1:
                        tags[jt] = Tag("hook", "2.b", hook=(j1, i1, jt))
                        pred[jt] = j1
                    else:
                        tags[jt] = Tag("hook", "2.c", hook=(j1, i2, jt))
                        pred[jt] = i2
            else:
                tags[jt] = Tag("hook", "3", hook=(j1, minima[1], jt))
                pred[jt] = minima[1]

    depth: dict[frozenset[int], int] = {}
    for cluster in nest.sorted_clusters():
        if len(cluster) < 2:
            continue
        above = sum(1 for d in nest.clusters if len(d) >= 2 and cluster < d)
        depth[cluster] = 1 + above
    return HookedTree(nest, tags, pred, depth)


# ---------------------------------------------------------------------------
# standard form, Dom values, validity

@dataclass
class DomPoint:
    """Values of the tagged coordinates: the one pair angle and n-2 hooks."""

    angle: float
    hooks: dict[tuple[int, int, int], Hook]

    def copy(self) -> "DomPoint":
        return DomPoint(self.angle, dict(self.hooks))


def tv(x: AHPoint, tree: Optional[HookedTree] = None) -> DomPoint:
    """Projection of x onto its Dom factor (the tree values)."""
    tree = tree or hooked_tree(x)
    pair = tree.top_angle_pair()
    return DomPoint(x.angle(*pair),
                    {h: x.hooks[h] for h in tree.dom_hooks()})


def standard_form(x: AHPoint, tree: Optional[HookedTree] = None) -> AHPoint:
    """Normalize the Dom coordinates: type-2 angles (and the top angle) to
    [-pi/2, pi/2), type-3 ratios positive via the Klein identification."""
    tree = tree or hooked_tree(x)
    pair_angles = dict(x.pair_angles)
    hooks = dict(x.hooks)
    tp = tree.top_angle_pair()
    key = (min(tp), max(tp))
    pair_angles[key] = wrap_pi_half(pair_angles[key])
    for lbl, tag in tree.tags.items():
        if tag.kind != "hook":
            continue
        h = hooks[tag.hook]
        if tag.xtype == "3":
            if h.beta < 0:
                hooks[tag.hook] = h.klein_swap()
        else:
            wrapped = wrap_pi_half(h.alpha)
            if abs(wrap2pi(wrapped - h.alpha)) > 1e-12:
                hooks[tag.hook] = Hook(-h.beta, wrapped)
    return AHPoint(x.n, x.mode, pair_angles, hooks, dict(x.ratio_kind))


def is_valid(q: DomPoint, x: AHPoint, tree: Optional[HookedTree] = None) -> bool:
    """Validity of q w.r.t. x: no explosion/top angle orthogonal to x's value
    and all ratios finite."""
    tree = tree or hooked_tree(x)
    xs = standard_form(x, tree)
    tp = tree.top_angle_pair()
    if _orthogonal(q.angle, xs.angle(*tp)):
        return False
    for lbl, tag in tree.tags.items():
        if tag.kind != "hook":
            continue
        h = q.hooks[tag.hook]
        if not math.isfinite(h.beta):
            return False
        if tag.xtype in ("2.b", "2.c"):
            if _orthogonal(h.alpha, xs.hooks[tag.hook].alpha):
                return False
    return True


def _orthogonal(a: float, b: float) -> bool:
    d = abs(wrap_pi_half(a - b))   # mod-pi distance, in [0, pi/2]
    return d >= math.pi / 2 - TAU_PERP


# ---------------------------------------------------------------------------
# draw: filling the screens

@dataclass
class ScreenFill:
    """Coordinates of each cluster's sites per screen, plus orientations."""

    tree: HookedTree
    orientations: dict[frozenset[int], float]
    coords: dict[frozenset[int], dict[int, tuple[float, float]]]
    chosen: DomPoint                      # q after representative choices

    def screens(self) -> list[frozenset[int]]:
        return sorted(self.coords, key=lambda c: (-len(c), min(c)))

    def depth(self, cluster: frozenset[int]) -> int:
        return self.tree.screen_depth[cluster]


def draw(x: AHPoint, q: DomPoint, tree: Optional[HookedTree] = None) -> ScreenFill:
    """Fill the x-screens with q (Construction: representatives, screen
    orientations, then sites in predecessor order)."""
    tree = tree or hooked_tree(x)
    if not is_valid(q, x, tree):
        raise InvalidQ("q is not valid with respect to x")
    xs = standard_form(x, tree)
    nest = tree.nest

    # Step 1: representative choices (skipped in fm2 mode: directed data)
    chosen = q.copy()
    if x.mode == "xah":
        tp = tree.top_angle_pair()
        chosen.angle = _nearest_rep(q.angle, xs.angle(*tp))
        for tag in tree.tags.values():
            if tag.kind == "hook" and tag.xtype in ("2.b", "2.c"):
                h = q.hooks[tag.hook]
                alpha = _nearest_rep(h.alpha, xs.hooks[tag.hook].alpha)
                if abs(wrap2pi(alpha - h.alpha)) > 1e-9:
                    chosen.hooks[tag.hook] = Hook(-h.beta, alpha)
                else:
                    chosen.hooks[tag.hook] = Hook(h.beta, alpha)

    return fill_screens(tree, chosen)


def fill_screens(tree: HookedTree, chosen: DomPoint) -> ScreenFill:
    """Steps 2 and 3 of the drawing construction, on already-chosen values."""
    nest = tree.nest

    orientations: dict[frozenset[int], float] = {}
    full = frozenset(range(1, nest.n + 1))
    for cluster in nest.sorted_clusters():
        if len(cluster) < 2:
            continue
        subs = nest.maximal_subclusters(cluster)
        minima = [min(c) for c in subs]
        j1, j2 = minima[0], minima[1]
        if cluster == full:
            orientations[cluster] = chosen.angle
            continue
        parent = _parent_cluster(nest, cluster)
        pm = [min(c) for c in nest.maximal_subclusters(parent)]
        o_t = orientations[parent]
        if j1 == pm[0]:
            orientations[cluster] = o_t + chosen.hooks[(j1, pm[1], j2)].alpha
        elif j1 == pm[1]:
            orientations[cluster] = o_t + chosen.hooks[(j1, pm[0], j2)].alpha + math.pi
        else:
            scale_hook = chosen.hooks[(pm[0], pm[1], j1)]
            own = chosen.hooks[(j1, pm[0], j2)].alpha
            turn = o_t + scale_hook.alpha + own
            if scale_hook.beta > 0:
                turn += math.pi
            orientations[cluster] = turn

    coords: dict[frozenset[int], dict[int, tuple[float, float]]] = {}
    order = sorted(range(1, nest.n + 1),
                   key=lambda lbl: (len(tree.hooked_path(lbl)), lbl))
    for cluster in nest.sorted_clusters():
        if len(cluster) < 2:
            continue
        subs = nest.maximal_subclusters(cluster)
        j1, j2 = min(subs[0]), min(subs[1])
        o_s = orientations[cluster]
        pts: dict[int, tuple[float, float]] = {}
        for lbl in order:
            if lbl not in cluster:
                continue
            if lbl == j1:
                pts[lbl] = (0.0, 0.0)
            elif lbl == j2:
                pts[lbl] = (math.cos(o_s), math.sin(o_s))
            else:
                tag = tree.tags[lbl]
                assert tag.kind == "hook"
                hinge, frm, _ = tag.hook
                h = chosen.hooks[tag.hook]
                pts[lbl] = _apply_hook(pts[hinge], pts[frm], h)
        coords[cluster] = pts
    return ScreenFill(tree, orientations, coords, chosen)


def ah_from_dom(tree: HookedTree, q: DomPoint) -> AHPoint:
    """The full directed data point determined by tagged coordinate values."""
    return read_fill(fill_screens(tree, q))


def _apply_hook(p_hinge, p_from, h: Hook):
    vx = p_from[0] - p_hinge[0]
    vy = p_from[1] - p_hinge[1]
    ca, sa = math.cos(h.alpha), math.sin(h.alpha)
    rx = ca * vx - sa * vy
    ry = sa * vx + ca * vy
    return (p_hinge[0] + h.beta * rx, p_hinge[1] + h.beta * ry)


def _nearest_rep(value: float, target: float) -> float:
    """The representative value + k*pi closest to target on the circle."""
    a = value
    b = value + math.pi
    return a if circ_dist(a, target) <= circ_dist(b, target) else wrap2pi(b)


def _parent_cluster(nest: Nest, cluster: frozenset[int]) -> frozenset[int]:
    best = None
    for c in nest.clusters:
        if cluster < c and (best is None or len(c) < len(best)):
            best = c
    assert best is not None
    return best


def is_accepted(fill: ScreenFill) -> bool:
    """Sites of distinct maximal subclusters must stay separated per screen."""
    nest = fill.tree.nest
    for cluster, pts in fill.coords.items():
        subs = nest.maximal_subclusters(cluster)
        for ai in range(len(subs)):
            for bi in range(ai + 1, len(subs)):
                for la in subs[ai]:
                    for lb in subs[bi]:
                        pa, pb = pts[la], pts[lb]
                        if math.hypot(pa[0] - pb[0], pa[1] - pb[1]) <= TAU_SEP:
                            return False
    return True


# ---------------------------------------------------------------------------
# read: recovering all data elements from filled screens

def read(x: AHPoint, fill: ScreenFill) -> AHPoint:
    """Read every pair angle (in the separating screen) and every hook back."""
    if not is_accepted(fill):
        raise NotAccepted("fill has coinciding subcluster sites")
    return read_fill(fill)


def read_fill(fill: ScreenFill) -> AHPoint:
    nest = fill.tree.nest
    n = nest.n
    pair_angles: dict[tuple[int, int], float] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sep = nest.separating((i, j))
            pts = fill.coords[sep]
            pi_, pj = pts[i], pts[j]
            pair_angles[(i, j)] = wrap2pi(
                math.atan2(pj[1] - pi_[1], pj[0] - pi_[0]))

    hooks: dict[tuple[int, int, int], Hook] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) != 3:
                    continue
                alpha = wrap2pi(_pair_angle(pair_angles, i, k)
                                - _pair_angle(pair_angles, i, j))
                sep = nest.separating((i, j, k))
                pts = fill.coords[sep]
                beta = _read_beta(pts[i], pts[j], pts[k], alpha)
                hooks[(i, j, k)] = Hook(beta, alpha)
    # resolve pairs where the projection formula was unavailable
    for key, h in list(hooks.items()):
        if h.beta is None:
            i, j, k = key
            other = hooks[(i, k, j)].beta
            beta = math.inf if other == 0 else 1.0 / other
            hooks[key] = Hook(beta, h.alpha)
    return AHPoint(n, "fm2", pair_angles, hooks)


def _read_beta(p_i, p_j, p_k, alpha: float) -> Optional[float]:
    if p_i == p_j:
        return None   # fall back to the reciprocal hook
    vx, vy = p_j[0] - p_i[0], p_j[1] - p_i[1]
    ca, sa = math.cos(alpha), math.sin(alpha)
    px = ca * vx - sa * vy
    py = sa * vx + ca * vy
    num = (p_k[0] - p_i[0]) * px + (p_k[1] - p_i[1]) * py
    den = px * px + py * py
    return num / den


@dataclass
class RoundTripReport:
    ok: bool
    max_error: float
    per_coordinate: dict


def roundtrip_check(x: AHPoint, q: DomPoint,
                    tree: Optional[HookedTree] = None,
                    tolerance: float = TAU_RT) -> RoundTripReport:
    """tv_x(read(x, draw(x, q))) must reproduce q (type-3 hooks up to Klein)."""
    tree = tree or hooked_tree(x)
    fill = draw(x, q, tree)
    back = read(x, fill)
    chosen = fill.chosen
    errors = {}
    tp = tree.top_angle_pair()
    errors["angle"] = circ_dist(back.angle(*tp), chosen.angle)
    for tag in tree.tags.values():
        if tag.kind != "hook":
            continue
        got = back.hooks[tag.hook]
        want = chosen.hooks[tag.hook]
        if tag.xtype == "3":
            got, want = got.positive(), want.positive()
        errors[tag.pretty()] = max(abs(got.beta - want.beta),
                                   circ_dist(got.alpha, want.alpha))
    worst = max(errors.values())
    return RoundTripReport(worst < tolerance, worst, errors)


# ---------------------------------------------------------------------------
# the fiber of the forgetful map FM2 -> XAH

def fiber(x: AHPoint, tree: Optional[HookedTree] = None) -> list[AHPoint]:
    """All directed data points over a mod-pi point: 2^(m+1) of them, where m
    counts the vanishing tagged ratios."""
    if x.mode != "xah":
        x = xah_of(x)
    tree = tree or hooked_tree(x)
    xs = standard_form(x, tree)
    base = tv(xs, tree)
    zero_hooks = [tag.hook for tag in tree.tags.values()
                  if tag.kind == "hook" and base.hooks[tag.hook].beta == 0.0]
    m = len(zero_hooks)
    if m > 12:
        raise TooManyZeroRatios("fiber would have %d elements" % (2 ** (m + 1)))

    out: list[AHPoint] = []
    seen = set()
    for top_flip in (0, 1):
        for mask in range(2 ** m):
            q = base.copy()
            q.angle = wrap2pi(base.angle + top_flip * math.pi)
            for bit, hk in enumerate(zero_hooks):
                if mask >> bit & 1:
                    h = base.hooks[hk]
                    q.hooks[hk] = Hook(-h.beta, wrap2pi(h.alpha + math.pi))
            fm2 = AHPoint(x.n, "fm2", dict(xs.pair_angles), dict(xs.hooks))
            fill = draw(fm2, q, tree)
            point = read(fm2, fill)
            sig = _signature(point)
            if sig not in seen:
                seen.add(sig)
                out.append(point)
    return out


def _signature(x: AHPoint) -> tuple:
    ang = tuple(round(wrap2pi(v), 9) for _, v in sorted(x.pair_angles.items()))
    bet = tuple(round(h.beta, 9) if math.isfinite(h.beta) else math.inf
                for _, h in sorted(x.hooks.items()))
    return ang + bet


# ---------------------------------------------------------------------------
# clickable Voronoi diagrams

@dataclass
class ScreenDiagram:
    cluster: tuple[int, ...]
    orientation: float
    sites: list[tuple[int, float, float]]
    diagram: LimitDiagram
    owners: dict[int, tuple[int, ...]]       # diagram label -> subcluster labels
    positions: dict[tuple[int, ...], tuple[float, float]]
    paste_rays: list[dict]
    children: "list[ScreenDiagram]"


def clickable_diagram(x: AHPoint) -> ScreenDiagram:
    """Per-screen classical diagrams of the subcluster positions, recursively.

    Uses draw with the tree values of x; positions are rationalized on the
    fixed export grid so all per-screen geometry runs through the exact
    half-plane kernel.
    """
    if x.mode != "fm2":
        raise ValueError("clickable diagrams use directed (fm2) data")
    tree = hooked_tree(x)
    q = tv(x, tree)
    fill = draw(x, q, tree)
    if not is_accepted(fill):
        raise NotAccepted("tree values of x do not separate the screens")
    return _screen_diagram(fill, frozenset(range(1, x.n + 1)))


def _screen_diagram(fill: ScreenFill, cluster: frozenset[int]) -> ScreenDiagram:
    nest = fill.tree.nest
    subs = nest.maximal_subclusters(cluster)
    pts = fill.coords[cluster]

    positions = {}
    for sub in subs:
        rep = pts[min(sub)]
        for lbl in sub:
            a, b = pts[lbl], rep
            if math.hypot(a[0] - b[0], a[1] - b[1]) > TAU_SEP:
                raise NotAccepted("subcluster %s is not collapsed in screen %s"
                                  % (sorted(sub), sorted(cluster)))
        positions[tuple(sorted(sub))] = rep

    ration = [_rationalize(positions[tuple(sorted(sub))]) for sub in subs]
    if len(set(ration)) != len(ration):
        raise NotAccepted("subcluster positions collide on the export grid")
    gamma = gamma_of_points(ration)
    diagram = voronoi_from_gamma(gamma)
    owners = {idx + 1: tuple(sorted(sub)) for idx, sub in enumerate(subs)}

    children = []
    paste = []
    for idx, sub in enumerate(subs):
        if len(sub) < 2:
            continue
        child = _screen_diagram(fill, sub)
        children.append(child)
        dirs = _unbounded_directions(child.diagram)
        paste.append({
            "at": positions[tuple(sorted(sub))],
            "cluster": tuple(sorted(sub)),
            "dirs": dirs,
        })

    return ScreenDiagram(
        cluster=tuple(sorted(cluster)),
        orientation=fill.orientations[cluster],
        sites=[(lbl, pts[lbl][0], pts[lbl][1]) for lbl in sorted(cluster)],
        diagram=diagram,
        owners=owners,
        positions=positions,
        paste_rays=paste,
        children=children,
    )


def _rationalize(p: tuple[float, float]) -> tuple[Fraction, Fraction]:
    d = COORD_DENOMINATOR
    return (Fraction(round(p[0] * d), d), Fraction(round(p[1] * d), d))


def _unbounded_directions(diagram: LimitDiagram) -> list[tuple[float, float]]:
    dirs = []
    seen = set()
    for el in diagram.skeleton:
        cands = []
        if isinstance(el, RayEl):
            cands = [el.d]
        elif isinstance(el, LineEl):
            cands = [el.d, (-el.d[0], -el.d[1])]
        for d in cands:
            norm = math.hypot(d[0], d[1])
            key = (round(d[0] / norm, 12), round(d[1] / norm, 12))
            if key not in seen:
                seen.add(key)
                dirs.append(key)
    return dirs


# ---------------------------------------------------------------------------
# normal-form polynomial sites

def normal_form_sites(x: AHPoint) -> SiteSet:
    """Polynomial sites whose data point reproduces x's nest exactly.

    Each site accumulates, over the screens containing it, the rationalized
    screen position scaled by t to the screen depth:

        p_i(t) = sum over screens S with i in S of t^depth(S) * pos_S(i).

    Two sites then first differ at t^depth of their separating screen, so
    all limit ratios and angles reproduce the screen geometry on the export
    grid.  (On nest chains this telescopes to the site-by-site form
    p_i = p_j + t^depth * coords.)
    """
    if x.mode != "fm2":
        raise ValueError("normal forms use directed (fm2) data")
    tree = hooked_tree(x)
    fill = draw(x, tv(x, tree), tree)
    if not is_accepted(fill):
        raise NotAccepted("tree values of x do not separate the screens")
    nest = tree.nest
    n = nest.n

    polys: dict[int, tuple[Poly, Poly]] = {
        lbl: (Poly.zero(), Poly.zero()) for lbl in range(1, n + 1)}
    for cluster, pts in fill.coords.items():
        depth = tree.screen_depth[cluster]
        grid = {}
        for lbl in cluster:
            grid[lbl] = _rationalize(pts[lbl])
        subs = nest.maximal_subclusters(cluster)
        reps = {tuple(sorted(sub)): grid[min(sub)] for sub in subs}
        if len(set(reps.values())) != len(reps):
            raise NotAccepted("screen positions collide on the export grid")
        for sub in subs:
            pos = reps[tuple(sorted(sub))]
            for lbl in sub:
                px, py = polys[lbl]
                polys[lbl] = (px + Poly.t(depth, pos[0]),
                              py + Poly.t(depth, pos[1]))
    return SiteSet([PolySite(lbl, polys[lbl][0], polys[lbl][1])
                    for lbl in range(1, n + 1)])
