"""Arcs on the sphere with four punctures L, U, D, O.

The sphere is drawn as a disk: L, U, D are interior punctures and O is the
boundary circle.  Untagged arcs are indexed by a slope and a sign (``+`` for
inner arcs between two of L, U, D; ``-`` for outer arcs ending at O); tagged
arcs by a slope and a quaternion unit.

Geometry is exact.  Semicircles are modelled for crossing counts by
three-segment brackets with the same endpoints and the same bulge side, which
is isotopic to the round picture and keeps every intersection rational.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

from .roots import I_U, J_U, K_U, ONE_U, QuatUnit, RootIndex, in_coset, parse_unit
from .slopes import (
    INF,
    MINUS_ONE,
    ZERO,
    Slope,
    arc_type,
    complexity,
    dist,
    half_floor,
    half_outer,
    parse_slope,
)

Point = tuple[Fraction, Fraction]


class ArcError(ValueError):
    pass


class GeometryError(ArcError):
    """Two drawings share a sub-segment, so crossings are ill-defined."""


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value

    def __neg__(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


def _sign(s: Union[Sign, str]) -> Sign:
    return s if isinstance(s, Sign) else Sign(s)


# inner endpoints per arc type; the outer arc leaves the remaining puncture
_INNER_ENDS = {ZERO: ("L", "D"), MINUS_ONE: ("U", "D"), INF: ("L", "U")}


def endpoints(p: Slope, sign: Union[Sign, str]) -> tuple[str, str]:
    t = arc_type(p)
    inner = _INNER_ENDS[t]
    if _sign(sign) is Sign.PLUS:
        return inner
    (rest,) = {"L", "U", "D"} - set(inner)
    return (rest, "O")


@dataclass(frozen=True, order=True)
class UntaggedArc:
    p: Slope
    sign: Sign

    def __post_init__(self) -> None:
        object.__setattr__(self, "sign", _sign(self.sign))

    @property
    def endpoints(self) -> tuple[str, str]:
        return endpoints(self.p, self.sign)

    def __str__(self) -> str:
        return f"{self.p}:{self.sign}"


# (arc type, axis) pairs whose underlying arc is the inner one
_INNER_AXES = {ZERO: {"i", "j"}, MINUS_ONE: {"1", "j"}, INF: {"j", "k"}}


def underlying_sign(p: Slope, x: QuatUnit) -> Sign:
    return Sign.PLUS if x.axis in _INNER_AXES[arc_type(p)] else Sign.MINUS


# Tag convention: for each (arc type, sign) the unit whose tagged arc is
# plain at both ends, and the unit that is notched exactly at the first
# endpoint.  Negating the unit switches both tags.  Fixed by requiring
# that the endpoint rule for tagged compatibility reproduces the
# unit-level tables on the six base slopes, with the plain-tagged arcs at
# (-1, +) and (inf, -) being -j and i.  Exactly two tables pass; this is the
# first in search order.
TAG_CONVENTION: dict[tuple[Slope, Sign], tuple[QuatUnit, QuatUnit]] = {
    (MINUS_ONE, Sign.PLUS): (-J_U, ONE_U),
    (MINUS_ONE, Sign.MINUS): (I_U, K_U),
    (ZERO, Sign.PLUS): (-J_U, -I_U),
    (ZERO, Sign.MINUS): (K_U, ONE_U),
    (INF, Sign.PLUS): (-K_U, -J_U),
    (INF, Sign.MINUS): (I_U, -ONE_U),
}


@dataclass(frozen=True, order=True)
class TaggedArc:
    p: Slope
    x: QuatUnit

    @property
    def sign(self) -> Sign:
        return underlying_sign(self.p, self.x)

    @property
    def underlying(self) -> UntaggedArc:
        return UntaggedArc(self.p, self.sign)

    @property
    def endpoints(self) -> tuple[str, str]:
        return self.underlying.endpoints

    @property
    def tags(self) -> tuple[bool, bool]:
        """``(notched at first endpoint, notched at second endpoint)``."""
        plain, first = TAG_CONVENTION[arc_type(self.p), self.sign]
        if self.x == plain:
            return (False, False)
        if self.x == -plain:
            return (True, True)
        if self.x == first:
            return (True, False)
        return (False, True)

    def __str__(self) -> str:
        return f"{self.p}:{self.x}"


# --------------------------------------------------------------------------
# combinatorics

def intersection_number(p: Slope, eps: Union[Sign, str], q: Slope, phi: Union[Sign, str]) -> int:
    d = dist(p, q)
    return half_outer(d) if _sign(eps) is _sign(phi) else half_floor(d)


def untagged_compatible(a: UntaggedArc, b: UntaggedArc) -> bool:
    d = dist(a.p, b.p)
    return d <= 2 if a.sign is b.sign else d <= 1


# dist-1 rule keyed by the arc types of (p, q): predicate on (x, y)
_DIST1 = {
    (MINUS_ONE, ZERO): lambda x, y: in_coset(x, 1, y),
    (MINUS_ONE, INF): lambda x, y: in_coset(y, 1, x),
    (ZERO, MINUS_ONE): lambda x, y: in_coset(y, 1, x),
    (ZERO, INF): lambda x, y: in_coset(x, -1, y),
    (INF, MINUS_ONE): lambda x, y: in_coset(x, 1, y),
    (INF, ZERO): lambda x, y: in_coset(y, -1, x),
}


def arcs_compatible(a: TaggedArc, b: TaggedArc) -> bool:
    if a.p == b.p:
        return a.x != -b.x
    if not untagged_compatible(a.underlying, b.underlying):
        return False
    d = dist(a.p, b.p)
    if d == 2:
        return a.x == b.x
    if d == 1:
        return _DIST1[arc_type(a.p), arc_type(b.p)](a.x, b.x)
    return False


def endpoint_rule_compatible(a: TaggedArc, b: TaggedArc) -> bool:
    """Tagged compatibility from the endpoint tags and the untagged relation.

    Distinct underlying arcs: compatible iff they are and tags agree on
    shared endpoints.  Equal underlying arcs: iff some endpoint has equal
    tags.  Used to validate :data:`TAG_CONVENTION`.
    """
    ua, ub = a.underlying, b.underlying
    ta = dict(zip(a.endpoints, a.tags))
    tb = dict(zip(b.endpoints, b.tags))
    if ua == ub:
        return any(ta[e] == tb[e] for e in ta)
    if not untagged_compatible(ua, ub):
        return False
    return all(ta[e] == tb[e] for e in set(ta) & set(tb))


def to_root(a: TaggedArc) -> RootIndex:
    return RootIndex(a.p, a.x)


def from_root(r: RootIndex) -> TaggedArc:
    return TaggedArc(r.q, r.x)


def parse_arc(text: str) -> Union[UntaggedArc, TaggedArc]:
    """``"7/4:+"``, ``"0:-"`` (untagged) or ``"7/4:-k"`` (tagged)."""
    head, sep, tail = text.strip().rpartition(":")
    if not sep:
        raise ArcError(f"expected 'p:+', 'p:-' or 'p:x', got {text!r}")
    p = parse_slope(head)
    if tail in ("+", "-"):
        return UntaggedArc(p, Sign(tail))
    try:
        return TaggedArc(p, parse_unit(tail))
    except ValueError as exc:
        raise ArcError(f"bad arc label {tail!r}") from exc


# --------------------------------------------------------------------------
# geometry

PUNCTURES: dict[str, Point] = {
    "L": (Fraction(0), Fraction(0)),
    "U": (Fraction(1), Fraction(1)),
    "D": (Fraction(1), Fraction(-1)),
}
O_CENTER: Point = (Fraction(1, 2), Fraction(0))
O_RADIUS = 4


def _add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _mul(t: Fraction, v: Point) -> Point:
    return (t * v[0], t * v[1])


def _cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def points(self) -> list[Point]:
        return [self.start, self.end]

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


@dataclass(frozen=True)
class HalfCircle:
    """Semicircle from ``center + r*axis`` to ``center - r*axis`` bulging along ``bulge``.

    ``axis`` and ``bulge`` are perpendicular of equal length; the true radius
    is ``r * |axis|``.
    """

    center: Point
    r: Fraction
    axis: Point
    bulge: Point
    forward: bool = True

    @property
    def start(self) -> Point:
        return _add(self.center, _mul(self.r if self.forward else -self.r, self.axis))

    @property
    def end(self) -> Point:
        return _add(self.center, _mul(-self.r if self.forward else self.r, self.axis))

    def points(self) -> list[Point]:
        """The bracket polyline used for exact intersection tests."""
        h = _mul(self.r, self.bulge)
        return [self.start, _add(self.start, h), _add(self.end, h), self.end]

    def reversed(self) -> "HalfCircle":
        return HalfCircle(self.center, self.r, self.axis, self.bulge, not self.forward)


Primitive = Union[Segment, HalfCircle]


@dataclass(frozen=True)
class ArcDrawing:
    arc: UntaggedArc
    primitives: tuple[Primitive, ...]  # in order along the curve
    ends: tuple[str, str]
    tags: tuple[bool, bool] = (False, False)

    def polyline(self) -> list[Point]:
        pts: list[Point] = []
        for prim in self.primitives:
            ps = prim.points()
            if pts:
                if pts[-1] != ps[0]:
                    raise ArcError("primitives do not concatenate")
                ps = ps[1:]
            pts.extend(ps)
        return pts

    def count(self, kind: type, center: str | None = None) -> int:
        prims = [q for q in self.primitives if isinstance(q, kind)]
        if center is not None:
            prims = [q for q in prims if q.center == PUNCTURES[center]]
        return len(prims)


def _far(p: Point, direction: Point) -> Point:
    # any point clearly outside the boundary circle
    n = abs(direction[0]) + abs(direction[1])
    return _add(p, _mul(Fraction(4 * O_RADIUS) / n, direction))


_BASE_DRAWINGS = {
    (ZERO, Sign.PLUS): ("L", "D", None),
    (MINUS_ONE, Sign.PLUS): ("U", "D", None),
    (INF, Sign.PLUS): ("L", "U", None),
    (ZERO, Sign.MINUS): ("U", "O", (1, 0)),
    (INF, Sign.MINUS): ("D", "O", (1, 0)),
    (MINUS_ONE, Sign.MINUS): ("L", "O", (-1, 0)),
}


def _offsets(m: int, outer: bool) -> list[Fraction]:
    # inner and outer radii come from disjoint families so that the two arcs
    # of one slope never share a semicircle
    den = 2 * m + 3 if outer else 2 * (m + 1)
    return [Fraction(j, den) for j in range(1, m + 1)]


def render(p: Slope, sign: Union[Sign, str]) -> ArcDrawing:
    """Semicircle construction of the untagged arc ``(p, sign)``."""
    sign = _sign(sign)
    arc = UntaggedArc(p, sign)
    ends = arc.endpoints
    if complexity(p) == 2:
        a, b, direction = _BASE_DRAWINGS[p, sign]
        start = PUNCTURES[a]
        stop = PUNCTURES[b] if direction is None else _far(start, tuple(map(Fraction, direction)))
        return ArcDrawing(arc, (Segment(start, stop),), ends)

    outer = sign is Sign.MINUS
    counts = {"U": abs(p.a), "D": p.b, "L": abs(p.a + p.b)}
    big = max(counts, key=counts.get)
    small = [k for k in ("L", "U", "D") if k != big]
    A, B, C = PUNCTURES[small[0]], PUNCTURES[small[1]], PUNCTURES[big]
    u = _mul(Fraction(1, 2), _sub(B, A))
    mid = _add(A, u)
    w = (-u[1], u[0])
    if _dot(w, _sub(mid, C)) < 0:
        w = (-w[0], -w[1])

    # points on each line, keyed by coordinate along u; brackets as edges
    edges: list[Primitive] = []
    small_pts: list[tuple[Fraction, Point]] = []
    big_pts: list[tuple[Fraction, Point]] = []

    def place(name: str, side: list, bulge: Point) -> None:
        X = PUNCTURES[name]
        n = counts[name] - (1 if outer else 0)
        base = _dot(_sub(X, A), u) / _dot(u, u)
        if n % 2:
            side.append((base, X))
        for t in _offsets(n // 2, outer):
            edges.append(HalfCircle(X, t, u, bulge))
            side.append((base + t, _add(X, _mul(t, u))))
            side.append((base - t, _sub(X, _mul(t, u))))

    for name in small:
        place(name, small_pts, w)
    place(big, big_pts, (-w[0], -w[1]))
    if outer:
        small_pts.append((Fraction(1), mid))
        edges.append(Segment(mid, _far(mid, w)))
    small_pts.sort()
    big_pts.sort()
    if len(small_pts) != len(big_pts):
        raise ArcError(f"unbalanced construction for {arc}")
    edges += [Segment(s, b) for (_, s), (_, b) in zip(small_pts, big_pts)]
    return ArcDrawing(arc, _chain(edges, ends), ends)


def _chain(edges: list[Primitive], ends: tuple[str, str]) -> tuple[Primitive, ...]:
    """Order the edges into one path starting at the first endpoint."""
    adj: dict[Point, list[int]] = {}
    for i, e in enumerate(edges):
        adj.setdefault(e.start, []).append(i)
        adj.setdefault(e.end, []).append(i)
    cur = PUNCTURES[ends[0]]
    if len(adj.get(cur, [])) != 1:
        raise ArcError("construction does not start at its endpoint")
    used = [False] * len(edges)
    out: list[Primitive] = []
    while True:
        nxt = [i for i in adj[cur] if not used[i]]
        if not nxt:
            break
        if len(nxt) > 1:
            raise ArcError("construction branches")
        i = nxt[0]
        used[i] = True
        e = edges[i] if edges[i].start == cur else edges[i].reversed()
        out.append(e)
        cur = e.end
    if not all(used):
        raise ArcError("construction is not connected")
    return tuple(out)


def render_tagged(a: TaggedArc) -> ArcDrawing:
    d = render(a.p, a.sign)
    return ArcDrawing(d.arc, d.primitives, d.ends, a.tags)


def is_simple(d: ArcDrawing) -> bool:
    """No two non-adjacent pieces of the polyline meet."""
    pts = d.polyline()
    segs = list(zip(pts, pts[1:]))
    if len(set(pts)) != len(pts):
        return False
    for i in range(len(segs)):
        for j in range(i + 2, len(segs)):
            if _segment_contact(*segs[i], *segs[j]) is not None:
                return False
    return True


def _on_segment(x: Point, a: Point, b: Point) -> bool:
    return (_cross(_sub(b, a), _sub(x, a)) == 0
            and min(a[0], b[0]) <= x[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= x[1] <= max(a[1], b[1]))


def _segment_contact(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """The single common point of two segments; ``None`` if disjoint."""
    r, s = _sub(b, a), _sub(d, c)
    den = _cross(r, s)
    if den == 0:
        if _cross(r, _sub(c, a)) != 0:
            return None
        shared = {x for x in (a, b) if _on_segment(x, c, d)} | {x for x in (c, d) if _on_segment(x, a, b)}
        if len(shared) > 1:
            raise GeometryError(f"segments overlap along {sorted(shared)}")
        return next(iter(shared), None)
    t = _cross(_sub(c, a), s) / den
    v = _cross(_sub(c, a), r) / den
    if 0 <= t <= 1 and 0 <= v <= 1:
        return _add(a, _mul(t, r))
    return None


def _germs(pts: list[Point], x: Point) -> list[Point]:
    """Directions in which the polyline leaves ``x``."""
    for k, p in enumerate(pts):
        if p == x:
            return [_sub(q, x) for q in (pts[k - 1] if k else None, pts[k + 1] if k + 1 < len(pts) else None)
                    if q is not None]
    for a, b in zip(pts, pts[1:]):
        if _on_segment(x, a, b):
            return [_sub(a, x), _sub(b, x)]
    raise ArcError("point is not on the curve")


def _angle_key(v: Point) -> tuple[int, Fraction]:
    # exact monotone surrogate for atan2 on [0, 2pi)
    x, y = v
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    n = abs(x) + abs(y)
    return (half, (-x if half == 0 else x) / n)


def _transversal(g1: list[Point], g2: list[Point]) -> bool:
    labelled = sorted([(_angle_key(v), 1) for v in g1] + [(_angle_key(v), 2) for v in g2])
    keys = [k for k, _ in labelled]
    if len(set(keys)) < len(keys):
        raise GeometryError("curves are tangent along a common direction")
    tags = [t for _, t in labelled]
    return len(tags) == 4 and tags[0] != tags[1] and tags[1] != tags[2] and tags[2] != tags[3]


def _inside(x: Point) -> bool:
    d = _sub(x, O_CENTER)
    return _dot(d, d) < O_RADIUS ** 2


def crossings(d1: ArcDrawing, d2: ArcDrawing) -> int:
    """Transversal interior crossings of two drawings inside the disk.

    Contact points are found exactly; a point counts when the two curves'
    local germs alternate around it.  Curve endpoints are never counted.
    """
    p1, p2 = d1.polyline(), d2.polyline()
    if p1 == p2 or p1 == p2[::-1]:
        return 0
    contacts: set[Point] = set()
    for a, b in zip(p1, p1[1:]):
        for c, d in zip(p2, p2[1:]):
            x = _segment_contact(a, b, c, d)
            if x is not None:
                contacts.add(x)
    ends = {p1[0], p1[-1], p2[0], p2[-1]}
    count = 0
    for x in contacts:
        if x in ends or not _inside(x):
            continue
        if _transversal(_germs(p1, x), _germs(p2, x)):
            count += 1
    return count


# --------------------------------------------------------------------------
# SVG

_SCALE = 60
_MARGIN = 20


def _svg_xy(p: Point) -> tuple[float, float]:
    cx = _MARGIN + _SCALE * (O_RADIUS - float(O_CENTER[0]))
    cy = _MARGIN + _SCALE * O_RADIUS
    return (round(cx + _SCALE * float(p[0]), 3), round(cy - _SCALE * float(p[1]), 3))


def _svg_path(d: ArcDrawing) -> str:
    cmds = []
    for k, prim in enumerate(d.primitives):
        if k == 0:
            cmds.append("M %s %s" % _svg_xy(prim.start))
        x, y = _svg_xy(prim.end)
        if isinstance(prim, Segment):
            cmds.append(f"L {x} {y}")
        else:
            radius = round(_SCALE * float(prim.r) * math.hypot(*map(float, prim.axis)), 3)
            # counter-clockwise in model coordinates is sweep 1 once y is flipped
            u = _sub(prim.start, prim.center)
            ccw = _cross(u, prim.bulge) > 0
            cmds.append(f"A {radius} {radius} 0 0 {1 if ccw else 0} {x} {y}")
    return " ".join(cmds)


def _notch(d: ArcDrawing, which: int) -> str:
    pts = d.polyline()
    a, b = (pts[0], pts[1]) if which == 0 else (pts[-1], pts[-2])
    if d.ends[which] == "O":
        # mark where the curve meets the boundary circle
        dx, dy = (float(b[0] - a[0]), float(b[1] - a[1]))
        fx, fy = float(a[0]), float(a[1])
        ox, oy = float(O_CENTER[0]), float(O_CENTER[1])
        # solve |a + s (b - a) - centre| = radius on the far segment
        qa = dx * dx + dy * dy
        qb = 2 * ((fx - ox) * dx + (fy - oy) * dy)
        qc = (fx - ox) ** 2 + (fy - oy) ** 2 - O_RADIUS ** 2
        s = (-qb - math.sqrt(max(qb * qb - 4 * qa * qc, 0.0))) / (2 * qa)
        base = (fx + s * dx, fy + s * dy)
        direction = (-dx, -dy)
    else:
        base = (float(a[0]), float(a[1]))
        direction = (float(b[0] - a[0]), float(b[1] - a[1]))
    n = math.hypot(*direction) or 1.0
    ux, uy = direction[0] / n, direction[1] / n
    tip = (base[0] + 0.15 * ux, base[1] + 0.15 * uy)
    wing = 0.07
    left = (tip[0] - wing * uy + 0.05 * ux, tip[1] + wing * ux + 0.05 * uy)
    right = (tip[0] + wing * uy + 0.05 * ux, tip[1] - wing * ux + 0.05 * uy)
    pts_svg = [_svg_xy((Fraction(x).limit_denominator(10**6), Fraction(y).limit_denominator(10**6)))
               for x, y in (left, tip, right)]
    return '<polyline class="notch" points="%s" fill="none" stroke="black"/>' % " ".join(
        f"{x},{y}" for x, y in pts_svg)


def svg_document(drawings: Sequence[ArcDrawing], labels: bool = True) -> str:
    size = 2 * (_MARGIN + _SCALE * O_RADIUS)
    cx, cy = _svg_xy(O_CENTER)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle cx="{cx}" cy="{cy}" r="{_SCALE * O_RADIUS}" fill="none" stroke="gray" stroke-dasharray="4 3"/>',
    ]
    palette = ("black", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
    for k, d in enumerate(drawings):
        color = palette[k % len(palette)]
        out.append(f'<path d="{_svg_path(d)}" fill="none" stroke="{color}" stroke-width="1.5">'
                   f"<title>{d.arc}</title></path>")
        for which, notched in enumerate(d.tags):
            if notched:
                out.append(_notch(d, which))
    for name, p in PUNCTURES.items():
        x, y = _svg_xy(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        if labels:
            out.append(f'<text x="{x - 14}" y="{y - 6}" font-size="12">{name}</text>')
    if labels:
        out.append(f'<text x="{cx + _SCALE * O_RADIUS * 0.72}" y="{cy - _SCALE * O_RADIUS * 0.72}" '
                   'font-size="12">O</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_export(drawings: Iterable[ArcDrawing], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(svg_document(list(drawings)))
    return path
