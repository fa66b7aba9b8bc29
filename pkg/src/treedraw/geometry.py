"""Exact integer/rational plane geometry.

Everything here is exact: integer cross products for predicates, Fractions
where division is unavoidable.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

Vec = tuple  # (x, y) of int or Fraction


def cross(u: Vec, v: Vec):
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Vec, v: Vec):
    return u[0] * v[0] + u[1] * v[1]


def sub(p: Vec, q: Vec) -> Vec:
    return (p[0] - q[0], p[1] - q[1])


def orientation(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the signed area of (a, b, c): +1 ccw, 0 collinear, -1 cw."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def on_segment(p: Vec, a: Vec, b: Vec) -> bool:
    """True if p lies on the closed segment ab (exact)."""
    if orientation(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


DISJOINT = "disjoint"
SHARED_ENDPOINT = "shared-endpoint-only"
PROPER_CROSSING = "proper-crossing"
IMPROPER = "improper"


def segments_cross(s1, s2) -> str:
    """Classify how two segments intersect, with exact arithmetic.

    Categories: disjoint; shared-endpoint-only (they meet exactly at a common
    endpoint); proper-crossing (interiors cross transversally); improper
    (an endpoint inside the other segment's interior, or collinear overlap).
    """
    (p1, p2), (q1, q2) = s1, s2
    if p1 == p2 or q1 == q2:
        raise ValueError("degenerate zero-length segment")
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if d1 == d2 == d3 == d4 == 0:
        # collinear: compare 1-D intervals along the dominant axis
        axis = 0 if p1[0] != p2[0] else 1
        a_lo, a_hi = sorted((p1[axis], p2[axis]))
        b_lo, b_hi = sorted((q1[axis], q2[axis]))
        lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
        if lo > hi:
            return DISJOINT
        if lo < hi:
            return IMPROPER  # overlap of positive length
        # touch at a single point: must be an endpoint of both
        return SHARED_ENDPOINT
    shared = (p1 in (q1, q2)) or (p2 in (q1, q2))
    if shared:
        # non-collinear segments sharing an endpoint can only meet there,
        # unless the other endpoint of one lies inside the other segment.
        for p in (p1, p2):
            if p not in (q1, q2) and on_segment(p, q1, q2):
                return IMPROPER
        for q in (q1, q2):
            if q not in (p1, p2) and on_segment(q, p1, p2):
                return IMPROPER
        return SHARED_ENDPOINT
    if d1 != d2 and d3 != d4 and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return PROPER_CROSSING
    # an endpoint exactly on the other segment (touching)?
    if (
        (d1 == 0 and on_segment(p1, q1, q2))
        or (d2 == 0 and on_segment(p2, q1, q2))
        or (d3 == 0 and on_segment(q1, p1, p2))
        or (d4 == 0 and on_segment(q2, p1, p2))
    ):
        return IMPROPER
    return DISJOINT


# -- cyclic order of direction vectors ---------------------------------------


def _half(a: Vec, d: Vec) -> int:
    """Rank of direction d around a: 0 = strictly ccw side (0,pi),
    1 = exactly opposite, 2 = strictly cw side."""
    c = cross(a, d)
    if c > 0:
        return 0
    if c == 0:
        if dot(a, d) < 0:
            return 1
        raise ValueError("coincident directions have no cyclic order")
    return 2


def ccw_cyclic(a: Vec, b: Vec, c: Vec) -> bool:
    """True if, sweeping counterclockwise from direction a, we meet b before c.

    All three directions must be pairwise non-coincident (opposite is fine).
    """
    ra, rb = _half(a, b), _half(a, c)
    if ra != rb:
        return ra < rb
    return cross(b, c) > 0


# -- coprime point sets (dense half-band) -------------------------------------


def coprime_point_set(A: int, B: int, half_band: bool = True) -> set:
    """All (x, y) with 1 <= x <= A, y in the (half-)band up to B, gcd(x,y)=1.

    With half_band the y range is {floor(B/2)+1 .. B}; no two returned points
    are collinear with the origin (coprimality makes every point primitive).
    """
    if A < 1 or B < 1:
        raise ValueError("A and B must be positive")
    y_lo = B // 2 + 1 if half_band else 1
    g = math.gcd
    return {
        (x, y) for x in range(1, A + 1) for y in range(y_lo, B + 1) if g(x, y) == 1
    }


# -- lattice bases and Gauss (Lagrange) reduction ------------------------------


@dataclass(frozen=True)
class LatticeBasis:
    u: Vec
    v: Vec

    def __post_init__(self):
        if cross(self.u, self.v) == 0:
            raise ValueError("basis vectors must be linearly independent")

    def det(self):
        return cross(self.u, self.v)

    def to_plane(self, coeff: Vec) -> Vec:
        a, b = coeff
        return (a * self.u[0] + b * self.v[0], a * self.u[1] + b * self.v[1])

    def to_coeff(self, p: Vec) -> Vec:
        """Exact coordinates of p in this basis (Fractions unless integral)."""
        d = self.det()
        a = Fraction(p[0] * self.v[1] - p[1] * self.v[0], d)
        b = Fraction(self.u[0] * p[1] - self.u[1] * p[0], d)
        return (a, b)


def _nearest_int(q: Fraction) -> int:
    """Nearest integer, ties toward +infinity (deterministic)."""
    return math.floor(q + Fraction(1, 2))


def gauss_reduce(basis: LatticeBasis) -> LatticeBasis:
    """Lagrange-Gauss reduction: returns a basis of the same lattice with
    |u| <= |v| and 2|u.v| <= |u|^2 (angle between 60 and 120 degrees)."""
    (u, v), _ = _lagrange(basis.u, basis.v, None)
    return LatticeBasis(u, v)


def _form_q(form, z: Vec):
    """Quadratic form value; form = (g11, g12, g22) or None for euclidean."""
    if form is None:
        return z[0] * z[0] + z[1] * z[1]
    g11, g12, g22 = form
    return g11 * z[0] * z[0] + 2 * g12 * z[0] * z[1] + g22 * z[1] * z[1]


def _form_b(form, z: Vec, w: Vec):
    if form is None:
        return z[0] * w[0] + z[1] * w[1]
    g11, g12, g22 = form
    return g11 * z[0] * w[0] + g12 * (z[0] * w[1] + z[1] * w[0]) + g22 * z[1] * w[1]


def _lagrange(u: Vec, v: Vec, form):
    """Reduce (u, v) under the given metric; also return the unimodular
    coefficient vectors expressing the result in the input basis."""
    cu, cv = (1, 0), (0, 1)
    if _form_q(form, u) > _form_q(form, v):
        u, v = v, u
        cu, cv = cv, cu
    while True:
        qu = _form_q(form, u)
        if qu == 0:
            raise ValueError("degenerate metric or zero vector")
        mu = _nearest_int(Fraction(_form_b(form, u, v), qu))
        if mu:
            v = (v[0] - mu * u[0], v[1] - mu * u[1])
            cv = (cv[0] - mu * cu[0], cv[1] - mu * cu[1])
        if _form_q(form, v) < qu:
            u, v = v, u
            cu, cv = cv, cu
        else:
            return (u, v), (cu, cv)


# -- affine grids -------------------------------------------------------------


@dataclass(frozen=True)
class AffineGrid:
    origin: Vec
    u: Vec
    v: Vec
    a: int
    b: int

    def points(self) -> Iterator[Vec]:
        ox, oy = self.origin
        for j in range(1, self.b + 1):
            px, py = ox + j * self.v[0], oy + j * self.v[1]
            for i in range(1, self.a + 1):
                yield (px + i * self.u[0], py + i * self.u[1])

    @property
    def size(self) -> int:
        return self.a * self.b


class ConvexRegion:
    """Convex polygon with exact rational vertices, counterclockwise.

    Degenerate regions (segments, points) are allowed; redundant collinear
    vertices are dropped.
    """

    def __init__(self, vertices: Sequence[Vec]):
        vs = [(Fraction(x), Fraction(y)) for x, y in vertices]
        if not vs:
            raise ValueError("empty region")
        vs = _convex_normalize(vs)
        self.vertices = tuple(vs)

    def edges(self) -> Iterator[tuple[Vec, Vec]]:
        vs = self.vertices
        m = len(vs)
        if m == 1:
            return
        for i in range(m):
            yield vs[i], vs[(i + 1) % m]

    def y_range(self) -> tuple[Fraction, Fraction]:
        ys = [v[1] for v in self.vertices]
        return min(ys), max(ys)

    def row_interval(self, y) -> Optional[tuple[Fraction, Fraction]]:
        """x-interval of the region on the horizontal line at height y."""
        y = Fraction(y)
        lo = hi = None
        for p in self.vertices:
            if p[1] == y:
                lo = p[0] if lo is None else min(lo, p[0])
                hi = p[0] if hi is None else max(hi, p[0])
        for a, b in self.edges():
            if (a[1] < y < b[1]) or (b[1] < y < a[1]):
                t = (y - a[1]) / (b[1] - a[1])
                x = a[0] + t * (b[0] - a[0])
                lo = x if lo is None else min(lo, x)
                hi = x if hi is None else max(hi, x)
        if lo is None:
            y0, y1 = self.y_range()
            if len(self.vertices) == 1 and y0 == y:
                lo = hi = self.vertices[0][0]
            else:
                return None
        return lo, hi


def _convex_normalize(vs):
    if len(vs) <= 2:
        return list(dict.fromkeys(vs))
    # drop consecutive duplicates and collinear middle vertices
    out = list(dict.fromkeys(vs))
    if len(out) <= 2:
        return out
    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if orientation(a, b, c) == 0:
                out.pop(i)
                changed = True
                break
    area2 = sum(cross(out[i], out[(i + 1) % len(out)]) for i in range(len(out)))
    if area2 < 0:
        out.reverse()
    elif area2 == 0:
        # degenerate: keep the two extreme points
        out = [min(out), max(out)]
    for i in range(len(out)):
        a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
        if len(out) > 2 and orientation(a, b, c) < 0:
            raise ValueError("vertices are not in convex position")
    return out


def lattice_points_in_region(region: ConvexRegion, basis: LatticeBasis) -> list:
    """All lattice points of the given basis inside the region, as integer
    coefficient pairs (i, j) with i*u + j*v in the region."""
    verts = [basis.to_coeff(p) for p in region.vertices]
    poly = ConvexRegion(verts)
    y0, y1 = poly.y_range()
    out = []
    j = math.ceil(y0)
    top = math.floor(y1)
    while j <= top:
        iv = poly.row_interval(j)
        if iv is not None:
            lo, hi = math.ceil(iv[0]), math.floor(iv[1])
            out.extend((i, j) for i in range(lo, hi + 1))
        j += 1
    return out


# -- the lattice observation: large affine grid inside a convex point set -----

GRID_CONSTANT = 64  # ab is certified to be at least |S ∩ lattice| / GRID_CONSTANT


@dataclass(frozen=True)
class Occupancy:
    """Integer point set in reduced lattice coordinates, one interval per row.

    rows: list of (j, lo, hi) sorted by j; every (i, j) with lo <= i <= hi is
    present.  cu/cv express the reduced axes in the caller's coordinates.
    """

    rows: tuple
    cu: Vec
    cv: Vec

    def count(self) -> int:
        return sum(hi - lo + 1 for _, lo, hi in self.rows)


def _hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    def half(ps):
        out = []
        for p in ps:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = half(pts)
    upper = half(pts[::-1])
    return lower[:-1] + upper[:-1]


def _fatten_form(points):
    """Quadratic form of the fattening map: diameter direction stretched to
    unit length, perpendicular extent normalized to comparable size."""
    hull = _hull(points)
    if len(hull) < 2:
        return None
    best = None
    for i in range(len(hull)):
        for j in range(i + 1, len(hull)):
            w = sub(hull[j], hull[i])
            d2 = dot(w, w)
            if best is None or d2 > best[0]:
                best = (d2, hull[i], hull[j])
    d2, p, q = best
    w = sub(q, p)
    # perpendicular extent (twice the area over the diameter length, exactly:
    # we track the extent of the cross product, avoiding square roots)
    cmin = cmax = 0
    for r in points:
        c = cross(w, sub(r, p))
        cmin, cmax = min(cmin, c), max(cmax, c)
    h = cmax - cmin  # = perp extent * |w|
    if h == 0:
        return None  # collinear; caller handles
    # map z -> ( (w.z)/d2 , (cross(w,z))/h ): both coordinates have extent ~1
    # over the point set.  Metric G = M^T M with rows w/d2 and rot(w)/h.
    f1 = Fraction(1, d2 * d2)
    f2 = Fraction(1, h * h)
    g11 = f1 * w[0] * w[0] + f2 * w[1] * w[1]
    g12 = f1 * w[0] * w[1] - f2 * w[0] * w[1]
    g22 = f1 * w[1] * w[1] + f2 * w[0] * w[0]
    return (g11, g12, g22)


def occupancy_from_points(points) -> Occupancy:
    """Fatten + Gauss-reduce, then express the integer point set as full row
    intervals in the reduced coordinates.

    `points` must be the complete set of lattice points of Z^2 inside some
    convex region (rows in any unimodular image are then full intervals).
    """
    pts = list(set(points))
    if not pts:
        raise ValueError("no lattice points")
    form = _fatten_form(pts)
    if form is None:
        # collinear (or single) point set: one row along the step direction
        if len(pts) == 1:
            p = pts[0]
            cv = p if p != (0, 0) else (0, 1)
            j0 = 1 if p != (0, 0) else 0
            return Occupancy(((j0, 0, 0),), (1, 0), cv)
        pts.sort()
        p0 = pts[0]
        w = sub(pts[-1], p0)
        g = math.gcd(abs(w[0]), abs(w[1]))
        u = (w[0] // g, w[1] // g)
        uu = dot(u, u)
        ms = sorted(dot(sub(p, p0), u) // uu for p in pts)
        if any(b - a != 1 for a, b in zip(ms, ms[1:])):
            raise AssertionError("collinear lattice points are not evenly spaced")
        cv = p0 if p0 != (0, 0) else ((0, 1) if cross(u, (0, 1)) != 0 else (1, 0))
        j0 = 1 if p0 != (0, 0) else 0
        return Occupancy(((j0, ms[0], ms[-1]),), u, cv)
    (_, _), (cu, cv) = _lagrange((1, 0), (0, 1), form)
    det = cross(cu, cv)  # +-1
    by_row: dict[int, list[int]] = {}
    for p in pts:
        # coefficients of p in basis (cu, cv); unimodular, stays integral
        a = (p[0] * cv[1] - p[1] * cv[0]) * det
        b = (cu[0] * p[1] - cu[1] * p[0]) * det
        by_row.setdefault(b, []).append(a)
    rows = []
    for j in sorted(by_row):
        cols = by_row[j]
        lo, hi = min(cols), max(cols)
        if hi - lo + 1 != len(set(cols)):
            raise AssertionError("convex slice is not contiguous")
        rows.append((j, lo, hi))
    return Occupancy(tuple(rows), cu, cv)


def best_rectangle(occ: Occupancy):
    """Largest-area full rectangle inside the occupancy.

    Returns (area, a, b, i0, j0): the a-by-b block {i0..i0+a-1} x {j0..j0+b-1}.
    """
    rows = occ.rows
    best = (0, 0, 0, 0, 0)
    m = len(rows)
    for s in range(m):
        lo, hi = rows[s][1], rows[s][2]
        prev_j = rows[s][0]
        for t in range(s, m):
            j, rlo, rhi = rows[t]
            if t > s:
                if j != prev_j + 1:
                    break
                prev_j = j
                lo, hi = max(lo, rlo), min(hi, rhi)
                if lo > hi:
                    break
            a = hi - lo + 1
            b = t - s + 1
            if a * b > best[0]:
                best = (a * b, a, b, lo, rows[s][0])
    return best


def extract_affine_grid(region: ConvexRegion, basis: LatticeBasis) -> AffineGrid:
    """An a x b affine grid inside region ∩ lattice with a*b at least
    |region ∩ lattice| / GRID_CONSTANT.

    Pipeline: enumerate the lattice points, apply the fattening map implicitly
    as a metric, Gauss-reduce the lattice under it, and take the largest full
    coordinate rectangle (which subsumes the inscribed-rhombus grid, and
    degenerates to a single row for near-collinear sets).
    """
    coeff_pts = lattice_points_in_region(region, basis)
    if not coeff_pts:
        raise ValueError("region contains no lattice point")
    occ = occupancy_from_points(coeff_pts)
    area, a, b, i0, j0 = best_rectangle(occ)
    if area * GRID_CONSTANT < len(coeff_pts):
        raise AssertionError("grid extraction fell below the certified constant")
    # grid axes in original-basis coefficients, then in the plane
    u_c, v_c = occ.cu, occ.cv
    u = basis.to_plane(u_c)
    v = basis.to_plane(v_c)
    oc = (i0 - 1) * u_c[0] + (j0 - 1) * v_c[0], (i0 - 1) * u_c[1] + (j0 - 1) * v_c[1]
    origin = basis.to_plane(oc)
    return AffineGrid(origin, u, v, a, b)
