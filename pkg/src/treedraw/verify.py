"""Exact certification of drawing properties.

The planarity check classifies candidate edge pairs with exact integer
orientation tests; candidates come from a conservative grid-bucket prefilter
(a superset of every pair that could touch, so no intersection can be missed).
A fully independent all-pairs oracle based on rational parametric intersection
lives at the bottom for cross-checking; it shares no predicate code with the
main path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .drawing import GridDrawing
from .geometry import (
    DISJOINT,
    IMPROPER,
    PROPER_CROSSING,
    SHARED_ENDPOINT,
    ccw_cyclic,
    on_segment,
    segments_cross,
    sub,
)

ALL_CRITERIA = ("planar", "upward", "strictly-upward", "orthogonal", "order")


@dataclass
class VerifyReport:
    width: int
    height: int
    planar: Optional[bool] = None
    upward: Optional[bool] = None
    strictly_upward: Optional[bool] = None
    orthogonal: Optional[bool] = None
    order_preserving: Optional[bool] = None
    first_violation: Optional[tuple] = None

    @property
    def area(self) -> int:
        return self.width * self.height

    def ok(self) -> bool:
        return self.first_violation is None

    def to_text(self) -> str:
        def fmt(v):
            return "-" if v is None else ("true" if v else "false")

        lines = [
            f"width={self.width}",
            f"height={self.height}",
            f"area={self.area}",
            f"planar={fmt(self.planar)}",
            f"upward={fmt(self.upward)}",
            f"strictly_upward={fmt(self.strictly_upward)}",
            f"orthogonal={fmt(self.orthogonal)}",
            f"order_preserving={fmt(self.order_preserving)}",
        ]
        if self.first_violation is not None:
            kind, detail = self.first_violation
            lines.append(f"violation={kind}:{detail}")
        return "\n".join(lines) + "\n"


def verify_drawing(drawing: GridDrawing, criteria=("planar",)) -> VerifyReport:
    """Check the requested criteria; flags are computed independently and the
    first violation (in criteria order) is reported."""
    unknown = set(criteria) - set(ALL_CRITERIA)
    if unknown:
        raise ValueError(f"unknown criteria {sorted(unknown)}")
    pos = drawing.pos
    n = drawing.tree.n
    if len(set(pos)) != n:
        raise ValueError("duplicate node placements")
    report = VerifyReport(width=drawing.width, height=drawing.height)
    violation = None

    def check(kind: str):
        if kind == "planar":
            return _planarity_violation(drawing)
        if kind == "order":
            return _order_violation(drawing)
        for p, c in drawing.edges():
            dx = pos[p][0] - pos[c][0]
            dy = pos[p][1] - pos[c][1]
            if kind == "upward" and dy < 0:
                return ("not-upward", (p, c))
            if kind == "strictly-upward" and dy <= 0:
                return ("not-strictly-upward", (p, c))
            if kind == "orthogonal" and (dx == 0) == (dy == 0):
                return ("not-orthogonal", (p, c))
        return None

    attr = {
        "planar": "planar",
        "upward": "upward",
        "strictly-upward": "strictly_upward",
        "orthogonal": "orthogonal",
        "order": "order_preserving",
    }
    for crit in criteria:
        v = check(crit)
        setattr(report, attr[crit], v is None)
        if v is not None and violation is None:
            violation = v
    report.first_violation = violation
    return report


# -- planarity ----------------------------------------------------------------


def _cell_cover(p, q, cell):
    """Cells touched by segment pq, conservatively (superset of the truth)."""
    (x1, y1), (x2, y2) = p, q
    cx1, cx2 = sorted((x1 // cell, x2 // cell))
    cy1, cy2 = sorted((y1 // cell, y2 // cell))
    if (cx2 - cx1 + 1) * (cy2 - cy1 + 1) <= 16:
        return [(cx, cy) for cx in range(cx1, cx2 + 1) for cy in range(cy1, cy2 + 1)]
    # long segment: walk y-bands, conservative x range per band
    if y1 > y2:
        x1, y1, x2, y2 = x2, y2, x1, y1
    out = []
    dy = y2 - y1
    dx = x2 - x1
    for cy in range(y1 // cell, y2 // cell + 1):
        ya = max(y1, cy * cell)
        yb = min(y2, (cy + 1) * cell - 1)
        if dy == 0:
            xa, xb = x1, x2
        else:
            xa = x1 + dx * (ya - y1) // dy
            xb = x1 + dx * (yb - y1) // dy
        lo, hi = sorted((xa, xb))
        for cx in range((lo - 1) // cell, (hi + 1) // cell + 1):
            out.append((cx, cy))
    return out


def _planarity_violation(drawing: GridDrawing):
    pos = drawing.pos
    edges = [(p, c) for p, c in drawing.edges()]
    segs = [(pos[p], pos[c]) for p, c in edges]
    if not edges:
        return None
    span = max(drawing.width, drawing.height)
    cell = max(4, span // max(1, int(len(edges) ** 0.5)))
    buckets: dict = {}
    for i, (a, b) in enumerate(segs):
        for c in _cell_cover(a, b, cell):
            buckets.setdefault(c, []).append(i)
    vcells: dict = {}
    for v in range(drawing.tree.n):
        vcells.setdefault((pos[v][0] // cell, pos[v][1] // cell), []).append(v)
    seen_pairs = set()
    for c, lst in sorted(buckets.items()):
        for ai in range(len(lst)):
            i = lst[ai]
            ei = edges[i]
            # vertices sitting inside this edge
            for v in vcells.get(c, ()):
                if v in ei:
                    continue
                if on_segment(pos[v], *segs[i]):
                    return ("vertex-on-edge", (v, ei))
            for bi in range(ai + 1, len(lst)):
                j = lst[bi]
                key = (i, j) if i < j else (j, i)
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                ej = edges[j]
                adjacent = bool(set(ei) & set(ej))
                kind = segments_cross(segs[i], segs[j])
                if adjacent:
                    if kind != SHARED_ENDPOINT:
                        return ("crossing", (ei, ej, kind))
                elif kind != DISJOINT:
                    return ("crossing", (ei, ej, kind))
    return None


# -- order preservation ---------------------------------------------------------


def _order_violation(drawing: GridDrawing):
    tree = drawing.tree
    pos = drawing.pos
    for v in range(tree.n):
        if len(tree.children[v]) != 2 or tree.parent[v] is None:
            continue
        p = tree.parent[v]
        l, r = tree.children[v]
        dp = sub(pos[p], pos[v])
        dl = sub(pos[l], pos[v])
        dr = sub(pos[r], pos[v])
        try:
            if not ccw_cyclic(dp, dl, dr):
                return ("order", v)
        except ValueError:
            return ("order-coincident-directions", v)
    return None


# -- independent oracle ---------------------------------------------------------
#
# Parametric rational intersection; intentionally free of the orientation-test
# code above.  Returns the intersection of two closed segments as
# ('empty', None) | ('point', (x, y)) | ('segment', (p, q)).


def _oracle_intersection(s1, s2):
    (p1, p2), (q1, q2) = s1, s2
    r = (Fraction(p2[0] - p1[0]), Fraction(p2[1] - p1[1]))
    s = (Fraction(q2[0] - q1[0]), Fraction(q2[1] - q1[1]))
    den = r[0] * s[1] - r[1] * s[0]
    w = (Fraction(q1[0] - p1[0]), Fraction(q1[1] - p1[1]))
    if den != 0:
        t = (w[0] * s[1] - w[1] * s[0]) / den
        u = (w[0] * r[1] - w[1] * r[0]) / den
        if 0 <= t <= 1 and 0 <= u <= 1:
            pt = (p1[0] + t * r[0], p1[1] + t * r[1])
            return ("point", pt)
        return ("empty", None)
    # parallel; collinear iff w is parallel to r
    if w[0] * r[1] - w[1] * r[0] != 0:
        return ("empty", None)
    # collinear: project onto r (or s if r is degenerate)
    axis = r if (r[0], r[1]) != (0, 0) else s
    def proj(pt):
        return Fraction(pt[0]) * axis[0] + Fraction(pt[1]) * axis[1]
    a_lo, a_hi = sorted((proj(p1), proj(p2)))
    b_lo, b_hi = sorted((proj(q1), proj(q2)))
    lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
    if lo > hi:
        return ("empty", None)
    pts = {proj(p): p for p in (p1, p2, q1, q2)}
    if lo == hi:
        return ("point", tuple(Fraction(c) for c in pts[lo]))
    return ("segment", (pts[lo], pts[hi]))


def oracle_classify(s1, s2) -> str:
    """Same taxonomy as segments_cross, via the parametric oracle."""
    kind, data = _oracle_intersection(s1, s2)
    if kind == "empty":
        return DISJOINT
    if kind == "segment":
        return IMPROPER
    pt = data
    ends1 = [tuple(map(Fraction, p)) for p in s1]
    ends2 = [tuple(map(Fraction, p)) for p in s2]
    if pt in ends1 and pt in ends2:
        return SHARED_ENDPOINT
    if pt not in ends1 and pt not in ends2:
        return PROPER_CROSSING
    return IMPROPER


def oracle_planarity_violation(drawing: GridDrawing):
    """All-pairs planarity via the rational oracle (slow; for cross-checks)."""
    pos = drawing.pos
    edges = list(drawing.edges())
    segs = [(pos[p], pos[c]) for p, c in edges]
    m = len(edges)
    for i in range(m):
        for j in range(i + 1, m):
            adjacent = bool(set(edges[i]) & set(edges[j]))
            kind, data = _oracle_intersection(segs[i], segs[j])
            if kind == "empty":
                continue
            if kind == "segment":
                return ("crossing", (edges[i], edges[j], IMPROPER))
            if adjacent:
                shared = set(edges[i]) & set(edges[j])
                sv = next(iter(shared))
                if data == tuple(map(Fraction, pos[sv])):
                    continue
            return ("crossing", (edges[i], edges[j], "touch"))
    for v in range(drawing.tree.n):
        pv = pos[v]
        for (p, c), (a, b) in zip(edges, segs):
            if v in (p, c):
                continue
            if _param_on_segment(pv, a, b):
                return ("vertex-on-edge", (v, (p, c)))
    return None


def _param_on_segment(pt, a, b) -> bool:
    """Membership of pt in closed segment ab by solving for the parameter."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx != 0:
        t = Fraction(pt[0] - a[0], dx)
        return 0 <= t <= 1 and a[1] + t * dy == pt[1]
    if dy != 0:
        t = Fraction(pt[1] - a[1], dy)
        return 0 <= t <= 1 and a[0] + t * dx == pt[0]
    return tuple(pt) == tuple(a)
