"""Drawers for arbitrary-degree rooted trees.

All construction here works in math orientation (y grows upward); boxes are
normalized with their top-left corner at (0, 0) and stacked downward.  The
recursions that can nest deeply (the repeated size > n-A child) are driven by
explicit loops; genuine recursion only happens on subtrees of at most half the
size, so the call depth stays logarithmic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .drawing import Box, GridDrawing, shift
from .geometry import coprime_point_set, cross, dot, occupancy_from_points, sub
from .mathutil import ceil_div, clog2, iroot_ceil
from .tree import Tree, heavy_path_and_centroid

# constants ledger: defaults chosen once so the corpus passes; the point-set
# builders may double `scale` deterministically when a size precondition
# fails, and record the escalation in the drawing metadata.
POINT_SCALE = 4
BOOT_ELL_SCALE = 8
MAX_ESCALATIONS = 8
BOOT_WIDTH_SLACK = 3  # general bootstrap needs A >= BOOT_WIDTH_SLACK*clog(n)+8


class DrawError(ValueError):
    """Unsatisfiable drawer precondition."""


class InternalInvariantError(RuntimeError):
    """A construction invariant failed; indicates a bug, not bad input."""


# -- the standard algorithm ----------------------------------------------------


def _standard_layout(tree: Tree, root: int, children_override=None):
    """Classic recursion: largest subtree stays on the root row, the rest go
    one row below, side by side.  y-down grid, root at (1, 1).

    Returns (pts, w, h).  Recursion only on non-largest children (<= half),
    the largest-child chain is looped.
    """
    sizes = tree.subtree_sizes()

    def kids(v):
        if v == root and children_override is not None:
            return children_override
        return tree.children[v]

    def layout(v):
        pts = {}
        x_spine, w, h = 1, 1, 1
        while True:
            pts[v] = (x_spine, 1)
            w = max(w, x_spine)
            cs = kids(v)
            if not cs:
                return pts, w, h
            hc = cs[0]
            for c in cs[1:]:
                if sizes[c] > sizes[hc]:
                    hc = c
            x_cur = x_spine
            for c in cs:
                if c == hc:
                    continue
                spts, sw, sh = layout(c)
                for u, (x, y) in spts.items():
                    pts[u] = (x + x_cur - 1, y + 1)
                x_cur += sw
                h = max(h, sh + 1)
            w = max(w, x_cur - 1)
            x_spine = max(x_cur, x_spine + 1)
            v = hc

    return layout(root)


def std_box(tree: Tree, root: int, children_override=None) -> Box:
    """Standard drawing as a Box: root at the top-left corner; w <= n,
    h <= max(1, ceil(log2 n)); upward."""
    pts, _, _ = _standard_layout(tree, root, children_override)
    return Box({v: (x - 1, 1 - y) for v, (x, y) in pts.items()}, {"root": (0, 0)})


def std_box_t(tree: Tree, root: int) -> Box:
    """Transposed standard drawing: w <= max(1, ceil(log2 n)), h <= n, root at
    the top-left corner.  Not upward."""
    pts, _, _ = _standard_layout(tree, root)
    return Box({v: (y - 1, 1 - x) for v, (x, y) in pts.items()}, {"root": (0, 0)})


def draw_standard(tree: Tree, transpose: bool = False) -> GridDrawing:
    box = std_box_t(tree, tree.root) if transpose else std_box(tree, tree.root)
    return GridDrawing(tree, box.pts, meta={"algorithm": "standard", "transpose": transpose})


def _fan_box(tree: Tree, apex: int, children: Sequence[int]) -> Box:
    """apex at the top-left corner, child subtrees standard-drawn side by side
    one row below starting at column 1; the left column holds only the apex."""
    pts = {apex: (0, 0)}
    x = 1
    for c in children:
        b = std_box(tree, c)
        pts.update(b.place(x, -1))
        x += b.w
    return Box(pts, {"root": (0, 0)})


# -- drawing on point sets (universal point sets) ------------------------------


def _angkey(d):
    """Total angular order over nonzero directions, sweeping ccw through
    270 degrees: classes are (180,270), {270}, (270,360), {0/360}, (0,90),
    {90}, (90,180), {180}; within a class, slope then length."""
    dx, dy = d
    if dy < 0:
        cls = 0 if dx < 0 else (1 if dx == 0 else 2)
    elif dy == 0:
        cls = 3 if dx > 0 else 7
    else:
        cls = 4 if dx > 0 else (5 if dx == 0 else 6)
    slope = Fraction(dy, dx) if dx else Fraction(0)
    return (cls, slope, dx * dx + dy * dy)


def _same_dir(d1, d2) -> bool:
    return cross(d1, d2) == 0 and dot(d1, d2) > 0


def _max_collinear(points) -> int:
    """Largest number of collinear points, by exact direction grouping."""
    best = 1
    pts = list(points)
    for i, p in enumerate(pts):
        groups: dict = {}
        for q in pts[i + 1 :]:
            dx, dy = q[0] - p[0], q[1] - p[1]
            g = math.gcd(abs(dx), abs(dy))
            dx, dy = dx // g, dy // g
            if (dx, dy) < (0, 0) or (dx < 0) or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            groups[(dx, dy)] = groups.get((dx, dy), 0) + 1
        if groups:
            best = max(best, 1 + max(groups.values()))
    return best


def _fact2_place(tree: Tree, root: int, points, ell: int, checked: bool = False) -> dict:
    """Upward drawing of the subtree at `root` with all vertices on `points`.

    Requires |points| >= (ell-1)n - ell + 2 and no ell collinear points.
    """
    sizes = tree.subtree_sizes()
    n = sizes[root]
    pts_list = sorted(set(map(tuple, points)))
    if len(pts_list) < (ell - 1) * n - ell + 2:
        raise DrawError(
            f"need {(ell - 1) * n - ell + 2} points for n={n}, ell={ell}; got {len(pts_list)}"
        )
    if n >= 2 and not checked and _max_collinear(pts_list) >= ell:
        raise DrawError(f"{ell} collinear points present")
    place: dict = {}
    stack = [(root, pts_list)]
    while stack:
        v, P = stack.pop()
        p0 = max(P, key=lambda p: (p[1], -p[0]))
        place[v] = p0
        cs = tree.children[v]
        if not cs:
            continue
        rest = [p for p in P if p != p0]
        rest.sort(key=lambda p: _angkey((p[0] - p0[0], p[1] - p0[1])))
        # direction-run boundaries (cut positions allowed between runs)
        bounds = [0]
        for idx in range(1, len(rest)):
            if not _same_dir(sub(rest[idx], p0), sub(rest[idx - 1], p0)):
                bounds.append(idx)
        bounds.append(len(rest))
        import bisect

        cum = 0
        prev_cut = 0
        for c in cs:
            cum += (ell - 1) * sizes[c]
            bi = bisect.bisect_right(bounds, min(cum, len(rest))) - 1
            cut = bounds[bi]
            chunk = rest[prev_cut:cut]
            need = (ell - 1) * sizes[c] - ell + 2
            if len(chunk) < need:
                raise InternalInvariantError("sector cut fell below its budget")
            chunk.sort(key=lambda p: (-p[1], p[0]))
            stack.append((c, chunk[:need]))
            prev_cut = cut
    return place


def draw_on_points(tree: Tree, points, ell: int) -> GridDrawing:
    place = _fact2_place(tree, tree.root, points, ell)
    return GridDrawing(tree, place, meta={"algorithm": "on-points", "ell": ell})


# -- drawing on families of parallel segments ----------------------------------


def _fact3_place(tree: Tree, root: int, segments: Sequence[Sequence[tuple]]) -> dict:
    """Straight-line drawing with vertices on the given usable points.

    segments[i] carries the points for drawing row i+1; the list order must
    follow the geometric line order of the parallel family (callers pass
    scaled copies 1L, 2L, ... in scale order, so adjacency is preserved and
    the planarity region argument applies).
    """
    pts, w, h = _standard_layout(tree, root)
    if h > len(segments):
        raise DrawError(f"need {h} segments, got {len(segments)}")
    rows: dict[int, list[int]] = {}
    for v, (x, y) in pts.items():
        rows.setdefault(y, []).append(v)
    place = {}
    for y, nodes in rows.items():
        nodes.sort(key=lambda v: pts[v][0])
        seg = sorted(set(map(tuple, segments[y - 1])), key=lambda p: (-p[1], p[0]))
        if len(nodes) > len(seg):
            raise DrawError(f"segment {y} has {len(seg)} points, needs {len(nodes)}")
        for v, p in zip(nodes, seg):
            place[v] = p
    return place


def _line_intercept(points) -> Fraction:
    (x1, y1), (x2, y2) = points[0], points[-1]
    if x1 == x2:
        raise DrawError("vertical segments are not allowed")
    m = Fraction(y2 - y1, x2 - x1)
    return Fraction(y1) - m * Fraction(x1)


def draw_on_segments(tree: Tree, segments: Sequence[Sequence[tuple]]) -> GridDrawing:
    """Fact-3 drawing on a family of parallel non-vertical segments, each given
    by its usable points; upward whenever the segments are horizontally
    separated (disjoint y-projections)."""
    segs = [sorted(set(map(tuple, s)), key=lambda p: (-p[1], p[0])) for s in segments]
    if tree.n == 1:
        return GridDrawing(tree, {0: segs[0][0]}, meta={"algorithm": "on-segments"})
    if any(len(s) < 2 for s in segs):
        raise DrawError("each segment needs at least two usable points")
    d0 = sub(segs[0][-1], segs[0][0])
    for s in segs[1:]:
        if cross(d0, sub(s[-1], s[0])) != 0:
            raise DrawError("segments are not parallel")
    order = sorted(range(len(segs)), key=lambda i: _line_intercept(segs[i]), reverse=True)
    # keep upwardness when the family is horizontally separated but the
    # intercept order runs bottom-to-top (possible for steep negative slopes):
    # reversing the whole order preserves line adjacency.
    ranges = [(min(p[1] for p in segs[i]), max(p[1] for p in segs[i])) for i in order]
    separated = all(ranges[i][0] > ranges[i + 1][1] or ranges[i][1] < ranges[i + 1][0]
                    for i in range(len(ranges) - 1))
    if separated and all(ranges[i][1] < ranges[i + 1][0] for i in range(len(ranges) - 1)):
        order.reverse()
    place = _fact3_place(tree, tree.root, [segs[i] for i in order])
    return GridDrawing(tree, place, meta={"algorithm": "on-segments"})


# -- the augmented-star algorithm (upward) --------------------------------------


def _sorted_band_points(A: int, B: int, half_band: bool):
    """Coprime points of the (half-)band, reflected to negative y and sorted
    by angle around the origin (south toward east)."""
    pts = [(x, -y) for (x, y) in coprime_point_set(A, B, half_band)]
    pts.sort(key=lambda p: (Fraction(p[1], p[0]), dot(p, p)))
    return pts


def _star_place(tree: Tree, apex: int, children: Sequence[int], A: int, s: int, meta: dict) -> dict:
    """Lemma geometry for augmented stars: apex at the origin, coprime
    half-band sectors below, per-sector universal-point-set or scaled-segment
    drawing.  Apex ends at the top-left corner; the left column stays empty.
    """
    sizes = tree.subtree_sizes()
    n_star = 1 + sum(sizes[c] for c in children)
    A = max(1, min(A, n_star))
    ell = s * clog2(s)
    t = clog2(s)
    scale = POINT_SCALE
    for attempt in range(MAX_ESCALATIONS):
        B = max(2, ceil_div(scale * ell * n_star, A))
        P = _sorted_band_points(A, B, half_band=True)
        if len(P) >= ell * n_star:
            break
        scale *= 2
    else:
        raise InternalInvariantError("coprime band never reached the needed size")
    if scale != POINT_SCALE:
        meta.setdefault("escalations", []).append(("star-band", scale))
    place = {apex: (0, 0)}
    pos = 0
    band_rows = B - B // 2
    grp_h = ceil_div(band_rows, t)
    for c in children:
        m = ell * sizes[c]
        chunk = P[pos : pos + m]
        pos += m
        if sizes[c] == 1:
            place[c] = max(chunk, key=lambda p: (p[1], -p[0]))
            continue
        line_pts = _best_line(chunk)
        if len(line_pts) >= ell:
            # degenerate sector: scaled copies of a slab-restricted subsegment
            groups: dict[int, list] = {}
            for p in line_pts:
                g = (-p[1] - (B // 2 + 1)) // grp_h
                groups.setdefault(g, []).append(p)
            g_best = max(groups, key=lambda g: (len(groups[g]), -g))
            base = sorted(groups[g_best], key=lambda p: (-p[1], p[0]))
            if len(base) < s:
                raise InternalInvariantError("slab pigeonhole fell short")
            copies = [[(a * x, a * y) for (x, y) in base] for a in range(1, t + 1)]
            place.update(_fact3_place(tree, c, copies))
        else:
            place.update(_fact2_place(tree, c, chunk, ell, checked=True))
    return place


def _best_line(points) -> list:
    """Points of the line carrying the most of `points` (>= 2 of them)."""
    best: list = []
    pts = list(points)
    for i, p in enumerate(pts):
        groups: dict = {}
        for q in pts[i + 1 :]:
            dx, dy = q[0] - p[0], q[1] - p[1]
            g = math.gcd(abs(dx), abs(dy))
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            groups.setdefault((dx, dy), [p]).append(q)
        for members in groups.values():
            if len(members) > len(best):
                best = members
    return best


def star_box(tree: Tree, apex: int, children: Sequence[int], A: int, s: int, meta: dict) -> Box:
    place = _star_place(tree, apex, children, A, s, meta)
    return Box(place, {"root": place[apex]})


def draw_augmented_star(tree: Tree, A: int, s: int) -> GridDrawing:
    sizes = tree.subtree_sizes()
    n = tree.n
    if not 1 <= A <= n:
        raise DrawError(f"need 1 <= A <= n={n}")
    for c in tree.children[tree.root]:
        if sizes[c] > s:
            raise DrawError(f"child subtree of size {sizes[c]} exceeds s={s}")
    meta = {"algorithm": "augmented-star", "A": A, "s": s}
    place = _star_place(tree, tree.root, tree.children[tree.root], A, s, meta)
    return GridDrawing(tree, place, meta=meta)


# -- the general upward algorithm (skeleton shared with the bootstrap) ----------


def _skeleton_draw(tree: Tree, root: int, A: int, s: int, star_fn, recurse_fn, meta: dict) -> Box:
    """Heavy-path skeleton: top band of spine siblings, then the stack of the
    A-skewed centroid's child groups (small -> star, mid -> standard,
    big -> recursive), the heavy child at the bottom.

    star_fn(apex, children, budget) -> Box with a clean left column and the
    apex at the top-left corner.  recurse_fn(child) -> Box, root at top-left.
    The repeated bottom child (size can stay near n-A) is handled iteratively.
    """
    sizes = tree.subtree_sizes()
    pending = []
    cur = root
    box = None
    while True:
        ctx = _skeleton_ctx(tree, cur, A, s, star_fn, recurse_fn, meta)
        if ctx["bottom"] is None:
            box = _skeleton_finish(tree, ctx)
            break
        pending.append(ctx)
        cur = ctx["bottom"]
    while pending:
        ctx = pending.pop()
        ctx["bottom_box"] = box
        box = _skeleton_finish(tree, ctx)
    return box


def _skeleton_ctx(tree: Tree, root: int, A: int, s: int, star_fn, recurse_fn, meta: dict) -> dict:
    sizes = tree.subtree_sizes()
    n = sizes[root]
    ctx = {"root": root, "bottom": None, "bottom_box": None}
    if n == 1:
        ctx["trivial"] = True
        return ctx
    ctx["trivial"] = False
    hp = heavy_path_and_centroid(tree, min(A, n), start=root)
    path, k = hp.path, hp.k
    ctx["path"] = path[: k + 1]
    ctx["k"] = k
    # top band: for each spine node v_0..v_{k-1}, the boxes of its other children
    band = []
    for i in range(k):
        sibs = [c for c in tree.children[path[i]] if c != path[i + 1]]
        band.append([std_box(tree, c) for c in sibs])
    ctx["band"] = band
    vk = path[k]
    heavy = path[k + 1] if k + 1 < len(path) else None
    small, mid, big = [], [], []
    for c in tree.children[vk]:
        if sizes[c] <= s:
            small.append(c)
        elif sizes[c] <= A:
            mid.append(c)
        elif c == heavy:
            ctx["bottom"] = c
        else:
            big.append(c)
    n_small = sum(sizes[c] for c in small)
    if small:
        if n_small <= A:
            ctx["star"] = _fan_box(tree, vk, small)
        else:
            budget = max(1, ceil_div(A, clog2(s)))
            ctx["star"] = star_fn(vk, small, budget)
    else:
        ctx["star"] = Box({vk: (0, 0)}, {"root": (0, 0)})
    ctx["mids"] = [std_box(tree, c) for c in mid]
    ctx["bigs"] = [recurse_fn(c) for c in big]
    return ctx


def _skeleton_finish(tree: Tree, ctx: dict) -> Box:
    root = ctx["root"]
    if ctx["trivial"]:
        return Box({root: (0, 0)}, {"root": (0, 0)})
    path, k = ctx["path"], ctx["k"]
    band, star = ctx["band"], ctx["star"]
    stack_boxes = ctx["mids"] + ctx["bigs"]
    bottom = ctx["bottom_box"]
    reflected = k >= 2
    pts: dict = {}

    # widths the spine column must clear
    w_center = max(
        [star.w] + [b.w + 1 for b in stack_boxes] + ([bottom.w] if bottom else [1])
    )
    if reflected:
        # lay the band left to right, stretching the last edge to x*
        x = 0
        band_depth = 1
        for i in range(k - 1):
            pts[path[i]] = (x, 0)
            bx = x + 1
            for b in band[i]:
                pts.update(b.place(bx, -1))
                bx += b.w
                band_depth = max(band_depth, b.h + 1)
            x = max(bx, x + 1)
        x_star = max(x, w_center - 1)
        pts[path[k - 1]] = (x_star, 0)
        bx = x_star + 1
        for b in band[k - 1]:
            pts.update(b.place(bx, -1))
            bx += b.w
            band_depth = max(band_depth, b.h + 1)
        star_p = star.flipped_x()  # root moves to the top-right corner
        y = -band_depth - 1
        pts.update(star_p.place(x_star - star_p.w + 1, y))
        vk_pos = (x_star, y)
        y -= star_p.h + 1
        for b in stack_boxes:
            pts.update(b.flipped_x().place(x_star - b.w, y))
            y -= b.h + 1
        if bottom is not None:
            pts.update(bottom.flipped_x().place(x_star - bottom.w + 1, y))
    else:
        # k <= 1: no reflection; everything grows rightward from column 0
        band_depth = 0
        if k == 1:
            pts[path[0]] = (0, 0)
            bx = 1
            band_depth = 1
            for b in band[0]:
                pts.update(b.place(bx, -1))
                bx += b.w
                band_depth = max(band_depth, b.h + 1)
            y = -band_depth - 1
        else:
            y = 0
        pts.update(star.place(0, y))
        vk_pos = (0, y)
        y -= star.h + 1
        for b in stack_boxes:
            pts.update(b.place(1, y))
            y -= b.h + 1
        if bottom is not None:
            pts.update(bottom.place(0, y))
    return Box(pts, {"root": (0, 0)})


def _upward_s(A: int) -> int:
    return max(1, math.isqrt(A) // clog2(A))


def draw_upward_general(tree: Tree, A: int) -> GridDrawing:
    """Straight-line upward drawing, width O(A + log n),
    height O((n / sqrt(A)) log^2 A); root at the top-left corner."""
    n = tree.n
    if not 1 <= A <= n:
        raise DrawError(f"need 1 <= A <= n={n}")
    s = _upward_s(A)
    meta = {"algorithm": "upward-general", "A": A, "s": s}

    def star_fn(apex, children, budget):
        return star_box(tree, apex, children, budget, s, meta)

    def recurse_fn(child):
        return _skeleton_draw(tree, child, A, s, star_fn, recurse_fn, meta)

    box = _skeleton_draw(tree, tree.root, A, s, star_fn, recurse_fn, meta)
    return GridDrawing(tree, box.pts, meta=meta)
