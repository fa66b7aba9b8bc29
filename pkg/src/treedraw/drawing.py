"""Grid drawings and the placement toolkit the drawers compose with.

A GridDrawing maps every node of a tree to a distinct integer grid point in
{1..W} x {1..H}, math orientation (y grows upward).  During construction the
drawers work with plain {node: (x, y)} dicts in whatever local frame is
convenient and normalize at the end.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .tree import Tree


class GridDrawing:
    """Finished straight-line drawing of a tree on the integer grid."""

    __slots__ = ("tree", "pos", "width", "height", "meta")

    def __init__(self, tree: Tree, pos, meta: Optional[dict] = None):
        if isinstance(pos, dict):
            pos = [pos[v] for v in range(tree.n)]
        if len(pos) != tree.n:
            raise ValueError("drawing must place every node")
        xs = [p[0] for p in pos]
        ys = [p[1] for p in pos]
        dx, dy = 1 - min(xs), 1 - min(ys)
        self.pos: tuple[tuple[int, int], ...] = tuple(
            (x + dx, y + dy) for x, y in pos
        )
        self.tree = tree
        self.width = max(xs) - min(xs) + 1
        self.height = max(ys) - min(ys) + 1
        self.meta = dict(meta or {})

    @property
    def area(self) -> int:
        return self.width * self.height

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.tree.n):
            for c in self.tree.children[v]:
                yield v, c

    def segments(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        for v, c in self.edges():
            yield self.pos[v], self.pos[c]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GridDrawing)
            and self.tree == other.tree
            and self.pos == other.pos
        )

    def __hash__(self):
        return hash((self.tree, self.pos))

    def __repr__(self) -> str:
        return f"<GridDrawing {self.tree.n} nodes, {self.width}x{self.height}>"


# -- placement toolkit -------------------------------------------------------
#
# Sub-layouts are dicts {node: (x, y)}.  Transforms return new dicts; merging
# requires disjoint key sets (each node placed exactly once).


def shift(pts: dict, dx: int, dy: int) -> dict:
    return {v: (x + dx, y + dy) for v, (x, y) in pts.items()}


def rot_ccw(pts: dict) -> dict:
    """Quarter turn counterclockwise: (x, y) -> (-y, x)."""
    return {v: (-y, x) for v, (x, y) in pts.items()}


def rot_cw(pts: dict) -> dict:
    """Quarter turn clockwise: (x, y) -> (y, -x)."""
    return {v: (y, -x) for v, (x, y) in pts.items()}


def rot180(pts: dict) -> dict:
    return {v: (-x, -y) for v, (x, y) in pts.items()}


def flip_x(pts: dict) -> dict:
    """Mirror across the vertical axis (reverses cyclic orientation)."""
    return {v: (-x, y) for v, (x, y) in pts.items()}


def flip_y(pts: dict) -> dict:
    """Mirror across the horizontal axis (reverses cyclic orientation)."""
    return {v: (x, -y) for v, (x, y) in pts.items()}


def transpose(pts: dict) -> dict:
    """Swap coordinates (reverses cyclic orientation)."""
    return {v: (y, x) for v, (x, y) in pts.items()}


def bbox(pts: dict) -> tuple[int, int, int, int]:
    xs = [x for x, _ in pts.values()]
    ys = [y for _, y in pts.values()]
    return min(xs), max(xs), min(ys), max(ys)


def merge(*parts: dict) -> dict:
    out: dict = {}
    for p in parts:
        for k, v in p.items():
            if k in out:
                raise ValueError(f"node {k} placed twice")
            out[k] = v
    return out


def anchor(pts: dict, node: int, at: tuple[int, int]) -> dict:
    """Translate so that `node` lands exactly on `at`."""
    x, y = pts[node]
    return shift(pts, at[0] - x, at[1] - y)


def anchor_corner(pts: dict, corner: str, at: tuple[int, int]) -> dict:
    """Translate so the named bounding-box corner lands on `at`.

    corner is two letters from {t,b} x {l,r}, e.g. "tl" = top-left.
    """
    x0, x1, y0, y1 = bbox(pts)
    cx = x0 if corner[1] == "l" else x1
    cy = y1 if corner[0] == "t" else y0
    return shift(pts, at[0] - cx, at[1] - cy)


class Box:
    """A finished sub-layout normalized so its top-left corner is (0, 0)
    (x in [0, w-1], y in [1-h, 0]), with named ports in the same frame."""

    __slots__ = ("pts", "w", "h", "ports")

    def __init__(self, pts: dict, ports: Optional[dict] = None):
        if not pts:
            raise ValueError("empty box")
        x0, x1, y0, y1 = bbox(pts)
        self.pts = {v: (x - x0, y - y1) for v, (x, y) in pts.items()}
        self.w = x1 - x0 + 1
        self.h = y1 - y0 + 1
        self.ports = {
            name: (x - x0, y - y1) for name, (x, y) in (ports or {}).items()
        }

    def place(self, x: int, y: int) -> dict:
        """Points shifted so the top-left corner sits at (x, y)."""
        return shift(self.pts, x, y)

    def port_at(self, name: str, x: int, y: int) -> tuple[int, int]:
        px, py = self.ports[name]
        return (px + x, py + y)

    def flipped_x(self) -> "Box":
        return Box(flip_x(self.pts), {n: (-x, y) for n, (x, y) in self.ports.items()})

    def flipped_y(self) -> "Box":
        return Box(flip_y(self.pts), {n: (x, -y) for n, (x, y) in self.ports.items()})

    def rotated_cw(self) -> "Box":
        return Box(rot_cw(self.pts), {n: (y, -x) for n, (x, y) in self.ports.items()})

    def rotated_ccw(self) -> "Box":
        return Box(rot_ccw(self.pts), {n: (-y, x) for n, (x, y) in self.ports.items()})

    def transposed(self) -> "Box":
        return Box(transpose(self.pts), {n: (y, x) for n, (x, y) in self.ports.items()})
