"""Rooted ordered trees: parsing, generation, and structural decompositions.

Node ids are canonical pre-order integers 0..n-1 (root is 0), so structurally
equal trees compare equal field by field.  Child order is significant.  Binary
trees reuse the same type with <= 2 children per node; for a node with a single
child the *side* of that child (left/right) is tracked separately because the
plain parenthesized format cannot express it.  The binary input dialect writes
an explicit empty slot: "((),)" is a lone left child, "(,())" a lone right one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

LEFT = 0
RIGHT = 1

GENERATOR_MODELS = ("path", "star", "caterpillar", "uniform-attachment", "random-binary")


class ParseError(ValueError):
    """Malformed parenthesized tree text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MissingSideError(ValueError):
    """A single-child node lacks a left/right designation."""


class Tree:
    """Immutable rooted ordered tree with dense pre-order ids."""

    __slots__ = ("n", "children", "parent", "single_side", "_sizes")

    def __init__(self, children, single_side=None, _canonical=False):
        n = len(children)
        if n == 0:
            raise ValueError("empty tree")
        if single_side is None:
            single_side = [None] * n
        if not _canonical:
            children, single_side = _preorder_renumber(children, single_side)
        self.n = n
        self.children = tuple(tuple(c) for c in children)
        parent: list[Optional[int]] = [None] * n
        for v, cs in enumerate(self.children):
            for c in cs:
                if parent[c] is not None:
                    raise ValueError(f"node {c} has two parents")
                parent[c] = v
        if sum(1 for p in parent if p is None) != 1 or parent[0] is not None:
            raise ValueError("tree must have exactly one root with id 0")
        self.parent = tuple(parent)
        self.single_side = tuple(
            single_side[v] if len(self.children[v]) == 1 else None for v in range(n)
        )
        self._sizes: Optional[tuple[int, ...]] = None

    # -- basic structure ---------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tree)
            and self.children == other.children
            and self.single_side == other.single_side
        )

    def __hash__(self) -> int:
        return hash((self.children, self.single_side))

    def __repr__(self) -> str:
        return f"Tree({serialize(self)!r})"

    def subtree_sizes(self) -> tuple[int, ...]:
        """Size of the subtree rooted at every node (root maps to n)."""
        if self._sizes is None:
            sizes = [1] * self.n
            for v in reversed(range(self.n)):  # children have larger pre-order ids
                for c in self.children[v]:
                    sizes[v] += sizes[c]
            self._sizes = tuple(sizes)
        return self._sizes

    def subtree_nodes(self, v: int) -> list[int]:
        """Nodes of the subtree at v in pre-order."""
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return out

    def is_descendant(self, v: int, u: int) -> bool:
        """True if v lies in the subtree of u (v == u counts)."""
        while v is not None:
            if v == u:
                return True
            v = self.parent[v]
        return False

    @property
    def is_binary(self) -> bool:
        return all(len(c) <= 2 for c in self.children)

    def binary_slots(self, v: int) -> tuple[Optional[int], Optional[int]]:
        """(left, right) child ids for a binary node; raises if a lone child
        has no recorded side."""
        cs = self.children[v]
        if len(cs) > 2:
            raise ValueError(f"node {v} has {len(cs)} children; not binary")
        if len(cs) == 2:
            return cs[0], cs[1]
        if len(cs) == 0:
            return None, None
        side = self.single_side[v]
        if side is None:
            raise MissingSideError(
                f"single child of node {v} has no left/right designation"
            )
        return (cs[0], None) if side == LEFT else (None, cs[0])

    def require_binary_sides(self) -> None:
        """Validate that every single-child node carries a side."""
        for v in range(self.n):
            self.binary_slots(v)

    def mirrored(self) -> "Tree":
        """The left/right mirror image (children reversed everywhere)."""
        children = [tuple(reversed(c)) for c in self.children]
        side = [
            None if s is None else (RIGHT if s == LEFT else LEFT)
            for s in self.single_side
        ]
        return Tree(children, side)

    # -- heavy path / centroid --------------------------------------------

    def heavy_child(self, v: int) -> Optional[int]:
        """Child with the largest subtree; first one on ties."""
        cs = self.children[v]
        if not cs:
            return None
        sizes = self.subtree_sizes()
        best = cs[0]
        for c in cs[1:]:
            if sizes[c] > sizes[best]:
                best = c
        return best

    def heavy_path(self, start: int = 0) -> list[int]:
        """Heavy path from `start` down to a leaf."""
        path = [start]
        c = self.heavy_child(start)
        while c is not None:
            path.append(c)
            c = self.heavy_child(c)
        return path


@dataclass(frozen=True)
class HeavyPathInfo:
    path: tuple[int, ...]
    k: int  # index of the A-skewed centroid on the path


@dataclass(frozen=True)
class ChainRef:
    """The chain from `top` down to (excluding) `bottom`: subtree(top) minus
    subtree(bottom); bottom must be a non-child descendant of top."""

    top: int
    bottom: int

    def validate(self, tree: Tree) -> None:
        if self.top == self.bottom or not tree.is_descendant(self.bottom, self.top):
            raise ValueError("chain bottom must be a strict descendant of top")
        if tree.parent[self.bottom] == self.top:
            raise ValueError("chain bottom must not be an immediate child of top")


def heavy_path_and_centroid(tree: Tree, A: int, start: int = 0) -> HeavyPathInfo:
    """Heavy path from `start` plus the largest index k whose subtree still
    has size > n - A (the A-skewed centroid)."""
    sizes = tree.subtree_sizes()
    n = sizes[start]
    if not 1 <= A <= n:
        raise ValueError(f"need 1 <= A <= {n}, got {A}")
    path = tree.heavy_path(start)
    k = 0
    for i, v in enumerate(path):
        if sizes[v] > n - A:
            k = i
    return HeavyPathInfo(tuple(path), k)


def chain_path(tree: Tree, ref: ChainRef) -> list[int]:
    """Path nodes of the chain: top .. parent(bottom), in order."""
    ref.validate(tree)
    rev = []
    v = tree.parent[ref.bottom]
    while v != ref.top:
        rev.append(v)
        v = tree.parent[v]
        if v is None:
            raise ValueError("bottom not below top")
    rev.append(ref.top)
    return rev[::-1]


def chain_size(tree: Tree, ref: ChainRef) -> int:
    sizes = tree.subtree_sizes()
    return sizes[ref.top] - sizes[ref.bottom]


# -- parsing / serialization ----------------------------------------------


class _Frame:
    __slots__ = ("node", "slots", "saw_comma", "pending_empty")

    def __init__(self, node: int):
        self.node = node
        self.slots: list[Optional[int]] = []  # None marks an explicit empty slot
        self.saw_comma = False
        self.pending_empty = True  # open slot until a node or ')' closes it


def parse_tree(text: str) -> Tree:
    """Parse a parenthesized tree; whitespace between tokens is ignored.

    Iterative (explicit stack) so deep path trees do not hit the interpreter
    recursion limit.
    """
    children: list[list[int]] = []
    single_side: list[Optional[int]] = []
    n = len(text)
    stack: list[_Frame] = []
    done: Optional[int] = None  # root id once the outermost frame closes
    i = 0
    while i < n and text[i].isspace():
        i += 1
    if i >= n or text[i] != "(":
        raise ParseError("expected '('", i)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if done is not None:
            raise ParseError("trailing characters after tree", i)
        if ch == "(":
            if stack:
                f = stack[-1]
                if not f.pending_empty and f.saw_comma:
                    raise ParseError("expected ',' or ')' between slots", i)
                f.pending_empty = False
            node = len(children)
            children.append([])
            single_side.append(None)
            stack.append(_Frame(node))
            i += 1
        elif ch == ",":
            if not stack:
                raise ParseError("',' outside parentheses", i)
            f = stack[-1]
            f.saw_comma = True
            if f.pending_empty:
                f.slots.append(None)
            f.pending_empty = True
            i += 1
        elif ch == ")":
            if not stack:
                raise ParseError("unmatched ')'", i)
            f = stack.pop()
            if f.saw_comma:
                if f.pending_empty:
                    f.slots.append(None)
                if len(f.slots) != 2 and any(s is None for s in f.slots):
                    raise ParseError("empty slots need exactly two comma slots", i)
                if len(f.slots) == 2 and f.slots.count(None) == 1:
                    single_side[f.node] = RIGHT if f.slots[0] is None else LEFT
            children[f.node] = [s for s in f.slots if s is not None]
            if stack:
                stack[-1].slots.append(f.node)
            else:
                done = f.node
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    if stack or done is None:
        raise ParseError("unbalanced parentheses", n)
    # ids were assigned in pre-order already
    return Tree(children, single_side, _canonical=True)


def serialize(tree: Tree) -> str:
    """Inverse of parse_tree; emits the binary empty-slot dialect only where a
    lone child carries a side."""
    out: list[str] = []
    # iterative pre-order with explicit close markers
    stack: list[tuple[str, int]] = [("node", tree.root)]
    while stack:
        kind, v = stack.pop()
        if kind == "text":
            out.append(("", ")", ",)", ",")[v])
            continue
        cs = tree.children[v]
        side = tree.single_side[v]
        if len(cs) == 1 and side == RIGHT:
            out.append("(,")
            stack.append(("text", 1))  # ')'
            stack.append(("node", cs[0]))
        elif len(cs) == 1 and side == LEFT:
            out.append("(")
            stack.append(("text", 2))  # ',)'
            stack.append(("node", cs[0]))
        else:
            out.append("(")
            stack.append(("text", 1))  # ')'
            for c in reversed(cs):
                stack.append(("node", c))
    return "".join(out)


def _preorder_renumber(children, single_side):
    n = len(children)
    parent: list[Optional[int]] = [None] * n
    for v, cs in enumerate(children):
        for c in cs:
            parent[c] = v
    roots = [v for v in range(n) if parent[v] is None]
    if len(roots) != 1:
        raise ValueError("tree must have exactly one root")
    order: list[int] = []
    stack = [roots[0]]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(children[v]))
    if len(order) != n:
        raise ValueError("node ids must be 0..n-1 reachable from the root")
    new_id = [0] * n
    for new, old in enumerate(order):
        new_id[old] = new
    new_children: list[list[int]] = [[] for _ in range(n)]
    new_side: list[Optional[int]] = [None] * n
    for old in range(n):
        new_children[new_id[old]] = [new_id[c] for c in children[old]]
        new_side[new_id[old]] = single_side[old]
    return new_children, new_side


# -- generators -------------------------------------------------------------


def generate_tree(n: int, model: str, seed: int = 0) -> Tree:
    """Deterministic tree corpus generator; identical (n, model, seed) yield
    identical trees."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if model == "path":
        children = [[i + 1] for i in range(n - 1)] + [[]]
        side = [LEFT] * (n - 1) + [None]
        return Tree(children, side)
    if model == "star":
        children = [list(range(1, n))] + [[] for _ in range(n - 1)]
        side = [None] * n
        if n == 2:
            side[0] = LEFT
        return Tree(children, side)
    if model == "caterpillar":
        return _caterpillar(n)
    if model == "uniform-attachment":
        rng = random.Random(seed)
        children: list[list[int]] = [[] for _ in range(n)]
        for v in range(1, n):
            children[rng.randrange(v)].append(v)
        return Tree(children)
    if model == "random-binary":
        return _random_binary(n, seed)
    raise ValueError(f"unknown model {model!r}; choose from {GENERATOR_MODELS}")


def _caterpillar(n: int) -> Tree:
    # spine of ceil(n/2) nodes, one leaf hung on each spine node front-to-back
    m = (n + 1) // 2
    children: list[list[int]] = [[] for _ in range(n)]
    side: list[Optional[int]] = [None] * n
    spine = list(range(m))
    leaves = list(range(m, n))
    for i, v in enumerate(spine):
        kids = []
        if i < len(leaves):
            kids.append(leaves[i])
        if i + 1 < m:
            kids.append(spine[i + 1])
        children[v] = kids
        if len(kids) == 1:
            side[v] = LEFT if kids[0] in leaves else RIGHT
    return Tree(children, side)


def _random_binary(n: int, seed: int) -> Tree:
    rng = random.Random(seed)
    slot_of: dict[int, list[Optional[int]]] = {0: [None, None]}
    open_slots: list[tuple[int, int]] = [(0, LEFT), (0, RIGHT)]
    for v in range(1, n):
        idx = rng.randrange(len(open_slots))
        p, side = open_slots.pop(idx)
        slot_of[p][side] = v
        slot_of[v] = [None, None]
        open_slots.append((v, LEFT))
        open_slots.append((v, RIGHT))
    children: list[list[int]] = [[] for _ in range(n)]
    sides: list[Optional[int]] = [None] * n
    for v in range(n):
        l, r = slot_of[v]
        kids = [c for c in (l, r) if c is not None]
        children[v] = kids
        if len(kids) == 1:
            sides[v] = LEFT if l is not None else RIGHT
    return Tree(children, sides)
