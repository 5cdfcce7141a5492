"""Bicolored ordered rooted trees.

Every edge is black or gray and the size of a tree is its number of black
edges.  The family enumerated here is the set of trees in which

1. every nonleaf vertex has at least two black child edges,
2. gray child edges of a vertex all sit to the right of its black ones,
3. subtrees of a vertex have weakly decreasing sizes, left to right,
4. no leaf hangs from a gray edge.

Condition 3 compares *sizes* only.  Two sibling subtrees of equal size are
chosen independently from all trees of that size, in either order, so for
a root with subtree sizes (3, 3) there are a(3) * a(3) arrangements, not
a(3) * (a(3) + 1) / 2.  Treating equal-size siblings as a multiset is the
easiest way to miscount this family.

Text form (bit-exact, version 1)::

    tree := "(" edge* ")"
    edge := ("B" | "G") tree

so the singleton is ``()`` and the unique tree of size 2 is ``(B()B())``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import prod
from typing import Iterator

from .partitions import iter_partitions

SERIAL_FORMAT_VERSION = 1


class EdgeColor(str, enum.Enum):
    BLACK = "B"
    GRAY = "G"


BLACK = EdgeColor.BLACK
GRAY = EdgeColor.GRAY


@dataclass(frozen=True, slots=True)
class Tree:
    """Immutable ordered tree; ``children`` is a tuple of ``(EdgeColor, Tree)``."""

    children: tuple[tuple[EdgeColor, "Tree"], ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __str__(self) -> str:
        return serialize(self)


LEAF = Tree()


@dataclass(frozen=True)
class Violation:
    condition: int
    path: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        where = "root" if not self.path else "/".join(map(str, self.path))
        return f"condition {self.condition} at {where}: {self.detail}"


def _preorder(t: Tree) -> Iterator[tuple[tuple[int, ...], Tree, EdgeColor | None]]:
    """Yield ``(path, node, parent_edge_color)`` in preorder without recursion."""
    stack: list[tuple[tuple[int, ...], Tree, EdgeColor | None]] = [((), t, None)]
    while stack:
        path, node, color = stack.pop()
        yield path, node, color
        for i in range(len(node.children) - 1, -1, -1):
            c, child = node.children[i]
            stack.append((path + (i,), child, c))


def _subtree_sizes(t: Tree) -> dict[int, int]:
    """Black-edge count below every node, keyed by ``id(node)``."""
    order = [node for _, node, _ in _preorder(t)]
    sizes: dict[int, int] = {}
    for node in reversed(order):
        s = 0
        for c, child in node.children:
            s += sizes[id(child)]
            if c is BLACK:
                s += 1
        sizes[id(node)] = s
    return sizes


def size(t: Tree) -> int:
    """Number of black edges in ``t``."""
    return sum(1 for _, _, c in _preorder(t) if c is BLACK)


def gray_count(t: Tree) -> int:
    return sum(1 for _, _, c in _preorder(t) if c is GRAY)


def edge_count(t: Tree) -> int:
    return sum(1 for _, _, c in _preorder(t) if c is not None)


def _iter_violations(t: Tree) -> Iterator[Violation]:
    sizes = _subtree_sizes(t)
    for path, node, parent_color in _preorder(t):
        if node.is_leaf:
            if parent_color is GRAY:
                yield Violation(4, path, "leaf below a gray edge")
            continue
        colors = [c for c, _ in node.children]
        n_black = colors.count(BLACK)
        if n_black < 2:
            yield Violation(1, path, f"{n_black} black child edge(s), need >= 2")
        first_gray = colors.index(GRAY) if GRAY in colors else len(colors)
        if BLACK in colors[first_gray:]:
            yield Violation(2, path, "black child edge right of a gray one")
        child_sizes = [sizes[id(child)] for _, child in node.children]
        if any(x < y for x, y in zip(child_sizes, child_sizes[1:])):
            yield Violation(3, path, f"subtree sizes {child_sizes} not weakly decreasing")


def violations(t: Tree) -> list[Violation]:
    """Every violated condition, in preorder of the offending vertex."""
    return list(_iter_violations(t))


def _valid_size(node: Tree, below_gray: bool = False) -> int:
    """Size of ``node`` if its subtree satisfies all four conditions, else -1."""
    kids = node.children
    if not kids:
        return -1 if below_gray else 0
    n_black = 0
    seen_gray = False
    for c, _ in kids:
        if c is BLACK:
            if seen_gray:
                return -1
            n_black += 1
        else:
            seen_gray = True
    if n_black < 2:
        return -1
    total = n_black
    prev = -1
    for c, child in kids:
        s = _valid_size(child, c is GRAY)
        if s < 0 or (prev >= 0 and s > prev):
            return -1
        prev = s
        total += s
    return total


def is_valid(t: Tree) -> bool:
    try:
        return _valid_size(t) >= 0
    except RecursionError:
        return next(_iter_violations(t), None) is None


# -- structural enumeration ------------------------------------------------


def _root_shapes(n: int) -> Iterator[tuple[tuple[EdgeColor, ...], tuple[int, ...]]]:
    """Edge colors and subtree sizes of every admissible root, in emission order.

    With k black root edges the subtree sizes form a partition of n-k into
    parts >= 2.  If it has at most k parts the rest of the black edges end
    in leaves; if it has more, the surplus parts hang from gray edges.
    """
    for k in range(2, n + 1):
        for parts in iter_partitions(n - k, min_part=2):
            j = len(parts)
            if j <= k:
                yield (BLACK,) * k, parts + (0,) * (k - j)
            else:
                yield (BLACK,) * k + (GRAY,) * (j - k), parts


@lru_cache(maxsize=None)
def _structural(n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for colors, sizes in _root_shapes(n):
        pools = [_sorted_family(s) for s in sizes]
        for choice in product(*pools):
            out.append(Tree(tuple(zip(colors, choice))))
    return tuple(out)


@lru_cache(maxsize=None)
def _sorted_family(n: int) -> tuple[Tree, ...]:
    return tuple(sorted(_structural(n), key=serialize))


def enumerate_structural(n: int) -> list[Tree]:
    """All valid trees of size ``n``, each exactly once.

    Order: number of black root edges ascending, then root subtree sizes in
    reverse-lexicographic order, then the tuple of subtrees
    lexicographically by their serializations.
    """
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    return list(_structural(n))


@lru_cache(maxsize=None)
def count_structural(n: int) -> int:
    """``len(enumerate_structural(n))`` without building the trees."""
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    if n == 0:
        return 1
    return sum(prod(count_structural(s) for s in sizes) for _, sizes in _root_shapes(n))


@lru_cache(maxsize=None)
def count_no_gray(n: int) -> int:
    """Number of valid size-``n`` trees whose edges are all black."""
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    if n == 0:
        return 1
    total = 0
    for colors, sizes in _root_shapes(n):
        if GRAY in colors:
            continue
        total += prod(count_no_gray(s) for s in sizes)
    return total


# -- brute-force oracle ----------------------------------------------------


@lru_cache(maxsize=None)
def _forests(edges: int) -> tuple[tuple, ...]:
    """Uncolored ordered forests with ``edges`` edges, as nested tuples.

    A forest is a tuple of trees and a tree is the forest of its children.
    The first tree takes i edges plus the one joining it to the parent.
    """
    if edges == 0:
        return ((),)
    out = []
    for first in range(edges):
        for head in _forests(first):
            for tail in _forests(edges - 1 - first):
                out.append((head,) + tail)
    return tuple(out)


def _paint(shape: tuple, colors: list[EdgeColor], pos: list[int]) -> Tree:
    kids = []
    for child in shape:
        c = colors[pos[0]]
        pos[0] += 1
        kids.append((c, _paint(child, colors, pos)))
    return Tree(tuple(kids))


def enumerate_naive(n: int, max_total_edges: int | None = None) -> int:
    """Count valid size-``n`` trees by brute force.

    Every ordered tree with at most ``max_total_edges`` edges is generated
    (Catalan many per edge count) and every coloring of its edges is
    checked with ``is_valid``.  Colorings are generated by choosing which n
    edge positions are black, which is the same set as all 2**e colorings
    filtered to size n.

    The default bound is floor(3n/2).  Each gray edge ends in a nonleaf
    (condition 4) which owns at least two black edges (condition 1), and
    distinct gray edges own disjoint pairs, so there are at most n/2 gray
    edges and at most n + n/2 edges overall.

    Exponential; meant for n <= 7.
    """
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    if max_total_edges is None:
        max_total_edges = (3 * n) // 2
    if max_total_edges < 0:
        raise ValueError(f"max_total_edges must be >= 0, got {max_total_edges}")
    count = 0
    for e in range(n, max_total_edges + 1):
        for shape in _forests(e):
            for black in combinations(range(e), n):
                colors = [GRAY] * e
                for i in black:
                    colors[i] = BLACK
                t = _paint(shape, colors, [0])
                # One pass for both filters: -1 if invalid, else the size.
                if _valid_size(t) == n:
                    count += 1
    return count


# -- text and DOT ----------------------------------------------------------


class TreeParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def serialize(t: Tree) -> str:
    out: list[str] = []
    # Items are trees to open, or a color/")" string to emit verbatim.
    stack: list[Tree | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append("(")
        stack.append(")")
        for c, child in reversed(item.children):
            stack.append(child)
            stack.append(c.value)
    return "".join(out)


def deserialize(s: str) -> Tree:
    """Parse the text form.  Raises ``TreeParseError`` with a character offset."""
    if not s or s[0] != "(":
        raise TreeParseError("expected '('", 0)
    # Each frame is the child list of an open vertex plus the color of the
    # edge leading into it.
    frames: list[tuple[EdgeColor | None, list]] = [(None, [])]
    i = 1
    n = len(s)
    while True:
        if i >= n:
            raise TreeParseError("unexpected end of input", i)
        ch = s[i]
        if ch == ")":
            color, kids = frames.pop()
            node = Tree(tuple(kids))
            i += 1
            if not frames:
                if i != n:
                    raise TreeParseError("trailing characters", i)
                return node
            frames[-1][1].append((color, node))
        elif ch in "BG":
            if i + 1 >= n:
                raise TreeParseError("unexpected end of input", i + 1)
            if s[i + 1] != "(":
                raise TreeParseError("expected '(' after edge color", i + 1)
            frames.append((EdgeColor(ch), []))
            i += 2
        else:
            raise TreeParseError(f"unexpected character {ch!r}", i)


def to_dot(t: Tree, name: str = "tree") -> str:
    """Graphviz digraph; nodes are ``n<preorder index>``."""
    lines = [f"digraph {name} {{", "  node [shape=point];"]
    ids: dict[tuple[int, ...], int] = {}
    edges = []
    for idx, (path, _, color) in enumerate(_preorder(t)):
        ids[path] = idx
        lines.append(f"  n{idx};")
        if color is not None:
            parent = ids[path[:-1]]
            if color is BLACK:
                edges.append(f"  n{parent} -> n{idx} [color=black, style=solid];")
            else:
                edges.append(f"  n{parent} -> n{idx} [color=gray];")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
