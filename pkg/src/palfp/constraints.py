"""Equality/inequality constraints of a fingerprint and its restriction graph.

Every pair ``(i, j)`` forces ``S[i + r] == S[j - r]`` and, if both indices
exist, ``S[i - 1] != S[j + 1]``. Centers without a pair hold a trivial
palindrome, which still forbids its one-step extension. Positions that are
forced equal collapse into one vertex; inequalities become edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from palfp.errors import ColoringMismatch, DuplicateCenter
from palfp.strings import Fingerprint, PalDescriptor, trivial_palindrome

EQUALITY = "equality"
INEQUALITY = "inequality"

# Graphviz X11 color names, cycled when a coloring uses more colors.
PALETTE = (
    "lightblue", "salmon", "palegreen", "gold", "plum", "orange", "lightgray",
    "turquoise", "pink", "khaki", "tan", "lightcyan",
)


class ConstraintPair(NamedTuple):
    kind: str
    p: int
    q: int

    @property
    def positions(self) -> tuple[int, int]:
        return (self.p, self.q)


class EqualityPartition:
    """Disjoint-set forest over positions 1..n whose roots are class minima."""

    def __init__(self, n: int):
        self.n = n
        self._parent = list(range(n + 1))

    def find(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} outside 1..{self.n}")
        root = pos
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[pos] != root:
            self._parent[pos], pos = root, self._parent[pos]
        return root

    def union(self, p: int, q: int) -> int:
        a, b = self.find(p), self.find(q)
        if a == b:
            return a
        lo, hi = (a, b) if a < b else (b, a)
        self._parent[hi] = lo
        return lo

    def classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted position tuples, ordered by their minimum."""
        members: dict[int, list[int]] = {}
        for pos in range(1, self.n + 1):
            members.setdefault(self.find(pos), []).append(pos)
        return [tuple(members[root]) for root in sorted(members)]


def center_pairs(f: Fingerprint) -> dict[int, PalDescriptor]:
    """Map doubled center to the fingerprint pair sitting there."""
    by_center: dict[int, PalDescriptor] = {}
    for pair in f.pairs:
        other = by_center.get(pair.center2)
        if other is not None:
            raise DuplicateCenter(other, pair)
        by_center[pair.center2] = pair
    return by_center


def derive_equalities(f: Fingerprint) -> list[ConstraintPair]:
    out = []
    for i, j in f.pairs:
        while i < j:
            out.append(ConstraintPair(EQUALITY, i, j))
            i, j = i + 1, j - 1
    return out


def _inequalities_with_origin(f: Fingerprint) -> list[tuple[ConstraintPair, bool]]:
    """Inequalities in center order, flagged True when a fingerprint pair emitted them."""
    by_center = center_pairs(f)
    out = []
    for center2 in range(2, 2 * f.n + 1):
        pal = by_center.get(center2)
        explicit = pal is not None
        if pal is None:
            pal = trivial_palindrome(center2)
        p, q = pal.start - 1, pal.end + 1
        if p >= 1 and q <= f.n:
            out.append((ConstraintPair(INEQUALITY, p, q), explicit))
    return out


def derive_inequalities(f: Fingerprint) -> list[ConstraintPair]:
    return [c for c, _ in _inequalities_with_origin(f)]


@dataclass(frozen=True)
class RestrictionGraph:
    n: int
    vertices: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]
    self_loop: ConstraintPair | None = None
    vertex_of: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_for(self, pos: int) -> int:
        """Index of the vertex holding 1-based position ``pos``."""
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} outside 1..{self.n}")
        return self.vertex_of[pos - 1]

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_complete(self) -> bool:
        v = len(self.vertices)
        return len(self.edges) == v * (v - 1) // 2


def graph_from_edges(num_vertices: int, edges) -> RestrictionGraph:
    """A bare graph with singleton vertices; used for testing the coloring oracles."""
    norm = frozenset((min(a, b), max(a, b)) for a, b in edges)
    if any(a == b for a, b in norm):
        raise ValueError("self-loops are not edges")
    return RestrictionGraph(
        n=num_vertices,
        vertices=tuple((i + 1,) for i in range(num_vertices)),
        edges=norm,
        vertex_of=tuple(range(num_vertices)),
    )


def build_restriction_graph(f: Fingerprint) -> RestrictionGraph:
    """Collapse equality classes and connect classes forced to differ.

    If an inequality falls inside one class, the graph records a self-loop
    witness instead of an edge. Witnesses emitted by a fingerprint pair's
    maximality are preferred over those of trivial centers; within each
    group the leftmost center wins.
    """
    partition = EqualityPartition(f.n)
    for c in derive_equalities(f):
        partition.union(c.p, c.q)
    vertices = partition.classes()
    vertex_of = [0] * f.n
    for idx, members in enumerate(vertices):
        for pos in members:
            vertex_of[pos - 1] = idx

    edges = set()
    explicit_loop = trivial_loop = None
    for c, explicit in _inequalities_with_origin(f):
        a, b = vertex_of[c.p - 1], vertex_of[c.q - 1]
        if a == b:
            if explicit and explicit_loop is None:
                explicit_loop = c
            elif not explicit and trivial_loop is None:
                trivial_loop = c
            continue
        edges.add((min(a, b), max(a, b)))
    return RestrictionGraph(
        n=f.n,
        vertices=tuple(vertices),
        edges=frozenset(edges),
        self_loop=explicit_loop or trivial_loop,
        vertex_of=tuple(vertex_of),
    )


def has_self_loop(g: RestrictionGraph) -> ConstraintPair | None:
    return g.self_loop


def export_dot(g: RestrictionGraph, coloring=None) -> str:
    """Render an undirected DOT document; ``coloring`` may be a Coloring or a color list."""
    colors = None
    if coloring is not None:
        colors = list(getattr(coloring, "colors", coloring))
        if len(colors) != len(g.vertices):
            raise ColoringMismatch(
                f"coloring covers {len(colors)} vertices, graph has {len(g.vertices)}"
            )
    lines = ["graph restriction {"]
    for idx, members in enumerate(g.vertices):
        label = ",".join(map(str, members))
        attrs = f'label="{label}"'
        if colors is not None:
            attrs += f",style=filled,fillcolor={PALETTE[colors[idx] % len(PALETTE)]}"
        lines.append(f"  v{idx + 1} [{attrs}];")
    for a, b in sorted(g.edges):
        lines.append(f"  v{a + 1} -- v{b + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
