"""Rebuilding strings from fingerprints by coloring the restriction graph."""

from __future__ import annotations

from dataclasses import dataclass

from palfp.constraints import (
    ConstraintPair,
    INEQUALITY,
    RestrictionGraph,
    build_restriction_graph,
)
from palfp.errors import (
    DuplicateCenter,
    InconsistentText,
    InvalidFingerprint,
    OutOfRange,
)
from palfp.strings import Fingerprint, Text, canonicalize, fingerprint_of

VALID = "valid"
INVALID = "invalid"


@dataclass(frozen=True)
class Coloring:
    graph: RestrictionGraph
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != len(self.graph.vertices):
            raise ValueError("coloring must cover every vertex")
        for a, b in self.graph.edges:
            if colors[a] == colors[b]:
                raise ValueError(f"improper coloring: vertices {a} and {b} share color {colors[a]}")
        if set(colors) != set(range(len(set(colors)))):
            raise ValueError("color ids must form a prefix 0..k-1")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class SelfLoop:
    witness: ConstraintPair

    def describe(self) -> str:
        return (
            f"self-loop: inequality S[{self.witness.p}] != S[{self.witness.q}] "
            "joins positions that are forced equal"
        )


@dataclass(frozen=True)
class RoundTripMismatch:
    extra: tuple[tuple[int, int], ...]
    missing: tuple[tuple[int, int], ...]

    def describe(self) -> str:
        return f"round trip mismatch: extra pairs {list(self.extra)}, missing pairs {list(self.missing)}"


@dataclass(frozen=True)
class ValidationReport:
    verdict: str
    reason: SelfLoop | RoundTripMismatch | None = None

    def __post_init__(self):
        if (self.verdict == VALID) != (self.reason is None):
            raise ValueError("a valid report has no reason, an invalid one exactly one")

    @property
    def valid(self) -> bool:
        return self.verdict == VALID

    def describe(self) -> str:
        return VALID if self.reason is None else f"{INVALID}: {self.reason.describe()}"


def greedy_coloring(g: RestrictionGraph) -> Coloring:
    """Color vertices by increasing class minimum with the smallest free color."""
    adj = g.adjacency()
    colors = [-1] * len(g.vertices)
    for v in range(len(g.vertices)):
        used = {colors[u] for u in adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(g, tuple(colors))


def coloring_to_string(c: Coloring) -> Text:
    return Text(tuple(c.colors[v] for v in c.graph.vertex_of))


def string_to_coloring(t, g: RestrictionGraph) -> Coloring:
    t = Text.of(t)
    if len(t) != g.n:
        raise InconsistentText(f"text has length {len(t)}, graph covers {g.n} positions")
    relabel: dict[int, int] = {}
    colors = []
    for members in g.vertices:
        symbol = t.at(members[0])
        for pos in members[1:]:
            if t.at(pos) != symbol:
                raise InconsistentText(
                    f"positions {members[0]} and {pos} share a class but differ in the text"
                )
        colors.append(relabel.setdefault(symbol, len(relabel)))
    try:
        return Coloring(g, tuple(colors))
    except ValueError as exc:
        raise InconsistentText(str(exc)) from exc


def _duplicate_center_witness(exc: DuplicateCenter) -> ConstraintPair:
    # Of two pairs on one center, the shorter one's extension lies inside the longer.
    inner = min(exc.first, exc.second, key=lambda p: p[1] - p[0])
    return ConstraintPair(INEQUALITY, inner[0] - 1, inner[1] + 1)


def _attempt(f: Fingerprint) -> tuple[ValidationReport, Coloring | None]:
    try:
        g = build_restriction_graph(f)
    except DuplicateCenter as exc:
        return ValidationReport(INVALID, SelfLoop(_duplicate_center_witness(exc))), None
    if g.self_loop is not None:
        return ValidationReport(INVALID, SelfLoop(g.self_loop)), None
    coloring = greedy_coloring(g)
    got = fingerprint_of(coloring_to_string(coloring))
    if got != f:
        want, have = f.as_set(), got.as_set()
        reason = RoundTripMismatch(tuple(sorted(have - want)), tuple(sorted(want - have)))
        return ValidationReport(INVALID, reason), None
    return ValidationReport(VALID), coloring


def validate(f: Fingerprint) -> ValidationReport:
    return _attempt(f)[0]


def _checked_coloring(f: Fingerprint) -> Coloring:
    report, coloring = _attempt(f)
    if coloring is None:
        raise InvalidFingerprint(report)
    return coloring


def greedy_reconstruct(f: Fingerprint) -> Text:
    """Lexicographically least preimage over a minimum alphabet."""
    return coloring_to_string(_checked_coloring(f))


def sigma(f: Fingerprint) -> int:
    """Reconstruction degree: the fewest symbols any preimage can use."""
    return _checked_coloring(f).num_colors


def exact_k_range(f: Fingerprint) -> tuple[int, int]:
    coloring = _checked_coloring(f)
    return coloring.num_colors, len(coloring.graph.vertices)


def reconstruct_exact_k(f: Fingerprint, k: int) -> Text:
    """A preimage with exactly ``k`` distinct symbols.

    Starts from the greedy coloring and repeatedly moves one vertex to a fresh
    color: from the lowest color shared by two or more vertices, the vertex
    with the largest class minimum.
    """
    coloring = _checked_coloring(f)
    colors = list(coloring.colors)
    low, high = coloring.num_colors, len(colors)
    if not low <= k <= high:
        raise OutOfRange(k, low, high)
    used = low
    while used < k:
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, []).append(v)
        shared = min(c for c, vs in counts.items() if len(vs) >= 2)
        colors[max(counts[shared])] = used
        used += 1
    return canonicalize(Text(tuple(colors[v] for v in coloring.graph.vertex_of)))
