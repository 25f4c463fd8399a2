"""Extremal strings and exhaustive checks of the alphabet-size bound.

The shortest fingerprint that needs ``k`` symbols has length ``2**(k-2) + 1``
(``1`` when ``k == 1``) and is realized by ``x Z y``, with ``Z`` the Zimin word
of order ``k - 2`` and ``x``, ``y`` two fresh symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from palfp.config import Limits, resolve
from palfp.constraints import RestrictionGraph, build_restriction_graph
from palfp.errors import ResourceLimit, SelfLoopPresent
from palfp.reconstruct import greedy_coloring, sigma
from palfp.strings import Fingerprint, Text, canonicalize, fingerprint_of


def zimin(k: int, limits: Limits | None = None) -> Text:
    if k < 1:
        raise ValueError("zimin order must be at least 1")
    cap = resolve(limits).max_zimin_k
    if k > cap:
        raise ResourceLimit(f"zimin order {k} exceeds cap {cap}")
    word: list[int] = []
    for symbol in range(k):
        word = word + [symbol] + word
    return Text(tuple(word))


def optimal_string(k: int, limits: Limits | None = None) -> Text:
    if k < 3:
        raise ValueError("optimal strings are defined for k >= 3")
    core = [s + 1 for s in zimin(k - 2, limits)]
    return canonicalize(Text(tuple([0] + core + [k - 1])))


def ipf(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return 1 if k == 1 else 2 ** (k - 2) + 1


def _max_clique_greedy(adj: list[set[int]]) -> int:
    best = 0
    for seed in range(len(adj)):
        clique = [seed]
        for v in sorted(adj[seed], key=lambda u: -len(adj[u])):
            if all(v in adj[u] for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def _colorable(adj: list[set[int]], k: int) -> bool:
    colors = [-1] * len(adj)

    def place(v: int, used: int) -> bool:
        if v == len(adj):
            return True
        forbidden = {colors[u] for u in adj[v]}
        # Colors beyond ``used`` are interchangeable, so try only one of them.
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                colors[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number_exact(g: RestrictionGraph, limits: Limits | None = None) -> int:
    """Exact chromatic number by backtracking between clique and greedy bounds."""
    if g.self_loop is not None:
        raise SelfLoopPresent(f"graph has self-loop {tuple(g.self_loop.positions)}")
    cap = resolve(limits).max_vertices
    if len(g.vertices) > cap:
        raise ResourceLimit(f"{len(g.vertices)} vertices exceeds cap {cap}")
    if not g.vertices:
        return 0
    adj = g.adjacency()
    lower = _max_clique_greedy(adj)
    upper = greedy_coloring(g).num_colors
    for k in range(lower, upper):
        if _colorable(adj, k):
            return k
    return upper


def enumerate_canonical_strings(n: int, limits: Limits | None = None) -> Iterator[Text]:
    """Restricted-growth strings of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("length must be non-negative")
    cap = resolve(limits).max_string_n
    if n > cap:
        raise ResourceLimit(f"length {n} exceeds enumeration cap {cap}")
    if n == 0:
        yield Text(())
        return
    word = [0] * n
    # ``bound[i]`` = 1 + max(word[:i]), the largest symbol allowed at i.
    bound = [0] + [1] * (n - 1)
    while True:
        yield Text(tuple(word))
        i = n - 1
        while i > 0 and word[i] == bound[i]:
            i -= 1
        if i == 0:
            return
        word[i] += 1
        for j in range(i + 1, n):
            word[j] = 0
            bound[j] = max(bound[j - 1], word[j - 1] + 1)


def enumerate_fingerprints(n: int, limits: Limits | None = None) -> set[Fingerprint]:
    return {fingerprint_of(t) for t in enumerate_canonical_strings(n, limits)}


def _verify_cap(n_max: int, limits: Limits | None) -> None:
    cap = resolve(limits).max_verify_n
    if n_max > cap:
        raise ResourceLimit(f"n_max={n_max} exceeds verification cap {cap}")


@dataclass(frozen=True)
class IpfRow:
    n: int
    max_sigma: int
    count: int
    attained_by: tuple[Fingerprint, ...]


@dataclass(frozen=True)
class IpfReport:
    rows: tuple[IpfRow, ...]

    def row(self, n: int) -> IpfRow:
        return self.rows[n - 1]

    def first_length_reaching(self, k: int) -> int | None:
        for r in self.rows:
            if r.max_sigma >= k:
                return r.n
        return None

    def checks(self) -> list[tuple[int, int | None, int]]:
        """(k, empirical first length, formula) for every k the sweep can decide."""
        out = []
        top = self.rows[-1].max_sigma if self.rows else 0
        for k in range(1, top + 1):
            out.append((k, self.first_length_reaching(k), ipf(k)))
        # The sweep also decides that top + 1 is never reached up to n_max.
        out.append((top + 1, None, ipf(top + 1)))
        return out

    @property
    def monotone(self) -> bool:
        sigmas = [r.max_sigma for r in self.rows]
        return all(a <= b for a, b in zip(sigmas, sigmas[1:]))

    @property
    def holds(self) -> bool:
        n_max = self.rows[-1].n if self.rows else 0
        for k, first, formula in self.checks():
            expected = formula if formula <= n_max else None
            if first != expected:
                return False
        return self.monotone

    def table(self) -> str:
        lines = [f"{'n':>3} {'max_sigma':>9} {'attained_by':>11}"]
        lines += [f"{r.n:>3} {r.max_sigma:>9} {r.count:>11}" for r in self.rows]
        return "\n".join(lines) + "\n"

    def machine_lines(self) -> str:
        return "".join(
            f"n={r.n} max_sigma={r.max_sigma} attained_by={r.count}\n" for r in self.rows
        )


def _sigma_table(n: int, limits: Limits | None) -> dict[Fingerprint, int]:
    return {f: sigma(f) for f in enumerate_fingerprints(n, limits)}


def verify_ipf(n_max: int, limits: Limits | None = None) -> IpfReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    _verify_cap(n_max, limits)
    rows = []
    for n in range(1, n_max + 1):
        table = _sigma_table(n, limits)
        top = max(table.values())
        winners = tuple(sorted((f for f, s in table.items() if s == top), key=lambda f: f.pairs))
        rows.append(IpfRow(n, top, len(winners), winners))
    return IpfReport(tuple(rows))


def verify_uniqueness(k: int, limits: Limits | None = None) -> tuple[bool, list[Fingerprint]]:
    """True iff exactly one fingerprint of length ipf(k) needs k symbols and it is PF(S_k)."""
    if k < 3:
        raise ValueError("uniqueness is checked for k >= 3 only")
    n = ipf(k)
    _verify_cap(n, limits)
    witnesses = sorted(
        (f for f, s in _sigma_table(n, limits).items() if s >= k), key=lambda f: f.pairs
    )
    expected = fingerprint_of(optimal_string(k, limits))
    return witnesses == [expected], witnesses


def verify_clique(k: int, limits: Limits | None = None) -> bool:
    g = build_restriction_graph(fingerprint_of(optimal_string(k, limits)))
    return g.self_loop is None and len(g.vertices) == k and g.is_complete()


def log_bound(n: int) -> float:
    return math.log2(n - 1) + 2


def verify_log_bound(n_max: int, limits: Limits | None = None) -> bool:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    _verify_cap(n_max, limits)
    for n in range(2, n_max + 1):
        bound = log_bound(n)
        if any(s > bound for s in _sigma_table(n, limits).values()):
            return False
    return True
