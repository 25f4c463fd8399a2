"""Islands, crossing palindromes, domination and representatives.

An island is a connected component of fingerprint pairs under interval
intersection, spanning from its smallest start to its largest end. Positions
no pair covers form trivial one-position islands.
"""

from __future__ import annotations

from dataclasses import dataclass

from palfp.errors import InvalidFingerprint, NotCrossing
from palfp.reconstruct import sigma, validate
from palfp.strings import Fingerprint, PalDescriptor


@dataclass(frozen=True)
class Island:
    start: int
    end: int
    members: tuple[PalDescriptor, ...] = ()

    @property
    def trivial(self) -> bool:
        return not self.members

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def __str__(self) -> str:
        return f"island {self.start} {self.end} members={len(self.members)}"


def _require_valid(f: Fingerprint) -> None:
    report = validate(f)
    if not report.valid:
        raise InvalidFingerprint(report)


def _islands(f: Fingerprint) -> list[Island]:
    # Sorted by start, a component closes once the next pair begins past its reach.
    out: list[Island] = []
    group: list[PalDescriptor] = []
    reach = 0
    covered_to = 0

    def flush():
        nonlocal covered_to
        if group:
            start = group[0].start
            for pos in range(covered_to + 1, start):
                out.append(Island(pos, pos))
            out.append(Island(start, reach, tuple(group)))
            covered_to = reach

    for pair in f.pairs:
        if group and pair.start > reach:
            flush()
            group = []
        group.append(pair)
        reach = max(reach, pair.end) if len(group) > 1 else pair.end
    flush()
    for pos in range(covered_to + 1, f.n + 1):
        out.append(Island(pos, pos))
    return out


def islands(f: Fingerprint) -> list[Island]:
    _require_valid(f)
    return _islands(f)


def is_crossing(p1, p2) -> bool:
    p1, p2 = PalDescriptor(*p1), PalDescriptor(*p2)
    return p1.start < p2.start <= p1.end < p2.end


def crossing_pairs(f: Fingerprint) -> list[tuple[PalDescriptor, PalDescriptor]]:
    return [(a, b) for a in f.pairs for b in f.pairs if is_crossing(a, b)]


def dominated(p1, p2) -> bool:
    """Whether crossing palindrome ``p2`` has its center inside ``p1``."""
    p1, p2 = PalDescriptor(*p1), PalDescriptor(*p2)
    if not is_crossing(p1, p2):
        raise NotCrossing(f"{tuple(p1)} and {tuple(p2)} are not crossing")
    return p1.start <= p2.center <= p1.end


def representatives(f: Fingerprint) -> dict[int, PalDescriptor]:
    _require_valid(f)
    outer = [p for p in f.pairs if not any(q != p and q.contains(p) for q in f.pairs)]
    reps: dict[int, PalDescriptor] = {}
    for pos in range(1, f.n + 1):
        holding = [p for p in outer if p.covers(pos)]
        if holding:
            reps[pos] = min(holding, key=lambda p: p.end)
    return reps


def island_fingerprint(isl: Island) -> Fingerprint:
    """The island's members re-indexed to start at 1."""
    shift = isl.start - 1
    return Fingerprint(isl.length, tuple((i - shift, j - shift) for i, j in isl.members))


def island_sigma(f: Fingerprint, isl: Island) -> int:
    """Symbols needed to reconstruct the island honoring only constraints inside it."""
    _require_valid(f)
    return sigma(island_fingerprint(isl))


def _max_island_sigma(f: Fingerprint) -> int:
    return max(sigma(island_fingerprint(isl)) for isl in _islands(f))


def check_decomposition_bound(f: Fingerprint) -> bool:
    _require_valid(f)
    if f.n == 0:
        return True
    return sigma(f) <= _max_island_sigma(f) + 2


def decomposition_excess(f: Fingerprint) -> int:
    """``sigma(f)`` minus the largest standalone island degree."""
    _require_valid(f)
    if f.n == 0:
        return 0
    return sigma(f) - _max_island_sigma(f)
