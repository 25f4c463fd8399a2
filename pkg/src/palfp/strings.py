"""Texts, palindromic descriptors and fingerprints.

Positions are 1-based wherever they cross the public API. A text is a tuple
of non-negative symbol ids; ids 0..25 render as ``a``..``z``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from palfp.errors import (
    DuplicatePair,
    FingerprintSyntaxError,
    InvalidCharacter,
    RangeError,
)

LETTERS = string.ascii_lowercase


@dataclass(frozen=True)
class Text:
    symbols: tuple[int, ...] = ()

    def __post_init__(self):
        symbols = tuple(self.symbols)
        for s in symbols:
            if not isinstance(s, int) or s < 0:
                raise ValueError(f"symbol ids must be non-negative integers, got {s!r}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def of(cls, value) -> Text:
        """Coerce a letters string, a Text or an iterable of ids."""
        if isinstance(value, Text):
            return value
        if isinstance(value, str):
            return parse_text(value, "letters")
        return cls(tuple(value))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def at(self, pos: int) -> int:
        if not 1 <= pos <= len(self.symbols):
            raise IndexError(f"position {pos} outside 1..{len(self.symbols)}")
        return self.symbols[pos - 1]

    @property
    def alphabet_size(self) -> int:
        return len(set(self.symbols))

    def fits_letters(self) -> bool:
        return all(s < len(LETTERS) for s in self.symbols)

    def __str__(self) -> str:
        mode = "letters" if self.fits_letters() else "int-tokens"
        return serialize_text(self, mode)


class PalDescriptor(NamedTuple):
    """Inclusive interval ``start..end``; ``end == start - 1`` is the empty palindrome."""

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def center(self) -> float:
        return (self.start + self.end) / 2

    @property
    def center2(self) -> int:
        """Twice the center, so even and odd centers are both integers."""
        return self.start + self.end

    def contains(self, other: PalDescriptor) -> bool:
        return self.start <= other.start and other.end <= self.end

    def covers(self, pos: int) -> bool:
        return self.start <= pos <= self.end


def trivial_palindrome(center2: int) -> PalDescriptor:
    """Length-1 palindrome at an odd center, empty palindrome at an even gap."""
    if center2 % 2 == 0:
        return PalDescriptor(center2 // 2, center2 // 2)
    return PalDescriptor(center2 // 2 + 1, center2 // 2)


@dataclass(frozen=True)
class CenterTable:
    """The maximal palindrome at each of the ``2n - 1`` centers.

    ``entries[k]`` belongs to the doubled center ``k + 2``.
    """

    n: int
    entries: tuple[PalDescriptor, ...]

    def at(self, center2: int) -> PalDescriptor:
        if not 2 <= center2 <= 2 * self.n:
            raise IndexError(f"doubled center {center2} outside 2..{2 * self.n}")
        return self.entries[center2 - 2]

    def nontrivial(self) -> list[PalDescriptor]:
        return [p for p in self.entries if p.length >= 2]


@dataclass(frozen=True)
class Fingerprint:
    """String length plus the maximal palindromes of length at least 2.

    Construction checks ranges and sorts the pairs; it does not reject two
    pairs sharing a center, since such inputs are legitimately fed to the
    constraint builder (which rejects them with ``DuplicateCenter``).
    """

    n: int
    pairs: tuple[PalDescriptor, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise RangeError(f"length must be non-negative, got {self.n}")
        pairs = []
        for pair in self.pairs:
            i, j = pair
            if not (1 <= i < j <= self.n):
                raise RangeError(f"pair ({i},{j}) violates 1 <= i < j <= {self.n}")
            pairs.append(PalDescriptor(i, j))
        pairs.sort()
        for a, b in zip(pairs, pairs[1:]):
            if a == b:
                raise DuplicatePair(a)
        object.__setattr__(self, "pairs", tuple(pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        return PalDescriptor(*pair) in self.pairs

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(tuple(p) for p in self.pairs)

    def __str__(self) -> str:
        body = ",".join(f"({i},{j})" for i, j in self.pairs)
        return f"n={self.n} {{{body}}}"


def maximal_palindromes(text) -> CenterTable:
    """Manacher's algorithm over the separator-interleaved text.

    Index ``k`` of the interleaved sequence corresponds to doubled center
    ``k + 1``; its radius there equals the palindrome length in the text.
    """
    symbols = Text.of(text).symbols
    n = len(symbols)
    if n == 0:
        return CenterTable(0, ())
    t = [-1] * (2 * n + 1)
    t[1::2] = symbols
    m = len(t)
    radius = [0] * m
    center = right = 0
    for k in range(m):
        r = min(radius[2 * center - k], right - k) if k < right else 0
        while k - r - 1 >= 0 and k + r + 1 < m and t[k - r - 1] == t[k + r + 1]:
            r += 1
        radius[k] = r
        if k + r > right:
            center, right = k, k + r
    entries = []
    for center2 in range(2, 2 * n + 1):
        length = radius[center2 - 1]
        start = (center2 - length + 1) // 2
        entries.append(PalDescriptor(start, start + length - 1))
    return CenterTable(n, tuple(entries))


def fingerprint_of(text) -> Fingerprint:
    table = maximal_palindromes(text)
    return Fingerprint(table.n, tuple(table.nontrivial()))


def canonicalize(text) -> Text:
    """Relabel symbols by first occurrence (restricted-growth form)."""
    relabel: dict[int, int] = {}
    return Text(tuple(relabel.setdefault(s, len(relabel)) for s in Text.of(text)))


def param_match(a, b) -> bool:
    return canonicalize(a) == canonicalize(b)


def parse_text(data: str | bytes, mode: str = "letters") -> Text:
    """Parse ``letters`` ([a-z], surrounding whitespace ignored) or ``int-tokens``.

    Error positions are 1-based character offsets into the stripped input for
    letters and 1-based token indices for int-tokens.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if mode == "letters":
        body = data.strip()
        symbols = []
        for pos, ch in enumerate(body, start=1):
            if not ("a" <= ch <= "z"):
                raise InvalidCharacter(pos, ch)
            symbols.append(ord(ch) - ord("a"))
        return Text(tuple(symbols))
    if mode == "int-tokens":
        symbols = []
        for pos, token in enumerate(data.split(), start=1):
            if not token.isdigit() or not token.isascii():
                raise InvalidCharacter(pos, token)
            symbols.append(int(token))
        return Text(tuple(symbols))
    raise ValueError(f"unknown text mode {mode!r}")


def serialize_text(text, mode: str = "letters") -> str:
    symbols = Text.of(text).symbols
    if mode == "auto":
        mode = "letters" if all(s < len(LETTERS) for s in symbols) else "int-tokens"
    if mode == "letters":
        if any(s >= len(LETTERS) for s in symbols):
            raise ValueError("text uses more than 26 symbols; use int-tokens")
        return "".join(LETTERS[s] for s in symbols)
    if mode == "int-tokens":
        return " ".join(map(str, symbols))
    raise ValueError(f"unknown text mode {mode!r}")


def parse_fingerprint(data: str | bytes) -> Fingerprint:
    """Read the FPRINT v1 format: ``#`` comments, ``n <N>``, then ``<i> <j>`` lines."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    n = None
    pairs: list[PalDescriptor] = []
    seen: set[PalDescriptor] = set()
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise FingerprintSyntaxError(lineno, f"expected 'n <N>', got {line!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise FingerprintSyntaxError(lineno, f"expected '<i> <j>', got {line!r}")
        pair = PalDescriptor(int(fields[0]), int(fields[1]))
        if not (1 <= pair.start < pair.end <= n):
            raise RangeError(f"line {lineno}: pair {tuple(pair)} violates 1 <= i < j <= {n}")
        if pair in seen:
            raise DuplicatePair(pair)
        seen.add(pair)
        pairs.append(pair)
    if n is None:
        raise FingerprintSyntaxError(0, "missing 'n <N>' header")
    return Fingerprint(n, tuple(pairs))


def serialize_fingerprint(f: Fingerprint) -> str:
    lines = [f"n {f.n}"]
    lines.extend(f"{i} {j}" for i, j in f.pairs)
    return "\n".join(lines) + "\n"


def make_fingerprint(n: int, pairs: Iterable[tuple[int, int]] = ()) -> Fingerprint:
    return Fingerprint(n, tuple(pairs))
