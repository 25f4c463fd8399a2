"""Exception types raised by palfp."""

from __future__ import annotations


class PalfpError(Exception):
    """Base class for every error raised by this package."""


class InvalidCharacter(PalfpError, ValueError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class FingerprintSyntaxError(PalfpError, ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class RangeError(PalfpError, ValueError):
    pass


class DuplicatePair(PalfpError, ValueError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"duplicate pair {tuple(pair)}")


class DuplicateCenter(PalfpError, ValueError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f"pairs {tuple(first)} and {tuple(second)} share center {(first[0] + first[1]) / 2:g}"
        )


class InvalidFingerprint(PalfpError):
    """The fingerprint has no preimage; ``report`` says why."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.describe())


class OutOfRange(PalfpError):
    def __init__(self, k: int, minimum: int, maximum: int):
        self.k = k
        self.min = minimum
        self.max = maximum
        super().__init__(f"k={k} is outside the achievable range [{minimum},{maximum}]")


class ResourceLimit(PalfpError):
    pass


class ColoringMismatch(PalfpError, ValueError):
    pass


class InconsistentText(PalfpError, ValueError):
    pass


class NotCrossing(PalfpError, ValueError):
    pass


class SelfLoopPresent(PalfpError, ValueError):
    pass
