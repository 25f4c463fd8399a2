"""Resource caps.

Defaults can be overridden through the environment:

    PALFP_MAX_STRING_N   longest length for raw canonical-string enumeration (12)
    PALFP_MAX_VERIFY_N   longest length for the verify_* sweeps (10)
    PALFP_MAX_VERTICES   largest graph handed to the exact chromatic oracle (24)
    PALFP_MAX_ZIMIN_K    largest Zimin / optimal-string order (20)

The CLI exposes the same knobs as flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    max_string_n: int = 12
    max_verify_n: int = 10
    max_vertices: int = 24
    max_zimin_k: int = 20

    def __post_init__(self):
        for name in ("max_string_n", "max_verify_n", "max_vertices", "max_zimin_k"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, environ=None) -> Limits:
        environ = os.environ if environ is None else environ
        overrides = {}
        for field in ("max_string_n", "max_verify_n", "max_vertices", "max_zimin_k"):
            raw = environ.get("PALFP_" + field.upper())
            if raw:
                overrides[field] = int(raw)
        return replace(cls(), **overrides)


def resolve(limits: Limits | None) -> Limits:
    return Limits.from_env() if limits is None else limits
