"""Cost caps for the enumeration engines.

Every exhaustive sweep in the package is guarded by an explicit cap so that a
typo'd parameter set fails fast instead of grinding.  The caps below are the
module defaults; the claim runner swaps in tighter or looser budgets, and the
``CODESCOPE_CAP`` environment variable overrides the default full-sweep cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

#: Full vector-space sweep (q^n) for coset weight tables.
DEFAULT_PRIMAL_CAP = 2 ** 31
#: Syndrome-space size (q^(n-k)) for the covering-radius sweep.
DEFAULT_SYNDROME_CAP = 2 ** 24
#: Codeword enumeration (q^k, or q^(n-k) through the dual).
DEFAULT_ENUM_CAP = 10 ** 8
#: Dual-character engine work, q^(n-k) cosets times q^(n-k) dual words.
DEFAULT_DUAL_CHAR_CAP = 2 ** 31


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what} needs {needed} > cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


def default_primal_cap() -> int:
    """Default full-sweep cap, honouring the CODESCOPE_CAP override."""
    raw = os.environ.get("CODESCOPE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"CODESCOPE_CAP={raw!r} is not an integer") from exc
    return DEFAULT_PRIMAL_CAP


@dataclass(frozen=True)
class CostBudget:
    """Cap set used by the claim runner.

    ``default`` covers every sweep up to the 134M-vector full table of a
    [9,2,8] code over GF(8); ``high`` additionally admits the billion-vector
    table of the [10,3,8] code over GF(8); ``low`` keeps everything instant.
    """

    name: str
    primal_cap: int
    enum_cap: int
    dual_char_cap: int
    syndrome_cap: int


BUDGETS = {
    "low": CostBudget("low", 2 ** 20, 10 ** 6, 2 ** 24, 2 ** 20),
    "default": CostBudget("default", 2 ** 27, 10 ** 8, 2 ** 31, 2 ** 24),
    "high": CostBudget("high", 2 ** 31, 10 ** 8, 2 ** 31, 2 ** 24),
}


def budget(name: str) -> CostBudget:
    try:
        return BUDGETS[name]
    except KeyError:
        raise ValueError(f"unknown cost budget {name!r}; choose from {sorted(BUDGETS)}")
