"""Unit conventions and physical constants shared by all channel models.

Only two conventions are supported: SI (CODATA hbar in joule-seconds) and
natural units (hbar = 1). Every physics routine takes an explicit
:class:`Constants` argument, so a single computation is always tagged with
exactly one convention.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

#: CODATA value of the reduced Planck constant, J*s.
HBAR_SI = 1.054571817e-34


class UnitMode(enum.Enum):
    SI = "si"
    NATURAL = "natural"


@dataclass(frozen=True)
class Constants:
    """Physical constants under one unit convention."""

    hbar: float
    mode: UnitMode

    def __post_init__(self) -> None:
        if self.hbar <= 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


_SI = Constants(hbar=HBAR_SI, mode=UnitMode.SI)
_NATURAL = Constants(hbar=1.0, mode=UnitMode.NATURAL)


def constants_for(mode: UnitMode) -> Constants:
    """Return the constants for a unit mode (hbar = 1 in natural units)."""
    if mode is UnitMode.SI:
        return _SI
    if mode is UnitMode.NATURAL:
        return _NATURAL
    raise ValueError(f"unknown unit mode: {mode!r}")
