"""Unit system scale factors.

Internally everything runs in natural units (c = 1, hbar = 1); a
``UnitSystem`` only rescales quantities on the way in and out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class UnitSystem:
    """Speed of light and reduced Planck constant as dimensionless scales."""

    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.c <= 0 or self.hbar <= 0:
            raise ValueError("c and hbar must be positive")

    @property
    def h(self) -> float:
        """Planck constant, 2*pi*hbar."""
        return 2.0 * math.pi * self.hbar


#: Default natural units, c = hbar = 1.
NATURAL = UnitSystem()
