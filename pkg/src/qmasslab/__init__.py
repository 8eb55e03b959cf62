"""Numerical laboratory for the rest mass of interfering light.

Subpackages: ``wavecore`` (plane waves, boosts, measurement oracles),
``qmass`` (four-momentum algebra), ``doubleslit`` (two-slit local mass
field and trajectories), ``boxwell`` (bidirectional waves in an infinite
well), ``scenarios``/``cli`` (orchestration and export).
"""

from . import boxwell, cli, doubleslit, qmass, scenarios, wavecore
from .units import NATURAL, UnitSystem
from .wavecore import BidirectionalWave, PlaneWave, Superposition

__version__ = "0.1.0"

__all__ = [
    "NATURAL",
    "UnitSystem",
    "PlaneWave",
    "Superposition",
    "BidirectionalWave",
    "wavecore",
    "qmass",
    "doubleslit",
    "boxwell",
    "scenarios",
    "cli",
]
