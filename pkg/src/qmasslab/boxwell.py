"""Opposed bidirectional waves in an infinite well and the quantized modes.

Superposing the +v and -v frequency pairs, phased to vanish at x = 0,
gives the closed form (unit component amplitudes)

    F(x,t) = 4*[sin(kbar*x)*cos(dk*x)*cos(wbar*t)*cos(dw*t)
               - cos(kbar*x)*sin(dk*x)*sin(wbar*t)*sin(dw*t)]

with kbar = (k+ + k-)/2, dk = (k+ - k-)/2 = gamma*m*v/hbar,
wbar = gamma*omega0, dw = gamma*omega0*v/c.  The slow factors cos(dk*x),
sin(dk*x) are the internal cosine/sine state envelopes; dk is the de
Broglie wavenumber of the moving cavity, and requiring the odd envelope
combination to vanish at both walls quantizes the cavity speed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConditioningError,
    DegenerateProbeError,
    InvalidConfigError,
    ModeOutOfRangeError,
)
from .units import NATURAL, UnitSystem
from .wavecore import (
    BidirectionalWave,
    PlaneWave,
    Superposition,
    evaluate,
    gamma_of,
    measure_temporal_frequencies,
)

#: Minimum carrier cycles across the well, enforcing omega0*W/c >> 1.
MIN_CARRIER_PHASE = 20.0

#: Cavity speeds are only searched up to this fraction of c.
BETA_MAX = 0.999


@dataclass(frozen=True)
class BoxConfig:
    """Infinite-well scenario: well width W, cavity length L, omega0, speed v."""

    W: float
    L: float
    omega0: float
    v: float
    units: UnitSystem = NATURAL

    def __post_init__(self):
        if not 0 < self.L <= self.W / 10.0:
            raise InvalidConfigError(
                f"cavity must satisfy 0 < L <= W/10, got L={self.L}, W={self.W}"
            )
        if not 0 < self.v < self.units.c:
            raise InvalidConfigError(f"cavity speed must be in (0, c), got {self.v}")
        if self.omega0 * self.W / self.units.c < MIN_CARRIER_PHASE:
            raise InvalidConfigError(
                f"carrier unresolved: omega0*W/c = {self.omega0 * self.W / self.units.c}"
            )

    @property
    def beta(self) -> float:
        return self.v / self.units.c

    @property
    def gamma(self) -> float:
        return gamma_of(self.beta)

    @property
    def omega_bar(self) -> float:
        return self.gamma * self.omega0

    @property
    def delta_omega(self) -> float:
        return self.gamma * self.omega0 * self.beta

    @property
    def k_bar(self) -> float:
        return self.omega_bar / self.units.c

    @property
    def delta_k(self) -> float:
        return self.delta_omega / self.units.c

    def forward_pair(self) -> BidirectionalWave:
        g = self.gamma
        return BidirectionalWave(
            g * self.omega0 * (1.0 + self.beta), g * self.omega0 * (1.0 - self.beta)
        )


@dataclass(frozen=True)
class BeatAnalysis:
    """Fast/slow frequency pair extracted from a probe time series."""

    fast: float
    slow: float
    predicted_fast: float
    predicted_slow: float

    @property
    def fast_rel_error(self) -> float:
        return abs(self.fast - self.predicted_fast) / self.predicted_fast

    @property
    def slow_rel_error(self) -> float:
        return abs(self.slow - self.predicted_slow) / self.predicted_slow


@dataclass(frozen=True)
class InternalStateTrace:
    """Cosine/sine internal-state amplitudes along the cavity sweep."""

    x: np.ndarray
    a_cos: np.ndarray
    a_sin: np.ndarray
    envelope_wavenumber: float


@dataclass(frozen=True)
class QuantizationReport:
    """One quantized cavity mode against the textbook infinite-well values."""

    n: int
    v_n: float
    delta_k: float
    p_n: float
    p_schrodinger: float
    kinetic_energy: float
    schrodinger_energy: float
    energy_rel_discrepancy: float
    relativistic_bound: float


def build_field(cfg: BoxConfig) -> Superposition:
    """Four plane waves: per-frequency standing pairs, so F(0, t) = 0."""
    waves = []
    for omega in (cfg.omega_bar + cfg.delta_omega, cfg.omega_bar - cfg.delta_omega):
        waves.append(PlaneWave(1.0, omega, (1.0, 0.0), 0.0))
        waves.append(PlaneWave(1.0, omega, (-1.0, 0.0), math.pi))
    return Superposition(tuple(waves))


def closed_form(cfg: BoxConfig, x, t):
    """Product form of the four-wave field, for pointwise cross-checks."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    kb, dk = cfg.k_bar, cfg.delta_k
    wb, dw = cfg.omega_bar, cfg.delta_omega
    return 4.0 * (
        np.sin(kb * x) * np.cos(dk * x) * np.cos(wb * t) * np.cos(dw * t)
        - np.cos(kb * x) * np.sin(dk * x) * np.sin(wb * t) * np.sin(dw * t)
    )


#: Minimum per-frequency standing amplitude |sin(k*probe)| to resolve both peaks.
PROBE_AMPLITUDE_MIN = 0.02


def analyze_beats(
    cfg: BoxConfig,
    probe: float,
    duration: float | None = None,
    dt: float | None = None,
) -> BeatAnalysis:
    """Extract the fast (gamma*omega0) and slow (gamma*omega0*v/c) frequencies.

    The probe time series is a two-tone signal at omega_pm; the spectral
    oracle measures both peaks, and the fast/slow pair is their half-sum
    and half-difference.
    """
    c = cfg.units.c
    kp = (cfg.omega_bar + cfg.delta_omega) / c
    km = (cfg.omega_bar - cfg.delta_omega) / c
    if min(abs(math.sin(kp * probe)), abs(math.sin(km * probe))) < PROBE_AMPLITUDE_MIN:
        raise DegenerateProbeError(
            f"probe {probe} sits at a node of a component standing wave"
        )
    if duration is None:
        duration = 8.0 * 2.0 * math.pi / cfg.delta_omega
    if dt is None:
        dt = 2.0 * math.pi / (cfg.omega_bar + cfg.delta_omega) / 16.0
    t = np.arange(0.0, duration, dt)
    series = evaluate(build_field(cfg), probe, t, cfg.units)
    peaks = measure_temporal_frequencies(t, series, count=2)
    if len(peaks) < 2:
        raise DegenerateProbeError("fewer than two spectral peaks at this probe")
    hi, lo = max(peaks), min(peaks)
    return BeatAnalysis(
        fast=(hi + lo) / 2.0,
        slow=(hi - lo) / 2.0,
        predicted_fast=cfg.omega_bar,
        predicted_slow=cfg.delta_omega,
    )


def project_internal_states(
    cfg: BoxConfig, t: float, n_points: int = 2048
) -> tuple[float, float]:
    """Least-squares snapshot amplitudes of the two internal-state shapes.

    Fits F(., t) on [0, W] to a_c*sin(kbar*x)*cos(dk*x) + a_s*cos(kbar*x)*sin(dk*x);
    the model is exact, so the residual is at rounding level.
    """
    if cfg.delta_k * cfg.W < 0.1:
        raise ConditioningError(
            f"near-degenerate basis: dk*W = {cfg.delta_k * cfg.W}"
        )
    x = np.linspace(0.0, cfg.W, n_points)
    snapshot = evaluate(build_field(cfg), x, t, cfg.units)
    basis = np.stack(
        [
            np.sin(cfg.k_bar * x) * np.cos(cfg.delta_k * x),
            np.cos(cfg.k_bar * x) * np.sin(cfg.delta_k * x),
        ],
        axis=-1,
    )
    coeffs, *_ = np.linalg.lstsq(basis, snapshot, rcond=None)
    return float(coeffs[0]), float(coeffs[1])


def project_states_per_carrier_period(cfg: BoxConfig, n_samples: int = 256):
    """Cosine-state amplitude sampled once per fast period.

    Strobing at the carrier period freezes the fast factor cos(wbar*t) at
    +1, exposing the slow oscillation 4*cos(dw*t) whose zero crossings are
    spaced pi/dw.
    """
    period = 2.0 * math.pi / cfg.omega_bar
    t = np.arange(n_samples) * period
    a_c = np.array([project_internal_states(cfg, ti)[0] for ti in t])
    return t, a_c


def trace_states_vs_position(
    cfg: BoxConfig,
    n_positions: int = 160,
    window_points: int = 96,
    fast_periods: int = 3,
    points_per_period: int = 16,
) -> InternalStateTrace:
    """Internal-state amplitudes as the cavity sweeps the well at speed v.

    For each cavity center x_c (reached at t = x_c/v) the field restricted
    to the cavity window is fitted over a few carrier periods to the local
    carrier model with known time factors, leaving the slow spatial
    envelope pair (cos(dk*x_c), sin(dk*x_c)).  The fitted envelope
    wavenumber equals the de Broglie wavenumber gamma*m*v/hbar.
    """
    global_window = cfg.L * cfg.delta_k < 0.05
    if global_window:
        warnings.warn(
            f"cavity window does not resolve the envelope (L*dk = {cfg.L * cfg.delta_k:.3g}); "
            "falling back to the full well",
            stacklevel=2,
        )
    centers = np.linspace(cfg.L / 2.0, cfg.W - cfg.L / 2.0, n_positions)
    field = build_field(cfg)
    kb, dk = cfg.k_bar, cfg.delta_k
    wb, dw = cfg.omega_bar, cfg.delta_omega
    t_span = fast_periods * 2.0 * math.pi / wb
    n_t = fast_periods * points_per_period
    a_cos = np.empty(len(centers))
    a_sin = np.empty(len(centers))
    for i, xc in enumerate(centers):
        if global_window:
            x = np.linspace(0.0, cfg.W, window_points)[:, None]
        else:
            x = np.linspace(xc - cfg.L / 2.0, xc + cfg.L / 2.0, window_points)[:, None]
        t = (xc / cfg.v + np.arange(n_t) * (t_span / n_t))[None, :]
        values = evaluate(field, x, t, cfg.units).ravel()
        b1 = 4.0 * np.sin(kb * x) * np.cos(wb * t) * np.cos(dw * t)
        b2 = -4.0 * np.cos(kb * x) * np.sin(wb * t) * np.sin(dw * t)
        # Refer the slow envelope to the window center so the local model is
        # exact: F = cos(dk*xc)*c1 + sin(dk*xc)*c2 with u = x - xc.
        cu = np.cos(dk * (x - xc))
        su = np.sin(dk * (x - xc))
        c1 = (cu * b1 + su * b2).ravel()
        c2 = (cu * b2 - su * b1).ravel()
        coeffs, *_ = np.linalg.lstsq(np.stack([c1, c2], axis=-1), values, rcond=None)
        a_cos[i], a_sin[i] = coeffs
    phase = np.unwrap(np.arctan2(a_sin, a_cos))
    slope = np.polyfit(centers, phase, 1)[0]
    return InternalStateTrace(
        x=centers, a_cos=a_cos, a_sin=a_sin, envelope_wavenumber=float(slope)
    )


def _bisect_speed(target: float, omega0: float, tol: float = 1e-14) -> float:
    """Solve gamma(beta)*beta*omega0 = target for beta by bisection."""
    f = lambda b: gamma_of(b) * b * omega0 - target
    lo, hi = 0.0, BETA_MAX
    if f(hi) < 0:
        raise ModeOutOfRangeError(
            f"no admissible cavity speed below {BETA_MAX}c for target {target}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def speed_for_mode(cfg_W: float, omega0: float, n: int, units: UnitSystem = NATURAL) -> float:
    """Cavity speed whose de Broglie wavenumber satisfies dk*W = n*pi."""
    if n < 1:
        raise ValueError(f"mode index must be >= 1, got {n}")
    target = n * math.pi * units.c / cfg_W
    return _bisect_speed(target, omega0) * units.c


def quantized_envelope(delta_k: float, x):
    """Odd combination of the two travel-direction state helices, sin(dk*x)."""
    return np.sin(delta_k * np.asarray(x, dtype=float))


def quantize(cfg: BoxConfig, n_max: int) -> list[QuantizationReport]:
    """Well-quantized cavity speeds and the Schrodinger correspondence check.

    For each n the speed v_n is root-solved so the superposed +-v envelope
    sin(dk*x) has nodes at both walls; the resulting momentum hbar*dk is
    compared with n*pi*hbar/W, and the relativistic kinetic energy
    (gamma-1)*m*c**2 with the infinite-well n**2*pi**2*hbar**2/(2*m*W**2).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    units = cfg.units
    c, hbar = units.c, units.hbar
    m = hbar * cfg.omega0 / c**2
    reports = []
    for n in range(1, n_max + 1):
        v_n = speed_for_mode(cfg.W, cfg.omega0, n, units)
        beta = v_n / c
        g = gamma_of(beta)
        dk = g * cfg.omega0 * beta / c
        p_n = hbar * dk
        p_sch = n * math.pi * hbar / cfg.W
        e_kin = (g - 1.0) * m * c**2
        e_sch = n**2 * math.pi**2 * hbar**2 / (2.0 * m * cfg.W**2)
        reports.append(
            QuantizationReport(
                n=n,
                v_n=v_n,
                delta_k=dk,
                p_n=p_n,
                p_schrodinger=p_sch,
                kinetic_energy=e_kin,
                schrodinger_energy=e_sch,
                energy_rel_discrepancy=abs(e_kin - e_sch) / e_sch,
                relativistic_bound=(p_n / (m * c)) ** 2,
            )
        )
    return reports
