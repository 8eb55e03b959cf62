"""Scalar plane waves: Doppler boosts, superposition, factorization, measurement.

All waves are lightlike scalars: the wavenumber is always omega/c and is
never stored independently.  Measurement utilities (zero-crossing
wavelengths, spectral peaks, finite-difference residuals) are the
numerical oracles used to verify the closed forms elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.signal import hilbert

from .errors import InsufficientSpanError, InvalidBoostError, InvalidWaveError
from .units import NATURAL, UnitSystem


def _unit2(vec) -> tuple[float, float]:
    vx, vy = float(vec[0]), float(vec[1])
    norm = math.hypot(vx, vy)
    if norm == 0.0:
        raise InvalidWaveError("direction vector must be nonzero")
    return (vx / norm, vy / norm)


@dataclass(frozen=True)
class PlaneWave:
    """One scalar sinusoidal traveling wave, A*sin(k.x - omega*t + phase)."""

    amplitude: float
    omega: float
    direction: tuple[float, float] = (1.0, 0.0)
    phase: float = 0.0

    def __post_init__(self):
        if self.amplitude <= 0:
            raise InvalidWaveError(f"amplitude must be positive, got {self.amplitude}")
        if self.omega <= 0:
            raise InvalidWaveError(f"omega must be positive, got {self.omega}")
        object.__setattr__(self, "direction", _unit2(self.direction))

    def wavevector(self, units: UnitSystem = NATURAL) -> np.ndarray:
        k = self.omega / units.c
        return np.array([k * self.direction[0], k * self.direction[1]])


@dataclass(frozen=True)
class Superposition:
    """Ordered, non-empty collection of plane waves; evaluates as their sum."""

    waves: tuple[PlaneWave, ...]

    def __post_init__(self):
        if len(self.waves) == 0:
            raise InvalidWaveError("superposition must contain at least one wave")
        object.__setattr__(self, "waves", tuple(self.waves))

    @property
    def omega_max(self) -> float:
        return max(w.omega for w in self.waves)


@dataclass(frozen=True)
class BidirectionalWave:
    """Counter-propagating frequency pair on one axis, omega_plus >= omega_minus.

    The axis is oriented so the net momentum points along +axis.
    """

    omega_plus: float
    omega_minus: float
    axis: tuple[float, float] = (1.0, 0.0)

    def __post_init__(self):
        if not (self.omega_plus >= self.omega_minus > 0):
            raise InvalidWaveError(
                f"need omega_plus >= omega_minus > 0, got "
                f"({self.omega_plus}, {self.omega_minus})"
            )
        object.__setattr__(self, "axis", _unit2(self.axis))


@dataclass(frozen=True)
class WaveFactor:
    """One factor of a product form: wavenumber, angular frequency, phase."""

    wavenumber: float
    omega: float
    phase: float = 0.0

    @property
    def phase_speed(self) -> float:
        if self.wavenumber == 0.0:
            return math.inf
        return self.omega / self.wavenumber

    @property
    def wavelength(self) -> float:
        if self.wavenumber == 0.0:
            return math.inf
        return 2.0 * math.pi / abs(self.wavenumber)


@dataclass(frozen=True)
class CarrierEnvelopePair:
    """Product factorization amp * sin(envelope) * cos(carrier) of a bidirectional wave."""

    carrier: WaveFactor
    envelope: WaveFactor
    amplitude: float


def gamma_of(beta: float) -> float:
    """Lorentz factor for a speed beta in units of c."""
    if abs(beta) >= 1.0:
        raise InvalidBoostError(f"|beta| must be < 1, got {beta}")
    return 1.0 / math.sqrt(1.0 - beta * beta)


def doppler_boost(w: PlaneWave, beta: float, units: UnitSystem = NATURAL) -> PlaneWave:
    """Boost a plane wave by +beta along the x-axis.

    Convention: omega' = gamma * omega * (1 + beta * d_x), the direction
    transformed by relativistic aberration.  The amplitude is carried
    unchanged.  beta = 0 returns the input exactly.
    """
    if abs(beta) >= 1.0:
        raise InvalidBoostError(f"|beta| must be < 1, got {beta}")
    if beta == 0.0:
        return w
    g = gamma_of(beta)
    dx, dy = w.direction
    omega_p = g * w.omega * (1.0 + beta * dx)
    # Null four-wavevector transform: k'_x = gamma*(k_x + beta*omega/c), k'_y = k_y.
    kx_p = g * (dx + beta)
    ky_p = dy
    return PlaneWave(w.amplitude, omega_p, (kx_p, ky_p), w.phase)


def boost_standing_wave(
    omega0: float, beta: float, units: UnitSystem = NATURAL
) -> BidirectionalWave:
    """Frequency pair of a rest-frame standing wave seen after a boost by beta.

    omega_plus = gamma*omega0*(1+|beta|), omega_minus = gamma*omega0*(1-|beta|),
    with the axis oriented along the boost direction.  The product
    omega_plus*omega_minus equals omega0**2.
    """
    if omega0 <= 0:
        raise InvalidWaveError(f"omega0 must be positive, got {omega0}")
    if abs(beta) >= 1.0:
        raise InvalidBoostError(f"|beta| must be < 1, got {beta}")
    if beta == 0.0:
        return BidirectionalWave(omega0, omega0)
    g = gamma_of(beta)
    axis = (1.0, 0.0) if beta > 0 else (-1.0, 0.0)
    b = abs(beta)
    return BidirectionalWave(g * omega0 * (1.0 + b), g * omega0 * (1.0 - b), axis)


def superposition_of(
    b: BidirectionalWave, amplitude: float = 1.0, units: UnitSystem = NATURAL
) -> Superposition:
    """Two equal-amplitude counter-propagating plane waves realizing ``b``."""
    ax = b.axis
    return Superposition(
        (
            PlaneWave(amplitude, b.omega_plus, ax),
            PlaneWave(amplitude, b.omega_minus, (-ax[0], -ax[1])),
        )
    )


def evaluate(s: Superposition, x, t, units: UnitSystem = NATURAL):
    """Field value at positions (x, 0) and times t; x and t broadcast."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    out = np.zeros(np.broadcast_shapes(x.shape, t.shape))
    for w in s.waves:
        kx = w.omega / units.c * w.direction[0]
        out = out + w.amplitude * np.sin(kx * x - w.omega * t + w.phase)
    return out


def evaluate_xy(s: Superposition, points, t, units: UnitSystem = NATURAL):
    """Field value at 2D points of shape (..., 2) and times t."""
    pts = np.asarray(points, dtype=float)
    t = np.asarray(t, dtype=float)
    out = 0.0
    for w in s.waves:
        kvec = w.wavevector(units)
        out = out + w.amplitude * np.sin(
            pts[..., 0] * kvec[0] + pts[..., 1] * kvec[1] - w.omega * t + w.phase
        )
    return out


def factor_carrier_envelope(
    b: BidirectionalWave, amplitude: float = 1.0, units: UnitSystem = NATURAL
) -> CarrierEnvelopePair:
    """Factor a bidirectional wave into superluminal envelope times carrier.

    With k_pm = omega_pm/c the product form (x measured along the axis) is

        2*A * sin(dk*x - wbar*t) * cos(kbar*x - dw*t)

    where dk = (k+ - k-)/2, wbar = (w+ + w-)/2 (the envelope factor, phase
    speed c**2/v >= c) and kbar = (k+ + k-)/2, dw = (w+ - w-)/2 (the
    carrier, phase speed v <= c).
    """
    c = units.c
    kp, km = b.omega_plus / c, b.omega_minus / c
    envelope = WaveFactor((kp - km) / 2.0, (b.omega_plus + b.omega_minus) / 2.0)
    carrier = WaveFactor((kp + km) / 2.0, (b.omega_plus - b.omega_minus) / 2.0)
    return CarrierEnvelopePair(carrier, envelope, 2.0 * amplitude)


def evaluate_product(pair: CarrierEnvelopePair, x, t):
    """Evaluate the factorized form amp*sin(envelope)*cos(carrier)."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    env = np.sin(pair.envelope.wavenumber * x - pair.envelope.omega * t + pair.envelope.phase)
    car = np.cos(pair.carrier.wavenumber * x - pair.carrier.omega * t + pair.carrier.phase)
    return pair.amplitude * env * car


def zero_crossings(x, values) -> np.ndarray:
    """Positions of sign changes, located by linear interpolation."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(values, dtype=float)
    idx = np.nonzero(v[:-1] * v[1:] < 0.0)[0]
    return x[idx] - v[idx] * (x[idx + 1] - x[idx]) / (v[idx + 1] - v[idx])


def measure_spatial_wavelength(x, values) -> float:
    """Wavelength as twice the mean gap between successive zero crossings."""
    crossings = zero_crossings(x, values)
    if len(crossings) < 3:
        raise InsufficientSpanError(
            f"need at least 3 zero crossings, found {len(crossings)}"
        )
    return 2.0 * float(np.mean(np.diff(crossings)))


def measure_envelope_wavelength(x, values, trim_fraction: float = 0.1) -> float:
    """Wavelength of the slow envelope of a modulated spatial signal.

    The envelope magnitude is taken from the analytic signal, squared and
    demeaned so the zero-crossing estimator sees a clean oscillation at
    twice the envelope wavenumber; edge samples are trimmed against
    Hilbert-transform boundary artifacts.
    """
    x = np.asarray(x, dtype=float)
    env2 = np.abs(hilbert(np.asarray(values, dtype=float))) ** 2
    n = int(len(x) * trim_fraction)
    sl = slice(n, len(x) - n) if n > 0 else slice(None)
    sig = env2[sl] - env2[sl].mean()
    return 2.0 * measure_spatial_wavelength(x[sl], sig)


def envelope_sampling_grid(
    b: BidirectionalWave,
    min_envelope_periods: int = 4,
    points_per_period: int = 64,
    units: UnitSystem = NATURAL,
) -> np.ndarray:
    """Spatial grid spanning whole envelope and (near-)whole carrier periods.

    The snapshot of a bidirectional wave holds the spatial frequencies
    k_plus and k_minus; choosing the span commensurate with both keeps the
    FFT-based analytic signal free of boundary artifacts.
    """
    from fractions import Fraction

    pair = factor_carrier_envelope(b, units=units)
    if pair.envelope.wavenumber == 0.0:
        raise InvalidWaveError("standing wave has an infinite envelope wavelength")
    beta = (b.omega_plus - b.omega_minus) / (b.omega_plus + b.omega_minus)
    p = Fraction(beta).limit_denominator(64).numerator
    m = p * max(1, math.ceil(min_envelope_periods / p))
    span = m * pair.envelope.wavelength
    dx_target = 2.0 * math.pi * units.c / b.omega_plus / points_per_period
    n = round(span / dx_target)
    return np.arange(n) * (span / n)


def _refine_peak(times, windowed, omega_lo, omega_hi) -> tuple[float, float]:
    """Maximize the windowed DTFT magnitude inside a bracket."""

    def neg_mag(om):
        return -abs(np.dot(windowed, np.exp(-1j * om * times)))

    res = minimize_scalar(
        neg_mag,
        bounds=(omega_lo, omega_hi),
        method="bounded",
        options={"xatol": (omega_hi - omega_lo) * 1e-10},
    )
    return float(res.x), float(-res.fun)


def measure_temporal_frequencies(times, values, count: int) -> np.ndarray:
    """Angular frequencies of the strongest spectral peaks, refined past bin width.

    Peaks are picked from a Hann-windowed FFT magnitude and each refined by
    maximizing the windowed DTFT magnitude.  Returned sorted by descending
    peak magnitude; fewer than ``count`` entries if fewer distinct peaks exist.
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if len(t) < 16:
        raise InsufficientSpanError(f"series too short: {len(t)} samples")
    dt = t[1] - t[0]
    if not np.allclose(np.diff(t), dt, rtol=1e-9, atol=0.0):
        raise InsufficientSpanError("time steps must be uniform")
    v = v - v.mean()
    vmax = np.max(np.abs(v))
    if vmax < 1e-300:
        raise InsufficientSpanError("constant series has no spectral peaks")
    window = np.hanning(len(v))
    wv = window * v
    mags = np.abs(np.fft.rfft(wv))
    omegas = 2.0 * math.pi * np.fft.rfftfreq(len(v), dt)
    interior = np.arange(1, len(mags) - 1)
    is_peak = (mags[interior] >= mags[interior - 1]) & (mags[interior] > mags[interior + 1])
    peak_idx = interior[is_peak & (mags[interior] > 1e-6 * mags.max())]
    if len(peak_idx) == 0:
        raise InsufficientSpanError("no spectral peaks found")
    peak_idx = peak_idx[np.argsort(mags[peak_idx])[::-1][:count]]
    refined = [_refine_peak(t, wv, omegas[i - 1], omegas[i + 1]) for i in peak_idx]
    refined.sort(key=lambda om_mag: -om_mag[1])
    return np.array([om for om, _ in refined])


def sample_grid(
    omega_max: float,
    x_span: tuple[float, float],
    t_span: tuple[float, float],
    points_per_period: int = 64,
    units: UnitSystem = NATURAL,
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform space-time grid resolving the fastest component."""
    dx = 2.0 * math.pi * units.c / omega_max / points_per_period
    dt = 2.0 * math.pi / omega_max / points_per_period
    x = np.arange(x_span[0], x_span[1] + dx / 2, dx)
    t = np.arange(t_span[0], t_span[1] + dt / 2, dt)
    return x, t


def wave_equation_residual(
    field,
    x: np.ndarray,
    t: np.ndarray,
    units: UnitSystem = NATURAL,
    omega_max: float | None = None,
) -> float:
    """Normalized interior maximum of |F_tt - c**2 F_xx| by central differences.

    ``field`` is a Superposition or a callable (x_grid, t_grid) -> F with
    F[i, j] = F(x[i], t[j]); callables must supply ``omega_max`` for the
    normalization max|F| * omega_max**2.
    """
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    if isinstance(field, Superposition):
        F = evaluate(field, x[:, None], t[None, :], units)
        if omega_max is None:
            omega_max = field.omega_max
    else:
        F = np.asarray(field(x[:, None], t[None, :]), dtype=float)
        if omega_max is None:
            raise ValueError("omega_max is required for callable fields")
    dx = x[1] - x[0]
    dt = t[1] - t[0]
    ftt = (F[:, 2:] - 2.0 * F[:, 1:-1] + F[:, :-2]) / dt**2
    fxx = (F[2:, :] - 2.0 * F[1:-1, :] + F[:-2, :]) / dx**2
    res = ftt[1:-1, :] - units.c**2 * fxx[:, 1:-1]
    return float(np.max(np.abs(res)) / (np.max(np.abs(F)) * omega_max**2))
