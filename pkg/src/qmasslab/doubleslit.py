"""Two-slit interference in 2D: local mass field, trajectories, fringe spacing.

Slits sit at (0, +d/2) and (0, -d/2) and radiate with a 1/r amplitude law.
At each point the two wave vectors intersect at an angle theta, giving the
local quantum rest mass m = (hbar*omega/c**2)*sin(theta/2), the local speed
c*cos(theta/2) along the bisector, and the transverse local wavelength
h/(m*v) = 4*pi*c/(omega*sin(theta)).  The fringe-spacing oracle integrates
nothing of that: it locates maxima of the exact two-source intensity.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InsufficientSpanError, SingularPointError
from .units import NATURAL, UnitSystem


class Region(enum.Enum):
    NEAR_SLIT_1 = "near_slit_1"
    NEAR_SLIT_2 = "near_slit_2"
    BALANCED = "balanced"
    TRANSITION = "transition"


@dataclass(frozen=True)
class SlitConfig:
    """Two-slit scenario: separation d, source frequency omega, domain bounds."""

    d: float
    omega: float
    x_min: float | None = None
    x_max: float | None = None
    y_half: float | None = None
    balanced_threshold: float = 0.9
    near_threshold: float = 0.1
    exclusion_radius: float | None = None
    units: UnitSystem = NATURAL

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError(f"slit separation must be positive, got {self.d}")
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not 0 < self.near_threshold < self.balanced_threshold <= 1:
            raise ValueError("need 0 < near_threshold < balanced_threshold <= 1")
        if self.x_min is None:
            object.__setattr__(self, "x_min", 1e-3 * self.d)
        if self.x_max is None:
            object.__setattr__(self, "x_max", 50.0 * self.d)
        if self.y_half is None:
            object.__setattr__(self, "y_half", 50.0 * self.d)
        if self.exclusion_radius is None:
            object.__setattr__(self, "exclusion_radius", self.wavelength / 2.0)

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi * self.units.c / self.omega

    @property
    def slits(self) -> np.ndarray:
        return np.array([[0.0, self.d / 2.0], [0.0, -self.d / 2.0]])


@dataclass(frozen=True)
class LocalInterferenceState:
    """Per-point kinematics of the two-slit field."""

    theta: float
    m: float
    v: np.ndarray
    lambda_sub: float
    region: Region
    weights: tuple[float, float]


@dataclass(frozen=True)
class Trajectory:
    """Streamline of the local velocity field, arc-length parameterized."""

    points: np.ndarray
    times: np.ndarray
    termination: str


@dataclass(frozen=True)
class FringeReport:
    """Predicted versus measured bright-fringe spacing on a screen."""

    predicted: float
    measured: float
    screen: str
    D: float
    rel_error: float
    maxima: np.ndarray


def _radials(p, cfg: SlitConfig):
    """Distances and unit vectors from each slit to p."""
    p = np.asarray(p, dtype=float)
    rel = p - cfg.slits
    r = np.hypot(rel[:, 0], rel[:, 1])
    if np.min(r) < 1e-12 * cfg.d:
        raise SingularPointError(f"point {p} coincides with a slit")
    return r, rel / r[:, None]


def intersection_angle(p, cfg: SlitConfig) -> float:
    """Angle in [0, pi] between the two wave vectors meeting at p."""
    _, u = _radials(p, cfg)
    return math.acos(float(np.clip(np.dot(u[0], u[1]), -1.0, 1.0)))


def local_mass(theta: float, omega: float, units: UnitSystem = NATURAL) -> float:
    """Local quantum rest mass (hbar*omega/c**2)*sin(theta/2)."""
    return units.hbar * omega / units.c**2 * math.sin(theta / 2.0)


def local_speed(theta: float, units: UnitSystem = NATURAL) -> float:
    """Local group speed c*cos(theta/2); zero for the standing case theta = pi."""
    return units.c * math.cos(theta / 2.0)


def local_velocity(p, cfg: SlitConfig) -> np.ndarray:
    """Velocity vector at p: speed c*cos(theta/2) along the bisector of the rays.

    Returns the zero vector at theta = pi, where the direction is undefined.
    """
    _, u = _radials(p, cfg)
    theta = math.acos(float(np.clip(np.dot(u[0], u[1]), -1.0, 1.0)))
    bis = u[0] + u[1]
    norm = np.hypot(bis[0], bis[1])
    if norm == 0.0:
        return np.zeros(2)
    return local_speed(theta, cfg.units) * bis / norm


def local_wavelength(theta: float, omega: float, units: UnitSystem = NATURAL) -> float:
    """Local wavelength h/(m*v) = 4*pi*c/(omega*sin(theta)), transverse to v."""
    s = math.sin(theta)
    if s == 0.0:
        return math.inf
    return 4.0 * math.pi * units.c / (omega * s)


def classify_region(p, cfg: SlitConfig) -> Region:
    """Amplitude-ratio label with a_i = 1/r_i and configurable thresholds."""
    r, _ = _radials(p, cfg)
    a = 1.0 / r
    ratio = a.min() / a.max()
    if ratio >= cfg.balanced_threshold:
        return Region.BALANCED
    if ratio <= cfg.near_threshold:
        return Region.NEAR_SLIT_1 if a[0] > a[1] else Region.NEAR_SLIT_2
    return Region.TRANSITION


def weighted_local_state(p, cfg: SlitConfig) -> LocalInterferenceState:
    """Amplitude-weighted local kinematics, valid through all regions.

    With energy weights w_i = a_i**2 the normalized momentum is
    n = (w1*u1 + w2*u2)/(w1 + w2); then v = c*n and
    m = (hbar*omega/c**2)*sqrt(1 - |n|**2).  Equal weights reduce to the
    balanced-region sin/cos forms; a vanishing weight gives a massless
    radial wave.
    """
    units = cfg.units
    r, u = _radials(p, cfg)
    a = 1.0 / r
    w = a**2
    n = (w[0] * u[0] + w[1] * u[1]) / (w[0] + w[1])
    n_mag = float(np.hypot(n[0], n[1]))
    theta = math.acos(float(np.clip(np.dot(u[0], u[1]), -1.0, 1.0)))
    m = units.hbar * cfg.omega / units.c**2 * math.sqrt(max(0.0, 1.0 - n_mag**2))
    v = units.c * n
    speed = units.c * n_mag
    lam = units.h / (m * speed) if m > 0 and speed > 0 else math.inf
    return LocalInterferenceState(
        theta=theta,
        m=m,
        v=v,
        lambda_sub=lam,
        region=classify_region(p, cfg),
        weights=(float(a[0]), float(a[1])),
    )


#: Stagnation threshold on |v|/c for trajectory termination.
STAGNATION_SPEED = 1e-6


def _flow_direction(p, cfg: SlitConfig):
    """Unit direction of the weighted velocity field, or None where it stagnates."""
    r, u = _radials(p, cfg)
    w = 1.0 / r**2
    n = (w[0] * u[0] + w[1] * u[1]) / (w[0] + w[1])
    n_mag = np.hypot(n[0], n[1])
    if n_mag < STAGNATION_SPEED:
        return None, n_mag
    return n / n_mag, n_mag


def integrate_trajectory(
    start,
    cfg: SlitConfig,
    step: float | None = None,
    max_steps: int = 10_000,
) -> Trajectory:
    """Fixed-step RK4 streamline of the local velocity direction field.

    Arc-length parameterized; elapsed time accumulates as step/|v|.
    Terminates at the domain boundary, on stagnation (|v| < 1e-6 c) or at
    ``max_steps``.
    """
    if step is None:
        step = cfg.d / 100.0
    if step > cfg.d / 100.0:
        raise ValueError(f"step must be <= d/100 = {cfg.d / 100.0}, got {step}")
    p = np.asarray(start, dtype=float).copy()
    _radials(p, cfg)  # raises at a slit
    c = cfg.units.c
    points = [p.copy()]
    times = [0.0]
    termination = "max_steps"
    for _ in range(max_steps):
        d1, n_mag = _flow_direction(p, cfg)
        if d1 is None:
            termination = "stagnation"
            break
        try:
            d2, _ = _flow_direction(p + 0.5 * step * d1, cfg)
            d3, _ = _flow_direction(p + 0.5 * step * d2, cfg)
            d4, _ = _flow_direction(p + step * d3, cfg)
        except (SingularPointError, TypeError):
            termination = "stagnation"
            break
        p = p + step / 6.0 * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
        points.append(p.copy())
        times.append(times[-1] + step / (c * n_mag))
        if not (cfg.x_min <= p[0] <= cfg.x_max and abs(p[1]) <= cfg.y_half):
            termination = "boundary"
            break
    return Trajectory(np.array(points), np.array(times), termination)


def fringe_spacing_predicted(cfg: SlitConfig, D: float) -> float:
    """Far-field bright-fringe spacing D*lambda/d (half the local wavelength)."""
    if D / cfg.d < 20.0:
        warnings.warn(
            f"far-field approximation weak: D/d = {D / cfg.d:.1f} < 20",
            stacklevel=2,
        )
    return D * cfg.wavelength / cfg.d


def screen_intensity(cfg: SlitConfig, points) -> np.ndarray:
    """Time-averaged two-source intensity with the 1/r amplitude law."""
    pts = np.asarray(points, dtype=float)
    rel1 = pts - cfg.slits[0]
    rel2 = pts - cfg.slits[1]
    r1 = np.hypot(rel1[..., 0], rel1[..., 1])
    r2 = np.hypot(rel2[..., 0], rel2[..., 1])
    a1, a2 = 1.0 / r1, 1.0 / r2
    k = cfg.omega / cfg.units.c
    return a1**2 + a2**2 + 2.0 * a1 * a2 * np.cos(k * (r1 - r2))


def fringe_spacing_measured(
    cfg: SlitConfig,
    D: float,
    screen: str = "arc",
    n_fringes: float = 7.0,
    samples_per_fringe: int = 64,
) -> FringeReport:
    """Independent fringe-spacing oracle: locate intensity maxima on a screen.

    The screen is an arc of radius D about the midpoint (default) or the
    vertical line x = D.  Maxima are refined by quadratic interpolation and
    the spacing is the mean gap of the 5 maxima nearest the axis.
    """
    predicted = fringe_spacing_predicted(cfg, D)
    half_span = n_fringes / 2.0 * predicted
    n = int(n_fringes * samples_per_fringe) | 1
    s = np.linspace(-half_span, half_span, n)
    if screen == "arc":
        phi = s / D
        pts = np.stack([D * np.cos(phi), D * np.sin(phi)], axis=-1)
    elif screen == "line":
        pts = np.stack([np.full_like(s, D), s], axis=-1)
    else:
        raise ValueError(f"unknown screen kind {screen!r}")
    intensity = screen_intensity(cfg, pts)
    i = np.arange(1, n - 1)
    mask = (intensity[i] > intensity[i - 1]) & (intensity[i] >= intensity[i + 1])
    peaks = i[mask]
    if len(peaks) < 3:
        raise InsufficientSpanError(f"only {len(peaks)} maxima on screen")
    # Quadratic vertex through each maximum and its neighbours.
    ds = s[1] - s[0]
    y0, y1, y2 = intensity[peaks - 1], intensity[peaks], intensity[peaks + 1]
    offset = 0.5 * (y0 - y2) / (y0 - 2.0 * y1 + y2)
    maxima = s[peaks] + offset * ds
    central = maxima[np.argsort(np.abs(maxima))[:5]]
    central.sort()
    measured = float(np.mean(np.diff(central)))
    return FringeReport(
        predicted=predicted,
        measured=measured,
        screen=screen,
        D=D,
        rel_error=abs(measured - predicted) / predicted,
        maxima=maxima,
    )


def mass_map(cfg: SlitConfig, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Local quantum rest mass on a grid; NaN inside the slit exclusion radius.

    Returns an array of shape (len(x), len(y)) with [i, j] = m(x[i], y[j]).
    """
    units = cfg.units
    X, Y = np.meshgrid(np.asarray(x, float), np.asarray(y, float), indexing="ij")
    y1, y2 = cfg.d / 2.0, -cfg.d / 2.0
    r1 = np.hypot(X, Y - y1)
    r2 = np.hypot(X, Y - y2)
    excluded = (r1 < cfg.exclusion_radius) | (r2 < cfg.exclusion_radius)
    r1 = np.where(excluded, np.nan, r1)
    r2 = np.where(excluded, np.nan, r2)
    w1, w2 = 1.0 / r1**2, 1.0 / r2**2
    nx = (w1 * X / r1 + w2 * X / r2) / (w1 + w2)
    ny = (w1 * (Y - y1) / r1 + w2 * (Y - y2) / r2) / (w1 + w2)
    n2 = np.clip(nx**2 + ny**2, 0.0, 1.0)
    return units.hbar * cfg.omega / units.c**2 * np.sqrt(1.0 - n2)
