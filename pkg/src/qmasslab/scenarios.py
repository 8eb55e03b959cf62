"""Scenario orchestration: configuration, pipelines, deterministic export.

Each scenario maps a parameter block onto one physics pipeline and emits
plot-ready CSV files plus a JSON summary of predicted-vs-measured metrics.
Data files are byte-identical across repeated runs; wall-clock timing is
isolated in the summary.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import boxwell, doubleslit, qmass, wavecore
from .errors import InvalidConfigError, QmassError
from .units import NATURAL

SCHEMA_VERSION = 1

SCENARIOS = (
    "boost",
    "doubleslit-map",
    "doubleslit-traj",
    "doubleslit-fringes",
    "box-beat",
    "box-states",
    "box-quantize",
)

DEFAULTS: dict[str, dict] = {
    "boost": {"omega0": 1.0, "beta": 0.6, "envelope_periods": 4, "points_per_period": 64},
    "doubleslit-map": {
        "d": 1.0, "wavelength": 0.05, "nx": 201, "ny": 201,
        "x_span": 5.0, "y_span": 2.5,
    },
    "doubleslit-traj": {
        "d": 1.0, "wavelength": 0.05,
        "starts": [[25.0, 0.0], [17.7, 17.7], [0.01, 0.5]],
        "max_steps": 2000,
        "far_field_radius": 20.0,
    },
    "doubleslit-fringes": {"d": 0.5, "wavelength": 0.01, "D": 50.0, "screen": "arc"},
    "box-beat": {"W": 1.0, "L": 0.1, "omega0": 100.0, "v": 0.0627080, "probe": 0.275},
    "box-states": {"W": 1.0, "L": 0.1, "omega0": 100.0, "v": 0.0627080, "n_positions": 160},
    "box-quantize": {"W": 1.0, "L": 0.1, "omega0": 100.0, "n_max": 5},
}


@dataclass(frozen=True)
class Metric:
    """One predicted-vs-measured comparison with its tolerance."""

    name: str
    predicted: float
    measured: float
    tolerance: float
    source: str  # "formula" or "oracle"

    @property
    def rel_error(self) -> float:
        if self.predicted == 0.0:
            return float(abs(self.measured))
        return float(abs(self.measured - self.predicted) / abs(self.predicted))

    @property
    def passed(self) -> bool:
        return bool(self.rel_error <= self.tolerance)


@dataclass
class RunSummary:
    """Outcome of one scenario run."""

    kind: str
    params: dict
    metrics: list[Metric] = field(default_factory=list)
    files: list[str] = field(default_factory=list)
    duration_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(m.passed for m in self.metrics)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def export_series(x, values, path: Path, header: str = "x,value") -> None:
    """Two-column CSV with fixed 17-significant-digit formatting."""
    lines = [header]
    lines += [f"{_fmt(a)},{_fmt(b)}" for a, b in zip(np.asarray(x), np.asarray(values))]
    path.write_text("\n".join(lines) + "\n")


def export_grid(x, y, values, path: Path) -> None:
    """Row-major x,y,value CSV of a rectangular grid (values[i, j] at x[i], y[j])."""
    values = np.asarray(values)
    lines = ["x,y,value"]
    for i, xi in enumerate(np.asarray(x)):
        for j, yj in enumerate(np.asarray(y)):
            lines.append(f"{_fmt(xi)},{_fmt(yj)},{_fmt(values[i, j])}")
    path.write_text("\n".join(lines) + "\n")


def export_summary(summary: RunSummary, path: Path) -> None:
    """Stable-ordered JSON summary; optional metrics are omitted, never null."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "scenario": summary.kind,
        "params": summary.params,
        "metrics": [
            {
                "name": m.name,
                "predicted": m.predicted,
                "measured": m.measured,
                "rel_error": m.rel_error,
                "tolerance": m.tolerance,
                "source": m.source,
                "pass": m.passed,
            }
            for m in summary.metrics
        ],
        "files": summary.files,
        "pass": summary.passed,
        "duration_s": summary.duration_s,
    }
    path.write_text(json.dumps(doc, indent=2) + "\n")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidConfigError(message)


def _run_boost(params: dict, out: Path, summary: RunSummary) -> None:
    omega0, beta = params["omega0"], params["beta"]
    _require(omega0 > 0, f"omega0 must be positive, got {omega0}")
    _require(abs(beta) < 1, f"|beta| must be < 1, got {beta}")
    _require(beta != 0, "beta must be nonzero for the envelope measurement")
    b = wavecore.boost_standing_wave(omega0, beta)
    state = qmass.mass_state_of(b)
    pair = wavecore.factor_carrier_envelope(b)
    s = wavecore.superposition_of(b)
    x = wavecore.envelope_sampling_grid(
        b,
        min_envelope_periods=int(params["envelope_periods"]),
        points_per_period=int(params["points_per_period"]),
    )
    snapshot = wavecore.evaluate(s, x, 0.3)
    measured_lam = wavecore.measure_envelope_wavelength(x, snapshot)
    g = wavecore.gamma_of(beta)
    summary.metrics += [
        Metric("quantum_rest_mass", math.sqrt(b.omega_plus * b.omega_minus),
               state.m, 1e-12, "formula"),
        Metric("group_speed", abs(beta), state.v, 1e-12, "formula"),
        Metric("envelope_wavelength",
               qmass.de_broglie_wavelength(state.m, state.v, g),
               measured_lam, 1e-3, "oracle"),
    ]
    export_series(x, snapshot, out / "field.csv")
    summary.files.append("field.csv")


def _run_doubleslit_fringes(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = doubleslit.SlitConfig(d=params["d"], omega=2.0 * math.pi / params["wavelength"])
    report = doubleslit.fringe_spacing_measured(cfg, params["D"], screen=params["screen"])
    summary.metrics.append(
        Metric("fringe_spacing", report.predicted, report.measured, 0.01, "oracle")
    )
    n = int(7 * 64) | 1
    s = np.linspace(-3.5 * report.predicted, 3.5 * report.predicted, n)
    if params["screen"] == "arc":
        phi = s / params["D"]
        pts = np.stack([params["D"] * np.cos(phi), params["D"] * np.sin(phi)], axis=-1)
    else:
        pts = np.stack([np.full_like(s, params["D"]), s], axis=-1)
    export_series(s, doubleslit.screen_intensity(cfg, pts), out / "intensity.csv")
    summary.files.append("intensity.csv")


def _run_doubleslit_map(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = doubleslit.SlitConfig(d=params["d"], omega=2.0 * math.pi / params["wavelength"])
    x = np.linspace(0.0, params["x_span"] * cfg.d, int(params["nx"]))
    y = np.linspace(-params["y_span"] * cfg.d, params["y_span"] * cfg.d, int(params["ny"]))
    m = doubleslit.mass_map(cfg, x, y)
    midpoint_mass = doubleslit.weighted_local_state((0.0, 0.0), cfg).m
    axis_x = np.linspace(cfg.d / 100.0, 10.0 * cfg.d, 500)
    axis_m = doubleslit.mass_map(cfg, axis_x, np.array([0.0]))[:, 0]
    increases = int(np.sum(np.diff(axis_m) > 0))
    summary.metrics += [
        Metric("midpoint_mass", cfg.units.hbar * cfg.omega / cfg.units.c**2,
               midpoint_mass, 1e-9, "formula"),
        Metric("grid_maximum", midpoint_mass, float(np.nanmax(m)), 1e-9, "oracle"),
        Metric("axis_monotone_violations", 0.0, float(increases), 0.0, "oracle"),
    ]
    export_grid(x, y, m, out / "mass_map.csv")
    summary.files.append("mass_map.csv")


def _run_doubleslit_traj(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = doubleslit.SlitConfig(d=params["d"], omega=2.0 * math.pi / params["wavelength"])
    worst_far = 0.0
    for i, start in enumerate(params["starts"]):
        traj = doubleslit.integrate_trajectory(
            start, cfg, max_steps=int(params["max_steps"])
        )
        name = f"trajectory_{i:03d}.csv"
        lines = ["x,y,value"]
        lines += [
            f"{_fmt(p[0])},{_fmt(p[1])},{_fmt(t)}"
            for p, t in zip(traj.points, traj.times)
        ]
        (out / name).write_text("\n".join(lines) + "\n")
        summary.files.append(name)
        r = np.hypot(traj.points[:, 0], traj.points[:, 1])
        far = r > params["far_field_radius"] * cfg.d
        if np.any(far[:-1]):
            steps = np.diff(traj.points, axis=0)
            radial = traj.points[:-1] / r[:-1, None]
            cosang = np.sum(steps * radial, axis=1) / np.hypot(steps[:, 0], steps[:, 1])
            dev = np.arccos(np.clip(cosang, -1.0, 1.0))
            worst_far = max(worst_far, float(np.max(dev[far[:-1]])))
    summary.metrics.append(
        Metric("far_field_radial_deviation_rad", 0.0, worst_far, 1e-3, "oracle")
    )


def _box_config(params: dict) -> boxwell.BoxConfig:
    return boxwell.BoxConfig(
        W=params["W"], L=params["L"], omega0=params["omega0"], v=params["v"]
    )


def _run_box_beat(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = _box_config(params)
    beats = boxwell.analyze_beats(cfg, params["probe"])
    duration = 8.0 * 2.0 * math.pi / cfg.delta_omega
    dt = 2.0 * math.pi / (cfg.omega_bar + cfg.delta_omega) / 16.0
    t = np.arange(0.0, duration, dt)
    series = wavecore.evaluate(boxwell.build_field(cfg), params["probe"], t)
    summary.metrics += [
        Metric("fast_frequency", beats.predicted_fast, beats.fast, 5e-3, "oracle"),
        Metric("slow_frequency", beats.predicted_slow, beats.slow, 5e-3, "oracle"),
    ]
    export_series(t, series, out / "probe_series.csv", header="t,value")
    summary.files.append("probe_series.csv")


def _run_box_states(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = _box_config(params)
    trace = boxwell.trace_states_vs_position(cfg, n_positions=int(params["n_positions"]))
    p = qmass.four_momentum_of(cfg.forward_pair()).p
    modulus = trace.a_cos**2 + trace.a_sin**2
    flatness = float(np.max(modulus) / np.min(modulus) - 1.0)
    summary.metrics += [
        Metric("envelope_wavenumber", p / cfg.units.hbar,
               trace.envelope_wavenumber, 5e-3, "oracle"),
        Metric("helix_modulus_flatness", 0.0, flatness, 0.02, "oracle"),
    ]
    export_series(trace.x, trace.a_cos, out / "cosine_state.csv")
    export_series(trace.x, trace.a_sin, out / "sine_state.csv")
    summary.files += ["cosine_state.csv", "sine_state.csv"]


def _run_box_quantize(params: dict, out: Path, summary: RunSummary) -> None:
    cfg = boxwell.BoxConfig(
        W=params["W"], L=params["L"], omega0=params["omega0"],
        v=params.get("v", 0.05),
    )
    reports = boxwell.quantize(cfg, int(params["n_max"]))
    x = np.linspace(0.0, cfg.W, 513)
    for rep in reports:
        summary.metrics += [
            Metric(f"momentum_n{rep.n}", rep.p_schrodinger, rep.p_n, 1e-9, "formula"),
            Metric(
                f"energy_n{rep.n}", rep.schrodinger_energy, rep.kinetic_energy,
                rep.relativistic_bound, "formula",
            ),
        ]
        name = f"envelope_n{rep.n}.csv"
        export_series(x, boxwell.quantized_envelope(rep.delta_k, x), out / name)
        summary.files.append(name)


_RUNNERS = {
    "boost": _run_boost,
    "doubleslit-map": _run_doubleslit_map,
    "doubleslit-traj": _run_doubleslit_traj,
    "doubleslit-fringes": _run_doubleslit_fringes,
    "box-beat": _run_box_beat,
    "box-states": _run_box_states,
    "box-quantize": _run_box_quantize,
}


def run(kind: str, params: dict | None = None, out_dir=".") -> RunSummary:
    """Execute one scenario pipeline and write its data files and summary."""
    if kind not in _RUNNERS:
        raise InvalidConfigError(f"unknown scenario {kind!r}; choose from {SCENARIOS}")
    merged = dict(DEFAULTS[kind])
    merged.update(params or {})
    unknown = set(merged) - set(DEFAULTS[kind]) - {"v"}
    if unknown:
        raise InvalidConfigError(f"unknown parameter(s) for {kind}: {sorted(unknown)}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = RunSummary(kind=kind, params=merged)
    start = time.perf_counter()
    _RUNNERS[kind](merged, out, summary)
    summary.duration_s = time.perf_counter() - start
    export_summary(summary, out / "summary.json")
    return summary
