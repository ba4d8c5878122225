"""Reverse-process samplers: deterministic DDIM and stochastic ancestral.

Both samplers drive an x-prediction denoiser over a strictly decreasing time
grid 1 = t_1 > ... > t_T = 0 and are shape-agnostic: they apply elementwise
updates to whatever array the denoiser accepts.

Update rules (fixed here so every caller agrees):

DDIM step t -> s:
    z_s = alpha_s * xhat + (sigma_s / sigma_t) * (z_t - alpha_t * xhat)

Ancestral step t -> s draws from the forward-process posterior given xhat,
with the lower-bound ("small") variance choice:
    r        = alpha_t / alpha_s
    var_t|s  = sigma_t^2 - r^2 * sigma_s^2
    mean     = (r * sigma_s^2 / sigma_t^2) * z_t + (alpha_s * var_t|s / sigma_t^2) * xhat
    variance = var_t|s * sigma_s^2 / sigma_t^2

At the final step (s = 0) both rules return xhat exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .schedule import NoiseSchedule
from .seeding import child_rng

__all__ = [
    "EVAL_STEPS",
    "PRIOR_STEPS",
    "SamplerSpec",
    "uniform_time_grid",
    "sample_ddim",
    "sample_ancestral",
    "sample_batch",
]

EVAL_STEPS = 64  # default DDIM grid for evaluation sampling
PRIOR_STEPS = 128  # default ancestral grid for prior-set generation

_CLAMP_MODES = ("final", "per-step", "none")


def uniform_time_grid(steps: int) -> tuple[float, ...]:
    """Uniform grid of ``steps`` points from exactly 1.0 down to exactly 0.0."""
    if steps < 2:
        raise ValueError(f"need at least 2 grid points, got {steps}")
    return tuple(float(t) for t in np.linspace(1.0, 0.0, steps))


@dataclass(frozen=True)
class SamplerSpec:
    """Sampler kind, time grid and output clamping policy.

    clamp: 'final' clamps the returned sample to [-1, 1] once at output;
    'per-step' additionally clamps every intermediate x-prediction;
    'none' disables clamping (used by the unbounded 1-d oracles).
    """

    kind: str
    steps: int = EVAL_STEPS
    grid: tuple[float, ...] = field(default=())
    clamp: str = "final"

    def __post_init__(self):
        if self.kind not in ("ddim", "ancestral"):
            raise ValueError(f"unknown sampler kind '{self.kind}'")
        if self.clamp not in _CLAMP_MODES:
            raise ValueError(f"clamp must be one of {_CLAMP_MODES}, got '{self.clamp}'")
        grid = self.grid or uniform_time_grid(self.steps)
        grid = tuple(float(t) for t in grid)
        if grid[0] != 1.0 or grid[-1] != 0.0:
            raise ValueError(f"time grid must run from exactly 1 to exactly 0, got ends ({grid[0]}, {grid[-1]})")
        if any(a <= b for a, b in zip(grid, grid[1:])):
            raise ValueError("time grid must be strictly decreasing")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "steps", len(grid))

    def to_config(self) -> dict:
        return {"kind": self.kind, "steps": self.steps, "clamp": self.clamp}

    @classmethod
    def from_config(cls, cfg: dict) -> "SamplerSpec":
        return cls(kind=cfg["kind"], steps=int(cfg["steps"]), clamp=cfg.get("clamp", "final"))


def _denoise_fn(model, c):
    """Adapt a model (or bare callable) to xhat = fn(z, t)."""
    if hasattr(model, "predict_x0"):
        return lambda z, t: model.predict_x0(z, t, c)
    if callable(model):
        return lambda z, t: model(z, t, c)
    raise TypeError(f"model must expose predict_x0 or be callable, got {type(model)!r}")


def _clamped(x: np.ndarray, mode: str, final: bool) -> np.ndarray:
    if mode == "per-step" or (mode == "final" and final):
        return np.clip(x, -1.0, 1.0)
    return x


def sample_ddim(model, c, spec: SamplerSpec, z_init: np.ndarray, schedule: NoiseSchedule | None = None) -> np.ndarray:
    """Deterministic DDIM trajectory from z_init; same inputs, same bits."""
    if spec.kind != "ddim":
        raise ValueError(f"sample_ddim requires a ddim spec, got '{spec.kind}'")
    schedule = schedule or NoiseSchedule()
    fn = _denoise_fn(model, c)
    z = np.asarray(z_init, dtype=np.float32)
    grid = spec.grid
    for i in range(len(grid) - 1):
        t, s = grid[i], grid[i + 1]
        a_t, s_t, _ = schedule.coeffs(t)
        a_s, s_s, _ = schedule.coeffs(s)
        xhat = _clamped(np.asarray(fn(z, t), dtype=np.float32), spec.clamp, final=False)
        z = (np.float32(a_s) * xhat + np.float32(s_s / s_t) * (z - np.float32(a_t) * xhat)).astype(np.float32)
    return _clamped(z, spec.clamp, final=True)


def _ancestral_coeffs(schedule: NoiseSchedule, t: float, s: float) -> tuple[float, float, float]:
    """(coef of z_t, coef of xhat, posterior std) for the step t -> s."""
    a_t, s_t, _ = schedule.coeffs(t)
    a_s, s_s, _ = schedule.coeffs(s)
    r = a_t / a_s
    var_ts = s_t**2 - (r**2) * (s_s**2)
    c_z = r * (s_s**2) / (s_t**2)
    c_x = a_s * var_ts / (s_t**2)
    var = var_ts * (s_s**2) / (s_t**2)
    return c_z, c_x, float(np.sqrt(max(var, 0.0)))


def sample_ancestral(
    model,
    c,
    spec: SamplerSpec,
    shape: tuple[int, ...],
    rng: np.random.Generator,
    schedule: NoiseSchedule | None = None,
) -> np.ndarray:
    """Stochastic ancestral sample of the given shape, driven by ``rng``."""
    if spec.kind != "ancestral":
        raise ValueError(f"sample_ancestral requires an ancestral spec, got '{spec.kind}'")
    schedule = schedule or NoiseSchedule()
    fn = _denoise_fn(model, c)
    z = rng.standard_normal(shape, dtype=np.float32)
    grid = spec.grid
    for i in range(len(grid) - 1):
        t, s = grid[i], grid[i + 1]
        c_z, c_x, std = _ancestral_coeffs(schedule, t, s)
        xhat = _clamped(np.asarray(fn(z, t), dtype=np.float32), spec.clamp, final=False)
        eps = rng.standard_normal(shape, dtype=np.float32)
        z = (np.float32(c_z) * z + np.float32(c_x) * xhat + np.float32(std) * eps).astype(np.float32)
    return _clamped(z, spec.clamp, final=True)


def sample_batch(
    model,
    c,
    spec: SamplerSpec,
    shape: tuple[int, ...],
    count: int,
    seed: int,
    schedule: NoiseSchedule | None = None,
) -> np.ndarray:
    """``count`` independent samples, batched through the model.

    Sample k draws all of its noise from the sub-stream (seed, k), so the
    result is one deterministic function of (seed, count) and a count=1 batch
    reproduces a single sampler call seeded with sub-stream (seed, 0).
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    schedule = schedule or NoiseSchedule()
    rngs = [child_rng(seed, k) for k in range(count)]
    c_batch = _broadcast_cond(c, count)
    fn = _denoise_fn(model, c_batch)
    z = np.stack([r.standard_normal(shape, dtype=np.float32) for r in rngs])
    grid = spec.grid
    if spec.kind == "ddim":
        for i in range(len(grid) - 1):
            t, s = grid[i], grid[i + 1]
            a_t, s_t, _ = schedule.coeffs(t)
            a_s, s_s, _ = schedule.coeffs(s)
            xhat = _clamped(np.asarray(fn(z, t), dtype=np.float32), spec.clamp, final=False)
            z = (np.float32(a_s) * xhat + np.float32(s_s / s_t) * (z - np.float32(a_t) * xhat)).astype(np.float32)
    else:
        for i in range(len(grid) - 1):
            t, s = grid[i], grid[i + 1]
            c_z, c_x, std = _ancestral_coeffs(schedule, t, s)
            xhat = _clamped(np.asarray(fn(z, t), dtype=np.float32), spec.clamp, final=False)
            eps = np.stack([r.standard_normal(shape, dtype=np.float32) for r in rngs])
            z = (np.float32(c_z) * z + np.float32(c_x) * xhat + np.float32(std) * eps).astype(np.float32)
    return _clamped(z, spec.clamp, final=True)


def _broadcast_cond(c, count: int):
    if c is None:
        return None
    arr = np.asarray(c, dtype=np.float32)
    if arr.ndim == 1:
        return np.broadcast_to(arr, (count, arr.shape[0])).copy()
    if arr.shape[0] != count:
        raise ValueError(f"conditioning batch size {arr.shape[0]} != sample count {count}")
    return arr
