"""Variance-preserving cosine noise schedule and the forward diffusion map.

Coefficients over continuous time t in [0, 1]:

    alpha(t) = cos(pi t / 2),  sigma(t) = sin(pi t / 2),  weight(t) = 1

so alpha^2 + sigma^2 = 1 exactly and a unit-variance signal stays unit
variance at every noise level. The loss weight is uniform; training code only
relies on it being positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .autodiff import ShapeMismatch

__all__ = ["T_CLAMP_MIN", "NoiseSchedule", "ForwardSample", "schedule_coeffs", "forward_diffuse"]

# training-time lower clamp on t; avoids a degenerate zero-noise target
T_CLAMP_MIN = 1e-4


@dataclass(frozen=True)
class NoiseSchedule:
    """Coefficient evaluator for the forward process."""

    kind: str = "vp-cosine"

    def __post_init__(self):
        if self.kind != "vp-cosine":
            raise ValueError(f"unknown schedule kind '{self.kind}'")

    def coeffs(self, t):
        """(alpha, sigma, weight) at time(s) t; t may be a scalar or array."""
        t_arr = np.asarray(t, dtype=np.float64)
        if np.any(t_arr < 0.0) or np.any(t_arr > 1.0):
            raise ValueError(f"diffusion time must lie in [0, 1], got {t!r}")
        half_pi_t = 0.5 * np.pi * t_arr
        alpha = np.cos(half_pi_t)
        sigma = np.sin(half_pi_t)
        weight = np.ones_like(alpha)
        if np.isscalar(t) or t_arr.ndim == 0:
            return float(alpha), float(sigma), float(weight)
        return alpha, sigma, weight


def schedule_coeffs(schedule: NoiseSchedule, t):
    return schedule.coeffs(t)


@dataclass(frozen=True)
class ForwardSample:
    """A clean image, its draw of (t, eps) and the noised image z_t."""

    x: np.ndarray
    t: float
    eps: np.ndarray
    z_t: np.ndarray


def forward_diffuse(schedule: NoiseSchedule, x: np.ndarray, t: float, eps: np.ndarray) -> ForwardSample:
    """z_t = alpha_t * x + sigma_t * eps for a single clean image."""
    x = np.asarray(x, dtype=np.float32)
    eps = np.asarray(eps, dtype=np.float32)
    if eps.shape != x.shape:
        raise ShapeMismatch("eps", x.shape, eps.shape)
    if x.size and (x.min() < -1.0 - 1e-6 or x.max() > 1.0 + 1e-6):
        raise ValueError("clean image values must lie in [-1, 1]")
    alpha, sigma, _ = schedule.coeffs(t)
    z_t = (np.float32(alpha) * x + np.float32(sigma) * eps).astype(np.float32)
    return ForwardSample(x=x, t=float(t), eps=eps, z_t=z_t)
