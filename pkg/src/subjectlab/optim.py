"""Adam optimizer with the repo's fixed hyperparameters.

The update rule and constants are recorded here once; every training loop in
the repo goes through :func:`adam_step`. Learning rate 1e-5 is the fine-tuning
default used by the personalization recipes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .autodiff import DTYPE, AutodiffError, ParameterSet, ShapeMismatch

__all__ = ["BETA1", "BETA2", "ADAM_EPS", "FINETUNE_LR", "OptimizerState", "NonFiniteGradient", "adam_step"]

BETA1 = 0.9
BETA2 = 0.999
ADAM_EPS = 1e-8
FINETUNE_LR = 1e-5


class NonFiniteGradient(AutodiffError):
    """A gradient contained NaN/Inf; the step was refused."""

    def __init__(self, names: list[str]):
        self.names = names
        super().__init__(f"non-finite gradient for parameter(s): {', '.join(names)}")


@dataclass
class OptimizerState:
    """Per-parameter first/second moment accumulators plus a step counter."""

    m: dict[str, np.ndarray] = field(default_factory=dict)
    v: dict[str, np.ndarray] = field(default_factory=dict)
    step: int = 0

    @classmethod
    def for_params(cls, params: ParameterSet) -> "OptimizerState":
        state = cls()
        for name, arr in params.items():
            state.m[name] = np.zeros_like(arr)
            state.v[name] = np.zeros_like(arr)
        return state

    def check_shapes(self, params: ParameterSet) -> None:
        for name, arr in params.items():
            for accs in (self.m, self.v):
                if name not in accs:
                    raise KeyError(f"optimizer state missing accumulator for '{name}'")
                if accs[name].shape != arr.shape:
                    raise ShapeMismatch(name, arr.shape, accs[name].shape)


def adam_step(
    params: ParameterSet,
    grads: dict[str, np.ndarray],
    state: OptimizerState,
    learning_rate: float,
) -> tuple[ParameterSet, OptimizerState]:
    """One in-place Adam update; refuses the whole step on non-finite grads."""
    if learning_rate <= 0:
        raise ValueError(f"learning_rate must be positive, got {learning_rate}")
    state.check_shapes(params)
    bad = [name for name in params if not np.all(np.isfinite(grads[name]))]
    if bad:
        raise NonFiniteGradient(bad)

    state.step += 1
    t = state.step
    # bias correction folded into the step size
    lr_t = DTYPE(learning_rate * np.sqrt(1.0 - BETA2**t) / (1.0 - BETA1**t))
    b1, b2 = DTYPE(BETA1), DTYPE(BETA2)
    one_m_b1, one_m_b2 = DTYPE(1.0 - BETA1), DTYPE(1.0 - BETA2)
    eps = DTYPE(ADAM_EPS)
    for name, p in params.items():
        g = grads[name]
        m = state.m[name]
        v = state.v[name]
        m *= b1
        m += one_m_b1 * g
        v *= b2
        v += one_m_b2 * np.square(g)
        p -= lr_t * m / (np.sqrt(v) + eps)
    return params, state
