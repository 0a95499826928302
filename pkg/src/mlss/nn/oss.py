"""One-step secant optimizer with a backtracking line search.

The search direction is built from the previous accepted step ``s`` and
gradient change ``y`` only (memoryless quasi-Newton):

    d = -g + A*s + B*y
    B = (s.g) / (s.y)
    A = -(1 + y.y / s.y) * B + (y.g) / (s.y)

falling back to steepest descent on the first iteration, when the
curvature pair loses positivity (s.y <= 1e-12), or when d is not a
descent direction.  A backtracking line search with an Armijo
sufficient-decrease test guarantees the accepted step never increases
the loss; a failed search rejects the step and halves the trial step
size for the next call.
"""

from dataclasses import dataclass, field

import numpy as np

SY_FLOOR = 1e-12


class TrainingDivergedError(RuntimeError):
    """Raised when the loss turns non-finite at the current parameters."""


@dataclass
class LineSearchSpec:
    backtrack: float = 0.5
    max_halvings: int = 40
    sufficient_decrease: float = 1e-4

    def __post_init__(self):
        if not 0.0 < self.backtrack < 1.0:
            raise ValueError("backtrack factor must be in (0, 1)")
        if self.max_halvings < 1:
            raise ValueError("max_halvings must be >= 1")


@dataclass
class OssState:
    """Optimizer memory carried between steps."""

    s: np.ndarray | None = None
    y: np.ndarray | None = None
    prev_grad: np.ndarray | None = None
    step_size: float = 1.0
    step_max: float = 1e6
    step_min: float = 1e-12
    line_search: LineSearchSpec = field(default_factory=LineSearchSpec)
    last_loss: float = np.nan
    accepted: bool = False

    def __post_init__(self):
        if not self.step_size > 0:
            raise ValueError("step_size must be > 0")


def _direction(grad, state):
    if state.s is None or state.y is None:
        return -grad
    s, y = state.s, state.y
    sy = float(s @ y)
    if sy <= SY_FLOOR:
        return -grad
    b = float(s @ grad) / sy
    a = -(1.0 + float(y @ y) / sy) * b + float(y @ grad) / sy
    d = -grad + a * s + b * y
    if float(d @ grad) >= 0.0:  # not a descent direction, reset
        return -grad
    return d


def oss_step(params, grad, state, eval_loss, f0=None):
    """Take one optimizer step; returns ``(new_params, new_state)``.

    ``eval_loss`` maps a parameter vector to the (deterministic) loss
    being minimised.  ``f0`` may supply the already-known loss at
    ``params`` to avoid one evaluation.  The step is rejected (params
    returned unchanged, trial step halved) if no trial point satisfies
    the sufficient-decrease test.
    """
    params = np.asarray(params, dtype=np.float64)
    grad = np.asarray(grad, dtype=np.float64)
    if params.shape != grad.shape:
        raise ValueError("params and grad must have identical shapes")
    if state.s is not None and state.s.shape != params.shape:
        raise ValueError("optimizer state does not match parameter count")

    if state.prev_grad is not None:
        state.y = grad - state.prev_grad

    if f0 is None:
        f0 = eval_loss(params)
    f0 = float(f0)
    if not np.isfinite(f0):
        raise TrainingDivergedError(f"loss is non-finite at current parameters ({f0})")

    d = _direction(grad, state)
    gd = float(grad @ d)
    ls = state.line_search
    alpha = state.step_size
    accepted = False
    new_params = params
    f_new = f0
    for _ in range(ls.max_halvings):
        trial = params + alpha * d
        f = float(eval_loss(trial))
        if np.isfinite(f) and f <= f0 + ls.sufficient_decrease * alpha * gd:
            accepted = True
            new_params = trial
            f_new = f
            break
        alpha *= ls.backtrack

    if accepted:
        state.s = new_params - params
        state.prev_grad = grad
        state.step_size = min(alpha * 2.0, state.step_max)
    else:
        # reject: keep params, halve the trial step, drop stale curvature
        state.s = None
        state.y = None
        state.prev_grad = None
        state.step_size = max(alpha, state.step_min)
    state.last_loss = f_new
    state.accepted = accepted
    return new_params, state
