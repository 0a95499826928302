"""Training loss functions.

Both losses reduce over the last axis (the network output axis) and, for
2-D input, return the mean over rows so a batch evaluates to a scalar.
"""

import numpy as np

#: Clip floor for predicted probabilities: the 64-bit machine epsilon.
CLIP_EPS = float(np.finfo(np.float64).eps)


def _clip_probs(m_hat):
    return np.clip(m_hat, CLIP_EPS, 1.0 - CLIP_EPS)


def cross_entropy_loss(m_hat, m):
    """Clipped cross-entropy between network output and target.

    Per element: ``-p * log(p_hat)`` with ``p_hat`` clipped to
    ``[eps, 1-eps]`` (eps = machine epsilon, preventing log(0)) and the
    target clipped to ``[0, 1]`` so antipodal targets act as one-hot
    probabilities.  The element losses are averaged over the output
    dimension.
    """
    m_hat = np.asarray(m_hat, dtype=np.float64)
    m = np.asarray(m, dtype=np.float64)
    if m_hat.shape != m.shape:
        raise ValueError(f"shape mismatch: {m_hat.shape} vs {m.shape}")
    p_hat = _clip_probs(m_hat)
    p = np.clip(m, 0.0, 1.0)
    l_i = -p * np.log(p_hat)
    return float(np.mean(l_i.mean(axis=-1)))


def cross_entropy_grad(m_hat, m):
    """Exact gradient of :func:`cross_entropy_loss` w.r.t. ``m_hat``.

    Zero where the prediction sits in the clipped region, matching the
    piecewise definition of the loss.  Includes the 1/output_dim factor
    but not the batch mean.
    """
    m_hat = np.asarray(m_hat, dtype=np.float64)
    p = np.clip(m, 0.0, 1.0)
    inside = (m_hat > CLIP_EPS) & (m_hat < 1.0 - CLIP_EPS)
    g = np.where(inside, -p / _clip_probs(m_hat), 0.0)
    return g / m_hat.shape[-1]


def mae_loss(m_hat, m):
    """Mean absolute error over the network outputs."""
    m_hat = np.asarray(m_hat, dtype=np.float64)
    m = np.asarray(m, dtype=np.float64)
    if m_hat.shape != m.shape:
        raise ValueError(f"shape mismatch: {m_hat.shape} vs {m.shape}")
    return float(np.mean(np.abs(m - m_hat).mean(axis=-1)))


def mae_grad(m_hat, m):
    """Subgradient of :func:`mae_loss` w.r.t. ``m_hat`` (0 at kinks).

    Includes the 1/output_dim factor but not the batch mean.
    """
    m_hat = np.asarray(m_hat, dtype=np.float64)
    m = np.asarray(m, dtype=np.float64)
    return np.sign(m_hat - m) / m_hat.shape[-1]


LOSSES = {
    "cross_entropy": (cross_entropy_loss, cross_entropy_grad),
    "mae": (mae_loss, mae_grad),
}
