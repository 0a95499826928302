"""Single-hidden-layer network model, forward pass and analytic gradients.

The model splits into a transmitter half (input -> hidden activations,
normalised to the channel) and a receiver half (channel symbols ->
output).  The hidden layer *is* the channel: its normalised activations
are the transmitted chips, and optional channel noise is added to them
before the receiver half.

Canonical parameter flattening order (used by the optimizer and the
model file format): W1 row-major, b1, W2 row-major, b2.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from mlss.nn.activations import ess, ess_derivative, softmax
from mlss.nn.losses import LOSSES


class Activation(str, Enum):
    LINEAR = "linear"
    SOFTMAX = "softmax"
    ESS = "ess"


@dataclass(frozen=True)
class LayerSpec:
    """Shape and activation of one dense layer."""

    input_dim: int
    output_dim: int
    activation: Activation

    def __post_init__(self):
        if self.input_dim < 1 or self.output_dim < 1:
            raise ValueError("layer dimensions must be >= 1")


def _apply(act, z):
    if act == Activation.LINEAR:
        return z
    if act == Activation.SOFTMAX:
        return softmax(z)
    if act == Activation.ESS:
        return ess(z)
    raise ValueError(f"unknown activation {act!r}")


def _apply_backward(act, z, out, grad_out):
    """Chain grad_out (dL/d out) back through the activation to dL/dz."""
    if act == Activation.LINEAR:
        return grad_out
    if act == Activation.SOFTMAX:
        dot = (grad_out * out).sum(axis=-1, keepdims=True)
        return out * (grad_out - dot)
    if act == Activation.ESS:
        return grad_out * ess_derivative(z)
    raise ValueError(f"unknown activation {act!r}")


@dataclass
class NetworkModel:
    """Weights, biases and chip normalisation of a spreading network.

    ``norm_gain``/``norm_offset`` map raw hidden activations to
    unit-power chips: ``chips = norm_gain * (hidden - norm_offset)``.
    The receiver half undoes the map before applying its weights, so the
    normalisation is transparent in the noise-free loop.
    """

    hidden: LayerSpec
    output: LayerSpec
    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray
    norm_gain: float = 1.0
    norm_offset: float = 0.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.hidden.activation == Activation.SOFTMAX:
            raise ValueError("softmax is only permitted on the output layer")
        if self.hidden.output_dim != self.output.input_dim:
            raise ValueError("hidden/output layer dimensions do not chain")
        expect = {
            "W1": (self.hidden.output_dim, self.hidden.input_dim),
            "b1": (self.hidden.output_dim,),
            "W2": (self.output.output_dim, self.output.input_dim),
            "b2": (self.output.output_dim,),
        }
        for name, shape in expect.items():
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            setattr(self, name, arr)
        if not (np.isfinite(self.norm_gain) and self.norm_gain > 0):
            raise ValueError("norm_gain must be finite and > 0")
        if not np.isfinite(self.norm_offset):
            raise ValueError("norm_offset must be finite")

    @property
    def input_dim(self):
        return self.hidden.input_dim

    @property
    def hidden_dim(self):
        return self.hidden.output_dim

    @property
    def output_dim(self):
        return self.output.output_dim

    @property
    def n_params(self):
        """Total trainable parameter count (weights and biases)."""
        return self.W1.size + self.b1.size + self.W2.size + self.b2.size

    def copy(self):
        return NetworkModel(
            hidden=self.hidden,
            output=self.output,
            W1=self.W1.copy(),
            b1=self.b1.copy(),
            W2=self.W2.copy(),
            b2=self.b2.copy(),
            norm_gain=self.norm_gain,
            norm_offset=self.norm_offset,
            meta=dict(self.meta),
        )


@dataclass
class ForwardTrace:
    """Intermediate results of one forward pass."""

    z_hidden: np.ndarray
    chips: np.ndarray
    z_out: np.ndarray
    m_hat: np.ndarray


def flatten_params(model):
    """Parameters as one vector in the canonical order."""
    return np.concatenate(
        [model.W1.ravel(), model.b1, model.W2.ravel(), model.b2]
    )


def set_params(model, vec):
    """Write a canonical-order flat vector back into the model arrays."""
    vec = np.asarray(vec, dtype=np.float64)
    if vec.size != model.n_params:
        raise ValueError(f"expected {model.n_params} parameters, got {vec.size}")
    i = 0
    for arr in (model.W1, model.b1, model.W2, model.b2):
        arr[...] = vec[i : i + arr.size].reshape(arr.shape)
        i += arr.size
    return model


def _forward_arrays(model, x, channel_noise=None):
    """Batch-capable forward pass; ``x`` has the input axis last."""
    z1 = x @ model.W1.T + model.b1
    h = _apply(model.hidden.activation, z1)
    chips = model.norm_gain * (h - model.norm_offset)
    if channel_noise is not None:
        received = chips + channel_noise
    else:
        received = chips
    u = received / model.norm_gain + model.norm_offset
    z2 = u @ model.W2.T + model.b2
    m_hat = _apply(model.output.activation, z2)
    return z1, h, chips, u, z2, m_hat


def forward(model, x, channel_noise=None):
    """Run one input vector through the full network.

    ``channel_noise``, when given, is added to the chips before the
    receiver half (the training-through-channel path).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (model.input_dim,):
        raise ValueError(f"input must have shape ({model.input_dim},), got {x.shape}")
    if channel_noise is not None:
        channel_noise = np.asarray(channel_noise, dtype=np.float64)
        if channel_noise.shape != (model.hidden_dim,):
            raise ValueError(
                f"channel_noise must have shape ({model.hidden_dim},), "
                f"got {channel_noise.shape}"
            )
    if not np.all(np.isfinite(model.W1)) or not np.all(np.isfinite(model.W2)):
        raise ValueError("model weights contain non-finite values")
    z1, h, chips, u, z2, m_hat = _forward_arrays(model, x, channel_noise)
    return ForwardTrace(z_hidden=z1, chips=chips, z_out=z2, m_hat=m_hat)


def batch_loss_and_grad(model, params, X, targets, loss_kind, channel_noise=None):
    """Loss and flat analytic gradient over a batch, at given parameters.

    ``params`` is a canonical-order vector; the model arrays are
    overwritten with it before evaluation (the model acts as scratch
    space for its own shapes).  The gradient is averaged over the batch,
    matching the batch-mean loss.
    """
    if loss_kind not in LOSSES:
        raise ValueError(f"unknown loss kind {loss_kind!r}")
    loss_fn, grad_fn = LOSSES[loss_kind]
    set_params(model, params)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    targets = np.atleast_2d(np.asarray(targets, dtype=np.float64))
    B = X.shape[0]
    z1, h, chips, u, z2, m_hat = _forward_arrays(model, X, channel_noise)

    loss = loss_fn(m_hat, targets)
    g_out = grad_fn(m_hat, targets) / B
    dz2 = _apply_backward(model.output.activation, z2, m_hat, g_out)
    gW2 = dz2.T @ u
    gb2 = dz2.sum(axis=0)
    du = dz2 @ model.W2
    # d chips/d h and the receiver-side unscaling cancel: du/dh = identity
    dz1 = _apply_backward(model.hidden.activation, z1, h, du)
    gW1 = dz1.T @ X
    gb1 = dz1.sum(axis=0)
    grad = np.concatenate([gW1.ravel(), gb1, gW2.ravel(), gb2])
    return loss, grad


def batch_loss(model, params, X, targets, loss_kind, channel_noise=None):
    """Loss only (used by the line search)."""
    if loss_kind not in LOSSES:
        raise ValueError(f"unknown loss kind {loss_kind!r}")
    loss_fn, _ = LOSSES[loss_kind]
    set_params(model, params)
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    targets = np.atleast_2d(np.asarray(targets, dtype=np.float64))
    m_hat = _forward_arrays(model, X, channel_noise)[5]
    return loss_fn(m_hat, targets)


def backprop(model, x, target, loss_kind, channel_noise=None):
    """Analytic gradient of the selected loss for one sample.

    Returns the gradient w.r.t. all parameters flattened in canonical
    order (W1 row-major, b1, W2 row-major, b2).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (model.input_dim,):
        raise ValueError(f"input must have shape ({model.input_dim},), got {x.shape}")
    if channel_noise is not None:
        channel_noise = np.asarray(channel_noise, dtype=np.float64)
        if channel_noise.shape != (model.hidden_dim,):
            raise ValueError(
                f"channel_noise must have shape ({model.hidden_dim},), "
                f"got {channel_noise.shape}"
            )
        channel_noise = channel_noise.reshape(1, -1)
    params = flatten_params(model)
    _, grad = batch_loss_and_grad(
        model, params, x.reshape(1, -1), np.asarray(target, dtype=np.float64).reshape(1, -1),
        loss_kind, channel_noise,
    )
    return grad
