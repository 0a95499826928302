"""Activation functions for the spreading networks.

Both activations operate row-wise on 1-D or 2-D arrays (last axis is the
neuron axis).
"""

import numpy as np


def softmax(z):
    """Numerically stable softmax along the last axis.

    The maximum is subtracted before exponentiation; by shift invariance
    the result is unchanged.  Output rows sum to one and preserve the
    argmax of the input.
    """
    z = np.asarray(z, dtype=np.float64)
    shifted = z - z.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def ess(z):
    """Elliott symmetric sigmoid, z / (1 + |z|).

    Odd, monotone increasing, bounded in (-1, 1) and free of
    exponentials.
    """
    z = np.asarray(z, dtype=np.float64)
    return z / (1.0 + np.abs(z))


def ess_derivative(z):
    """Derivative of the Elliott symmetric sigmoid, 1 / (1 + |z|)^2."""
    z = np.asarray(z, dtype=np.float64)
    return 1.0 / (1.0 + np.abs(z)) ** 2
