"""Input validation helpers shared across the package."""

import numpy as np


def check_bits(bits, length=None, name="bits"):
    """Coerce to a 1-D int array of 0/1 values.

    Accepts lists, 0/1 arrays and boolean arrays.  Raises ValueError on
    anything that is not binary or on a length mismatch.
    """
    arr = np.asarray(bits)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    arr = arr.astype(np.int64, copy=False)
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0/1 values")
    if length is not None and arr.size != length:
        raise ValueError(f"{name} must have length {length}, got {arr.size}")
    return arr


def check_bit_blocks(blocks, k, name="blocks"):
    """Coerce to a 2-D array of shape (n_blocks, k) of 0/1 values."""
    arr = np.asarray(blocks)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != k:
        raise ValueError(f"{name} must have shape (n, {k}), got {arr.shape}")
    arr = arr.astype(np.int64, copy=False)
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0/1 values")
    return arr


def check_chips(chips, length=None, name="chips"):
    """Coerce to a finite 1-D float64 array."""
    arr = np.asarray(chips, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if length is not None and arr.size != length:
        raise ValueError(f"{name} must have length {length}, got {arr.size}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_chip_blocks(chips, n, name="chips"):
    """Coerce to a finite 2-D float64 array of shape (n_blocks, n)."""
    arr = np.asarray(chips, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != n:
        raise ValueError(f"{name} must have shape (m, {n}), got {arr.shape}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_rng(seed_or_rng):
    """Return a numpy Generator from a seed, Generator or None."""
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)
