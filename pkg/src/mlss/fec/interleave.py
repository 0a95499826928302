"""Block interleaver and stream segmentation into network blocks."""

from dataclasses import dataclass

import numpy as np

from mlss.validation import check_bits


def interleave(bits, rows, cols):
    """Row-in/column-out block interleaver; length must equal rows*cols."""
    bits = np.asarray(bits)
    if bits.size != rows * cols:
        raise ValueError(f"length {bits.size} != rows*cols = {rows * cols}")
    return bits.reshape(rows, cols).T.reshape(-1)


def deinterleave(bits, rows, cols):
    """Exact inverse of :func:`interleave`."""
    bits = np.asarray(bits)
    if bits.size != rows * cols:
        raise ValueError(f"length {bits.size} != rows*cols = {rows * cols}")
    return bits.reshape(cols, rows).T.reshape(-1)


@dataclass(frozen=True)
class SegmentRecord:
    """How a stream was split: block count and zero-pad length."""

    n_blocks: int
    pad_bits: int
    block_size: int


def segment(bits, k):
    """Split a stream into k-bit blocks, zero-padding the tail.

    Returns ``(blocks, record)`` where blocks has shape (n_blocks, k)
    and the record allows :func:`reassemble` to strip the padding
    exactly.
    """
    bits = check_bits(bits)
    if k < 1:
        raise ValueError("block size must be >= 1")
    pad = (-bits.size) % k
    padded = np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)])
    blocks = padded.reshape(-1, k)
    return blocks, SegmentRecord(n_blocks=blocks.shape[0], pad_bits=pad, block_size=k)


def reassemble(blocks, record):
    """Concatenate blocks and strip the recorded padding."""
    blocks = np.asarray(blocks)
    if blocks.shape != (record.n_blocks, record.block_size):
        raise ValueError(
            f"blocks shape {blocks.shape} does not match record "
            f"({record.n_blocks}, {record.block_size})"
        )
    flat = blocks.reshape(-1)
    if record.pad_bits:
        flat = flat[: -record.pad_bits]
    return flat
