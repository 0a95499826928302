"""Walsh-Hadamard (256, 8) code used as the soft-decision reference.

Codewords are the +/-1 rows of the order-256 Sylvester-Hadamard matrix;
any two distinct rows are orthogonal, so their Hamming distance is
exactly half the length (d_min = 128).  Soft-decision decoding is the
correlation argmax over all rows, computed with the fast transform.
"""

import numpy as np


def _sylvester(order):
    h = np.array([[1.0]])
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    return h


def _fht(x):
    """Fast Walsh-Hadamard transform along the last axis (Sylvester order)."""
    x = np.array(x, dtype=np.float64, copy=True)
    n = x.shape[-1]
    h = 1
    while h < n:
        for i in range(0, n, 2 * h):
            a = x[..., i : i + h].copy()
            b = x[..., i + h : i + 2 * h]
            x[..., i : i + h] = a + b
            x[..., i + h : i + 2 * h] = a - b
        h *= 2
    return x


class WalshHadamardCode:
    """(2^k, k) Hadamard codebook with exhaustive-equivalent SDD."""

    def __init__(self, k=8):
        if not 1 <= k <= 12:
            raise ValueError("k must be in 1..12")
        self.k = k
        self.n = 1 << k
        self.codewords = _sylvester(self.n)

    @property
    def d_min(self):
        return self.n // 2

    def encode(self, message_index):
        """Codeword row(s) for integer message index/indices."""
        idx = np.asarray(message_index, dtype=np.int64)
        if np.any((idx < 0) | (idx >= self.n)):
            raise ValueError("message index out of range")
        return self.codewords[idx]

    def decode(self, soft):
        """Correlation-argmax message index for soft input rows.

        Implemented with the fast transform; identical to direct
        correlation with every codeword because the transform matrix is
        the codebook.  Ties resolve to the lowest index (argmax rule).
        """
        soft = np.asarray(soft, dtype=np.float64)
        if soft.shape[-1] != self.n:
            raise ValueError(f"soft input must have last dim {self.n}")
        scores = soft @ self.codewords.T
        return np.argmax(scores, axis=-1)

    def decode_fast(self, soft):
        """Same as :meth:`decode` through the O(n log n) transform."""
        soft = np.asarray(soft, dtype=np.float64)
        if soft.shape[-1] != self.n:
            raise ValueError(f"soft input must have last dim {self.n}")
        return np.argmax(_fht(soft), axis=-1)
