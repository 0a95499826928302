"""Rate-1/2 (1944, 972) LDPC codec with normalized min-sum decoding.

The parity-check matrix ships as an alist asset (WLAN rate-1/2
prototype, circulant size 81) with a sha256 checksum verified at load.
Encoding is systematic: with H = [A | B] and invertible parity part B,
the parity bits solve B p = A m over GF(2) via a precomputed B^-1 A.

The decoder is a batched normalized min-sum (scale 0.8 by default) with
early exit once every parity check is satisfied.  Soft input
convention: positive values favour bit 1 (matching the antipodal
mapping 0 -> -1, 1 -> +1 used package-wide).
"""

import hashlib
from dataclasses import dataclass
from importlib import resources

import numpy as np

from mlss.validation import check_bits

_ASSET = "wlan_n1944_r12_z81.alist"


class LdpcLoadError(ValueError):
    """Raised when the parity-check asset fails validation."""


def _read_asset():
    pkg = resources.files("mlss.fec") / "data"
    text = (pkg / _ASSET).read_text()
    expect = (pkg / (_ASSET + ".sha256")).read_text().strip()
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != expect:
        raise LdpcLoadError(
            f"parity-check asset checksum mismatch: {digest} != {expect}"
        )
    return text


def parse_alist(text):
    """Alist text -> dense uint8 parity-check matrix."""
    tokens = text.split()
    pos = 0

    def take(count):
        nonlocal pos
        vals = [int(t) for t in tokens[pos : pos + count]]
        pos += count
        return vals

    n, m = take(2)
    take(2)  # max degrees, unused
    col_deg = take(n)
    row_deg = take(m)
    h = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        for i in take(col_deg[j]):
            h[i - 1, j] = 1
    for i in range(m):
        cols = take(row_deg[i])
        if sorted(cols) != sorted(np.nonzero(h[i, :])[0] + 1):
            raise LdpcLoadError(f"alist row list {i} inconsistent with column lists")
    return h


def _gf2_solve_parity(h):
    """Return M with parity = (M @ message) % 2, from H = [A | B]."""
    m, n = h.shape
    k = n - m
    a = h[:, :k].astype(np.uint8)
    b = h[:, k:].astype(np.uint8)
    # invert B by Gauss-Jordan on [B | A]; result is B^-1 A
    work = np.concatenate([b, a], axis=1).astype(np.uint8)
    for col in range(m):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            raise LdpcLoadError("parity part of H is singular over GF(2)")
        piv = pivots[0] + col
        if piv != col:
            work[[col, piv]] = work[[piv, col]]
        rows = np.nonzero(work[:, col])[0]
        rows = rows[rows != col]
        work[rows] ^= work[col]
    return work[:, m:]  # B^-1 A, shape (m, k)


@dataclass
class LdpcConfig:
    max_iterations: int = 50
    normalization: float = 0.8

    def __post_init__(self):
        if not 0.0 < self.normalization <= 1.0:
            raise ValueError("normalization factor must be in (0, 1]")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


class LdpcCode:
    """Systematic LDPC codec over a validated parity-check matrix."""

    def __init__(self, h, config=None):
        h = np.asarray(h, dtype=np.uint8)
        if h.ndim != 2 or h.shape[0] >= h.shape[1]:
            raise LdpcLoadError(f"H must be m x n with m < n, got {h.shape}")
        self.h = h
        self.m, self.n = h.shape
        self.k = self.n - self.m
        self.config = config or LdpcConfig()
        self._parity_map = _gf2_solve_parity(h)
        rows, cols = np.nonzero(h)
        order = np.argsort(rows, kind="stable")
        self.edge_row = rows[order]
        self.edge_col = cols[order]
        self.row_start = np.searchsorted(self.edge_row, np.arange(self.m))
        self.row_deg = np.bincount(self.edge_row, minlength=self.m)

    @property
    def rate(self):
        return self.k / self.n

    def encode(self, message):
        """k info bits -> n-bit codeword [message | parity]."""
        message = check_bits(message, length=self.k, name="message")
        parity = (self._parity_map @ message.astype(np.uint8)).astype(np.int64) % 2
        cw = np.concatenate([message, parity])
        return cw

    def encode_blocks(self, messages):
        messages = np.atleast_2d(np.asarray(messages, dtype=np.uint8))
        if messages.shape[1] != self.k:
            raise ValueError(f"messages must have {self.k} columns")
        parity = (messages @ self._parity_map.T).astype(np.int64) % 2
        return np.concatenate([messages.astype(np.int64), parity], axis=1)

    def check(self, codeword):
        """All parity checks satisfied?"""
        codeword = np.asarray(codeword, dtype=np.int64)
        return not np.any((self.h @ (codeword % 2)) % 2)

    def decode(self, soft):
        """Normalized min-sum decode of one or many soft codewords.

        ``soft``: shape (n,) or (batch, n), positive favours bit 1.
        Returns ``(message_bits, converged)``; for batched input both
        have a leading batch axis.
        """
        soft = np.asarray(soft, dtype=np.float64)
        single = soft.ndim == 1
        lam = np.atleast_2d(soft) * -1.0  # internal: positive favours bit 0
        if lam.shape[1] != self.n:
            raise ValueError(f"soft input must have {self.n} values per codeword")
        batch = lam.shape[0]
        e_row, e_col = self.edge_row, self.edge_col
        n_e = e_row.size
        alpha = self.config.normalization
        c2v = np.zeros((n_e, batch))
        total = lam.T[e_col] * 0.0  # edge-indexed scratch
        converged = np.zeros(batch, dtype=bool)
        hard = (lam < 0).astype(np.int64)
        bounds = self.row_start

        def col_accumulate(msgs):
            acc = np.zeros((self.n, batch))
            np.add.at(acc, e_col, msgs)
            return acc.T  # (batch, n)

        for _ in range(self.config.max_iterations):
            # variable-to-check: total belief minus incoming edge message
            belief = lam + col_accumulate(c2v)
            v2c = belief.T[e_col] - c2v  # (n_e, batch)

            # check-node update: sign product and two smallest magnitudes
            mag = np.abs(v2c)
            sgn = np.where(v2c < 0, -1.0, 1.0)
            sign_prod = np.multiply.reduceat(sgn, bounds, axis=0)
            min1_val = np.minimum.reduceat(mag, bounds, axis=0)
            # index of the minimum within each row segment
            is_min = mag == np.repeat(min1_val, self.row_deg, axis=0)
            masked = np.where(is_min, np.inf, mag)
            min2_val = np.minimum.reduceat(masked, bounds, axis=0)
            # rows where the minimum is repeated: min2 equals min1
            min2_val = np.where(np.isinf(min2_val), min1_val, min2_val)

            min1_e = np.repeat(min1_val, self.row_deg, axis=0)
            min2_e = np.repeat(min2_val, self.row_deg, axis=0)
            sign_e = np.repeat(sign_prod, self.row_deg, axis=0) * sgn
            out_mag = np.where(is_min, min2_e, min1_e)
            c2v = alpha * sign_e * out_mag

            posterior = lam + col_accumulate(c2v)
            hard = (posterior < 0).astype(np.int64)
            syndrome = np.zeros((self.m, batch), dtype=np.int64)
            np.add.at(syndrome, e_row, hard.T[e_col])
            converged = ~np.any(syndrome % 2, axis=0)
            if converged.all():
                break

        messages = hard[:, : self.k]
        if single:
            return messages[0], bool(converged[0])
        return messages, converged


_DEFAULT_CODE = None


def load_wlan_ldpc(config=None):
    """The packaged (1944, 972) code; cached after first load."""
    global _DEFAULT_CODE
    if _DEFAULT_CODE is None or config is not None:
        code = LdpcCode(parse_alist(_read_asset()), config)
        if config is None:
            _DEFAULT_CODE = code
        return code
    return _DEFAULT_CODE
