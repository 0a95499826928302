"""Extended BCH(31,11) with exhaustive soft-decision (true ML) decoding.

The base (31, 11) code has designed distance 11; its degree-20
generator polynomial is built at construction from the minimal
polynomials of the first ten powers of a GF(32) primitive element
(field polynomial x^5 + x^2 + 1).  The extension appends an overall
parity bit (n = 32, d = 12).  Decoding correlates the soft input with
all 2048 antipodal codewords and takes the argmax, which is exact ML
for equal-energy codewords; ties resolve to the lowest codeword index.
"""

import numpy as np

from mlss.validation import check_bits

_FIELD_POLY = 0b100101  # x^5 + x^2 + 1, primitive over GF(2)
_M = 5
_N_FIELD = 31


def _build_tables():
    exp = np.zeros(2 * _N_FIELD, dtype=np.int64)
    log = np.zeros(_N_FIELD + 1, dtype=np.int64)
    x = 1
    for i in range(_N_FIELD):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & (1 << _M):
            x ^= _FIELD_POLY
    exp[_N_FIELD :] = exp[: _N_FIELD]
    return exp, log


def _poly_mul_gf2(a, b):
    """Multiply GF(2) polynomials given as coefficient arrays (low first)."""
    return np.convolve(a, b) % 2


def _minimal_polynomial(power, exp, log):
    """Minimal polynomial of alpha^power over GF(2), low-order first."""
    coset = set()
    j = power % _N_FIELD
    while j not in coset:
        coset.add(j)
        j = (2 * j) % _N_FIELD
    # product of (x - alpha^j) over the coset, in GF(32)[x]
    poly = [1]
    for j in sorted(coset):
        root = exp[j]
        nxt = [0] * (len(poly) + 1)
        for deg, c in enumerate(poly):
            if c == 0:
                continue
            nxt[deg + 1] ^= c
            nxt[deg] ^= exp[(log[c] + log[root]) % _N_FIELD] if c and root else 0
        poly = nxt
    coeffs = np.array(poly, dtype=np.int64)
    if np.any((coeffs != 0) & (coeffs != 1)):
        raise AssertionError("minimal polynomial has coefficients outside GF(2)")
    return coeffs


def _generator_polynomial():
    exp, log = _build_tables()
    g = np.array([1], dtype=np.int64)
    seen = set()
    for p in (1, 3, 5, 7, 9):
        coset = frozenset({p * (1 << i) % _N_FIELD for i in range(_M)})
        if coset in seen:
            continue
        seen.add(coset)
        g = _poly_mul_gf2(g, _minimal_polynomial(p, exp, log))
    return g  # low-order first


class BchCode:
    """Systematic extended BCH(32, 11) codec."""

    def __init__(self):
        g = _generator_polynomial()
        self.gen_degree = len(g) - 1
        if self.gen_degree != 20:
            raise AssertionError(f"generator degree {self.gen_degree}, expected 20")
        self.generator = g
        self.n_base = 31
        self.n = 32
        self.k = 11
        self._codebook = None
        self._codebook_pm = None

    def encode(self, message):
        """11 info bits -> 32-bit extended codeword (systematic)."""
        message = check_bits(message, length=self.k, name="message")
        # c(x) = x^20 m(x) + (x^20 m(x) mod g(x)); bit i of arrays = coeff of x^i
        shifted = np.zeros(self.n_base, dtype=np.int64)
        shifted[self.gen_degree :] = message
        rem = _poly_mod_gf2(shifted, self.generator)
        codeword = shifted.copy()
        codeword[: self.gen_degree] ^= rem
        parity = int(codeword.sum() % 2)
        return np.concatenate([codeword, [parity]])

    def encode_blocks(self, messages):
        messages = np.atleast_2d(np.asarray(messages, dtype=np.int64))
        return np.stack([self.encode(m) for m in messages])

    @property
    def codebook(self):
        """All 2048 codewords as rows of 0/1 bits (index = message value)."""
        if self._codebook is None:
            msgs = ((np.arange(1 << self.k)[:, None] >> np.arange(self.k)) & 1)
            self._codebook = self.encode_blocks(msgs)
            self._codebook_pm = (2.0 * self._codebook - 1.0)
        return self._codebook

    def decode_soft(self, soft):
        """Exhaustive-correlation ML decode of LLRs or antipodal reals.

        Positive soft values favour bit 1.  Returns the 11 info bits
        (rows for 2-D input).
        """
        soft = np.asarray(soft, dtype=np.float64)
        single = soft.ndim == 1
        soft = np.atleast_2d(soft)
        if soft.shape[1] != self.n:
            raise ValueError(f"soft input must have {self.n} values per codeword")
        _ = self.codebook
        idx = np.argmax(soft @ self._codebook_pm.T, axis=1)
        bits = ((idx[:, None] >> np.arange(self.k)) & 1).astype(np.int64)
        return bits[0] if single else bits

    def min_distance(self):
        """Exhaustive minimum weight over the 2047 nonzero codewords."""
        weights = self.codebook.sum(axis=1)
        return int(weights[1:].min())


def _poly_mod_gf2(a, g):
    """Remainder of polynomial a modulo g over GF(2) (low-order first)."""
    r = a.copy()
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        if r[i]:
            r[i - dg : i + 1] ^= g
    return r[:dg]
