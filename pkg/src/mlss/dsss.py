"""Standard DSSS-PN reference system.

M-sequence generation from LFSRs, antipodal spreading/despreading by
correlation, and unique-word frame synchronisation.  Everything here is
purely functional over immutable configs, safe for parallel Monte-Carlo
use.
"""

from dataclasses import dataclass, field

import numpy as np

from mlss.validation import check_bits

# Maximal-length tap sets, one per register degree.  taps = exponents of
# the feedback polynomial, recurrence s[t] = XOR of s[t - c] over taps.
PRIMITIVE_TAPS = {
    3: (3, 2),
    4: (4, 3),
    5: (5, 3),
    6: (6, 5),
    7: (7, 6),
    8: (8, 6, 5, 4),
    9: (9, 5),
    10: (10, 7),
    11: (11, 9),
    12: (12, 6, 4, 1),
    13: (13, 4, 3, 1),
    14: (14, 5, 3, 1),
    15: (15, 14),
    16: (16, 15, 13, 4),
    17: (17, 14),
    18: (18, 11),
    19: (19, 6, 2, 1),
    20: (20, 17),
    21: (21, 19),
    22: (22, 21),
    23: (23, 18),
    24: (24, 23, 22, 17),
}

# Prime factorisations of 2^m - 1, used to verify tap primitivity
# without generating the full period.
_MERSENNE_FACTORS = {
    3: (7,),
    4: (3, 5),
    5: (31,),
    6: (3, 7),
    7: (127,),
    8: (3, 5, 17),
    9: (7, 73),
    10: (3, 11, 31),
    11: (23, 89),
    12: (3, 5, 7, 13),
    13: (8191,),
    14: (3, 43, 127),
    15: (7, 31, 151),
    16: (3, 5, 17, 257),
    17: (131071,),
    18: (3, 7, 19, 73),
    19: (524287,),
    20: (3, 5, 11, 31, 41),
    21: (7, 127, 337),
    22: (3, 23, 89, 683),
    23: (47, 178481),
    24: (3, 5, 7, 13, 17, 241),
}


class InvalidTapsError(ValueError):
    """Raised when taps do not describe a maximal-length register."""


def _poly_from_taps(degree, taps):
    poly = 1  # x^0 term
    for c in taps:
        if not 1 <= c <= degree:
            raise InvalidTapsError(f"tap {c} outside 1..{degree}")
        poly |= 1 << c
    if not poly & (1 << degree):
        raise InvalidTapsError("taps must include the register degree")
    return poly


def _gf2_mulmod(a, b, poly, degree):
    res = 0
    while b:
        if b & 1:
            res ^= a
        b >>= 1
        a <<= 1
        if a & (1 << degree):
            a ^= poly
    return res


def _gf2_powmod(base, exp, poly, degree):
    res = 1
    while exp:
        if exp & 1:
            res = _gf2_mulmod(res, base, poly, degree)
        base = _gf2_mulmod(base, base, poly, degree)
        exp >>= 1
    return res


def _check_primitive(degree, taps):
    """x must have full multiplicative order 2^m - 1 mod the polynomial."""
    poly = _poly_from_taps(degree, taps)
    period = (1 << degree) - 1
    if _gf2_powmod(2, period, poly, degree) != 1:
        raise InvalidTapsError(f"taps {taps} are not even irreducible-compatible")
    for p in _MERSENNE_FACTORS[degree]:
        if _gf2_powmod(2, period // p, poly, degree) == 1:
            raise InvalidTapsError(f"taps {taps} give a short period (divisor {p})")


@dataclass(frozen=True)
class LfsrSpec:
    """Degree, feedback taps and nonzero initial state of an LFSR."""

    degree: int
    taps: tuple = None
    seed: int = 1

    def __post_init__(self):
        if not 1 <= self.degree <= 24:
            raise ValueError("degree must be in 1..24")
        if self.degree < 3:
            raise ValueError("degrees below 3 have no tabulated taps")
        if self.taps is None:
            object.__setattr__(self, "taps", PRIMITIVE_TAPS[self.degree])
        else:
            object.__setattr__(self, "taps", tuple(sorted(self.taps, reverse=True)))
        if not 0 < self.seed < (1 << self.degree):
            raise ValueError("seed must be a nonzero state of the register")
        _check_primitive(self.degree, self.taps)


def msequence(spec):
    """One full period of the maximal-length sequence, as +/-1 chips.

    Bit 1 maps to +1 and bit 0 to -1 so the balance property reads
    (#+1) - (#-1) = 1.
    """
    m = spec.degree
    period = (1 << m) - 1
    tap_mask = 0
    for c in spec.taps:
        tap_mask |= 1 << (c - 1)
    state = spec.seed
    bits = np.empty(period, dtype=np.int8)
    for i in range(period):
        bits[i] = state & 1
        fb = (state & tap_mask).bit_count() & 1
        state = (state >> 1) | (fb << (m - 1))
    return np.where(bits == 1, 1.0, -1.0)


def periodic_acf(chips):
    """Circular autocorrelation, normalised to 1 at zero lag."""
    chips = np.asarray(chips, dtype=np.float64)
    n = chips.size
    spec = np.fft.rfft(chips)
    corr = np.fft.irfft(spec * np.conj(spec), n)
    return corr / corr[0]


@dataclass(frozen=True)
class DsssConfig:
    """Spreading configuration for the PN reference system.

    One shared PN segment spreads both bit values antipodally (bit 1 ->
    +segment, bit 0 -> -segment) unless a second sequence is supplied,
    in which case each bit value gets its own sequence.
    """

    n_spread: int
    pn: np.ndarray = None
    pn_zero: np.ndarray = None
    lfsr: LfsrSpec = field(default=None)
    unique_word: tuple = ()

    def __post_init__(self):
        if self.pn is None:
            spec = self.lfsr if self.lfsr is not None else LfsrSpec(degree=7)
            object.__setattr__(self, "lfsr", spec)
            object.__setattr__(self, "pn", msequence(spec))
        pn = np.asarray(self.pn, dtype=np.float64)
        object.__setattr__(self, "pn", pn)
        if self.n_spread < 1 or self.n_spread > pn.size:
            raise ValueError("spreading factor must be in 1..PN period")
        if self.pn_zero is not None:
            pz = np.asarray(self.pn_zero, dtype=np.float64)
            if pz.size < self.n_spread:
                raise ValueError("bit-0 sequence shorter than the spreading factor")
            object.__setattr__(self, "pn_zero", pz)

    @property
    def segment_one(self):
        return self.pn[: self.n_spread]

    @property
    def segment_zero(self):
        if self.pn_zero is not None:
            return self.pn_zero[: self.n_spread]
        return -self.pn[: self.n_spread]


def spread(bits, config):
    """Spread each bit to N chips; unit chip power by construction."""
    bits = check_bits(bits)
    if bits.size == 0:
        raise ValueError("empty bit stream")
    out = np.empty(bits.size * config.n_spread)
    seg1 = config.segment_one
    seg0 = config.segment_zero
    chunks = out.reshape(bits.size, config.n_spread)
    chunks[bits == 1] = seg1
    chunks[bits == 0] = seg0
    return out


def despread(received, config):
    """Correlate with the bit-1 spreading segment, one value per bit.

    The correlation is positive when the transmitted bit is one and
    negative when it is zero (for the antipodal single-sequence setup).
    With two sequences the statistic is corr(seg1) - corr(seg0).
    """
    received = np.asarray(received, dtype=np.float64)
    n = config.n_spread
    if received.size < n:
        raise ValueError("received stream shorter than one bit period")
    nbits = received.size // n
    blocks = received[: nbits * n].reshape(nbits, n)
    stat = blocks @ config.segment_one
    if config.pn_zero is not None:
        stat = stat - blocks @ config.segment_zero
    return stat


def hard_bits(soft):
    """Sign decisions on correlator outputs (0 decodes as bit 0)."""
    return (np.asarray(soft) > 0).astype(np.int64)


def unique_word_sync(bits, unique_word, max_errors=0):
    """First offset where the unique word appears within ``max_errors``.

    Returns None when no window matches.  Intended for unique words of
    16+ bits; shorter words inflate the false-alarm rate accordingly.
    """
    bits = check_bits(bits)
    uw = check_bits(unique_word, name="unique_word")
    if uw.size == 0 or bits.size < uw.size:
        return None
    # sliding Hamming distance via correlation of +/-1 views
    b = 2.0 * bits - 1.0
    u = 2.0 * uw - 1.0
    corr = np.correlate(b, u, mode="valid")
    dist = (uw.size - corr) / 2.0
    hits = np.nonzero(dist <= max_errors + 1e-9)[0]
    return int(hits[0]) if hits.size else None


def qpsk_pairs(chips):
    """Consecutive non-overlapping chip pairs as I/Q points."""
    chips = np.asarray(chips, dtype=np.float64)
    n = chips.size - (chips.size % 2)
    return chips[:n].reshape(-1, 2)
