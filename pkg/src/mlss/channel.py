"""AWGN channel, SNR bookkeeping, noise-variance estimation and
root-raised-cosine pulse shaping.

SNR convention (used consistently package-wide): ``SNR`` is the
per-chip energy to noise spectral density ratio Ec/N0 on a real
channel, so for unit-power chips the sampled noise variance per chip is
``sigma^2 = 10^(-SNR/10) / 2``.  With this accounting an uncoded
antipodal system simulated at Eb/N0 = x dB lands exactly on the
textbook Q(sqrt(2 Eb/N0)) curve, and

    SNR[dB] = Eb/N0[dB] - 10 log10(N) - 10 log10(1/R)

for spreading factor N and code rate R.
"""

from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve, welch

from mlss.validation import check_chips, check_rng


def snr_from_ebn0(ebn0_db, n_spread, code_rate=1.0):
    """Per-chip SNR in dB for a given Eb/N0, spreading factor and rate."""
    if n_spread < 1:
        raise ValueError("spreading factor must be >= 1")
    if not 0.0 < code_rate <= 1.0:
        raise ValueError("code rate must be in (0, 1]")
    return float(ebn0_db - 10.0 * np.log10(n_spread) - 10.0 * np.log10(1.0 / code_rate))


def ebn0_from_snr(snr_db, n_spread, code_rate=1.0):
    """Inverse of :func:`snr_from_ebn0`; the pair composes to identity."""
    if n_spread < 1:
        raise ValueError("spreading factor must be >= 1")
    if not 0.0 < code_rate <= 1.0:
        raise ValueError("code rate must be in (0, 1]")
    return float(snr_db + 10.0 * np.log10(n_spread) + 10.0 * np.log10(1.0 / code_rate))


def noise_sigma(snr_db, chip_power=1.0):
    """Per-chip noise standard deviation for the given SNR."""
    if np.isposinf(snr_db):
        return 0.0
    return float(np.sqrt(0.5 * chip_power * 10.0 ** (-snr_db / 10.0)))


@dataclass
class ChannelSpec:
    """Spreading factor, code rate and operating point of an AWGN run.

    Exactly one of ``snr_db``/``ebn0_db`` is given; the other is derived.
    """

    n_spread: int
    code_rate: float = 1.0
    snr_db: float | None = None
    ebn0_db: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if (self.snr_db is None) == (self.ebn0_db is None):
            raise ValueError("specify exactly one of snr_db or ebn0_db")
        if self.snr_db is None:
            self.snr_db = snr_from_ebn0(self.ebn0_db, self.n_spread, self.code_rate)
        else:
            self.ebn0_db = ebn0_from_snr(self.snr_db, self.n_spread, self.code_rate)


def awgn(chips, snr_db, rng, check_power=True):
    """Add white Gaussian noise at the given per-chip SNR.

    The chips are expected to be unit average power (asserted within
    5% unless ``check_power`` is off); seeded through ``rng`` so
    realizations are reproducible.
    """
    chips = np.asarray(chips, dtype=np.float64)
    if chips.size == 0:
        raise ValueError("empty chip array")
    if check_power:
        p = float(np.mean(chips**2))
        if abs(p - 1.0) > 0.05:
            raise ValueError(f"chip power {p:.4f} deviates more than 5% from 1.0")
    if np.isposinf(snr_db):
        return chips.copy()
    rng = check_rng(rng)
    sigma = noise_sigma(snr_db)
    return chips + sigma * rng.standard_normal(chips.shape)


def estimate_noise_variance(received, reference_power=1.0, min_chips=10_000):
    """Moment-method noise variance: sample power minus signal power.

    Clamped at 1e-9 from below; requires at least ``min_chips`` samples
    for a stable estimate.
    """
    received = check_chips(np.ravel(received), name="received")
    if received.size < min_chips:
        raise ValueError(f"need at least {min_chips} chips, got {received.size}")
    est = float(np.mean(received**2) - reference_power)
    return max(est, 1e-9)


@dataclass
class RrcSpec:
    """Root-raised-cosine filter: rolloff, span in chips, oversampling."""

    rolloff: float = 0.25
    span: int = 12
    samples_per_chip: int = 4

    def __post_init__(self):
        if not 0.0 < self.rolloff <= 1.0:
            raise ValueError("rolloff must be in (0, 1]")
        if self.span < 4:
            raise ValueError("filter span must cover at least 4 chips")
        if self.samples_per_chip < 2:
            raise ValueError("need at least 2 samples per chip")


def rrc_taps(spec):
    """Unit-energy, symmetric root-raised-cosine impulse response."""
    beta = spec.rolloff
    sps = spec.samples_per_chip
    n = spec.span * sps
    t = (np.arange(-n // 2, n // 2 + 1)) / sps  # in chip periods
    taps = np.empty_like(t)
    for i, ti in enumerate(t):
        if abs(ti) < 1e-12:
            taps[i] = 1.0 + beta * (4.0 / np.pi - 1.0)
        elif abs(abs(ti) - 1.0 / (4.0 * beta)) < 1e-12:
            taps[i] = (beta / np.sqrt(2.0)) * (
                (1.0 + 2.0 / np.pi) * np.sin(np.pi / (4.0 * beta))
                + (1.0 - 2.0 / np.pi) * np.cos(np.pi / (4.0 * beta))
            )
        else:
            num = np.sin(np.pi * ti * (1.0 - beta)) + 4.0 * beta * ti * np.cos(
                np.pi * ti * (1.0 + beta)
            )
            den = np.pi * ti * (1.0 - (4.0 * beta * ti) ** 2)
            taps[i] = num / den
    return taps / np.sqrt(np.sum(taps**2))


def rrc_shape(chips, spec):
    """Oversample chips and filter with the RRC pulse."""
    chips = check_chips(chips)
    up = np.zeros(chips.size * spec.samples_per_chip)
    up[:: spec.samples_per_chip] = chips
    return fftconvolve(up, rrc_taps(spec), mode="full")


def psd(waveform, samples_per_chip, segment=4096, detrend=False):
    """Welch periodogram: Hann window, 50% overlap, fixed segment length.

    Frequencies are returned in cycles per chip period.
    """
    waveform = np.asarray(waveform, dtype=np.float64)
    nper = min(segment, waveform.size)
    freqs, power = welch(
        waveform,
        fs=float(samples_per_chip),
        window="hann",
        nperseg=nper,
        noverlap=nper // 2,
        detrend=detrend,
    )
    return freqs, power


def spectral_flatness(freqs, power, band_edge, central_fraction=0.8):
    """Geometric over arithmetic periodogram mean on the central band.

    ``band_edge`` is the one-sided occupied bandwidth in cycles/chip
    (``(1 + rolloff) / 2`` for an RRC-shaped stream); the measure uses
    the central ``central_fraction`` of it.  1.0 means perfectly flat.
    """
    freqs = np.asarray(freqs)
    power = np.asarray(power)
    mask = freqs <= band_edge * central_fraction
    band = power[mask]
    if band.size == 0 or np.any(band <= 0):
        raise ValueError("no strictly positive in-band periodogram points")
    return float(np.exp(np.mean(np.log(band))) / np.mean(band))


def export_psd_csv(path, freqs, power):
    """Write the PSD as CSV (frequency, power in dB)."""
    power_db = 10.0 * np.log10(np.maximum(power, 1e-300))
    with open(path, "w") as fh:
        fh.write("frequency_cycles_per_chip,power_db\n")
        for f, p in zip(freqs, power_db):
            fh.write(f"{f:.8g},{p:.8g}\n")
