"""Machine-learning spread-spectrum (MLSS) signalling toolkit.

Implements trainable spreading networks with a one-step secant trainer,
a DSSS-PN reference system, AWGN channel bookkeeping, FEC chains
(CRC-16, extended BCH, LDPC, Walsh-Hadamard oracle), a featurelessness
test battery and the CRC-based uncoordinated synchronisation protocol.
"""

__version__ = "0.1.0"

from mlss.channel import ChannelSpec, awgn, ebn0_from_snr, snr_from_ebn0

__all__ = [
    "ChannelSpec",
    "awgn",
    "snr_from_ebn0",
    "ebn0_from_snr",
    "__version__",
]
