from mlss.fec.bch import BchCode
from mlss.fec.crc import CRC16_CCITT_FALSE, CrcSpec, crc_append, crc_check
from mlss.fec.hadamard import WalshHadamardCode
from mlss.fec.interleave import (
    SegmentRecord,
    deinterleave,
    interleave,
    reassemble,
    segment,
)
from mlss.fec.ldpc import LdpcCode, load_wlan_ldpc

__all__ = [
    "CrcSpec",
    "CRC16_CCITT_FALSE",
    "crc_append",
    "crc_check",
    "BchCode",
    "LdpcCode",
    "load_wlan_ldpc",
    "WalshHadamardCode",
    "interleave",
    "deinterleave",
    "segment",
    "reassemble",
    "SegmentRecord",
]
