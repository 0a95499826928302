"""CRC over bit arrays for the synchronisation protocol.

Fixed configuration: CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF, no
reflection, no output xor).  Check value of the ASCII bytes
"123456789" is 0x29B1.
"""

from dataclasses import dataclass

import numpy as np

from mlss.validation import check_bits


@dataclass(frozen=True)
class CrcSpec:
    width: int = 16
    polynomial: int = 0x1021
    init: int = 0xFFFF
    xorout: int = 0

    def describe(self):
        return (
            f"CRC-{self.width} poly=0x{self.polynomial:04X} "
            f"init=0x{self.init:04X} refin=false refout=false "
            f"xorout=0x{self.xorout:04X}"
        )


CRC16_CCITT_FALSE = CrcSpec()


def crc_bits(bits, spec=CRC16_CCITT_FALSE):
    """CRC register after clocking in the bits MSB-first."""
    bits = check_bits(bits)
    reg = spec.init
    top = 1 << (spec.width - 1)
    mask = (1 << spec.width) - 1
    for b in bits:
        fb = ((reg & top) != 0) ^ bool(b)
        reg = (reg << 1) & mask
        if fb:
            reg ^= spec.polynomial
    return reg ^ spec.xorout


def crc_append(bits, spec=CRC16_CCITT_FALSE):
    """Payload with its CRC appended (CRC MSB first)."""
    bits = check_bits(bits)
    if bits.size == 0:
        raise ValueError("payload must be nonempty")
    reg = crc_bits(bits, spec)
    crc = [(reg >> i) & 1 for i in range(spec.width - 1, -1, -1)]
    return np.concatenate([bits, np.asarray(crc, dtype=np.int64)])


def crc_check(bits, spec=CRC16_CCITT_FALSE):
    """True when the trailing CRC matches the payload."""
    bits = check_bits(bits)
    if bits.size <= spec.width:
        return False
    return crc_bits(bits[: -spec.width], spec) == _crc_value(bits[-spec.width :], spec)


def _crc_value(crc_field, spec):
    val = 0
    for b in crc_field:
        val = (val << 1) | int(b)
    return val
