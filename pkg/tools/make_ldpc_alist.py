"""Generate the rate-1/2 (1944, 972) WLAN LDPC parity-check asset.

Expands the 12x24 base matrix (circulant size 81) into the full binary
H, writes it in alist format plus a sha256 checksum next to it.  Run
from the repository root:

    python3 tools/make_ldpc_alist.py
"""

import hashlib
from pathlib import Path

import numpy as np

Z = 81

# 12x24 prototype: -1 = all-zero block, otherwise right-shift of I_81.
BASE = [
    [57, -1, -1, -1, 50, -1, 11, -1, 50, -1, 79, -1, 1, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [3, -1, 28, -1, 0, -1, -1, -1, 55, 7, -1, -1, -1, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [30, -1, -1, -1, 24, 37, -1, -1, 56, 14, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1],
    [62, 53, -1, -1, 53, -1, -1, 3, 35, -1, -1, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -1, -1, -1],
    [40, -1, -1, 20, 66, -1, -1, 22, 28, -1, -1, -1, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -1, -1],
    [0, -1, -1, -1, 8, -1, 42, -1, 50, -1, -1, 8, -1, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1, -1],
    [69, 79, 79, -1, -1, -1, 56, -1, 52, -1, -1, -1, 0, -1, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1],
    [65, -1, -1, -1, 38, 57, -1, -1, 72, -1, 27, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, -1, -1, -1],
    [64, -1, -1, -1, 14, 52, -1, -1, 30, -1, -1, 32, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, -1, -1],
    [-1, 45, -1, 70, 0, -1, -1, -1, 77, 9, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, -1],
    [2, 56, -1, 57, 35, -1, -1, -1, -1, -1, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0],
    [24, -1, 61, -1, 60, -1, -1, 27, 51, -1, -1, 16, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0],
]


def expand(base, z):
    rows = len(base) * z
    cols = len(base[0]) * z
    h = np.zeros((rows, cols), dtype=np.uint8)
    eye = np.eye(z, dtype=np.uint8)
    for bi, row in enumerate(base):
        for bj, shift in enumerate(row):
            if shift < 0:
                continue
            h[bi * z : (bi + 1) * z, bj * z : (bj + 1) * z] = np.roll(
                eye, -shift % z, axis=1
            )
    return h


def to_alist(h):
    m, n = h.shape
    col_lists = [np.nonzero(h[:, j])[0] + 1 for j in range(n)]
    row_lists = [np.nonzero(h[i, :])[0] + 1 for i in range(m)]
    lines = [f"{n} {m}"]
    lines.append(f"{max(len(c) for c in col_lists)} {max(len(r) for r in row_lists)}")
    lines.append(" ".join(str(len(c)) for c in col_lists))
    lines.append(" ".join(str(len(r)) for r in row_lists))
    for c in col_lists:
        lines.append(" ".join(map(str, c)))
    for r in row_lists:
        lines.append(" ".join(map(str, r)))
    return "\n".join(lines) + "\n"


def main():
    out_dir = Path(__file__).resolve().parent.parent / "src" / "mlss" / "fec" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    h = expand(BASE, Z)
    text = to_alist(h)
    alist_path = out_dir / "wlan_n1944_r12_z81.alist"
    alist_path.write_text(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    (out_dir / "wlan_n1944_r12_z81.alist.sha256").write_text(digest + "\n")
    print(f"wrote {alist_path} ({h.shape[0]}x{h.shape[1]}, sha256 {digest[:16]}...)")


if __name__ == "__main__":
    main()
