"""Single-level and multi-level 1D wavelet transforms with periodized boundaries.

Analysis convolves the periodically extended signal with the decomposition
filters and keeps every second output:

    cA[k] = sum_n x[n] * g[(2k+1-n) mod N]

Synthesis places each coefficient back through the reconstruction filters at
offset s = len(rec_lo) - 2, the alignment that makes analysis and synthesis
exact two-sided inverses for every embedded bank:

    x[n] = sum_k cA[k] * g'[(n-2k+s) mod N] + cD[k] * h'[(n-2k+s) mod N]

Filters longer than the signal are folded modulo the signal length, which
preserves perfect reconstruction under periodization.  The kernels below
walk filter taps with stride-2 circular slices instead of building dense
convolution matrices, and broadcast over any leading batch axes.
"""

import numpy as np

from .errors import LengthMismatch, NotDivisible, OddLength, TooShort


def _fold(filt, n):
    # sum taps that land on the same residue mod n; identity when len <= n
    if filt.size <= n:
        return filt
    out = np.zeros(n)
    for i in range(filt.size):
        out[i % n] += filt[i]
    return out


def analyze_lastaxis(x, bank):
    """One analysis step along the last axis of a (..., N) float64 array."""
    n = x.shape[-1]
    half = n // 2
    ca = np.zeros(x.shape[:-1] + (half,))
    cd = np.zeros_like(ca)
    even, odd = x[..., 0::2], x[..., 1::2]
    for filt, out in ((_fold(bank.dec_lo, n), ca), (_fold(bank.dec_hi, n), cd)):
        for r in range(filt.size):
            q = (1 - r) % n
            src = even if q % 2 == 0 else odd
            out += filt[r] * np.roll(src, -(q // 2), axis=-1)
    return ca, cd


def synthesize_lastaxis(ca, cd, bank):
    """One synthesis step along the last axis; cd may be None for a zero band."""
    half = ca.shape[-1]
    n = 2 * half
    out = np.zeros(ca.shape[:-1] + (n,))
    even, odd = out[..., 0::2], out[..., 1::2]
    pairs = [(bank.rec_lo, ca)]
    if cd is not None:
        pairs.append((bank.rec_hi, cd))
    for orig, coeffs in pairs:
        s = orig.size - 2
        filt = _fold(orig, n)
        for r in range(filt.size):
            q = (r - s) % n
            dst = even if q % 2 == 0 else odd
            dst += filt[r] * np.roll(coeffs, q // 2, axis=-1)
    return out


def dwt1d(x, bank):
    """Split an even-length signal into (cA, cD), each of length N/2."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("dwt1d expects a 1D signal")
    if x.size < 2:
        raise TooShort(f"signal length {x.size} is shorter than 2")
    if x.size % 2:
        raise OddLength(f"signal length {x.size} is odd")
    return analyze_lastaxis(x, bank)


def idwt1d(ca, cd, bank):
    """Rebuild the length-2K signal from coefficient vectors of length K."""
    ca = np.asarray(ca, dtype=np.float64)
    cd = np.asarray(cd, dtype=np.float64)
    if ca.ndim != 1 or cd.ndim != 1:
        raise ValueError("idwt1d expects 1D coefficient vectors")
    if ca.size != cd.size:
        raise LengthMismatch(f"cA length {ca.size} != cD length {cd.size}")
    if ca.size < 1:
        raise ValueError("coefficient vectors must be non-empty")
    return synthesize_lastaxis(ca, cd, bank)


def dwt1d_multilevel(x, bank, levels):
    """Recursive analysis keeping the running cA; returns (cA, [cD per level])."""
    x = np.asarray(x, dtype=np.float64)
    if levels < 0:
        raise ValueError("levels must be >= 0")
    if levels and x.size % (1 << levels):
        raise NotDivisible(f"length {x.size} is not divisible by 2^{levels}")
    details = []
    for _ in range(levels):
        x, cd = dwt1d(x, bank)
        details.append(cd)
    return x, details
