"""Separable 3D transforms over (layers, d_in, d_out) tensors.

Everything here composes the 1D kernel along axes of a rank-3 array.  Axis 0
is the layer axis "L", axis 1 is "Din", axis 2 is "Dout"; band labels spell
one letter per axis in that order, "L" for the low-pass half and "H" for the
high-pass half, so e.g. band "LLH" is high-pass along Dout only.

Multi-level forms take a per-axis level triple (l_L, l_Din, l_Dout).  Analysis
runs each axis to completion (separability makes the order irrelevant);
synthesis runs in rounds from the deepest level down so callers supplying
random detail bands can draw them per level against the running low band.
"""

import numpy as np

from .errors import (
    NotDivisible,
    NotPositiveShape,
    OddAxisLength,
    ShapeMismatch,
)
from .transform import analyze_lastaxis, synthesize_lastaxis

AXES = ("L", "Din", "Dout")

# the seven high-frequency band labels of one 3D step, in binary order
DETAIL_LABELS = ("LLH", "LHL", "LHH", "HLL", "HLH", "HHL", "HHH")


def axis_index(axis):
    """Normalize an axis given as 0/1/2 or "L"/"Din"/"Dout"."""
    if isinstance(axis, str):
        try:
            return AXES.index(axis)
        except ValueError:
            raise ValueError(f"unknown axis {axis!r}") from None
    if axis not in (0, 1, 2):
        raise ValueError(f"axis must be 0, 1, or 2, got {axis!r}")
    return int(axis)


def _as_tensor3(t):
    t = np.asarray(t, dtype=np.float64)
    if t.ndim != 3:
        raise ValueError(f"expected a rank-3 tensor, got rank {t.ndim}")
    if t.size == 0:
        raise NotPositiveShape(f"dims {t.shape} contain a zero")
    return t


def analyze_axis(t, axis, bank):
    """One analysis step along one axis; returns (low, high) halves."""
    t = _as_tensor3(t)
    ax = axis_index(axis)
    if t.shape[ax] % 2:
        raise OddAxisLength(f"axis {AXES[ax]} has odd length {t.shape[ax]}")
    moved = np.moveaxis(t, ax, -1)
    low, high = analyze_lastaxis(moved, bank)
    return np.moveaxis(low, -1, ax), np.moveaxis(high, -1, ax)


def _synthesize_axis(low, high, axis, bank):
    # either band may be None, meaning an exactly-zero band; a branch where
    # both halves are zero stays zero without touching the kernel
    if low is None and high is None:
        return None
    if low is None:
        low = np.zeros_like(high)
    ax = axis_index(axis)
    moved_low = np.moveaxis(low, ax, -1)
    moved_high = None if high is None else np.moveaxis(high, ax, -1)
    out = synthesize_lastaxis(moved_low, moved_high, bank)
    return np.moveaxis(out, -1, ax)


class SubbandSet:
    """One approximation band plus the seven detail bands of a 3D step."""

    def __init__(self, ca, details):
        if set(details) != set(DETAIL_LABELS):
            raise ShapeMismatch(
                f"detail labels {sorted(details)} != {sorted(DETAIL_LABELS)}"
            )
        self.ca = np.asarray(ca, dtype=np.float64)
        self.details = {k: np.asarray(v, dtype=np.float64) for k, v in details.items()}
        for label, band in self.details.items():
            if band.shape != self.ca.shape:
                raise ShapeMismatch(
                    f"band {label} shape {band.shape} != cA shape {self.ca.shape}"
                )

    def bands(self):
        """All eight (label, tensor) pairs, cA labeled "LLL"."""
        yield "LLL", self.ca
        for label in DETAIL_LABELS:
            yield label, self.details[label]


def dwt3d(t, bank):
    """Full single-level 3D analysis into a SubbandSet."""
    t = _as_tensor3(t)
    bands = {"": t}
    for ax in (0, 1, 2):
        split = {}
        for prefix, part in bands.items():
            low, high = analyze_axis(part, ax, bank)
            split[prefix + "L"] = low
            split[prefix + "H"] = high
        bands = split
    ca = bands.pop("LLL")
    return SubbandSet(ca, bands)


def idwt3d(subbands, bank):
    """Inverse of dwt3d; output dims are twice the band dims per axis."""
    bands = dict(subbands.bands())
    for ax in (2, 1, 0):
        merged = {}
        for label in {k[:-1] for k in bands}:
            merged[label] = _synthesize_axis(
                bands[label + "L"], bands[label + "H"], ax, bank
            )
        bands = merged
    return bands[""]


def _check_levels(levels):
    if len(levels) != 3:
        raise ValueError("levels must be a triple (l_L, l_Din, l_Dout)")
    lv = tuple(int(l) for l in levels)
    if any(l < 0 for l in lv):
        raise ValueError(f"levels must be non-negative, got {lv}")
    return lv


def analyze_to_approx(t, levels, bank):
    """Repeated low-pass analysis; output dims = dims / 2^level per axis."""
    t = _as_tensor3(t)
    levels = _check_levels(levels)
    for ax, l in enumerate(levels):
        if t.shape[ax] % (1 << l):
            raise NotDivisible(
                f"axis {AXES[ax]} length {t.shape[ax]} not divisible by 2^{l}"
            )
    for ax, l in enumerate(levels):
        for _ in range(l):
            t, _high = analyze_axis(t, ax, bank)
    return t


def synthesize_from_approx(ca, levels, bank, details=None):
    """Repeated synthesis from an approximation band; dims double per level.

    `details` supplies the high-frequency bands: None means all-zero bands.
    Otherwise it is called once per round as details(level, axes, low) where
    `axes` are the axis indices active at that level and `low` is the running
    low band, and must return one tensor of low's shape per label in
    `detail_labels(len(axes))`, in that order.
    """
    low = _as_tensor3(ca)
    levels = _check_levels(levels)
    for level in range(max(levels, default=0), 0, -1):
        active = tuple(ax for ax in (0, 1, 2) if levels[ax] >= level)
        labels = detail_labels(len(active))
        if details is None:
            supplied = [None] * len(labels)
        else:
            supplied = [np.asarray(b, dtype=np.float64) for b in details(level, active, low)]
            if len(supplied) != len(labels):
                raise ShapeMismatch(
                    f"level {level} needs {len(labels)} detail bands, got {len(supplied)}"
                )
            for band in supplied:
                if band.shape != low.shape:
                    raise ShapeMismatch(
                        f"detail band shape {band.shape} != low band shape {low.shape}"
                    )
        bands = dict(zip(labels, supplied))
        bands["L" * len(active)] = low
        # merge the active axes, last one first, pairing on the trailing letter
        for pos in range(len(active) - 1, -1, -1):
            merged = {}
            for label in {k[:-1] for k in bands}:
                merged[label] = _synthesize_axis(
                    bands[label + "L"], bands.get(label + "H"), active[pos], bank
                )
            bands = merged
        low = bands[""]
    return low


def detail_labels(n_axes):
    """High-band labels for one synthesis round over n active axes."""
    out = []
    for m in range(1, 1 << n_axes):
        out.append("".join("H" if (m >> (n_axes - 1 - i)) & 1 else "L"
                           for i in range(n_axes)))
    return out
