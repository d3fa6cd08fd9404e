"""Bidirectional checkpoint rescaling between power-of-2 related sizes.

Shrinking keeps the all-low-pass band of each consolidated module at the
depth that lands exactly on the target dims.  Growing runs the synthesis
bank with the module as the approximation band and freshly made detail
bands.  Detail bands come from one of three strategies: exact zeros, or
i.i.d. gaussian / uniform noise whose scale tracks the empirical std of
the low band being expanded, redrawn per level.

Random draws are keyed by (seed, group id, level) so neither module order
nor parallel scheduling changes the output.
"""

import zlib
from dataclasses import dataclass, field

import numpy as np

from .consolidate import AXIS_NAMES, Checkpoint, ConsolidatedModel, infer_level_spec
from .errors import MixedDirection, ResidualShapeMismatch
from .filters import get_filter_bank
from .transform3d import analyze_to_approx, synthesize_from_approx

PADDING_STRATEGIES = ("zero", "gaussian", "uniform")


@dataclass(frozen=True)
class DetailPadding:
    """How to fill the high-frequency bands a smaller model never had.

    The noise scale is not a free parameter: both random strategies use
    sigma = empirical standard deviation of the approximation band being
    expanded, per module and per level.
    """

    strategy: str = "zero"
    seed: int = 0

    def __post_init__(self):
        if self.strategy not in PADDING_STRATEGIES:
            raise ValueError(
                f"strategy must be one of {PADDING_STRATEGIES}, got {self.strategy!r}"
            )


@dataclass(frozen=True)
class TransferOptions:
    family: str = "haar"
    padding: DetailPadding = field(default_factory=DetailPadding)
    gain: float = 1.0

    def __post_init__(self):
        if not self.gain > 0:
            raise ValueError(f"gain must be positive, got {self.gain}")


def _band_rng(seed, group_id, level):
    # order-independent sub-stream per (module, level)
    return np.random.default_rng(
        [int(seed), zlib.crc32(group_id.encode("utf-8")), int(level)]
    )


def make_detail_bands(padding, shape, ca, *, count=7, group_id="", level=1):
    """Detail tensors of the given shape for one synthesis round."""
    shape = tuple(int(s) for s in shape)
    if padding.strategy == "zero":
        return [np.zeros(shape) for _ in range(count)]
    sigma = float(np.std(np.asarray(ca, dtype=np.float64)))
    rng = _band_rng(padding.seed, group_id, level)
    if padding.strategy == "gaussian":
        draw = rng.normal(0.0, sigma, size=(count,) + shape)
    else:
        draw = rng.uniform(-sigma, sigma, size=(count,) + shape)
    return list(draw)


def _target_dims(shape, transform_axes, src_arch, tgt_arch):
    """Map one module's dims onto the target architecture.

    Only axes the rule marked transformable move.  A hidden-sized axis
    follows hidden, an FFN-sized axis follows FFN, an exact small multiple
    of hidden (fused projections) keeps its multiplier, and the layer axis
    follows the layer count.  Anything else is size-invariant.
    """
    src_layers, src_hidden, src_ffn = src_arch
    tgt_layers, tgt_hidden, tgt_ffn = tgt_arch
    out = []
    for ax, s in enumerate(shape):
        s = int(s)
        if AXIS_NAMES[ax] not in transform_axes or s == 1:
            out.append(s)
        elif ax == 0:
            out.append(tgt_layers if s == src_layers else s)
        elif s == src_hidden:
            out.append(tgt_hidden)
        elif s == src_ffn:
            out.append(tgt_ffn)
        elif s % src_hidden == 0 and s // src_hidden >= 2:
            out.append((s // src_hidden) * tgt_hidden)
        else:
            out.append(s)
    return tuple(out)


def _residual_guard(residual, src_arch, tgt_arch):
    """Reject passthrough tensors whose dims are tied to the changing sizes."""
    _, src_hidden, src_ffn = src_arch
    _, tgt_hidden, tgt_ffn = tgt_arch

    def mapped(s):
        if s == src_hidden:
            return tgt_hidden
        if s == src_ffn:
            return tgt_ffn
        if s % src_hidden == 0 and 2 <= s // src_hidden <= 4:
            return (s // src_hidden) * tgt_hidden
        return s

    for name, arr in residual.entries:
        for s in arr.shape:
            if mapped(int(s)) != int(s):
                raise ResidualShapeMismatch(
                    f"passthrough tensor {name!r} has size-dependent dim {s}; "
                    "add a policy rule for it or drop it from the checkpoint"
                )


def plan_modules(src, tgt_arch):
    """Per-module (group, src dims, levels, tgt dims, direction) rows."""
    rows = []
    for group, module in src.modules.items():
        axes = src.info[group].rule.transform_axes
        tgt_dims = _target_dims(module.shape, axes, src.arch, tgt_arch)
        levels, mod_dir = infer_level_spec(module.shape, tgt_dims)
        rows.append((group, module.shape, levels, tgt_dims, mod_dir))
    return rows


def _retarget(src, tgt_arch, opts, direction):
    bank = get_filter_bank(opts.family)
    _residual_guard(src.residual, src.arch, tgt_arch)
    modules = {}
    for group, module_dims, levels, _tgt_dims, mod_dir in plan_modules(src, tgt_arch):
        module = src.modules[group]
        if mod_dir not in ("neutral", direction):
            raise MixedDirection(
                f"module {group!r} moves {mod_dir}, pipeline is {direction}"
            )
        if direction == "L2S":
            modules[group] = analyze_to_approx(module, levels, bank)
        else:
            padding = opts.padding

            def details(level, active, low, _group=group, _padding=padding):
                return make_detail_bands(
                    _padding, low.shape, low,
                    count=(1 << len(active)) - 1, group_id=_group, level=level,
                )
            grown = synthesize_from_approx(module, levels, bank, details=details)
            if opts.gain != 1.0:
                grown = grown * opts.gain
            modules[group] = grown
    return ConsolidatedModel(
        modules=modules, residual=src.residual, arch=tuple(tgt_arch), info=dict(src.info)
    )


def l2s_transfer(src, tgt_arch, opts=None):
    """Shrink a consolidated model by repeated low-pass analysis."""
    return _retarget(src, tgt_arch, opts or TransferOptions(), "L2S")


def s2l_transfer(src, tgt_arch, opts=None):
    """Grow a consolidated model by synthesis with padded detail bands."""
    return _retarget(src, tgt_arch, opts or TransferOptions(), "S2L")


def transfer(ckpt, policy, tgt_arch, opts=None):
    """Checkpoint-to-checkpoint rescaling; direction picked from the sizes."""
    from .consolidate import consolidate, deconsolidate

    opts = opts or TransferOptions()
    model = consolidate(ckpt, policy)
    _, direction = infer_level_spec(model.arch, tgt_arch)
    if direction == "neutral":
        direction = "L2S"  # no-op path; analysis at level zero is identity
    out = _retarget(model, tgt_arch, opts, direction)
    return deconsolidate(out, policy)
