"""Grouping flat checkpoints into stacked 3D weight modules and back.

A checkpoint is a flat list of named tensors.  A grouping policy turns it
into a small set of rank-3 modules: each rule names a group of per-layer
tensors via a template like ``encoder.layer.{}.attention.q.weight`` whose
``{}`` matches the layer index, and the matched tensors are stacked along
a leading layer axis.  Rules without a placeholder capture exactly one
tensor as a single-slab module (embeddings, final norms).  Tensors no rule
matches either pass through untouched or are rejected, per the policy.

The mapping is lossless: deconsolidating a consolidated checkpoint gives
back the same names, shapes, dtypes and bytes, ordered by name.
"""

import importlib.resources
import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateName,
    IoFailure,
    MissingLayer,
    MixedDirection,
    NotPowerOfTwoRatio,
    ShapeInconsistent,
    UnmatchedTensor,
)

AXIS_NAMES = ("L", "Din", "Dout")

PRESET_POLICIES = ("bert-like", "gpt-like", "deit-like")


def _sort_key(name):
    return name.encode("utf-8")


class Checkpoint:
    """Ordered named tensors; rank 1..3, float32 or float64, unique names."""

    def __init__(self, entries):
        seen = set()
        canon = []
        for name, tensor in entries:
            if name in seen:
                raise DuplicateName(f"tensor name {name!r} appears twice")
            seen.add(name)
            arr = np.asarray(tensor)
            if arr.dtype not in (np.float32, np.float64):
                arr = arr.astype(np.float64)
            if arr.ndim not in (1, 2, 3):
                raise ValueError(f"tensor {name!r} has rank {arr.ndim}, need 1..3")
            if arr.size == 0:
                raise ValueError(f"tensor {name!r} is empty")
            canon.append((name, arr))
        canon.sort(key=lambda e: _sort_key(e[0]))
        self.entries = tuple(canon)

    def names(self):
        return tuple(name for name, _ in self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name):
        for n, arr in self.entries:
            if n == name:
                return arr
        raise KeyError(name)

    def __contains__(self, name):
        return any(n == name for n, _ in self.entries)


@dataclass(frozen=True)
class GroupRule:
    """One policy rule: name template, group id, axes the transfer may touch."""

    pattern: str
    group: str
    transform_axes: tuple

    def __post_init__(self):
        if self.pattern.count("{}") > 1:
            raise ValueError(f"rule {self.group!r}: more than one {{}} in pattern")
        if not self.group:
            raise ValueError("rule with empty group id")
        bad = [a for a in self.transform_axes if a not in AXIS_NAMES]
        if bad:
            raise ValueError(f"rule {self.group!r}: unknown axes {bad}")

    @property
    def layered(self):
        return "{}" in self.pattern

    def matcher(self):
        if self.layered:
            head, tail = self.pattern.split("{}")
            return re.compile(re.escape(head) + r"(\d+)" + re.escape(tail) + "$")
        return re.compile(re.escape(self.pattern) + "$")

    def name_for(self, layer):
        return self.pattern.format(layer) if self.layered else self.pattern


class GroupPolicy:
    """Ordered rules plus what to do with unmatched tensors."""

    def __init__(self, rules, passthrough="copy"):
        if passthrough not in ("copy", "error"):
            raise ValueError(f"passthrough must be copy or error, got {passthrough!r}")
        rules = tuple(rules)
        groups = [r.group for r in rules]
        dup = [g for g, c in Counter(groups).items() if c > 1]
        if dup:
            raise ValueError(f"duplicate group ids {dup}")
        self.rules = rules
        self.passthrough = passthrough

    @classmethod
    def from_dict(cls, doc):
        if not isinstance(doc, dict):
            raise ValueError("policy document must be a mapping")
        raw_rules = doc.get("rules")
        if not isinstance(raw_rules, list) or not raw_rules:
            raise ValueError("policy needs a non-empty rules list")
        rules = []
        for i, r in enumerate(raw_rules):
            if not isinstance(r, dict):
                raise ValueError(f"rule {i} is not a mapping")
            try:
                rules.append(GroupRule(
                    pattern=str(r["pattern"]),
                    group=str(r["group"]),
                    transform_axes=tuple(r.get("transform_axes", AXIS_NAMES)),
                ))
            except KeyError as e:
                raise ValueError(f"rule {i} missing field {e.args[0]!r}") from None
        return cls(rules, passthrough=doc.get("passthrough", "copy"))


def load_policy(source):
    """Load a policy from a preset name or a JSON file path."""
    if source in PRESET_POLICIES:
        ref = importlib.resources.files("wavescale") / "policies" / f"{source}.json"
        text = ref.read_text(encoding="utf-8")
    else:
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise IoFailure(f"cannot read policy {source!r}: {e}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"policy {source!r} is not valid JSON: {e}") from None
    return GroupPolicy.from_dict(doc)


@dataclass(frozen=True)
class ModuleInfo:
    """Recorded facts needed to split a module back into checkpoint entries."""

    rule: GroupRule
    layer_rank: int
    dtype: object
    layered: bool


@dataclass
class ConsolidatedModel:
    """Stacked weight modules, untouched residual tensors, inferred sizes."""

    modules: dict
    residual: Checkpoint
    arch: tuple
    info: dict = field(default_factory=dict)


def _lift(arr):
    # per-layer tensors become 2D: vectors get a trailing singleton
    if arr.ndim == 1:
        return arr[:, None]
    return arr


def consolidate(ckpt, policy):
    """Stack rule-matched tensors into L x Din x Dout modules."""
    matched = {rule.group: {} for rule in policy.rules}
    residual = []
    matchers = [(rule, rule.matcher()) for rule in policy.rules]
    for name, arr in ckpt.entries:
        for rule, rx in matchers:
            m = rx.match(name)
            if m:
                layer = int(m.group(1)) if rule.layered else 0
                matched[rule.group][layer] = arr
                break
        else:
            if policy.passthrough == "error":
                raise UnmatchedTensor(f"no rule matches tensor {name!r}")
            residual.append((name, arr))

    modules = {}
    info = {}
    for rule in policy.rules:
        per_layer = matched[rule.group]
        if not per_layer:
            continue
        layers = sorted(per_layer)
        if layers != list(range(len(layers))):
            missing = sorted(set(range(layers[-1] + 1)) - set(layers))
            raise MissingLayer(
                f"group {rule.group!r} missing layer indices {missing}"
            )
        shapes = {per_layer[l].shape for l in layers}
        if len(shapes) > 1:
            raise ShapeInconsistent(
                f"group {rule.group!r} mixes per-layer shapes {sorted(shapes)}"
            )
        ranks = {per_layer[l].ndim for l in layers}
        if len(ranks) > 1:
            raise ShapeInconsistent(
                f"group {rule.group!r} mixes per-layer ranks {sorted(ranks)}"
            )
        dtypes = {per_layer[l].dtype for l in layers}
        if len(dtypes) > 1:
            raise ShapeInconsistent(
                f"group {rule.group!r} mixes dtypes {sorted(map(str, dtypes))}"
            )
        rank = ranks.pop()
        if rule.layered:
            if rank == 3:
                raise ShapeInconsistent(
                    f"group {rule.group!r}: layered tensors must be rank 1 or 2"
                )
            stack = np.stack(
                [_lift(per_layer[l]).astype(np.float64) for l in layers], axis=0
            )
        else:
            arr = per_layer[0].astype(np.float64)
            stack = arr if rank == 3 else _lift(arr)[None, :, :]
        modules[rule.group] = stack
        info[rule.group] = ModuleInfo(
            rule=rule, layer_rank=rank, dtype=dtypes.pop(), layered=rule.layered
        )

    arch = _infer_arch(modules, info)
    return ConsolidatedModel(
        modules=modules, residual=Checkpoint(residual), arch=arch, info=info
    )


def _infer_arch(modules, info):
    layered = [g for g in modules if info[g].layered]
    n_layers = max((modules[g].shape[0] for g in layered), default=1)

    square = Counter()
    nonsquare = Counter()
    for g in layered:
        _, din, dout = modules[g].shape
        if din == dout and din > 1:
            square[din] += 1
        for s in (din, dout):
            if s > 1:
                nonsquare[s] += 1
    if square:
        hidden = square.most_common(1)[0][0]
    elif nonsquare:
        hidden = min(nonsquare)
    else:
        # no layered modules; fall back to the widest trailing axis seen
        dims = Counter(modules[g].shape[2] for g in modules)
        hidden = dims.most_common(1)[0][0] if dims else 1

    widths = [s for g in layered for s in modules[g].shape[1:] if s > hidden]
    ffn = max(widths) if widths else 4 * hidden
    return (n_layers, hidden, ffn)


def deconsolidate(model, policy):
    """Split modules back into named tensors; inverse of consolidate."""
    entries = []
    for group, module in model.modules.items():
        mi = model.info.get(group)
        if mi is None:
            raise ShapeInconsistent(f"module {group!r} has no recorded rule info")
        rule = mi.rule
        if module.ndim != 3:
            raise ShapeInconsistent(f"module {group!r} is not rank 3")
        n_layers = module.shape[0]
        if not rule.layered and mi.layer_rank != 3 and n_layers != 1:
            raise ShapeInconsistent(
                f"module {group!r} has {n_layers} slabs for a single-tensor rule"
            )
        for layer in range(n_layers):
            slab = module[layer]
            if mi.layer_rank == 1:
                if slab.shape[1] != 1:
                    raise ShapeInconsistent(
                        f"module {group!r} slab {layer} is {slab.shape}, "
                        "cannot restore a vector"
                    )
                out = slab[:, 0]
            elif mi.layer_rank == 3:
                out = module
            else:
                out = slab
            entries.append((rule.name_for(layer), np.ascontiguousarray(out, dtype=mi.dtype)))
            if mi.layer_rank == 3:
                break
    for name, arr in model.residual.entries:
        entries.append((name, arr))
    return Checkpoint(entries)


def infer_level_spec(src_dims, tgt_dims):
    """Per-axis analysis/synthesis depths linking two dim triples.

    Returns (levels, direction) with direction one of "L2S", "S2L",
    "neutral".  Each axis must relate by an exact power of 2; shrinking
    and growing axes cannot mix.
    """
    if len(src_dims) != 3 or len(tgt_dims) != 3:
        raise ValueError("dims must be triples")
    levels = []
    directions = set()
    for ax, (s, t) in enumerate(zip(src_dims, tgt_dims)):
        s, t = int(s), int(t)
        if s < 1 or t < 1:
            raise ValueError(f"axis {AXIS_NAMES[ax]} has non-positive dim")
        if s == t:
            levels.append(0)
            continue
        big, small = (s, t) if s > t else (t, s)
        ratio = big // small
        if small * ratio != big or ratio & (ratio - 1):
            raise NotPowerOfTwoRatio(
                f"axis {AXIS_NAMES[ax]}: {s} and {t} differ by a "
                "non-power-of-2 factor"
            )
        levels.append(int(math.log2(ratio)))
        directions.add("L2S" if s > t else "S2L")
    if len(directions) > 1:
        raise MixedDirection(
            f"axes disagree on direction for {tuple(src_dims)} -> {tuple(tgt_dims)}"
        )
    direction = directions.pop() if directions else "neutral"
    return tuple(levels), direction
