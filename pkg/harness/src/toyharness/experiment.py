"""Experiment orchestration.

Each comparison trains a target-size model twice for the same number of
steps: once from scratch and once from a checkpoint the rescaling CLI
produced out of a pretrained source model.  Sources are trained once per
workdir at the longer pretraining budget and cached; scratch baselines
are trained once per size at the comparison budget.

All transfers and the saving-ratio computation go through the CLI as a
subprocess; this package never imports the rescaling library.
"""

import csv
import dataclasses
import subprocess
import sys
from pathlib import Path

from .config import CONFIGS
from .train import export_checkpoint, train_run, write_curve

SOURCE_SEED = 0
# sources are pretrained well past the comparison budget: the warm start
# transplants whatever the source learned, so a half-baked source just
# measures noise
SOURCE_STEPS = 1000
POLICY = "bert-like"
# db2 rather than haar: 2-tap synthesis with zero details duplicates channel
# pairs exactly, and the locked symmetry caps what the grown model can learn
WAVELET = "db2"

DIRECTIONS = {
    "s2l": ("S", "B"),
    "l2s": ("B", "S"),
}


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "wavescale", *map(str, argv)],
                          capture_output=True, text=True)


def ensure_source(name, workdir):
    """Pretrain config `name` once at the long budget; returns the container."""
    ckpt = Path(workdir) / "sources" / f"{name}.wgt"
    if not ckpt.exists():
        ckpt.parent.mkdir(parents=True, exist_ok=True)
        cfg = dataclasses.replace(CONFIGS[name], steps=SOURCE_STEPS)
        model, _ = train_run(cfg, SOURCE_SEED)
        export_checkpoint(model, ckpt)
    return ckpt


def ensure_baseline(name, workdir):
    """Scratch curve for config `name` at the comparison budget."""
    curve_csv = Path(workdir) / "baselines" / f"{name}.csv"
    if not curve_csv.exists():
        curve_csv.parent.mkdir(parents=True, exist_ok=True)
        _, curve = train_run(CONFIGS[name], SOURCE_SEED)
        write_curve(curve, curve_csv)
    return curve_csv


def final_loss(curve_csv):
    with open(curve_csv) as f:
        rows = list(csv.reader(f))
    return float(rows[-1][1])


def transfer_init(src_ckpt, target_name, padding, seed, out_path):
    tgt = CONFIGS[target_name]
    r = _cli("transfer", "--src", src_ckpt, "--policy", POLICY,
             "--target-layers", tgt.layers, "--target-hidden", tgt.hidden,
             "--wavelet", WAVELET, "--padding", padding, "--seed", seed,
             "--out", out_path)
    if r.returncode != 0:
        raise RuntimeError(f"transfer failed: {r.stderr.strip()}")
    return out_path


def saving_ratio(scratch_csv, method_csv, target):
    """r from the flops subcommand; None when the comparison is undefined
    (the method never reaches the target, or the scratch curve already
    meets it at zero flops)."""
    r = _cli("flops", "--scratch", scratch_csv, "--method", method_csv,
             "--target", target)
    if r.returncode != 0:
        if ("TargetNotReached" in r.stderr
                or "meets the target at zero flops" in r.stderr):
            return None
        raise RuntimeError(f"flops failed: {r.stderr.strip()}")
    return float(r.stdout.strip())


def run_experiment(direction, padding, seed, workdir):
    """One warm-start comparison; returns a result dict."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be s2l or l2s, got {direction!r}")
    source_name, target_name = DIRECTIONS[direction]
    workdir = Path(workdir)
    src_ckpt = ensure_source(source_name, workdir)
    scratch_csv = ensure_baseline(target_name, workdir)

    tag = f"{direction}-{padding}-s{seed}"
    rundir = workdir / "runs"
    rundir.mkdir(parents=True, exist_ok=True)
    init = transfer_init(src_ckpt, target_name, padding, seed,
                         rundir / f"{tag}-init.wgt")
    _, curve = train_run(CONFIGS[target_name], seed, init_path=init)
    method_csv = rundir / f"{tag}.csv"
    write_curve(curve, method_csv)

    target = final_loss(scratch_csv)
    return {
        "direction": direction,
        "padding": padding,
        "seed": seed,
        "target_loss": target,
        "final_loss": curve[-1][1],
        "saving_ratio": saving_ratio(scratch_csv, method_csv, target),
        "scratch_csv": str(scratch_csv),
        "method_csv": str(method_csv),
    }


def sweep(workdir, seeds=(1, 2, 3)):
    """Full matrix: both directions with zero padding, plus the padding
    comparison on the grow direction.  Returns the list of result dicts."""
    results = []
    for direction in ("s2l", "l2s"):
        for seed in seeds:
            results.append(run_experiment(direction, "zero", seed, workdir))
    for padding in ("gaussian", "uniform"):
        for seed in seeds:
            results.append(run_experiment("s2l", padding, seed, workdir))
    return results


def report(results):
    """Render the two soft findings as text lines."""
    lines = []
    for direction in ("s2l", "l2s"):
        rs = [r["saving_ratio"] for r in results
              if r["direction"] == direction and r["padding"] == "zero"]
        shown = ", ".join("unreached" if v is None else f"{v:+.4f}" for v in rs)
        verdict = ("all positive" if rs and all(v is not None and v > 0 for v in rs)
                   else "NOT all positive")
        lines.append(f"{direction} zero-padding saving ratios: [{shown}] ({verdict})")
    means = {}
    for padding in ("zero", "gaussian", "uniform"):
        fl = [r["final_loss"] for r in results
              if r["direction"] == "s2l" and r["padding"] == padding]
        if fl:
            means[padding] = sum(fl) / len(fl)
    if len(means) == 3:
        order = " <= ".join(sorted(means, key=means.get))
        expected = (means["zero"] <= means["gaussian"] <= means["uniform"])
        lines.append("mean final loss by padding: "
                     + ", ".join(f"{p}={v:.4f}" for p, v in means.items()))
        lines.append(f"observed ordering: {order} "
                     f"({'matches' if expected else 'does not match'} the "
                     "expected zero <= gaussian <= uniform)")
    return "\n".join(lines)
