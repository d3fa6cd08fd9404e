"""Compute-saving ratio from two synthetic training curves."""

import os
import subprocess
import sys
import tempfile

import numpy as np

from wavescale import TrainingCurve, first_crossing, flops_saving_ratio

# scratch training: loss decays from 9 toward 1.2
# warm-started run: starts lower and decays faster
flops = np.linspace(0.0, 1e9, 40)
scratch_loss = 1.2 + 7.8 * np.exp(-flops / 3.2e8)
warm_loss = 1.2 + 4.0 * np.exp(-flops / 2.1e8)

scratch = TrainingCurve(list(zip(flops, scratch_loss)))
warm = TrainingCurve(list(zip(flops, warm_loss)))

target = 2.0
xi_s = first_crossing(scratch, target)
xi_w = first_crossing(warm, target)
r = flops_saving_ratio(scratch, warm, target)
print(f"target loss {target}")
print(f"  scratch first reaches it at {xi_s:.3e} flops")
print(f"  warm start reaches it at   {xi_w:.3e} flops")
print(f"  saving ratio r = {r:.4f}")

# same computation through the command line
with tempfile.TemporaryDirectory() as td:
    s_csv = os.path.join(td, "scratch.csv")
    w_csv = os.path.join(td, "warm.csv")
    for path, curve in ((s_csv, scratch), (w_csv, warm)):
        with open(path, "w") as f:
            f.write("flops,loss\n")
            for fl, m in curve.points:
                f.write(f"{fl},{m}\n")
    out = subprocess.run(
        [sys.executable, "-m", "wavescale", "flops",
         "--scratch", s_csv, "--method", w_csv, "--target", str(target)],
        capture_output=True, text=True, check=True)
    print(f"  cli agrees: {out.stdout.strip()}")
