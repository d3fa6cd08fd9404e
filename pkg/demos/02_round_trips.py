"""Analysis/synthesis round trips in 1D and 3D, plus the energy split."""

import numpy as np

from wavescale import (
    analyze_to_approx,
    dwt1d,
    dwt3d,
    get_filter_bank,
    idwt1d,
    idwt3d,
    synthesize_from_approx,
)

rng = np.random.default_rng(0)
bank = get_filter_bank("db2")

x = rng.standard_normal(16)
ca, cd = dwt1d(x, bank)
print("1d: len(x) =", len(x), "-> len(ca) =", len(ca), "len(cd) =", len(cd))
print("1d round trip max error:", np.max(np.abs(idwt1d(ca, cd, bank) - x)))

t = rng.standard_normal((4, 8, 8))
bands = dwt3d(t, bank)
print()
print("3d band shapes (half along every axis):")
for label, band in bands.bands():
    print(f"  {label}: {band.shape}  energy {np.sum(band * band):8.3f}")
total = sum(np.sum(b * b) for _, b in bands.bands())
print(f"  sum of band energies {total:.6f} vs input {np.sum(t * t):.6f}")
print("3d round trip max error:", np.max(np.abs(idwt3d(bands, bank) - t)))

# multi-level: three halvings of the last axis, one of the first
levels = (1, 0, 3)
low = analyze_to_approx(t, levels, bank)
print()
print(f"analyze_to_approx levels {levels}: {t.shape} -> {low.shape}")
back = synthesize_from_approx(low, levels, bank)
print("synthesize with zero details back to", back.shape)
relow = analyze_to_approx(back, levels, bank)
print("re-analysis recovers the approximation to",
      np.max(np.abs(relow - low)))
