"""Walk through the shipped filter families and their defining identities."""

import numpy as np

from wavescale import FAMILIES, derive_highpass, get_filter_bank, validate_bank

print("family    len  orthogonal  sum(dec_lo)-sqrt2  sum(dec_hi)  energy-1")
for family in FAMILIES:
    bank = get_filter_bank(family)
    g = np.asarray(bank.dec_lo)
    h = np.asarray(bank.dec_hi)
    print(f"{family:<8}  {len(g):>3}  {str(bank.orthogonal):<10}"
          f"  {g.sum() - np.sqrt(2.0):>+17.3e}  {h.sum():>+11.3e}"
          f"  {(g * g).sum() - 1.0:>+8.1e}")

print()
print("alternating-flip highpass derivation vs the embedded db2 table:")
bank = get_filter_bank("db2")
derived = derive_highpass(bank.dec_lo)
print("  derived :", np.array2string(derived, precision=6))
print("  embedded:", np.array2string(np.asarray(bank.dec_hi), precision=6))
print("  the two agree up to a global sign, which is the convention freedom")
print("  the alternating flip leaves open")

print()
report = validate_bank(get_filter_bank("sym8"))
print("validate_bank(sym8):", report)
