"""Writing Delta as a combination of double Eisenstein series.

Run with ``python demos/delta_decomposition.py``.
"""
# %%
# The critical values of L*(Delta, s) at odd s, divided by L*(11), are rational.
# We compute them to 60 digits and recover the fractions.
from deisen import coeff_vector, decompose, eigenform, g_half, ratio_table
from deisen.qseries import linear_combination

table = ratio_table(12)
for s, v in sorted(table.ratios.items()):
    print(f"L*(Delta, {s:2d}) / L*(Delta, 11) = {v}")

# %%
# The period coefficients q_{r,s} for odd r follow by binomial sums.
# Clearing denominators gives small integers.
cv = coeff_vector(12, table)
print("integer scale", cv.integer_scale)
for pair in cv.pairs():
    print(pair, cv.scaled_entries[pair])

# %%
# Build the left-hand side as an exact q-series and compare with Delta.
# All zeta symbols in the q^n coefficients cancel; what remains is 1/640 * tau(n).
N = 12
lhs = linear_combination(((c, g_half(r, s, N)) for (r, s), c in cv.scaled_entries.items()), N)
f = eigenform(12, N)
for n in range(1, N + 1):
    print(n, lhs[n], "  tau(n)/640 =", f[n].constant() / 640)

# %%
# The full report, including the residues modulo 691.
print(decompose(12).to_text())
