"""The product of two Eisenstein series, written two ways.

Run with ``python demos/double_shuffle.py``.
"""
# %%
# P_{r,s} is the product G_r G_s (plus a derivative correction when r or s is 2).
# Stuffle: P = G_{r,s} + G_{s,r} + G_{r+s}.
from deisen import double_eisenstein, eisenstein, p_series
from deisen.exact import binom
from deisen.mzv import eval_zeta_poly
from deisen.qseries import linear_combination

r, s, N = 3, 5, 10
k = r + s
P = p_series(r, s, N)
stuffle = double_eisenstein(r, s, N) + double_eisenstein(s, r, N) + eisenstein(k, N)
print("stuffle agrees on q^1..q^N:", P.coeffs[1:] == stuffle.coeffs[1:])

# %%
# Shuffle: P = sum_j (C(j-1, r-1) + C(j-1, s-1)) G_{k-j, j}.
shuffle = linear_combination(
    ((binom(j - 1, r - 1) + binom(j - 1, s - 1), double_eisenstein(k - j, j, N)) for j in range(1, k)), N
)
print("shuffle agrees on q^1..q^N:", P.coeffs[1:] == shuffle.coeffs[1:])

# %%
# Constant terms are polynomials in zeta symbols.  They agree only as numbers,
# through the double zeta relations, so we evaluate them.
for name, rhs in (("stuffle", stuffle), ("shuffle", shuffle)):
    diff = P[0] - rhs[0]
    print(name, "constant term difference:", diff)
    print("  evaluates to", eval_zeta_poly(diff, 60))
