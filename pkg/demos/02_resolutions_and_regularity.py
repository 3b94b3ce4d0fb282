# %% [markdown]
# # Minimal free resolutions and regularity
#
# `resolve_quotient(I)` returns a minimal graded free resolution of R/I.
# Its Betti table records the twists d_ij, and the regularity is the
# largest d_ij - i.

# %%
from charpreg import Ideal, PolynomialRing, resolve_quotient
from charpreg.groebner import lead_term_ideal
from charpreg.resolution import hilbert_function_by_counting, hilbert_function_from_betti

R = PolynomialRing(2, "xyzuvw")
x, y, z, u, v, w = R.gens()
I = Ideal([y * u - x * v, z * u - x * w, z * v - y * w])
res = resolve_quotient(I)
b = res.betti()
print(b)
print("summary:", b.summary(), " reg(R/I) =", b.regularity())

# %% [markdown]
# The maps compose to zero and contain no unit entries.

# %%
print("complex:", res.is_complex(), " minimal:", res.is_minimal())
for k, d in enumerate(res.maps, 1):
    print(f"d_{k}:")
    print(d.pretty())

# %% [markdown]
# The alternating sum over the Betti table gives the Hilbert function of
# R/I.  Counting standard monomials of the lead-term ideal gives it too,
# without using the resolution at all.

# %%
leads = lead_term_ideal(I)
for d in range(6):
    print(d, hilbert_function_from_betti(b, 6, d),
          hilbert_function_by_counting(leads, (0,), 6, d))

# %% [markdown]
# A complete intersection has reg R/(x^a, y^b) = a + b - 2.

# %%
K = PolynomialRing(3, "xy")
s, t = K.gens()
for a, c in [(2, 3), (4, 5)]:
    print((a, c), resolve_quotient(Ideal([s ** a, t ** c])).betti().regularity())
