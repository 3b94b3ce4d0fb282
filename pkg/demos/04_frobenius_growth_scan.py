# %% [markdown]
# # Does regularity grow linearly along Frobenius powers?
#
# For q = p^e the scan computes reg R/(I^[q] + g_i R) for every generator
# g_i, and the generator degrees of (I^[q] : I).  Both growing at most
# linearly in q is a sufficient condition for discreteness of F-jumping
# numbers.  A finite scan is evidence only: the constants reported are the
# largest ratios seen.

# %%
from charpreg import Ideal, PolynomialRing
from charpreg.determinantal import determinantal_ideal, determinantal_ring
from charpreg.frobscan import gauge_bound_report, singular_locus_dim

I = determinantal_ideal(determinantal_ring(2))
verdict = gauge_bound_report(I, 2)
print(verdict.report.to_csv())
print(verdict.text())

# %% [markdown]
# The same scan on the one-dimensional example (xy) in F_2[x,y].

# %%
K = PolynomialRing(2, "xy")
x, y = K.gens()
print(gauge_bound_report(Ideal([x * y]), 2).report.to_csv())

# %% [markdown]
# A geometric sufficient condition asks that Sing(R/g R) ∩ V(I) be small.
# Dimensions are those of affine cones, so a projective curve shows up as 2.

# %%
g1 = I.generators[0]
print("dim Sing(R/g1) ∩ V(I) =", singular_locus_dim(I, g1))
