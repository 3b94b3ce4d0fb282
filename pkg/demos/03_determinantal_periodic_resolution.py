# %% [markdown]
# # A 2-periodic resolution over a hypersurface
#
# Take g1 = yu - xv, g2 = zu - xw, g3 = zv - yw and q = p^e.  Over the
# hypersurface S = R/g1 R the module S/(g2^q, g3^q) has an infinite minimal
# resolution.  Its ranks are 1, 2, q+1 and then 2q forever, with linear maps
# from the fourth step on.

# %%
from charpreg import resolve_over_hypersurface, syz_over_hypersurface
from charpreg.determinantal import determinantal_family, verify_section4_identities

fam = determinantal_family(3, 1)
print("q =", fam.q)
pr = resolve_over_hypersurface(fam.hypersurface, fam.presentation(), steps=7)
print(pr.betti().summary())
print("period starts at F_%d, twists grow by %d every two steps"
      % (pr.period_start, pr.period_shift))

# %% [markdown]
# The first syzygies are spanned by the q+1 columns
# [y^j v^(q-j); -x^j u^(q-j)].  The next ones are spanned by
# W_i = x e_i - u e_(i+1) and U_i = y e_i - v e_(i+1).

# %%
ctx = fam.hypersurface
M, WU = fam.M(), fam.WU()
s1 = syz_over_hypersurface(ctx, fam.presentation())
print("first syzygies match M:", ctx.same_span(s1.columns, M.columns, M.target.twists))
s2 = syz_over_hypersurface(ctx, M)
print("second syzygies match W, U:", ctx.same_span(s2.columns, WU.columns, WU.target.twists))
print(M.pretty())

# %% [markdown]
# The Groebner basis of (g1, g2^q, g3^q) consists of
# h_j = x^j z^q u^(q-j) v^j - x^q y^j w^q for j < q, together with g3^q and g1.
# All the S-polynomial identities behind this are checked exactly.

# %%
for g in fam.ideal.gb():
    print(g)
rep = verify_section4_identities(3, 1)
print(rep.summary())
for name, ok, _ in rep.families:
    print(" ", "ok" if ok else "FAIL", name)

# %% [markdown]
# Predicting further steps from the period, then computing them.

# %%
longer = resolve_over_hypersurface(ctx, fam.presentation(), steps=9)
for i in (8, 9):
    print(i, pr.predicted_twists(i) == tuple(longer.head.modules[i].twists))
