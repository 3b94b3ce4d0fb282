# %% [markdown]
# # Groebner bases, Frobenius powers and colon ideals
#
# Polynomials live in a ring over F_p with a fixed monomial order.  Here the
# ring is F_2[x,y,z,u,v,w] with grevlex, and I is generated by the 2x2 minors
# of the matrix [x y z; u v w].

# %%
from charpreg import Ideal, PolynomialRing, bracket_power, colon, frobenius_pow
from charpreg.resolution import minimal_generator_degrees

R = PolynomialRing(2, "xyzuvw")
x, y, z, u, v, w = R.gens()
I = Ideal([y * u - x * v, z * u - x * w, z * v - y * w])
for g in I.gb():
    print(g)

# %% [markdown]
# In characteristic p, raising to the p-th power is additive, so f^q just
# multiplies every exponent by q.  The bracket power I^[q] is generated by
# the q-th powers of the generators.

# %%
g2 = I.generators[1]
print(frobenius_pow(g2, 1))
I2 = bracket_power(I, 1)
print(I2)

# %% [markdown]
# The colon (I^[q] : I) collects everything that multiplies I into I^[q].
# It always contains I^[q]; its extra generators are what the growth scan
# tracks.

# %%
C = colon(I2, I)
print("minimal generator degrees:", minimal_generator_degrees(C))
print("contains I^[2]:", C.contains_ideal(I2))
print("every generator certified:",
      all(I2.contains(r * g) for r in C.gb() for g in I.generators))

# %% [markdown]
# A small check with a hand answer: ((x^2, xy) : x) = (x, y).

# %%
S = PolynomialRing(3, "xy")
a, b = S.gens()
print(colon(Ideal([a ** 2, a * b]), Ideal([a])) == Ideal([a, b]))
