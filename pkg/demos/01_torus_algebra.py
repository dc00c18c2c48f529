# %% [markdown]
# # The torus algebra and exact coefficient arithmetic
#
# Everything in torusfloer is exact.  The torus algebra has eight basis
# elements over F2; Laurent polynomials in t are bit masks; ranks over the
# field F2(t) are computed without ever evaluating t.

# %%
from itertools import product

from torusfloer import BASIS, T, ONE, LaurentPoly, RationalFn, alg_mul, matrix_rank
from torusfloer.algebra import specialize_at_one

# %% [markdown]
# ## Multiplication table
# Rows are left factors, columns right factors.  A dot means zero.

# %%
width = 6
print(" " * width + "".join(f"{b:>{width}}" for b in BASIS))
for a in BASIS:
    row = []
    for b in BASIS:
        prod = alg_mul(a, b)
        row.append(f"{(next(iter(prod.terms)) if prod else '.'):>{width}}")
    print(f"{a:>{width}}" + "".join(row))

# %% [markdown]
# Associativity holds on all 512 triples of basis elements.

# %%
assert all(alg_mul(alg_mul(a, b), c) == alg_mul(a, alg_mul(b, c))
           for a, b, c in product(BASIS, repeat=3))
print("associative on all", len(BASIS) ** 3, "triples")

# %% [markdown]
# ## Laurent polynomials and rational functions

# %%
p = LaurentPoly.parse("1+t^3")
q = T ** -2 + ONE
print("p =", p, "  q =", q, "  p*q =", p * q, "  p(1) =", p.at_one())
x = RationalFn(p, ONE + T)
print("(1+t^3)/(1+t) reduces to", x.num, "/", x.den)

# %% [markdown]
# ## Ranks: twisted versus untwisted
# The circulant matrix below has determinant 1+t^3, a nonzero element of
# F2(t), so it has full rank.  At t = 1 its rows sum to zero.

# %%
M = [[ONE, T, 0], [0, ONE, T], [T, 0, ONE]]
print("rank over F2(t):", matrix_rank(M))
print("rank over F2 at t=1:", matrix_rank(specialize_at_one(M)))
