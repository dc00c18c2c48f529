# %% [markdown]
# # From a curve to a chain complex
#
# Take the curve that wraps three times around the rational longitude, read
# off its type D structure, and pair it with the two bounded models of the
# 0-framed solid torus.  Twisted coefficients kill the homology, untwisted
# ones leave two generators.

# %%
from torusfloer import (MultiCurve, box_tensor, builtin, check_typeD, curve_to_typeD,
                        homology_dim, is_bounded, isomorphic)
from torusfloer.formats import format_complex, format_document

# %%
C = MultiCurve.from_words(["lll"])
P = curve_to_typeD(C)
print(format_document(P))
print("valid:", check_typeD(P) == [])
print("same as the built-in three-cycle:", isomorphic(P, builtin("fig3_typeD")))
print("bounded:", is_bounded(P))

# %% [markdown]
# The type D side is unbounded (its arrows form a cycle), so the module side
# must be bounded.  Both solid torus models are.

# %%
S_tw = builtin("S_twisted_bounded")
print(format_document(S_tw))
print("module bounded:", is_bounded(S_tw))

# %%
fig = builtin("fig3_typeD")
twisted = box_tensor(S_tw, fig)
print(format_complex(twisted))
print("twisted homology over F2(t):", homology_dim(twisted))

# %%
untwisted = box_tensor(builtin("S_untwisted_bounded"), fig)
print(format_complex(untwisted))
print("untwisted homology over F2:", homology_dim(untwisted))

# %% [markdown]
# Over F2 the differential is the circulant matrix with rows
# (1,1,0), (0,1,1), (1,0,1).  Its rank is 2, so 6 - 2*2 = 2 survive.
