# %% [markdown]
# # Which curves come from HFSTs?
#
# Inputs are always framed so the rational longitude is horizontal (the
# letter l) and mu is vertical (m).  `is_hfst` reports the twisted pairing
# against the longitude filling, the dimensions of the fillings along
# mu + k*lambda, and whether every curve component is a power of l.  The
# three must agree.

# %%
from torusfloer import (LONGITUDE, MultiCurve, Slope, builtin, is_hfst, line_intersection_dim,
                        line_typeD, mor_pairing, homology_dim, staircase_word)

# %%
examples = {
    "l^3": ["lll"],
    "l and L^2": ["l", "LL"],
    "solid torus, line through z": ["l @z"],
    "slope 1 line": [staircase_word(Slope(1, 1))],
    "slope 3/2 line": [staircase_word(Slope(3, 2))],
    "m^2": ["mm"],
}
for name, words in examples.items():
    v = is_hfst(MultiCurve.from_words(words), window=4)
    dims = [d for _, d in v.condition2_dims]
    print(f"{name:<30} hfst={v.is_hfst!s:<5} twisted={v.twisted_dim} fillings={dims}")

# %% [markdown]
# A hand-entered type D structure works too.  This one has five generators
# and its untwisted pairing with the solid torus already vanishes.

# %%
v = is_hfst(builtin("fig2_typeD"))
print(v.as_text())

# %% [markdown]
# ## Pairing lines
# The morphism pairing of two line structures counts their minimal
# intersection, with the value 2 for parallel lines.

# %%
slopes = [Slope(0, 1), Slope(1, 0), Slope(1, 1), Slope(-2, 3), Slope(3, 2)]
print("        " + "".join(f"{str(s):>7}" for s in slopes))
for s1 in slopes:
    row = [homology_dim(mor_pairing(line_typeD(s1), line_typeD(s2))) for s2 in slopes]
    assert row == [line_intersection_dim(s1, s2) for s2 in slopes]
    print(f"{str(s1):>8}" + "".join(f"{d:>7}" for d in row))
print("longitude is", LONGITUDE)
