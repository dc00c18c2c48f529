# %% [markdown]
# # Seifert fibered solid tori
#
# A Seifert fibered rational homology solid torus over the disk or the
# Mobius band is an HFST exactly when the base is a Mobius band, or the
# disk carries at most one cone point, or it carries two whose invariants
# can be shifted by integers to (r, -r).

# %%
from fractions import Fraction as F

from torusfloer import SeifertData, classify, euler_and_longitude
from torusfloer.seifert import filling_h1, parse_seifert

# %%
cases = [
    "base=disk; cones=",
    "base=disk; cones=2/7",
    "base=disk; cones=1/2,-1/2",
    "base=disk; cones=1/3,2/3",
    "base=disk; cones=1/2,1/3",
    "base=disk; cones=1/2,-1/3,1/5",
    "base=mobius; cones=",
    "base=mobius; cones=1/3,2/5",
]
for text in cases:
    d = parse_seifert(text)
    v = classify(d)
    print(f"{text:<34} hfst={v.is_hfst!s:<5} {v.reason:<18} delta={v.delta} "
          f"fills to {v.filled_form}")

# %% [markdown]
# ## Where the rational longitude comes from
# Over the disk, e = sum of the invariants and the longitude is
# den(e) * s + num(e) * h.  Its filling is the only one with infinite first
# homology; a 0 in the invariant list marks a free summand.

# %%
d = SeifertData("disk", (F(1, 2), F(1, 3)))
L = euler_and_longitude(d)
print("e =", L.e, " longitude =", L.longitude, " delta =", L.delta)
for a, b in [L.longitude, (1, 0), (1, 1), (0, 1), (5, 4)]:
    print(f"  filling along {a}s + {b}h: H1 invariants {filling_h1(d, a, b)}")
