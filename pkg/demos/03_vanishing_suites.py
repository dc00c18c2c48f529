# %% [markdown]
# # Random type D structures and twisted vanishing
#
# Two facts drive the HFST criterion:
#
# * a type D structure concentrated at idempotent i0 always pairs to zero
#   with the twisted solid torus;
# * whenever the untwisted pairing vanishes, so does the twisted one, and in
#   general the twisted dimension never exceeds the untwisted one.
#
# We sample valid structures with `random_typeD` and watch both hold.

# %%
import random
from collections import Counter

from torusfloer import box_tensor, builtin, homology_dim, random_typeD

S = builtin("S_untwisted_bounded")
S_tw = builtin("S_twisted_bounded")

# %%
sizes = Counter()
for seed in range(200):
    n = random.Random(seed).randint(1, 12)
    P = random_typeD(seed, n, "all_i0")
    assert homology_dim(box_tensor(S_tw, P)) == 0
    sizes[len(P.arrows)] += 1
print("all-i0: 200 structures, twisted homology always 0")
print("arrow counts seen:", dict(sorted(sizes.items())))

# %%
table = Counter()
for seed in range(200):
    n = random.Random(1000 + seed).randint(1, 12)
    P = random_typeD(1000 + seed, n, "mixed")
    u = homology_dim(box_tensor(S, P))
    t = homology_dim(box_tensor(S_tw, P))
    assert t <= u
    table[(u, t)] += 1

print(" untwisted  twisted  count")
for (u, t), c in sorted(table.items()):
    print(f"{u:>10} {t:>8} {c:>6}")
