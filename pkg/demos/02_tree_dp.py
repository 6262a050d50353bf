"""
Linear-time γnt on trees
========================

``ntd_number_tree_dp`` roots the tree and carries a small state per vertex.
It handles trees far beyond what subset search can touch.
"""

# %%
import random
import time

from ntdom import ntd_number_tree_dp
from ntdom.enumerate import prufer_decode
from ntdom.named import example_member, path

for n in range(2, 13):
    print(n, ntd_number_tree_dp(path(n)).value)

# %%
# The 36-vertex example member of the extremal family.
T = example_member()
print(T.n, ntd_number_tree_dp(T).value)

# %%
# A random 64-vertex tree, the largest order a bitset graph holds.
rng = random.Random(1)
big = prufer_decode([rng.randrange(64) for _ in range(62)])
t0 = time.perf_counter()
r = ntd_number_tree_dp(big)
print(r.value, f"{time.perf_counter() - t0:.4f}s")
