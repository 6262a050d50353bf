"""
Trees with γnt = n/2
====================

A member is grown from an underlying tree: each vertex gets a P2-unit (one
new leaf) or a star-unit (a new P3 joined at its center), and some leaves of
that base tree receive pendant paths of length two.
"""

# %%
from ntdom import P2_UNIT, STAR_UNIT, TSpec, build_member, certificate_ntd_set, members, recognize_T
from ntdom import ntd_number_tree_dp
from ntdom.enumerate import enumerate_trees
from ntdom.family import count_units

spec = TSpec([(0, 1), (1, 2)], {0: P2_UNIT, 1: STAR_UNIT, 2: P2_UNIT}, {(0, "leaf"): 2, (1, "a"): 1})
T, cert = build_member(spec)
print(T.n, sorted(T.edges()))

# %%
D = certificate_ntd_set(T, cert)
print("|D| =", len(members(D)), " γnt =", ntd_number_tree_dp(T).value)

# %%
# Recognition works from the bare tree and returns a fresh certificate.
found = recognize_T(T)
print(count_units(found), members(found.A))

# %%
# How many trees of each even order are extremal?
for n in range(4, 13, 2):
    print(n, sum(recognize_T(T) is not None for T in enumerate_trees(n)))
