"""
Free trees, one per isomorphism class
=====================================
"""

# %%
from ntdom import canonical_tree_code, enumerate_trees
from ntdom.enumerate import count_trees, prufer_oracle_count

print([count_trees(n) for n in range(1, 15)])

# %%
# The independent oracle decodes Prüfer sequences and deduplicates by canonical code.
print([prufer_oracle_count(n) for n in range(2, 10)])

# %%
# Canonical codes are nested parentheses over a center.
for T in enumerate_trees(5):
    print(sorted(T.edges()), canonical_tree_code(T).decode())
