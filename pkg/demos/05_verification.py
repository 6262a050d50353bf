"""
Exhaustive checks over small trees and the exceptional graphs
=============================================================

Each run returns a report with one row per order. ``to_json(timing=False)``
is byte-stable across runs.
"""

# %%
from ntdom import Theorem, verify
from ntdom.extremal import spanning_trees
from ntdom.named import b_graphs

report = verify(Theorem.EVEN_CHARACTERIZATION, max_order=12)
for row in report.rows:
    print(row.order, row.trees, row.extremal, row.accepted, row.passed)

# %%
print(verify(Theorem.BGRAPHS).dumps(timing=False))

# %%
# Every spanning tree of the exceptional graphs lands in the extremal family.
for i, G in enumerate(b_graphs(), start=1):
    print(f"B{i}", len(list(spanning_trees(G))), "spanning tree classes")
print(verify(Theorem.SPANNING_COROLLARY).passed)
