"""
Dominating, total dominating and NTD-sets
=========================================

Vertex sets are plain ints used as bitsets. ``vset`` builds one from labels
and ``members`` turns it back into a sorted list.
"""

# %%
from ntdom import Graph, ParamKind, is_ntd_set, open_neighborhood, solve_exact, vset, members
from ntdom.named import c5, path

P6 = path(6)
S = vset([1, 4])
print("N(S) =", members(open_neighborhood(P6, S)))

# %%
# {1, 4} dominates P6, but N(S) = {0, 2, 3, 5} leaves 0 and 5 with no
# neighbor inside N(S), so it is not an NTD-set. Adding vertex 2 fixes that.
print(is_ntd_set(P6, S), is_ntd_set(P6, vset([1, 2, 4])))

# %%
# All three parameters side by side. The default method is branch and bound.
for G, name in [(P6, "P6"), (c5(), "C5")]:
    values = [solve_exact(G, kind).value for kind in ParamKind]
    print(name, dict(zip([k.value for k in ParamKind], values)))

# %%
# Every result carries a witness set, checked by construction.
result = solve_exact(path(8), ParamKind.NTD)
print(result.value, members(result.witness), result.nodes_explored, "nodes")

# %%
# Graphs can also be built directly from an edge list.
G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
print(solve_exact(G, ParamKind.NTD).as_dict())
