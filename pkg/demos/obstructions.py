"""
Forbidden subdivisions at h = t = 3
===================================

Roots containing a subdivided K3,3 or K5 minus a matching cannot be laid
out with degree 3 and threshold 3.
"""

# %%
from orthkit import line_graph, recognize
from orthkit.generators import petersen_graph
from orthkit.obstructions import check_orth323_necessary, contains_subdivision, is_planar, pattern

P = petersen_graph()
w = contains_subdivision(P, pattern("K33"))
print("branch vertices:", w.branch_map)
for edge, path in sorted(w.path_map.items()):
    print(f"  {edge}: {' - '.join(path)}")
assert w.verify(P, pattern("K33"))

# %%
print(is_planar(P)[0], is_planar(P)[2])

# %%
rep = check_orth323_necessary(line_graph(P))
print(rep.verdict.value, "|", rep.obstruction.detail)

# %%
# the dispatcher runs the same check before anything else
print(recognize(line_graph(P), 3, 3).verdict.value)
