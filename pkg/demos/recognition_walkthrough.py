"""
Recognizing a line graph in ORTH[3,2,2]
=======================================

Build a root, take its line graph, run the pipeline and inspect the
certificate it returns.
"""

# %%
from orthkit import SimpleGraph, line_graph, recognize, validate_representation
from orthkit.io import format_representation

# two triangles joined by a path of length 3
H = SimpleGraph((), [("a", "b"), ("b", "c"), ("c", "a"), ("c", "p"), ("p", "q"),
                     ("q", "d"), ("d", "e"), ("e", "f"), ("f", "d")])
G = line_graph(H)
print(f"G has {G.order} vertices and {G.size} edges")

# %%
report = recognize(G, 3, 2)
print(report.verdict.value)
for line in report.pipeline_log:
    print("  ", line)

# %%
# every path ends at host leaves; adjacent vertices share a leaf
R = report.certificate
print(format_representation(R))
assert validate_representation(R, G, 3, 2) is None

# %%
# a 4-cycle in the root is a block of order 4, which is too big
from orthkit.generators import cycle_graph

bad = recognize(line_graph(cycle_graph(4)), 3, 2)
print(bad.verdict.value, bad.obstruction.kind, bad.obstruction.vertices)

# %%
# with a degree-4 host the same graph fits on a star
print(recognize(line_graph(cycle_graph(4)), 4, 2).verdict.value)
