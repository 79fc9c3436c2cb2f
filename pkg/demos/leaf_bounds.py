"""
Leaf bounds and complete graphs
===============================

How many leaves fit in a tree of max degree h whose leaves are pairwise at
distance at most t, and what that says about L(K_n).
"""

# %%
from orthkit.bounds import extremal_tree, max_leaves, separating_interval
from orthkit.enumerate import bounded_diameter_trees

for h, t in [(3, 3), (3, 4), (4, 3), (4, 4)]:
    by_search = max(sum(len(adj[x]) == 1 for x in adj) for adj in bounded_diameter_trees(h, t) if len(adj) > 1)
    print(f"h={h} t={t}: formula {max_leaves(h, t)}, exhaustive {by_search}")

# %%
# the extremal tree is a layout of the complete graph on its leaves
from orthkit import validate_layout
from orthkit.generators import complete_graph

T = extremal_tree(4, 3)
print(len(T.leaf_map), validate_layout(T, complete_graph(6), 4, 3))

# %%
for h, t in [(3, 3), (3, 4), (4, 3)]:
    iv = separating_interval(h, t)
    print(f"L(K_n) in ORTH[{h + 1},2,{t}] but not ORTH[{h},2,{t}] for n in [{iv.lo}, {iv.hi}]")

# %%
from orthkit.recognize import bruteforce_layout

print("K4 at (3,3):", bruteforce_layout(complete_graph(4), 3, 3) is not None)
print("K5 at (3,3):", bruteforce_layout(complete_graph(5), 3, 3) is not None)
