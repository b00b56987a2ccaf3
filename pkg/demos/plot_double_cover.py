"""
From +5 to +4 through the double cover
======================================

The 4-additive spanner is the 5-additive construction run on the bipartite
double cover, then folded back.  In the cover every path between the two
copies of a vertex set has fixed parity, which is what buys the extra unit.
"""

import numpy as np

from addspan import SpannerParams, all_pairs_distances, build_5_spanner, generate_gnm, verify_stretch
from addspan.families import cycle_graph
from addspan.reduction import build_4_spanner, double, project

# An odd cycle doubles into a single cycle of twice the length.
d = double(cycle_graph(5))
print("C5 doubled:", d.graph.n, "vertices,", d.graph.m, "edges")

# Same-side distances are even, cross-side distances are odd.
dist = all_pairs_distances(d.graph)
print("d(0, 5) =", dist[0, 5], " d(0, 2) =", dist[0, 2])

# Folding the doubled edge set returns the original graph exactly.
g = generate_gnm(120, 1500, seed=3)
assert np.array_equal(project(double(g).graph.edges, g.n), g.edges)

# Run both builders without the sparse shortcut and compare.
p = SpannerParams(dense_shortcut=False)
for name, build, k in (("5-additive", build_5_spanner, 5), ("4-additive", build_4_spanner, 4)):
    res = build(g, p)
    rep = verify_stretch(g, res.spanner_edges, k)
    print(f"{name}: {res.edge_count} edges, max excess {rep.max_excess} (allowed {k})")
