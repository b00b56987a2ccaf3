"""
Building a 4-additive spanner
=============================

Generate a seeded random graph, thin it out, and certify that no distance
grew by more than 4.
"""

from addspan import build_4_spanner, generate_gnm, verify_stretch

# A dense G(n, m): 300 vertices, about a third of all possible edges.
g = generate_gnm(300, 15000, seed=7)
print(f"input: n={g.n} m={g.m}")

# The construction is deterministic; same graph, same spanner.
res = build_4_spanner(g)
print(f"spanner: {res.edge_count} edges ({res.edge_count / g.m:.1%} of the input)")

# Exact check over all pairs.  The histogram maps excess to pair counts.
rep = verify_stretch(g, res.spanner_edges, k=4)
print(f"max excess {rep.max_excess}, passed={rep.passed}")
print("excess histogram:", dict(sorted(rep.histogram.items())))
