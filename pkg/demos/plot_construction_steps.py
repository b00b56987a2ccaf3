"""
Watching every step work
========================

At laptop sizes the default thresholds clear all heavy vertices during
elimination, so the domination and path-cover steps sit idle.  Shrinking the
thresholds wakes them up.  Keeping ``elim_threshold <= f_threshold`` and
``shortpath_factor >= subtree_factor + 2`` keeps the +5 guarantee intact.
"""

from addspan import SpannerParams, build_5_spanner, generate_gnm, verify_stretch

g = generate_gnm(200, 900, seed=11)

default = build_5_spanner(g, SpannerParams(dense_shortcut=False))
print("default thresholds:", default.thresholds.to_dict())
print("  edges per step:", default.per_step_edge_counts)

# Small thresholds: many heavy vertices, long tree paths.
p = SpannerParams(
    elim_threshold=10,
    heavy_threshold=4,
    f_threshold=10,
    subtree_factor=1,
    shortpath_factor=5,
    dense_shortcut=False,
)
res = build_5_spanner(g, p)
print("overridden:", res.thresholds.overridden)
print("  edges per step:", res.per_step_edge_counts)
print(f"  |S1|={res.s1_size} (bound {res.s1_bound:.0f}), |S2|={res.s2_size} (bound {res.s2_bound:.0f})")
print(f"  aux graph: {res.aux_right_count} path segments, {res.aux_edge_count} edges")
print(f"  total {res.edge_count} of {g.m} edges")

rep = verify_stretch(g, res.spanner_edges, k=5)
print("  max excess", rep.max_excess)
