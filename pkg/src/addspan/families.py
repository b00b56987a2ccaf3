"""Small deterministic graph families and the standard verification corpus."""

from __future__ import annotations

import numpy as np

from .bounds import shortcut_edge_limit
from .graph import INDEX_DTYPE, Graph, generate_gnm

__all__ = [
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "grid_graph",
    "random_tree",
    "disjoint_union",
    "standard_corpus",
]


def path_graph(n):
    v = np.arange(max(n - 1, 0))
    return Graph.from_edges(n, np.stack([v, v + 1], axis=1))


def cycle_graph(n):
    v = np.arange(n)
    return Graph.from_edges(n, np.stack([v, (v + 1) % n], axis=1))


def star_graph(leaves):
    """Center 0 joined to leaves ``1..leaves``."""
    v = np.arange(1, leaves + 1)
    return Graph.from_edges(leaves + 1, np.stack([np.zeros_like(v), v], axis=1))


def complete_graph(n):
    i, j = np.triu_indices(n, k=1)
    return Graph.from_edges(n, np.stack([i, j], axis=1))


def grid_graph(rows, cols):
    idx = np.arange(rows * cols).reshape(rows, cols)
    horiz = np.stack([idx[:, :-1].ravel(), idx[:, 1:].ravel()], axis=1)
    vert = np.stack([idx[:-1, :].ravel(), idx[1:, :].ravel()], axis=1)
    return Graph.from_edges(rows * cols, np.concatenate([horiz, vert]))


def random_tree(n, seed):
    """Each vertex ``i > 0`` attaches to a uniform earlier vertex."""
    if n < 2:
        return Graph.empty(n)
    raw = np.random.PCG64(seed).random_raw(n - 1)
    child = np.arange(1, n, dtype=INDEX_DTYPE)
    parent = (raw % child.astype(np.uint64)).astype(INDEX_DTYPE)
    return Graph.from_edges(n, np.stack([parent, child], axis=1))


def disjoint_union(*graphs):
    """Relabel the inputs into consecutive id blocks, in argument order."""
    parts, offset = [], 0
    for g in graphs:
        parts.append(g.edges + offset)
        offset += g.n
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=INDEX_DTYPE)
    return Graph.from_edges(offset, edges)


def standard_corpus():
    """The fixed 30-graph corpus used for end-to-end stretch certification.

    Twenty ``G(n, m)`` graphs for ``n`` in 32, 64, 128, 256 at five densities
    around the ``m = n^(7/5)`` shortcut boundary (half of it, exactly on it,
    one above it, ``n^1.6`` and ``n^1.8``), then ten structured graphs.

    Returns
    -------
    list of (str, Graph)
    """
    out = []
    for n in (32, 64, 128, 256):
        full = n * (n - 1) // 2
        edge = shortcut_edge_limit(n)
        densities = {
            "half": edge // 2,
            "edge": edge,
            "above": edge + 1,
            "n1.6": int(n ** 1.6),
            "n1.8": min(full, int(n ** 1.8)),
        }
        for label, m in densities.items():
            out.append((f"gnm-{n}-{label}", generate_gnm(n, m, seed=1000 * n + m)))
    out += [
        ("path-50", path_graph(50)),
        ("cycle-41", cycle_graph(41)),
        ("star-40", star_graph(40)),
        ("grid-12x12", grid_graph(12, 12)),
        ("complete-24", complete_graph(24)),
        ("tree-100", random_tree(100, seed=5)),
        ("union-star-path-cycle", disjoint_union(star_graph(20), path_graph(15), cycle_graph(10), Graph.empty(4))),
        ("union-dense", disjoint_union(generate_gnm(40, 500, 11), generate_gnm(30, 300, 12))),
        ("union-cliques", disjoint_union(complete_graph(12), complete_graph(12), complete_graph(12))),
        ("empty-10", Graph.empty(10)),
    ]
    return out
