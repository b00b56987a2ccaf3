"""Breadth-first trees over a (residual) graph.

:func:`bfs_tree` is a plain BFS tree in which each vertex hangs from its
smallest-id neighbor one layer up. :func:`degree_min_bfs_tree` builds a
shortest-path tree in which every root-to-vertex path has the smallest
possible sum of vertex degrees among all shortest paths, and records the
prefix sums ``f`` and subtree sums ``s``.

Both work a whole layer at a time with NumPy; ties always go to the smaller
vertex id."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import INDEX_DTYPE, Graph, canonical_edges
from .residual import ResidualGraph, gather_neighbors

__all__ = ["DegreeMinTree", "bfs_tree", "bfs_layers", "degree_min_bfs_tree"]

UNREACHED = -1


def _view(g):
    if isinstance(g, ResidualGraph):
        indptr, indices = g.csr()
        return g.n, indptr, indices, g.alive
    if isinstance(g, Graph):
        return g.n, g.indptr, g.indices, None
    raise TypeError(f"expected Graph or ResidualGraph, got {type(g).__name__}")


def _check_root(n, alive, root):
    if not 0 <= root < n:
        raise ValueError(f"root {root} outside [0, {n})")
    if alive is not None and not alive[root]:
        raise ValueError(f"root {root} is not a live vertex")


def bfs_layers(g, root):
    """Layered breadth-first search from ``root``.

    Returns ``(dist, parent, layers)``. ``parent[root] == root``; unreached
    vertices have ``dist == parent == -1``. Layers are sorted by id and
    ``parent[u]`` is the smallest-id neighbor of ``u`` one layer closer to
    the root, which is the tree a queue-based BFS builds when neighbor lists
    are scanned in increasing order and each layer is enqueued sorted.
    """
    n, indptr, indices, alive = _view(g)
    root = int(root)
    _check_root(n, alive, root)
    dist = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    parent = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    dist[root] = 0
    parent[root] = root
    frontier = np.array([root], dtype=INDEX_DTYPE)
    layers = [frontier]
    level = 0
    best = np.full(n, n, dtype=INDEX_DTYPE)
    while True:
        src, nbr = _expand(indptr, indices, alive, dist, frontier)
        if len(nbr) == 0:
            break
        np.minimum.at(best, nbr, src)
        frontier = _distinct(nbr, n)
        level += 1
        dist[frontier] = level
        parent[frontier] = best[frontier]
        layers.append(frontier)
    return dist, parent, layers


def _expand(indptr, indices, alive, dist, frontier):
    src, nbr = gather_neighbors(indptr, indices, frontier)
    fresh = dist[nbr] == UNREACHED
    if alive is not None:
        fresh &= alive[nbr]
    return src[fresh], nbr[fresh]


def _distinct(verts, n):
    """Sorted distinct values of ``verts``, by marking instead of sorting."""
    if len(verts) * 8 < n:
        return np.unique(verts)
    mark = np.zeros(n, dtype=bool)
    mark[verts] = True
    return np.flatnonzero(mark)


def bfs_tree(g, root):
    """Edges of a BFS tree rooted at ``root`` plus hop distances.

    Parameters
    ----------
    g : Graph or ResidualGraph
    root : int
        Must be a live vertex.

    Returns
    -------
    edges : ndarray, shape (k, 2)
        Canonical tree edges spanning the root's component.
    dist : ndarray
        Hop distance from ``root``; ``-1`` where unreachable.

    Examples
    --------
    >>> from addspan.graph import Graph
    >>> c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> edges, dist = bfs_tree(c4, 0)
    >>> edges.tolist(), dist.tolist()
    ([[0, 1], [0, 3], [1, 2]], [0, 1, 2, 1])
    """
    dist, parent, _ = bfs_layers(g, root)
    reached = np.flatnonzero(dist > 0)
    return canonical_edges(np.stack([reached, parent[reached]], axis=1)), dist


@dataclass(eq=False)
class DegreeMinTree:
    """Shortest-path tree minimizing degree sums along root paths.

    All per-vertex arrays use ``-1`` for vertices the root cannot reach.
    ``parent[root] == root``.
    """

    root: int
    parent: np.ndarray
    dist: np.ndarray
    f: np.ndarray
    s: np.ndarray
    layers: list = field(repr=False)

    def reachable(self, u):
        return self.dist[u] >= 0

    def path(self, u):
        """Vertices on the tree path ``root -> u`` (root first)."""
        if self.dist[u] < 0:
            raise ValueError(f"vertex {u} unreachable from {self.root}")
        out = [int(u)]
        while out[-1] != self.root:
            out.append(int(self.parent[out[-1]]))
        out.reverse()
        return out

    def path_edges(self, u):
        p = self.path(u)
        return canonical_edges(np.column_stack([p[:-1], p[1:]]))

    def children(self, u):
        kids = np.flatnonzero(self.parent == u)
        return kids[kids != u]


def degree_min_bfs_tree(g, root, deg=None):
    """Shortest-path tree whose root paths minimize the total vertex degree.

    Layers are found by BFS. For each vertex at distance ``d``, the parent
    is the neighbor at distance ``d - 1`` with the smallest ``f``; ties go to
    the smaller id. Then ``f[u] = f[parent[u]] + deg[u]`` with
    ``f[root] = deg[root]``, and ``s[u]`` is ``deg[u]`` plus the ``s`` of
    every tree child.

    Parameters
    ----------
    g : Graph or ResidualGraph
    root : int
    deg : array_like, optional
        Vertex weights. Defaults to live degrees (or plain degrees for a
        :class:`Graph`).
    """
    n, indptr, indices, alive = _view(g)
    root = int(root)
    _check_root(n, alive, root)
    if deg is None:
        deg = g.live_degree if isinstance(g, ResidualGraph) else g.degrees
    deg = np.asarray(deg, dtype=INDEX_DTYPE)

    dist = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    parent = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    f = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    dist[root] = 0
    parent[root] = root
    f[root] = deg[root]
    frontier = np.array([root], dtype=INDEX_DTYPE)
    layers = [frontier]
    level = 0
    # Parent choice minimizes (f[w], w), packed as f[w] * n + w.
    wide = int(deg.sum()) + 1 if n else 1
    packed = wide * max(n, 1) < 2**62
    best = np.full(n, np.iinfo(np.int64).max, dtype=INDEX_DTYPE)
    while True:
        src, nbr = _expand(indptr, indices, alive, dist, frontier)
        if len(nbr) == 0:
            break
        if packed:
            np.minimum.at(best, nbr, f[src] * n + src)
            frontier = _distinct(nbr, n)
            chosen = best[frontier] % n
        else:
            order = np.lexsort((src, f[src], nbr))
            src, nbr = src[order], nbr[order]
            head = np.ones(len(nbr), dtype=bool)
            head[1:] = nbr[1:] != nbr[:-1]
            frontier, chosen = nbr[head], src[head]
        level += 1
        dist[frontier] = level
        parent[frontier] = chosen
        f[frontier] = f[chosen] + deg[frontier]
        layers.append(frontier)

    s = np.full(n, UNREACHED, dtype=INDEX_DTYPE)
    for layer in layers:
        s[layer] = deg[layer]
    for layer in reversed(layers[1:]):
        np.add.at(s, parent[layer], s[layer])
    return DegreeMinTree(root, parent, dist, f, s, layers)
