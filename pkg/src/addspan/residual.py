"""Mutable residual view of a graph: deleted-vertex mask plus live degrees."""

from __future__ import annotations

import numpy as np

from .graph import INDEX_DTYPE, Graph

__all__ = ["ResidualGraph", "gather_neighbors"]


def gather_neighbors(indptr, indices, verts):
    """Flatten the adjacency lists of ``verts``.

    Returns ``(src, nbr)`` where ``src[i]`` is the vertex whose list holds
    ``nbr[i]``. Order follows ``verts``, then each stored list.
    """
    verts = np.asarray(verts, dtype=INDEX_DTYPE)
    starts = indptr[verts]
    lens = indptr[verts + 1] - starts
    total = int(lens.sum())
    if total == 0:
        empty = np.empty(0, dtype=INDEX_DTYPE)
        return empty, empty
    ends = np.cumsum(lens)
    offs = np.repeat(starts - ends + lens, lens) + np.arange(total, dtype=INDEX_DTYPE)
    return np.repeat(verts, lens), indices[offs]


class ResidualGraph:
    """The graph ``G'`` left after deleting vertices from a base graph.

    Attributes
    ----------
    base : Graph
    alive : ndarray of bool
    live_degree : ndarray of int64
        Number of live neighbors; zero for deleted vertices.
    live_edge_count : int
        ``|E'|``, half the sum of live degrees.
    """

    def __init__(self, base: Graph):
        self.base = base
        self.alive = np.ones(base.n, dtype=bool)
        self.live_degree = np.array(base.degrees, dtype=INDEX_DTYPE)
        self.live_edge_count = base.m
        self._csr = (base.indptr, base.indices)
        self._csr_entries = len(base.indices)

    @property
    def n(self):
        return self.base.n

    def live_vertices(self):
        return np.flatnonzero(self.alive)

    def remove(self, verts):
        """Delete ``verts`` (and their incident edges) from the view."""
        verts = np.unique(np.asarray(verts, dtype=INDEX_DTYPE))
        verts = verts[self.alive[verts]]
        if len(verts) == 0:
            return
        indptr, indices = self._csr
        src, nbr = gather_neighbors(indptr, indices, verts)
        live = self.alive[nbr]
        src, nbr = src[live], nbr[live]
        self.alive[verts] = False
        inside = ~self.alive[nbr]
        # Edges with both endpoints in ``verts`` were seen twice.
        self.live_edge_count -= int(np.count_nonzero(~inside)) + int(np.count_nonzero(inside)) // 2
        np.subtract.at(self.live_degree, nbr[~inside], 1)
        self.live_degree[verts] = 0
        if 4 * self.live_edge_count < self._csr_entries:
            self._compact()

    def _compact(self):
        edges = self.live_edges()
        g = Graph._from_canonical(self.n, edges)
        self._csr = (g.indptr, g.indices)
        self._csr_entries = len(g.indices)

    def csr(self):
        """CSR arrays covering every live edge.

        May still list edges to deleted vertices; filter with :attr:`alive`.
        Neighbor lists stay sorted.
        """
        return self._csr

    def live_neighbors(self, v):
        indptr, indices = self._csr
        nb = indices[indptr[v]:indptr[v + 1]]
        return nb[self.alive[nb]]

    def live_edges(self):
        """Canonical array of the live edges."""
        indptr, indices = self._csr
        rows = np.repeat(np.arange(self.n, dtype=INDEX_DTYPE), np.diff(indptr))
        keep = (rows < indices) & self.alive[rows] & self.alive[indices]
        return np.stack([rows[keep], indices[keep]], axis=1)

    def to_graph(self):
        """Snapshot of ``G'`` as an immutable graph on the same vertex ids."""
        return Graph._from_canonical(self.n, self.live_edges())

    def check(self):
        """Recount live degrees and ``|E'|`` from scratch; raise on mismatch."""
        e = self.live_edges()
        deg = np.bincount(e.ravel(), minlength=self.n)
        if not np.array_equal(deg, self.live_degree) or len(e) != self.live_edge_count:
            raise AssertionError("residual bookkeeping out of sync")

    def __repr__(self):
        return (
            f"ResidualGraph(n={self.n}, live={int(self.alive.sum())}, "
            f"D={self.live_edge_count})"
        )
