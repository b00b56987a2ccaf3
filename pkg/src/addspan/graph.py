"""Compressed adjacency graphs, edge-list I/O and seeded random graphs.

Vertices are dense integers ``0..n-1``. A :class:`Graph` stores each
undirected edge twice in a CSR layout (``indptr``/``indices``) with every
neighbor list strictly increasing. Edge sets are ``(k, 2)`` int64 arrays in
canonical order: smaller endpoint first, rows sorted lexicographically.
"""

from __future__ import annotations

import io
from functools import cached_property

import numpy as np

from .exceptions import BoundsError, CapacityError, ParseError

__all__ = [
    "Graph",
    "canonical_edges",
    "parse_edge_list",
    "read_edge_list",
    "serialize_edge_list",
    "write_edge_list",
    "generate_gnm",
    "degree",
]

INDEX_DTYPE = np.int64


def canonical_edges(edges):
    """Return ``edges`` as a deduplicated, canonically ordered ``(k, 2)`` array.

    Self-loops are dropped and ``(v, u)`` is folded onto ``(u, v)``.
    """
    arr = np.asarray(edges, dtype=INDEX_DTYPE)
    if arr.size == 0:
        return np.empty((0, 2), dtype=INDEX_DTYPE)
    arr = arr.reshape(-1, 2)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keep = lo != hi
    out = np.stack([lo[keep], hi[keep]], axis=1)
    if len(out) == 0:
        return np.empty((0, 2), dtype=INDEX_DTYPE)
    width = int(out[:, 1].max()) + 1
    keys = np.unique(out[:, 0] * width + out[:, 1])
    return np.stack(np.divmod(keys, width), axis=1)


class Graph:
    """Immutable simple undirected graph in compressed adjacency form.

    Parameters
    ----------
    n : int
        Number of vertices.
    indptr, indices : array_like
        CSR offsets and neighbor array. Use :meth:`from_edges` unless the
        arrays are already normalized; ``check=True`` validates them.
    """

    def __init__(self, n, indptr, indices, check=True):
        self.n = int(n)
        self.indptr = np.ascontiguousarray(indptr, dtype=INDEX_DTYPE)
        self.indices = np.ascontiguousarray(indices, dtype=INDEX_DTYPE)
        if check:
            self._validate()
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def from_edges(cls, n, edges):
        """Build a normalized graph on ``n`` vertices from any edge iterable."""
        e = canonical_edges(edges)
        if len(e) and (e.min() < 0 or e.max() >= n):
            raise BoundsError(f"edge endpoint outside [0, {n})")
        return cls._from_canonical(n, e)

    @classmethod
    def _from_canonical(cls, n, e):
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=INDEX_DTYPE)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        g = cls(n, indptr, dst, check=False)
        g.__dict__["edges"] = e
        return g

    @classmethod
    def empty(cls, n):
        return cls(n, np.zeros(n + 1), np.empty(0), check=False)

    def _validate(self):
        n, indptr, indices = self.n, self.indptr, self.indices
        if n < 0 or indptr.shape != (n + 1,) or indptr[0] != 0 or indptr[-1] != len(indices):
            raise ValueError("malformed CSR offsets")
        if np.any(np.diff(indptr) < 0):
            raise ValueError("CSR offsets must be nondecreasing")
        if len(indices) == 0:
            return
        if indices.min() < 0 or indices.max() >= n:
            raise BoundsError(f"neighbor id outside [0, {n})")
        rows = np.repeat(np.arange(n, dtype=INDEX_DTYPE), np.diff(indptr))
        if np.any(rows == indices):
            raise ValueError("self-loop in adjacency")
        same_row = rows[1:] == rows[:-1]
        if np.any(indices[1:][same_row] <= indices[:-1][same_row]):
            raise ValueError("neighbor lists must be strictly increasing")
        fwd = rows * n + indices
        bwd = np.sort(indices * n + rows)
        if not np.array_equal(fwd, bwd):
            raise ValueError("adjacency is not symmetric")

    @property
    def m(self):
        return len(self.indices) // 2

    edge_count = m

    @cached_property
    def degrees(self):
        d = np.diff(self.indptr)
        d.setflags(write=False)
        return d

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @cached_property
    def edges(self):
        """Canonical ``(m, 2)`` edge array."""
        rows = np.repeat(np.arange(self.n, dtype=INDEX_DTYPE), self.degrees)
        keep = rows < self.indices
        e = np.stack([rows[keep], self.indices[keep]], axis=1)
        e.setflags(write=False)
        return e

    def has_edges(self, edges):
        """Boolean mask: which rows of ``edges`` are edges of this graph."""
        e = np.asarray(edges, dtype=INDEX_DTYPE).reshape(-1, 2)
        if len(e) == 0:
            return np.zeros(0, dtype=bool)
        u, v = e[:, 0], e[:, 1]
        ok = (u >= 0) & (v >= 0) & (u < self.n) & (v < self.n) & (u != v)
        keys = self.edges[:, 0] * self.n + self.edges[:, 1]
        q = np.minimum(u, v) * self.n + np.maximum(u, v)
        pos = np.searchsorted(keys, q)
        pos = np.minimum(pos, max(len(keys) - 1, 0))
        found = ok & (len(keys) > 0)
        if len(keys):
            found &= keys[pos] == q
        return found

    def to_scipy(self):
        from scipy.sparse import csr_matrix

        data = np.ones(len(self.indices), dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def degree(g, v):
    return g.degree(v)


def parse_edge_list(text):
    """Parse the edge-list text format into a normalized :class:`Graph`.

    One ``u v`` pair per line. Blank lines and ``#`` comments are skipped.
    An optional ``p <n> <m>`` line fixes the vertex count; otherwise
    ``n = 1 + max id``. Self-loops are dropped and duplicates merged.

    Parameters
    ----------
    text : str or file-like

    Raises
    ------
    ParseError
        A line that is not a header or a pair of nonnegative integers.
    BoundsError
        A vertex id at or above the declared ``n``.
    """
    lines = io.StringIO(text) if isinstance(text, str) else text
    declared = None
    us, vs, linenos = [], [], []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if declared is not None:
                raise ParseError(lineno, "duplicate header")
            if len(tok) != 3:
                raise ParseError(lineno, "header must be 'p <n> <m>'")
            n_tok, m_tok = _nonneg(tok[1], lineno), _nonneg(tok[2], lineno)
            declared = (n_tok, m_tok, lineno)
            continue
        if len(tok) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        us.append(_nonneg(tok[0], lineno))
        vs.append(_nonneg(tok[1], lineno))
        linenos.append(lineno)
    edges = np.array([us, vs], dtype=INDEX_DTYPE).T.reshape(-1, 2)
    top = int(edges.max()) + 1 if len(edges) else 0
    if declared is None:
        n = top
    else:
        n = declared[0]
        if top > n:
            bad = int(np.flatnonzero(edges.max(axis=1) >= n)[0])
            raise BoundsError(
                f"line {linenos[bad]}: vertex id {int(edges[bad].max())} >= declared n={n}"
            )
    return Graph.from_edges(n, edges)


def _nonneg(tok, lineno):
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {tok!r}") from None
    if val < 0:
        raise ParseError(lineno, f"negative vertex id: {tok!r}")
    return val


def serialize_edge_list(g_or_edges, n=None, header=True):
    """Render a graph or edge array in the edge-list format.

    The header line is ``p <n> <m>``; edges follow in canonical order, one
    per line, LF-terminated.
    """
    if isinstance(g_or_edges, Graph):
        n, e = g_or_edges.n, g_or_edges.edges
    else:
        e = canonical_edges(g_or_edges)
        if n is None:
            n = int(e.max()) + 1 if len(e) else 0
    out = [f"p {n} {len(e)}\n"] if header else []
    out.extend(f"{u} {v}\n" for u, v in e.tolist())
    return "".join(out)


def read_edge_list(path):
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(path, g_or_edges, n=None, header=True):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_edge_list(g_or_edges, n=n, header=header))


# -- random graphs ----------------------------------------------------------

_BATCH_MIN = 1024


def _distinct_indices(bitgen, k, total):
    """First ``k`` distinct values of an unbiased stream over ``[0, total)``.

    Raw 64-bit PCG64 outputs at or above the largest multiple of ``total``
    are rejected; accepted outputs are reduced modulo ``total``. The result
    depends only on the stream, never on batch sizes.
    """
    if k == 0:
        return np.empty(0, dtype=np.uint64)
    limit = np.uint64((2**64 // total) * total - 1)
    total_u = np.uint64(total)
    chunks = []
    have = 0
    while True:
        batch = max(_BATCH_MIN, 2 * (k - have) + 64)
        raw = bitgen.random_raw(batch)
        raw = raw[raw <= limit] % total_u
        chunks.append(raw)
        allv = np.concatenate(chunks)
        _, first = np.unique(allv, return_index=True)
        have = len(first)
        if have >= k:
            first.sort()
            return allv[first[:k]]
        chunks = [allv]


def generate_gnm(n, m, seed):
    """Uniform random simple graph with exactly ``m`` edges.

    Unordered pairs ``i < j`` are numbered row by row and ``m`` distinct
    pair numbers are drawn from a NumPy ``PCG64(seed)`` bit generator using
    raw 64-bit outputs with rejection (see :func:`_distinct_indices`). When
    ``m`` exceeds half of all pairs, the missing pairs are drawn instead.
    The output is a fixed function of ``(n, m, seed)``.

    Raises
    ------
    CapacityError
        If ``m > n (n - 1) / 2``.
    """
    n, m = int(n), int(m)
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    total = n * (n - 1) // 2
    if m > total:
        raise CapacityError(f"m={m} exceeds n(n-1)/2={total}")
    if m == 0:
        return Graph.empty(n)
    bitgen = np.random.PCG64(seed)
    complement = m > total // 2
    picked = _distinct_indices(bitgen, total - m if complement else m, total)
    picked = np.sort(picked.astype(INDEX_DTYPE))
    if complement:
        keep = np.ones(total, dtype=bool)
        keep[picked] = False
        picked = np.flatnonzero(keep).astype(INDEX_DTYPE)
    rows = np.arange(n, dtype=INDEX_DTYPE)
    starts = rows * n - rows * (rows + 1) // 2
    i = np.searchsorted(starts, picked, side="right") - 1
    j = picked - starts[i] + i + 1
    return Graph._from_canonical(n, np.stack([i, j], axis=1))
