"""Greedy dominating sets.

A :class:`CoverInstance` lists, for every candidate, the targets it
dominates. :func:`greedy_cover` repeatedly takes the candidate that covers
the most still-uncovered targets (smallest id on ties). Stale counts sit in a
max-heap and are re-evaluated when popped; since counts only shrink, a
popped entry whose count is still exact is a true maximum.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .exceptions import InvariantViolation
from .graph import INDEX_DTYPE, canonical_edges
from .residual import gather_neighbors

__all__ = [
    "CoverInstance",
    "InfeasibleCover",
    "greedy_cover",
    "heavy_domination_instance",
    "attach_heavy_edges",
]


class InfeasibleCover(InvariantViolation):
    def __init__(self, target):
        self.target = int(target)
        super().__init__(f"target {self.target} is not dominated by any candidate")


@dataclass(eq=False)
class CoverInstance:
    """Candidates on the left, targets on the right, coverage in CSR form.

    ``indices[indptr[c]:indptr[c + 1]]`` are the targets candidate ``c``
    dominates, sorted and duplicate-free.
    """

    candidate_count: int
    target_count: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_lists(cls, coverage, target_count):
        lists = [sorted(set(int(t) for t in c)) for c in coverage]
        indptr = np.zeros(len(lists) + 1, dtype=INDEX_DTYPE)
        np.cumsum([len(c) for c in lists], out=indptr[1:])
        flat = np.fromiter((t for c in lists for t in c), dtype=INDEX_DTYPE, count=int(indptr[-1]))
        inst = cls(len(lists), int(target_count), indptr, flat)
        inst.validate()
        return inst

    @classmethod
    def from_pairs(cls, cand, target, candidate_count, target_count):
        """Build from parallel arrays of (candidate, target) incidences."""
        cand = np.asarray(cand, dtype=INDEX_DTYPE)
        target = np.asarray(target, dtype=INDEX_DTYPE)
        if len(cand):
            key = np.unique(cand * max(target_count, 1) + target)
            cand, target = np.divmod(key, max(target_count, 1))
        indptr = np.zeros(candidate_count + 1, dtype=INDEX_DTYPE)
        np.cumsum(np.bincount(cand, minlength=candidate_count), out=indptr[1:])
        return cls(int(candidate_count), int(target_count), indptr, target)

    def coverage(self, c):
        return self.indices[self.indptr[c]:self.indptr[c + 1]]

    def validate(self):
        if len(self.indices) and (self.indices.min() < 0 or self.indices.max() >= self.target_count):
            raise ValueError("target index out of range")
        for c in range(self.candidate_count):
            cov = self.coverage(c)
            if np.any(np.diff(cov) <= 0):
                raise ValueError(f"coverage of candidate {c} not sorted and unique")

    def uncoverable(self):
        """Targets no candidate dominates."""
        hit = np.zeros(self.target_count, dtype=bool)
        hit[self.indices] = True
        return np.flatnonzero(~hit)


def greedy_cover(inst: CoverInstance):
    """Greedy dominating set for ``inst``.

    Returns
    -------
    list of int
        Candidate ids in selection order. Each one covered at least one new
        target when picked, and together they cover every target.

    Raises
    ------
    InfeasibleCover
        If some target has no candidate; the error names the smallest one.
    """
    missing = inst.uncoverable()
    if len(missing):
        raise InfeasibleCover(missing[0])
    covered = np.zeros(inst.target_count, dtype=bool)
    remaining = inst.target_count
    counts = np.diff(inst.indptr)
    heap = [(-int(c), i) for i, c in enumerate(counts) if c > 0]
    heapq.heapify(heap)
    chosen = []
    while remaining:
        neg, c = heapq.heappop(heap)
        cov = inst.coverage(c)
        fresh = cov[~covered[cov]]
        if len(fresh) != -neg:
            if len(fresh):
                heapq.heappush(heap, (-len(fresh), c))
            continue
        covered[fresh] = True
        remaining -= len(fresh)
        chosen.append(c)
    if not covered.all():
        raise InvariantViolation("greedy cover left targets undominated")
    return chosen


def heavy_domination_instance(g, deg, heavy_threshold):
    """Cover instance in which live vertices dominate heavy vertices.

    A vertex is heavy when ``deg >= heavy_threshold``. Candidate ``i`` is the
    ``i``-th live vertex and dominates target ``j`` (the ``j``-th heavy
    vertex) when they are equal or adjacent in the residual view.

    Returns
    -------
    inst : CoverInstance
    candidates : ndarray
        Vertex id of each candidate.
    heavy : ndarray
        Vertex id of each target.
    """
    deg = np.asarray(deg)
    alive = g.alive
    candidates = np.flatnonzero(alive)
    heavy = np.flatnonzero(alive & (deg >= heavy_threshold))
    slot = np.full(g.n, -1, dtype=INDEX_DTYPE)
    slot[candidates] = np.arange(len(candidates))
    indptr, indices = g.csr()
    tgt, nbr = gather_neighbors(indptr, indices, heavy)
    keep = alive[nbr]
    tgt_idx = np.searchsorted(heavy, np.concatenate([heavy, tgt[keep]]))
    cand = slot[np.concatenate([heavy, nbr[keep]])]
    inst = CoverInstance.from_pairs(cand, tgt_idx, len(candidates), len(heavy))
    return inst, candidates, heavy


def attach_heavy_edges(s1, g, heavy):
    """One edge from each heavy vertex outside ``s1`` to its smallest ``s1`` neighbor.

    Raises
    ------
    InvariantViolation
        If a heavy vertex is neither in ``s1`` nor adjacent to it.
    """
    in_s1 = np.zeros(g.n, dtype=bool)
    in_s1[np.asarray(s1, dtype=INDEX_DTYPE)] = True
    heavy = np.asarray(heavy, dtype=INDEX_DTYPE)
    outside = heavy[~in_s1[heavy]]
    if len(outside) == 0:
        return np.empty((0, 2), dtype=INDEX_DTYPE)
    indptr, indices = g.csr()
    src, nbr = gather_neighbors(indptr, indices, outside)
    hit = g.alive[nbr] & in_s1[nbr]
    src, nbr = src[hit], nbr[hit]
    head = np.ones(len(src), dtype=bool)
    head[1:] = src[1:] != src[:-1]
    src, nbr = src[head], nbr[head]
    if len(src) != len(outside):
        lonely = np.setdiff1d(outside, src)[0]
        raise InvariantViolation(f"heavy vertex {lonely} has no dominator in S1")
    return canonical_edges(np.stack([src, nbr], axis=1))
