"""Exact stretch certification by all-pairs BFS.

Distances come from :func:`scipy.sparse.csgraph.shortest_path`, which shares
no code with the construction, so a passing check is independent evidence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import shortest_path

from . import bounds
from .exceptions import SubgraphViolation, VerificationCapExceeded
from .graph import Graph, canonical_edges

__all__ = [
    "DEFAULT_CAP",
    "StretchReport",
    "all_pairs_distances",
    "verify_stretch",
    "edge_budget_report",
]

DEFAULT_CAP = 4096
UNREACHABLE = -1
_CHUNK = 256


def _check_cap(g, cap):
    if cap is not None and g.n > cap:
        raise VerificationCapExceeded(
            f"n={g.n} exceeds the verification cap of {cap}; raise the cap to force it"
        )


def _distances(g, sources):
    d = shortest_path(g.to_scipy(), method="D", directed=False, unweighted=True, indices=sources)
    d = np.atleast_2d(d)
    out = np.full(d.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int64)
    return out


def all_pairs_distances(g: Graph, cap=DEFAULT_CAP):
    """``(n, n)`` hop-distance table with ``-1`` for unreachable pairs.

    Raises
    ------
    VerificationCapExceeded
        If ``g.n > cap``.
    """
    _check_cap(g, cap)
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return _distances(g, np.arange(g.n))


@dataclass
class StretchReport:
    """Outcome of comparing spanner distances with host distances.

    ``max_excess`` is ``math.inf`` when some pair connected in the host is
    disconnected in the spanner. ``histogram`` maps excess to the number of
    unordered pairs with that excess.
    """

    k: int
    max_excess: float
    worst_pair: tuple | None
    pairs_checked: int
    disconnected_pairs: int
    histogram: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.max_excess <= self.k

    def to_dict(self):
        return {
            "k": self.k,
            "passed": self.passed,
            "max_excess": "inf" if math.isinf(self.max_excess) else int(self.max_excess),
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
            "pairs_checked": self.pairs_checked,
            "disconnected_pairs": self.disconnected_pairs,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }


def verify_stretch(g: Graph, h_edges, k, cap=DEFAULT_CAP):
    """Check ``dist_H(u, v) <= dist_G(u, v) + k`` for every connected pair.

    Parameters
    ----------
    g : Graph
    h_edges : array_like, shape (e, 2)
        Candidate spanner; must be a subset of ``g``'s edges.
    k : int
    cap : int or None
        Largest ``n`` to verify.

    Returns
    -------
    StretchReport
        ``report.passed`` tells the verdict. Pairs disconnected in ``g`` are
        skipped.

    Raises
    ------
    SubgraphViolation
        If some edge of ``h_edges`` is not an edge of ``g``.

    Examples
    --------
    >>> from addspan.graph import Graph
    >>> c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    >>> rep = verify_stretch(c6, [(i, i + 1) for i in range(5)], k=4)
    >>> rep.max_excess, rep.passed
    (4, True)
    """
    _check_cap(g, cap)
    h_edges = canonical_edges(h_edges)
    inside = g.has_edges(h_edges)
    if not inside.all():
        u, v = h_edges[np.flatnonzero(~inside)[0]]
        raise SubgraphViolation(f"edge ({u}, {v}) is not in the input graph")
    h = Graph.from_edges(g.n, h_edges)
    hist = Counter()
    worst, worst_pair = 0, None
    checked = broken = 0
    for lo in range(0, g.n, _CHUNK):
        src = np.arange(lo, min(lo + _CHUNK, g.n))
        dg, dh = _distances(g, src), _distances(h, src)
        upper = np.arange(g.n)[None, :] > src[:, None]
        live = upper & (dg != UNREACHABLE)
        cut = live & (dh == UNREACHABLE)
        ok = live & ~cut
        checked += int(live.sum())
        if cut.any():
            if broken == 0:
                r, c = np.argwhere(cut)[0]
                worst_pair = (int(src[r]), int(c))
            broken += int(cut.sum())
        excess = np.where(ok, dh - dg, -1)
        values, counts = np.unique(excess[ok], return_counts=True)
        hist.update(dict(zip(values.tolist(), counts.tolist())))
        if ok.any() and broken == 0:
            top = int(excess.max())
            if top > worst or worst_pair is None:
                r, c = np.argwhere(excess == top)[0]
                worst, worst_pair = top, (int(src[r]), int(c))
    return StretchReport(
        k=int(k),
        max_excess=math.inf if broken else worst,
        worst_pair=worst_pair,
        pairs_checked=checked,
        disconnected_pairs=broken,
        histogram=dict(hist),
    )


def edge_budget_report(g: Graph, result):
    """Spanner size against ``m`` and against ``n^(7/5) lg(n)^(3/5)``."""
    size = result.edge_count
    scale = bounds.edge_budget_scale(g.n)
    return {
        "n": g.n,
        "m": g.m,
        "spanner_edges": size,
        "budget_scale": scale,
        "ratio_to_m": size / g.m if g.m else 1.0,
        "ratio_to_budget": size / scale if scale else 0.0,
        "shortcut_used": result.shortcut_used,
        "per_step_edge_counts": list(result.per_step_edge_counts),
    }
