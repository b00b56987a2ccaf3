"""Deterministic 5-additive spanner.

Pipeline (each step is a separate function so it can be tested alone):

0. Sparse inputs (``m <= n^(7/5)``) are returned whole.
1. While some live vertex has degree ``>= elim_threshold``, take the one of
   largest degree, add a BFS tree rooted there, and delete it together with
   its live neighbors.
2. Keep every live edge with a light endpoint (degree ``< heavy_threshold``).
3. Greedily dominate the heavy vertices by a set ``S1`` and attach each
   heavy vertex to one dominator.
4. Build a degree-minimizing shortest-path tree from every ``S1`` vertex.
5. Collect tree-path segments whose degree sum first crosses ``F`` and whose
   subtree is heavy enough, together with every vertex adjacent to them.
6. Greedily dominate those segments by ``S2`` and add a BFS tree per ``S2``
   vertex.
7. Add the tree path between every ordered ``S1`` pair whose degree sum is
   at most ``shortpath_factor * F``.

Degrees in steps 2-7 are live degrees after step 1; every threshold is
computed from the full vertex count of the input.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds
from .bfs import DegreeMinTree, bfs_tree, degree_min_bfs_tree
from .domination import (
    CoverInstance,
    InfeasibleCover,
    attach_heavy_edges,
    greedy_cover,
    heavy_domination_instance,
)
from .exceptions import ClaimViolation, InvariantViolation
from .graph import INDEX_DTYPE, Graph, canonical_edges
from .residual import ResidualGraph

__all__ = [
    "SpannerParams",
    "Thresholds",
    "AuxBipartite",
    "SpannerResult",
    "ResidualGraph",
    "build_5_spanner",
    "step0_dense_shortcut",
    "step1_eliminate",
    "step2_light_edges",
    "step3_dominate_heavy",
    "step4_trees",
    "step5_build_aux",
    "step6_dominate_paths",
    "step7_short_paths",
]

STEP_NAMES = tuple(f"step{i}" for i in range(1, 8))


@dataclass(frozen=True)
class SpannerParams:
    """Construction knobs. ``None`` thresholds mean "use the formula for n"."""

    elim_threshold: float | None = None
    heavy_threshold: float | None = None
    f_threshold: float | None = None
    subtree_factor: float = 3.0
    shortpath_factor: float = 5.0
    dense_shortcut: bool = True

    def __post_init__(self):
        for name in ("elim_threshold", "heavy_threshold", "f_threshold"):
            val = getattr(self, name)
            if val is not None and not val > 0:
                raise ValueError(f"{name} must be positive, got {val}")
        if not (self.subtree_factor >= 1 and self.shortpath_factor >= 1):
            raise ValueError("subtree_factor and shortpath_factor must be >= 1")

    def resolve(self, n):
        """Concrete thresholds for a graph on ``n`` vertices."""
        return Thresholds(
            n=int(n),
            elim_threshold=_pick(self.elim_threshold, bounds.default_elim_threshold(n)),
            heavy_threshold=_pick(self.heavy_threshold, bounds.default_heavy_threshold(n)),
            f_threshold=_pick(self.f_threshold, bounds.default_f_threshold(n)),
            subtree_factor=float(self.subtree_factor),
            shortpath_factor=float(self.shortpath_factor),
            dense_shortcut=bool(self.dense_shortcut),
            overridden=tuple(
                k
                for k in ("elim_threshold", "heavy_threshold", "f_threshold")
                if getattr(self, k) is not None
            ),
        )


def _pick(override, default):
    return float(default if override is None else override)


@dataclass(frozen=True)
class Thresholds:
    n: int
    elim_threshold: float
    heavy_threshold: float
    f_threshold: float
    subtree_factor: float
    shortpath_factor: float
    dense_shortcut: bool
    overridden: tuple = ()

    def to_dict(self):
        d = asdict(self)
        d["overridden"] = list(self.overridden)
        return d


@dataclass(eq=False)
class AuxBipartite:
    """Domination instance over tree-path segments.

    ``right[i] = (v, u)`` is a segment of ``T_v``; ``edges[i]`` lists the
    live vertices adjacent to some vertex of ``right_paths[i]``.
    """

    left: np.ndarray
    right: list
    edges: list
    right_paths: list

    @property
    def edge_count(self):
        return sum(len(e) for e in self.edges)

    def cover_instance(self):
        """Candidates are positions in :attr:`left`; targets are segments."""
        if not self.right:
            return CoverInstance.from_pairs([], [], len(self.left), 0)
        cand = np.concatenate(self.edges)
        tgt = np.repeat(np.arange(len(self.right)), [len(e) for e in self.edges])
        return CoverInstance.from_pairs(
            np.searchsorted(self.left, cand), tgt, len(self.left), len(self.right)
        )


@dataclass(eq=False)
class SpannerResult:
    """Spanner edges plus construction statistics.

    ``per_step_edge_counts[i]`` is the number of edges step ``i + 1``
    contributed before merging; steps may overlap. When the dense shortcut
    fires, every count is zero and ``shortcut_used`` is set.
    """

    mode: int
    n: int
    m: int
    spanner_edges: np.ndarray
    per_step_edge_counts: tuple
    s1_size: int
    s2_size: int
    residual_edge_count: int
    thresholds: Thresholds
    elimination_rounds: int
    shortcut_used: bool
    aux_right_count: int = 0
    aux_edge_count: int = 0
    inner: SpannerResult | None = None
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def edge_count(self):
        return len(self.spanner_edges)

    @property
    def s1_bound(self):
        return bounds.s1_bound(self.thresholds.n)

    @property
    def s2_bound(self):
        return bounds.s2_bound(self.thresholds.n)

    def to_dict(self, include_edges=True):
        """JSON-ready report. Wall-clock timings are deliberately left out."""
        d = {
            "schema": "addspan.report/1",
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "spanner_edge_count": self.edge_count,
            "shortcut_used": self.shortcut_used,
            "elimination_rounds": self.elimination_rounds,
            "per_step_edge_counts": dict(zip(STEP_NAMES, self.per_step_edge_counts)),
            "s1_size": self.s1_size,
            "s2_size": self.s2_size,
            "s1_bound": self.s1_bound,
            "s2_bound": self.s2_bound,
            "residual_edge_count": self.residual_edge_count,
            "aux_right_count": self.aux_right_count,
            "aux_edge_count": self.aux_edge_count,
            "thresholds": self.thresholds.to_dict(),
            "inner": self.inner.to_dict(include_edges=False) if self.inner else None,
        }
        if include_edges:
            d["edges"] = self.spanner_edges.tolist()
        return d


# -- steps -----------------------------------------------------------------


def step0_dense_shortcut(g: Graph, params: SpannerParams):
    """Whole graph as the answer when it is already sparse, else ``None``."""
    t = params.resolve(g.n)
    if not (t.dense_shortcut and bounds.dense_shortcut_applies(g.n, g.m)):
        return None
    return SpannerResult(
        mode=5,
        n=g.n,
        m=g.m,
        spanner_edges=np.array(g.edges),
        per_step_edge_counts=(0,) * 7,
        s1_size=0,
        s2_size=0,
        residual_edge_count=g.m,
        thresholds=t,
        elimination_rounds=0,
        shortcut_used=True,
    )


def step1_eliminate(g: Graph, params: SpannerParams):
    """High-degree elimination.

    Returns
    -------
    rg : ResidualGraph
        ``G'`` after all deletions; every live degree is below the cutoff.
    edges : ndarray
        Union of the BFS trees added, canonical.
    roots : list of int
        Eliminated roots in order.
    """
    t = params.resolve(g.n)
    rg = ResidualGraph(g)
    trees, roots = [], []
    while g.n:
        v = int(np.argmax(rg.live_degree))
        if rg.live_degree[v] < t.elim_threshold:
            break
        tree, _ = bfs_tree(rg, v)
        trees.append(tree)
        roots.append(v)
        rg.remove(np.concatenate([[v], rg.live_neighbors(v)]))
    if g.n and rg.live_degree.max() >= t.elim_threshold:
        raise InvariantViolation("live degree above the elimination cutoff after step 1")
    return rg, _merge(trees), roots


def step2_light_edges(rg: ResidualGraph, params: SpannerParams):
    """Live edges with at least one endpoint of live degree below the heavy cutoff."""
    t = params.resolve(rg.n)
    e = rg.live_edges()
    light = rg.live_degree < t.heavy_threshold
    return e[light[e[:, 0]] | light[e[:, 1]]]


def step3_dominate_heavy(rg: ResidualGraph, params: SpannerParams):
    """Dominating set ``S1`` of the heavy vertices and one attaching edge each.

    Raises
    ------
    ClaimViolation
        If ``|S1|`` exceeds ``2 n^(3/5) lg(n)^(2/5)``.
    """
    t = params.resolve(rg.n)
    inst, candidates, heavy = heavy_domination_instance(rg, rg.live_degree, t.heavy_threshold)
    s1 = [int(candidates[c]) for c in greedy_cover(inst)]
    bound = bounds.s1_bound(rg.n)
    if len(s1) > bound:
        raise ClaimViolation(f"|S1| = {len(s1)} exceeds bound {bound:.3f} (n={rg.n})")
    return s1, attach_heavy_edges(s1, rg, heavy)


def step4_trees(rg: ResidualGraph, s1, workers=1):
    """One :class:`DegreeMinTree` per ``S1`` root, in ``S1`` order."""
    s1 = [int(v) for v in s1]
    if any(not rg.alive[v] for v in s1):
        raise InvariantViolation("S1 contains a deleted vertex")

    def build(v):
        return degree_min_bfs_tree(rg, v, rg.live_degree)

    if workers > 1 and len(s1) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(build, s1))
    return [build(v) for v in s1]


def step5_build_aux(rg: ResidualGraph, trees, params: SpannerParams):
    """Auxiliary bipartite instance of long tree-path segments.

    ``(v, u)`` qualifies when ``u`` is the first vertex on its ``T_v`` branch
    with ``f > F`` and its subtree degree sum exceeds ``subtree_factor * F``.
    """
    t = params.resolve(rg.n)
    F = t.f_threshold
    indptr, indices = rg.csr()
    right, edges, paths = [], [], []
    for tree in trees:
        if t.elim_threshold <= F and tree.f[tree.root] > F:
            raise InvariantViolation(f"f at root {tree.root} exceeds F despite step 1")
        reached = tree.dist > 0
        pf = np.where(reached, tree.f[np.where(reached, tree.parent, 0)], 0)
        hits = np.flatnonzero(
            reached & (tree.f > F) & (pf <= F) & (tree.s > t.subtree_factor * F)
        )
        for u in hits.tolist():
            path = tree.path(u)
            nbrs = [indices[indptr[w]:indptr[w + 1]] for w in path]
            adj = np.unique(np.concatenate(nbrs)) if nbrs else np.empty(0, INDEX_DTYPE)
            adj = adj[rg.alive[adj]]
            right.append((tree.root, u))
            edges.append(adj)
            paths.append(path)
        _check_disjoint(tree, hits)
    return AuxBipartite(rg.live_vertices(), right, edges, paths)


def _check_disjoint(tree: DegreeMinTree, hits):
    """No qualifying segment end may sit inside another one's subtree."""
    if len(hits) < 2:
        return
    mark = np.zeros(len(tree.parent), dtype=bool)
    mark[hits] = True
    for u in hits.tolist():
        w = int(tree.parent[u])
        while w != tree.root:
            if mark[w]:
                raise InvariantViolation(
                    f"segments ({tree.root},{w}) and ({tree.root},{u}) overlap"
                )
            w = int(tree.parent[w])


def step6_dominate_paths(rg: ResidualGraph, aux: AuxBipartite, params=None, workers=1):
    """Dominating set ``S2`` of the segments and a BFS tree from each member.

    Raises
    ------
    ClaimViolation
        If ``|S2|`` exceeds ``12 n^(2/5) lg(n)^(3/5)``.
    """
    try:
        picked = greedy_cover(aux.cover_instance())
    except InfeasibleCover as exc:
        raise InvariantViolation(f"segment {aux.right[exc.target]} has no neighbor") from exc
    s2 = [int(aux.left[c]) for c in picked]
    bound = bounds.s2_bound(rg.n)
    if len(s2) > bound:
        raise ClaimViolation(f"|S2| = {len(s2)} exceeds bound {bound:.3f} (n={rg.n})")

    def build(x):
        return bfs_tree(rg, x)[0]

    if workers > 1 and len(s2) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trees = list(pool.map(build, s2))
    else:
        trees = [build(x) for x in s2]
    return s2, _merge(trees)


def step7_short_paths(trees, s1, params: SpannerParams, n=None):
    """Tree paths ``v -> u`` in ``T_v`` for ``S1`` pairs with ``f <= shortpath_factor * F``."""
    if not trees:
        return np.empty((0, 2), dtype=INDEX_DTYPE)
    n = len(trees[0].parent) if n is None else n
    t = params.resolve(n)
    limit = t.shortpath_factor * t.f_threshold
    s1 = np.asarray(s1, dtype=INDEX_DTYPE)
    out = []
    for tree in trees:
        targets = s1[(s1 != tree.root) & (tree.dist[s1] >= 0)]
        targets = targets[tree.f[targets] <= limit]
        if len(targets) == 0:
            continue
        need = np.zeros(len(tree.parent), dtype=bool)
        need[targets] = True
        for layer in reversed(tree.layers[1:]):
            up = layer[need[layer]]
            need[tree.parent[up]] = True
        need[tree.root] = False
        x = np.flatnonzero(need)
        out.append(np.stack([x, tree.parent[x]], axis=1))
    return _merge(out)


def _merge(parts):
    parts = [p for p in parts if len(p)]
    if not parts:
        return np.empty((0, 2), dtype=INDEX_DTYPE)
    return canonical_edges(np.concatenate(parts))


# -- orchestration ---------------------------------------------------------


def build_5_spanner(g: Graph, params: SpannerParams | None = None, workers=1):
    """5-additive spanner of ``g``.

    Parameters
    ----------
    g : Graph
    params : SpannerParams, optional
    workers : int
        Threads for the per-root tree builds of steps 4 and 6. The result
        does not depend on it.

    Returns
    -------
    SpannerResult

    Raises
    ------
    ClaimViolation
        A dominating set exceeded its size bound.
    """
    params = params or SpannerParams()
    clock = _Clock()
    short = step0_dense_shortcut(g, params)
    clock.lap("step0")
    if short is not None:
        short.timings = clock.laps
        return short

    t = params.resolve(g.n)
    rg, e1, roots = step1_eliminate(g, params)
    clock.lap("step1")
    e2 = step2_light_edges(rg, params)
    clock.lap("step2")
    s1, e3 = step3_dominate_heavy(rg, params)
    clock.lap("step3")
    # trees are consumed in root order, whatever order greedy picked them
    trees = step4_trees(rg, sorted(s1), workers=workers)
    clock.lap("step4")
    aux = step5_build_aux(rg, trees, params)
    clock.lap("step5")
    s2, e6 = step6_dominate_paths(rg, aux, params, workers=workers)
    clock.lap("step6")
    e7 = step7_short_paths(trees, s1, params, n=g.n)
    clock.lap("step7")

    h = _merge([e1, e2, e3, e6, e7])
    return SpannerResult(
        mode=5,
        n=g.n,
        m=g.m,
        spanner_edges=h,
        per_step_edge_counts=(len(e1), len(e2), len(e3), 0, 0, len(e6), len(e7)),
        s1_size=len(s1),
        s2_size=len(s2),
        residual_edge_count=rg.live_edge_count,
        thresholds=t,
        elimination_rounds=len(roots),
        shortcut_used=False,
        aux_right_count=len(aux.right),
        aux_edge_count=aux.edge_count,
        timings=clock.laps,
    )


class _Clock:
    def __init__(self):
        self.laps = {}
        self._last = time.perf_counter()

    def lap(self, name):
        now = time.perf_counter()
        self.laps[name] = now - self._last
        self._last = now
