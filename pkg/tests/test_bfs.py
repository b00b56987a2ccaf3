from collections import deque

import numpy as np
import pytest

from addspan.bfs import bfs_layers, bfs_tree, degree_min_bfs_tree
from addspan.families import cycle_graph, path_graph
from addspan.graph import Graph, generate_gnm
from addspan.residual import ResidualGraph

# -- independent pure-Python references ------------------------------------


def py_bfs(adj, root):
    dist = {root: 0}
    q = deque([root])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def shortest_path_degree_sums(adj, deg, root):
    """Min degree sum over every shortest root->u path, by DFS on the BFS DAG."""
    dist = py_bfs(adj, root)
    best = {}

    def walk(x, acc):
        best[x] = min(best.get(x, acc), acc)
        for y in adj[x]:
            if dist.get(y) == dist[x] + 1:
                walk(y, acc + deg[y])

    walk(root, deg[root])
    return dist, best


def adjacency(g):
    return [g.neighbors(v).tolist() for v in range(g.n)]


def small_graphs(count, max_n=10, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        full = n * (n - 1) // 2
        m = int(rng.integers(0, full + 1))
        yield generate_gnm(n, m, int(rng.integers(0, 2**32)))


# -- bfs_tree ----------------------------------------------------------------


def test_bfs_tree_path():
    edges, dist = bfs_tree(path_graph(3), 0)
    assert edges.tolist() == [[0, 1], [1, 2]]
    assert dist.tolist() == [0, 1, 2]


def test_bfs_tree_four_cycle_parents_by_sorted_scan():
    edges, dist = bfs_tree(cycle_graph(4), 0)
    assert edges.tolist() == [[0, 1], [0, 3], [1, 2]]
    assert dist.tolist() == [0, 1, 2, 1]


def test_bfs_tree_isolated_root():
    edges, dist = bfs_tree(Graph.empty(3), 1)
    assert edges.shape == (0, 2)
    assert dist.tolist() == [-1, 0, -1]


def test_bfs_tree_dead_root_rejected():
    rg = ResidualGraph(path_graph(3))
    rg.remove([1])
    with pytest.raises(ValueError, match="not a live vertex"):
        bfs_tree(rg, 1)


def test_bfs_tree_respects_deleted_vertices():
    rg = ResidualGraph(path_graph(5))
    rg.remove([2])
    edges, dist = bfs_tree(rg, 0)
    assert edges.tolist() == [[0, 1]]
    assert dist.tolist() == [0, 1, -1, -1, -1]


def test_bfs_parent_is_smallest_previous_layer_neighbor():
    for g in small_graphs(40, max_n=14, seed=3):
        adj = adjacency(g)
        for root in range(g.n):
            dist, parent, _ = bfs_layers(g, root)
            for u in range(g.n):
                if dist[u] > 0:
                    ups = [w for w in adj[u] if dist[w] == dist[u] - 1]
                    assert parent[u] == min(ups)


def test_bfs_tree_is_spanning_tree_of_component():
    g = generate_gnm(60, 90, seed=8)
    adj = adjacency(g)
    for root in (0, 17, 59):
        edges, dist = bfs_tree(g, root)
        ref = py_bfs(adj, root)
        assert len(edges) == len(ref) - 1
        assert g.has_edges(edges).all()
        assert {u: int(dist[u]) for u in ref} == ref


# -- degree_min_bfs_tree -----------------------------------------------------


def test_degree_min_path():
    t = degree_min_bfs_tree(path_graph(3), 0)
    assert t.f.tolist() == [1, 3, 4]
    assert t.s.tolist() == [4, 3, 1]
    assert t.parent.tolist() == [0, 0, 1]


def test_degree_min_prefers_lighter_parent():
    # 4-cycle 0-1-2-3-0 plus pendant 4 on vertex 1; degrees 2,3,2,2,1.
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
    t = degree_min_bfs_tree(g, 0)
    assert g.degrees.tolist() == [2, 3, 2, 2, 1]
    assert (t.f[1], t.f[3]) == (5, 4)
    assert t.parent[2] == 3
    assert t.f[2] == 6
    assert t.path(2) == [0, 3, 2]


def test_degree_min_tie_goes_to_smaller_id():
    # 0 -> {1, 2} -> 3 with equal degrees on 1 and 2.
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert degree_min_bfs_tree(g, 0).parent[3] == 1


def test_degree_min_uses_live_degrees():
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (1, 5)])
    rg = ResidualGraph(g)
    # Full graph: vertex 1 has degree 4, so 3 hangs from 2.
    assert degree_min_bfs_tree(rg, 0).parent[3] == 2
    rg.remove([4, 5])
    # Now 1 and 2 both have live degree 2; tie -> 1.
    t = degree_min_bfs_tree(rg, 0)
    assert t.parent[3] == 1
    assert t.f.tolist()[:4] == [2, 4, 4, 6]
    assert t.dist[4] == -1 and t.s[4] == -1


def test_degree_min_unreachable_marked():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    t = degree_min_bfs_tree(g, 0)
    assert t.dist.tolist() == [0, 1, -1, -1]
    assert t.f.tolist() == [1, 2, -1, -1]
    assert t.parent.tolist() == [0, 0, -1, -1]
    with pytest.raises(ValueError):
        t.path(3)


def test_degree_min_against_brute_force_enumeration():
    for g in small_graphs(60, max_n=10, seed=11):
        adj, deg = adjacency(g), g.degrees.tolist()
        for root in range(g.n):
            t = degree_min_bfs_tree(g, root)
            dist, best = shortest_path_degree_sums(adj, deg, root)
            for u in range(g.n):
                if u in dist:
                    assert t.dist[u] == dist[u]
                    assert t.f[u] == best[u]
                else:
                    assert t.dist[u] == -1 and t.f[u] == -1


def test_degree_min_tree_invariants_random():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 65))
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        g = generate_gnm(n, m, int(rng.integers(0, 2**32)))
        deg = g.degrees
        adj = adjacency(g)
        for root in range(n):
            t = degree_min_bfs_tree(g, root)
            _, plain = bfs_tree(g, root)
            assert np.array_equal(t.dist, plain)
            reach = np.flatnonzero(t.dist >= 0)
            # f equals the degree sum along the parent walk
            for u in reach.tolist():
                assert t.f[u] == sum(deg[w] for w in t.path(u))
            # s at the root is the component's degree total
            assert t.s[root] == int(deg[reach].sum())
            # s recursion and parent choice
            for u in reach.tolist():
                kids = t.children(u)
                assert t.s[u] == deg[u] + int(t.s[kids].sum())
                if u != root:
                    ups = [w for w in adj[u] if t.dist[w] == t.dist[u] - 1]
                    assert t.parent[u] == min(ups, key=lambda w: (t.f[w], w))


def test_degree_min_large_weights_fall_back_to_lexsort():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    deg = np.array([1, 2**61, 2**61 - 5, 1], dtype=np.int64)
    t = degree_min_bfs_tree(g, 0, deg)
    assert t.parent[3] == 2
    assert t.f[3] == 1 + 2**61 - 5 + 1
