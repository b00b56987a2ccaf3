import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from addspan.domination import (
    CoverInstance,
    InfeasibleCover,
    attach_heavy_edges,
    greedy_cover,
    heavy_domination_instance,
)
from addspan.exceptions import InvariantViolation
from addspan.families import cycle_graph, star_graph
from addspan.graph import Graph, generate_gnm
from addspan.residual import ResidualGraph


def naive_greedy(coverage, target_count):
    """Quadratic restatement of the greedy rule, for cross-checking."""
    left = set(range(target_count))
    chosen = []
    while left:
        gains = [len(left & set(c)) for c in coverage]
        best = max(range(len(coverage)), key=lambda i: (gains[i], -i))
        if gains[best] == 0:
            raise ValueError("infeasible")
        chosen.append(best)
        left -= set(coverage[best])
    return chosen


def test_star_instance_picks_hub():
    cov = [list(range(10))] + [[i] for i in range(10)]
    assert greedy_cover(CoverInstance.from_lists(cov, 10)) == [0]


def test_full_cover_candidate_wins():
    cov = [[0, 1], [1, 2], [0, 1, 2]]
    assert greedy_cover(CoverInstance.from_lists(cov, 3)) == [2]


def test_tie_break_then_marginal_gain():
    # A:{0,1}, B:{2,3}, C:{1,2}
    cov = [[0, 1], [2, 3], [1, 2]]
    assert greedy_cover(CoverInstance.from_lists(cov, 4)) == [0, 1]


def test_empty_target_set():
    assert greedy_cover(CoverInstance.from_lists([[], []], 0)) == []


def test_infeasible_names_a_target():
    with pytest.raises(InfeasibleCover) as err:
        greedy_cover(CoverInstance.from_lists([[0], [2]], 4))
    assert err.value.target == 1


def test_from_lists_validates_range():
    with pytest.raises(ValueError):
        CoverInstance.from_lists([[5]], 3)


@st.composite
def instances(draw):
    t = draw(st.integers(0, 12))
    c = draw(st.integers(1, 10))
    cov = [draw(st.lists(st.integers(0, max(t - 1, 0)), max_size=6)) if t else [] for _ in range(c)]
    # guarantee feasibility
    for target in range(t):
        if not any(target in x for x in cov):
            cov[draw(st.integers(0, c - 1))].append(target)
    return cov, t


@given(instances())
def test_greedy_matches_naive_rule(case):
    cov, t = case
    inst = CoverInstance.from_lists(cov, t)
    got = greedy_cover(inst)
    assert got == naive_greedy([sorted(set(c)) for c in cov], t)
    assert greedy_cover(inst) == got
    covered = set()
    for c in got:
        new = set(cov[c]) - covered
        assert new, "each pick must cover something new"
        covered |= new
    assert covered == set(range(t))


# -- heavy instance ----------------------------------------------------------


def test_no_heavy_vertices():
    rg = ResidualGraph(cycle_graph(5))
    inst, cand, heavy = heavy_domination_instance(rg, rg.live_degree, 3)
    assert inst.target_count == 0 and len(heavy) == 0
    assert greedy_cover(inst) == []


def test_isolated_heavy_vertex_dominates_itself():
    rg = ResidualGraph(Graph.from_edges(3, [(1, 2)]))
    deg = np.array([5, 1, 1])  # vertex 0 forced heavy
    inst, cand, heavy = heavy_domination_instance(rg, deg, 2)
    assert heavy.tolist() == [0]
    assert [int(cand[c]) for c in greedy_cover(inst)] == [0]


def test_star_center_only_heavy():
    rg = ResidualGraph(star_graph(5))
    inst, cand, heavy = heavy_domination_instance(rg, rg.live_degree, 2)
    assert heavy.tolist() == [0]
    # Each of the 6 vertices covers the center; smallest id wins.
    assert [inst.coverage(c).tolist() for c in range(6)] == [[0]] * 6
    assert [int(cand[c]) for c in greedy_cover(inst)] == [0]


def test_star_with_high_center_id_picks_leaf():
    g = Graph.from_edges(6, [(5, i) for i in range(5)])
    rg = ResidualGraph(g)
    inst, cand, heavy = heavy_domination_instance(rg, rg.live_degree, 2)
    s1 = [int(cand[c]) for c in greedy_cover(inst)]
    assert s1 == [0]
    assert attach_heavy_edges(s1, rg, heavy).tolist() == [[0, 5]]


def test_heavy_instance_skips_deleted_vertices():
    rg = ResidualGraph(star_graph(4))
    rg.remove([1])
    inst, cand, heavy = heavy_domination_instance(rg, rg.live_degree, 3)
    assert cand.tolist() == [0, 2, 3, 4]
    assert heavy.tolist() == [0]
    assert inst.coverage(0).tolist() == [0]


# -- attaching edges ---------------------------------------------------------


def test_attach_leaves_to_center():
    rg = ResidualGraph(star_graph(5))
    edges = attach_heavy_edges([0], rg, [1, 2, 3, 4, 5])
    assert edges.tolist() == [[0, 1], [0, 2], [0, 3], [0, 4], [0, 5]]


def test_attach_skips_members_of_s1():
    rg = ResidualGraph(star_graph(3))
    assert attach_heavy_edges([0], rg, [0]).shape == (0, 2)


def test_attach_uses_smallest_dominator():
    g = Graph.from_edges(8, [(0, 3), (0, 7)])
    rg = ResidualGraph(g)
    assert attach_heavy_edges([7, 3], rg, [0]).tolist() == [[0, 3]]


def test_attach_detects_undominated_heavy_vertex():
    rg = ResidualGraph(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(InvariantViolation, match="heavy vertex 2"):
        attach_heavy_edges([0], rg, [1, 2])


def test_heavy_cover_is_dominating_on_random_graphs():
    for seed in range(15):
        g = generate_gnm(50, 200, seed)
        rg = ResidualGraph(g)
        inst, cand, heavy = heavy_domination_instance(rg, rg.live_degree, 9)
        s1 = [int(cand[c]) for c in greedy_cover(inst)]
        edges = attach_heavy_edges(s1, rg, heavy)
        ss = set(s1)
        for u in heavy.tolist():
            assert u in ss or any(w in ss for w in g.neighbors(u).tolist())
        assert len(edges) == len(set(heavy.tolist()) - ss)
        assert g.has_edges(edges).all()
