import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ifvs.branching import fib
from ifvs.generators import planted_ifvs, random_multigraph
from ifvs.instance import check_solution
from ifvs.multigraph import MultiGraph
from ifvs.oracle import oracle_ifvs, oracle_min_ifvs
from ifvs.pipeline import (
    BOUND_BASE,
    GOLDEN_RATIO,
    leaf_bound,
    solve_ifvs,
    subdivide_once,
)

from helpers import complete, cycle, petersen


def test_constants_are_what_they_claim():
    assert GOLDEN_RATIO == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert BOUND_BASE == pytest.approx(1 + GOLDEN_RATIO**2, abs=1e-12)
    assert BOUND_BASE < 3.619


def test_leaf_bound_is_shifted_fibonacci():
    assert [leaf_bound(i) for i in range(6)] == [fib(m + 2) for m in range(6)]
    assert leaf_bound(0) == 1


def test_negative_budget_rejected():
    with pytest.raises(ValueError):
        solve_ifvs(cycle(3), -1)


def test_forest_is_a_yes_with_empty_solution():
    res = solve_ifvs(MultiGraph(range(4)), 0)
    assert res.status == "yes" and res.solution == set()


def test_k4_is_a_no_at_every_budget():
    g = complete(4)
    for k in range(5):
        assert solve_ifvs(g, k).status == "no"


def test_petersen_minimum():
    res = solve_ifvs(petersen(), 3, minimize=True)
    assert res.status == "yes"
    assert res.solution == {0, 2, 8}


def test_minimize_is_deterministic_and_minimum():
    g = random_multigraph(8, 14, seed=17)
    res = solve_ifvs(g, 8, minimize=True)
    # frozen witness pins run-to-run determinism; size matches the oracle
    assert res.solution == {0, 2, 7}
    assert len(res.solution) == len(oracle_min_ifvs(g))


def test_stats_shape():
    res = solve_ifvs(cycle(5), 2)
    for key in ("fvs_size", "guesses_tried", "branch_nodes", "max_mu",
                "base_leaves_max", "bound_base"):
        assert key in res.stats
    assert res.stats["bound_base"] == pytest.approx(BOUND_BASE)


def test_loop_vertices_are_forced_into_the_solution():
    g = cycle(4)
    g.add_edge(2, 2)
    res = solve_ifvs(g, 2, minimize=True)
    assert res.status == "yes" and 2 in res.solution
    assert check_solution(g, res.solution, 2)


def test_adjacent_loops_are_an_immediate_no():
    g = MultiGraph(range(2))
    g.add_edge(0, 0)
    g.add_edge(1, 1)
    g.add_edge(0, 1)
    assert solve_ifvs(g, 2).status == "no"


def test_fvs_override_is_honoured_and_clamped():
    g = cycle(6)
    res = solve_ifvs(g, 1, fvs_override={0, 3})
    assert res.status == "yes"
    assert res.stats["fvs_size"] == 2
    # override naming a vertex that loop preprocessing removed must not crash
    g2 = cycle(4)
    g2.add_edge(1, 1)
    res2 = solve_ifvs(g2, 2, fvs_override={1, 3}, minimize=True)
    assert res2.status == "yes" and 1 in res2.solution


def test_threads_do_not_change_the_answer():
    for seed in (1, 5, 11):
        g = random_multigraph(9, 16, seed=seed)
        lone = solve_ifvs(g, 9, minimize=True, threads=1)
        pool = solve_ifvs(g, 9, minimize=True, threads=4)
        assert lone.status == pool.status
        assert lone.solution == pool.solution


def test_subdivide_triangle_gives_six_cycle():
    sub = subdivide_once(cycle(3))
    assert len(sub) == 6
    assert sub.num_edges == 6
    assert all(sub.deg(v) == 2 for v in sub.vertices)


def test_subdivide_splits_each_parallel_copy():
    g = MultiGraph(range(2))
    g.add_edge(0, 1, mult=2)
    sub = subdivide_once(g)
    # two midpoints, one per copy, forming a 4-cycle
    assert len(sub) == 4 and sub.num_edges == 4


def test_subdivide_turns_loop_into_two_cycle():
    g = MultiGraph(range(1))
    g.add_edge(0, 0)
    sub = subdivide_once(g)
    assert len(sub) == 2
    mid = (sub.vertices - {0}).pop()
    assert sub.multiplicity(0, mid) == 2


def test_planted_instances_solve_at_their_budget():
    for seed in (0, 3):
        plant = planted_ifvs(24, 4, seed=seed)
        g, k = plant.graph, plant.k
        assert check_solution(g, set(plant.witness), k)
        res = solve_ifvs(g, k)
        assert res.status == "yes"
        assert check_solution(g, res.solution, k)
        assert solve_ifvs(g, k - 1).status == "no"


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000),
       st.integers(min_value=0, max_value=9))
def test_solver_matches_oracle(seed, k):
    g = random_multigraph(9, 15, seed=seed)
    res = solve_ifvs(g, k, minimize=True)
    best = oracle_ifvs(g, k)
    if best is None:
        assert res.status == "no"
    else:
        assert res.status == "yes"
        assert len(res.solution) == len(best)
        assert check_solution(g, res.solution, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_decision_mode_finds_any_witness(seed):
    g = random_multigraph(10, 17, seed=seed)
    best = oracle_min_ifvs(g)
    k = len(g) if best is None else len(best)
    res = solve_ifvs(g, k)
    if best is None:
        assert res.status == "no"
    else:
        assert res.status == "yes"
        assert check_solution(g, res.solution, k)
