import math

import pytest
from hypothesis import given, settings

import kforcing.exact as exact_mod
from kforcing.bounds import all_bounds
from kforcing.errors import BudgetExceededError, KForcingError
from kforcing.exact import (
    _combination_rank,
    exact_all_minimum_sets,
    exact_f_k,
    worker_count,
)
from kforcing.forcing import is_k_forcing_set
from kforcing.generators import FamilySpec, generate
from kforcing.graph import build_graph, degrees, is_connected
from kforcing.greedy import greedy_per_component

from conftest import connected_graphs, graphs, ks


def test_p6_end_vertex():
    g = generate(FamilySpec("path", (6,)))
    res = exact_f_k(g, 1)
    assert res.f_k == 1
    assert res.witness == (0,)


def test_c8_needs_two():
    g = generate(FamilySpec("cycle", (8,)))
    res = exact_f_k(g, 1)
    assert res.f_k == 2
    assert res.witness == (0, 1)


def test_k5_at_k2():
    g = generate(FamilySpec("complete", (5,)))
    assert exact_f_k(g, 2).f_k == 3


def test_witness_is_lex_first():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert exact_f_k(g, 1).witness == (0,)
    c4 = generate(FamilySpec("cycle", (4,)))
    assert exact_f_k(c4, 1).witness == (0, 1)


def test_subsets_tested_is_rank_based():
    g = generate(FamilySpec("complete", (5,)))
    res = exact_f_k(g, 1)
    # all of sizes 1..3 fail (25 subsets), then (0,1,2,3) is the first size-4 set
    assert res.f_k == 4
    assert res.subsets_tested == 5 + 10 + 10 + 1


def test_combination_rank():
    import itertools

    for n, s in ((6, 3), (7, 2), (5, 5)):
        for rank, combo in enumerate(itertools.combinations(range(n), s)):
            assert _combination_rank(combo, n) == rank


def test_all_minimum_sets_p3():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert exact_all_minimum_sets(g, 1) == [(0,), (2,)]


def test_all_minimum_sets_c4():
    g = generate(FamilySpec("cycle", (4,)))
    sets = exact_all_minimum_sets(g, 1)
    assert sets == [(0, 1), (0, 3), (1, 2), (2, 3)]  # all pairs except antipodal


def test_all_minimum_sets_k3():
    g = generate(FamilySpec("complete", (3,)))
    assert exact_all_minimum_sets(g, 1) == [(0, 1), (0, 2), (1, 2)]


def test_single_vertex():
    g = build_graph(1, [])
    res = exact_f_k(g, 1)
    assert res.f_k == 1 and res.witness == (0,)


def test_budget_exceeded_carries_lower_bound():
    g = generate(FamilySpec("cycle", (8,)))
    with pytest.raises(BudgetExceededError) as info:
        exact_f_k(g, 1, budget=8)
    assert info.value.no_set_of_size_le == 1
    assert info.value.subsets_tested == 8
    with pytest.raises(BudgetExceededError) as info:
        exact_f_k(g, 1, budget=3)
    assert info.value.no_set_of_size_le == 0
    assert info.value.subsets_tested == 0


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("KFORCING_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("KFORCING_WORKERS", "zero")
    with pytest.raises(KForcingError):
        worker_count()
    monkeypatch.setenv("KFORCING_WORKERS", "0")
    with pytest.raises(KForcingError):
        worker_count()
    monkeypatch.delenv("KFORCING_WORKERS")
    assert worker_count() >= 1


def test_parallel_witness_independent_of_workers(monkeypatch):
    monkeypatch.setattr(exact_mod, "PARALLEL_THRESHOLD", 1)
    for spec in (
        FamilySpec("petersen"),
        FamilySpec("cycle", (9,)),
        FamilySpec("complete_bipartite", (3, 4)),
        FamilySpec("gnp_connected", (11, 0.35), seed=9),
    ):
        g = generate(spec)
        serial = exact_f_k(g, 1, workers=1)
        for workers in (2, 5):
            parallel = exact_f_k(g, 1, workers=workers)
            assert parallel.f_k == serial.f_k
            assert parallel.witness == serial.witness
            assert parallel.subsets_tested == serial.subsets_tested


def test_natural_parallel_path_hypercube():
    g = generate(FamilySpec("hypercube", (4,)))
    res = exact_f_k(g, 1, workers=4)
    assert res.f_k == 8
    assert res.witness == tuple(range(8))


@given(connected_graphs(max_n=8), ks)
@settings(max_examples=60, deadline=None)
def test_monotone_in_k(g, k):
    assert exact_f_k(g, k + 1).f_k <= exact_f_k(g, k).f_k


@given(connected_graphs(max_n=8), ks)
@settings(max_examples=60, deadline=None)
def test_oracle_sandwich(g, k):
    f = exact_f_k(g, k).f_k
    greedy_total = sum(len(r.forcing_set) for r in greedy_per_component(g, k))
    assert f <= greedy_total
    for bv in all_bounds(g, k).bounds:
        if bv.applicable and bv.name != "prop1_thm2":
            assert f <= math.floor(bv.value)


@given(connected_graphs(max_n=8), ks)
@settings(max_examples=60, deadline=None)
def test_small_case_cross_checks(g, k):
    s = degrees(g)
    f = exact_f_k(g, k).f_k
    if s.delta_max <= k:
        assert f == 1
    elif s.delta_max == k + 1 and s.delta_min < s.delta_max:
        assert f == 1
    elif s.delta_max == k + 1:
        assert f == 2


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=40, deadline=None)
def test_disconnected_additivity(g):
    # F_k of a disconnected graph is the sum over components
    from kforcing.graph import connected_components

    comps = connected_components(g)
    total = 0
    for comp in comps:
        idx = {orig: i for i, orig in enumerate(comp)}
        sub = build_graph(
            len(comp),
            [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx],
        )
        total += exact_f_k(sub, 1).f_k
    assert exact_f_k(g, 1).f_k == total
