"""Constructive k-forcing sets via case dispatch and stall augmentation.

Four cases keyed on the degree extremes:

  PROP1    Delta <= k          single seed vertex
  THM_I    delta < Delta = k+1 single minimum-degree seed
  THM_II   delta = Delta = k+1 adjacent seed pair
  THM_III  Delta >= k+2        seed around a minimum-degree vertex, then
                               augment at stalls until the process completes

All ties break to the lowest vertex index so a run is fully deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import thm2iii_value
from .errors import EmptyGraphError, KForcingError, NotConnectedError
from .forcing import ColorState, ForcingTrace, closure, stalled_frontier
from .graph import Graph, build_graph, connected_components, degrees

PROP1 = "PROP1"
THM_I = "THM_I"
THM_II = "THM_II"
THM_III = "THM_III"

STRATEGIES = ("min_augmentation", "max_degree")


@dataclass(frozen=True)
class Augmentation:
    """One stall repair: u's uncolored excess was paid for by coloring a_u neighbors."""

    u: int
    colored_neighbors: tuple[int, ...]
    a_u: int


@dataclass(frozen=True)
class GreedyResult:
    forcing_set: frozenset[int]
    case_taken: str
    seed_vertex: int | tuple[int, int]
    augmentations: tuple[Augmentation, ...]
    trace: ForcingTrace


def _min_degree_vertex(g: Graph) -> int:
    best = 0
    best_deg = g.degree(0)
    for v in range(1, g.n):
        d = g.degree(v)
        if d < best_deg:
            best, best_deg = v, d
    return best


def _pick_stalled(g: Graph, colored: frozenset[int], k: int, strategy: str) -> tuple[int, int]:
    """Choose the stalled vertex to repair; returns (u, uncolored_count)."""
    frontier = stalled_frontier(g, ColorState(colored), k)
    if not frontier:
        raise KForcingError("stalled with no colored vertex on the frontier")
    if strategy == "min_augmentation":
        return min(frontier, key=lambda item: (item[1] - k, item[0]))
    if strategy == "max_degree":
        return min(frontier, key=lambda item: (-g.degree(item[0]), item[0]))
    raise KForcingError(f"unknown strategy {strategy!r}")


def greedy_k_forcing_set(g: Graph, k: int, strategy: str = "min_augmentation") -> GreedyResult:
    """Build a k-forcing set for a connected graph, sized per the case bound."""
    if g.n < 1:
        raise EmptyGraphError("graph must have at least one vertex")
    if len(connected_components(g)) != 1:
        raise NotConnectedError("greedy_k_forcing_set requires a connected graph")
    if k < 1:
        raise KForcingError(f"k must be a positive integer, got {k}")
    summary = degrees(g)
    delta, big_delta = summary.delta_min, summary.delta_max

    if big_delta <= k:
        v = _min_degree_vertex(g)
        team = frozenset([v])
        return GreedyResult(team, PROP1, v, (), closure(g, team, k))

    if big_delta == k + 1:
        if delta < big_delta:
            v = _min_degree_vertex(g)
            team = frozenset([v])
            return GreedyResult(team, THM_I, v, (), closure(g, team, k))
        u = 0
        w = min(g.adjacency[u])
        team = frozenset([u, w])
        return GreedyResult(team, THM_II, (u, w), (), closure(g, team, k))

    # Delta >= k+2: seed a minimum-degree vertex plus max{0, delta-k} of its
    # neighbors, then repeatedly repair stalls until everything is colored.
    v = _min_degree_vertex(g)
    seed_neighbors = sorted(g.adjacency[v])[: max(0, delta - k)]
    team = set([v] + seed_neighbors)
    colored = closure(g, team, k).final.colored
    augmentations: list[Augmentation] = []
    while len(colored) < g.n:
        u, unc_count = _pick_stalled(g, colored, k, strategy)
        a_u = unc_count - k
        assert u != v, "stall at the seed vertex itself"
        assert any(w in colored for w in g.adjacency[u]), f"stalled {u} has no colored neighbor"
        assert a_u <= g.degree(u) - k - 1, f"augmentation {a_u} exceeds deg({u})-k-1"
        extra = sorted(w for w in g.adjacency[u] if w not in colored)[:a_u]
        augmentations.append(Augmentation(u, tuple(extra), a_u))
        team.update(extra)
        colored = closure(g, colored | set(extra), k).final.colored

    bound = thm2iii_value(g, k)
    assert len(team) <= math.floor(bound), (
        f"|T|={len(team)} exceeds the case bound {bound}"
    )
    team_frozen = frozenset(team)
    return GreedyResult(team_frozen, THM_III, v, tuple(augmentations), closure(g, team_frozen, k))


def _relabel_trace(trace: ForcingTrace, mapping: list[int]) -> ForcingTrace:
    from .forcing import ForcingEvent

    return ForcingTrace(
        initial=ColorState(frozenset(mapping[v] for v in trace.initial.colored)),
        events=tuple(
            ForcingEvent(ev.round, mapping[ev.forcer], tuple(mapping[w] for w in ev.forced))
            for ev in trace.events
        ),
        final=ColorState(frozenset(mapping[v] for v in trace.final.colored)),
        rounds=trace.rounds,
    )


def greedy_per_component(g: Graph, k: int, strategy: str = "min_augmentation") -> list[GreedyResult]:
    """Run the greedy construction on each connected component separately.

    Results carry the original graph's vertex labels; the union of the
    per-component forcing sets forces all of g.
    """
    if g.n < 1:
        raise EmptyGraphError("graph must have at least one vertex")
    results = []
    for comp in connected_components(g):
        mapping = comp
        local_index = {orig: i for i, orig in enumerate(comp)}
        local_edges = [
            (local_index[u], local_index[v])
            for u, v in g.edges
            if u in local_index and v in local_index
        ]
        sub = build_graph(len(comp), local_edges)
        res = greedy_k_forcing_set(sub, k, strategy)
        if isinstance(res.seed_vertex, tuple):
            seed = (mapping[res.seed_vertex[0]], mapping[res.seed_vertex[1]])
        else:
            seed = mapping[res.seed_vertex]
        results.append(
            GreedyResult(
                forcing_set=frozenset(mapping[v] for v in res.forcing_set),
                case_taken=res.case_taken,
                seed_vertex=seed,
                augmentations=tuple(
                    Augmentation(
                        mapping[a.u],
                        tuple(mapping[w] for w in a.colored_neighbors),
                        a.a_u,
                    )
                    for a in res.augmentations
                ),
                trace=_relabel_trace(res.trace, mapping),
            )
        )
    return results
