import networkx as nx
import pytest
from hypothesis import given, settings

from kforcing.errors import InvalidParametersError
from kforcing.generators import FamilySpec, generate, is_bipartite
from kforcing.graph import degrees, is_connected

from conftest import graphs


def spec(family, *params, seed=0):
    return FamilySpec(family=family, parameters=tuple(params), seed=seed)


def test_cycle_5():
    g = generate(spec("cycle", 5))
    assert g.n == 5 and g.m == 5
    s = degrees(g)
    assert s.delta_min == s.delta_max == 2
    assert is_connected(g)


def test_path_and_complete():
    p = generate(spec("path", 6))
    assert p.n == 6 and p.m == 5
    k5 = generate(spec("complete", 5))
    assert k5.m == 10


def test_complete_bipartite():
    g = generate(spec("complete_bipartite", 2, 3))
    assert g.n == 5 and g.m == 6
    assert degrees(g).degree_sequence == (2, 2, 2, 3, 3)
    assert is_bipartite(g)


def test_circulant_6_13_bipartite_cubic():
    g = generate(spec("circulant", 6, (1, 3)))
    assert g.n == 6
    s = degrees(g)
    assert s.delta_min == s.delta_max == 3
    assert is_connected(g)
    assert is_bipartite(g)
    assert nx.is_bipartite(nx.Graph(list(g.edges)))


def test_circulant_degree_rule():
    # degree 2|S|, minus 1 when n is even and n/2 is a connection
    g = generate(spec("circulant", 10, (1, 3)))
    assert degrees(g).delta_min == degrees(g).delta_max == 4
    g = generate(spec("circulant", 10, (1, 5)))
    assert degrees(g).delta_min == degrees(g).delta_max == 3
    g = generate(spec("circulant", 9, (1, 4)))
    assert degrees(g).delta_min == degrees(g).delta_max == 4


def test_circulant_rejects_bad_connection_set():
    with pytest.raises(InvalidParametersError):
        generate(spec("circulant", 6, ()))
    with pytest.raises(InvalidParametersError):
        generate(spec("circulant", 6, (4,)))
    with pytest.raises(InvalidParametersError):
        generate(spec("circulant", 6, (0,)))


def test_hypercube():
    g = generate(spec("hypercube", 3))
    assert g.n == 8 and g.m == 12
    assert degrees(g).delta_max == 3
    assert is_bipartite(g)
    q4 = generate(spec("hypercube", 4))
    assert q4.n == 16 and q4.m == 32


def test_petersen():
    g = generate(spec("petersen"))
    assert g.n == 10 and g.m == 15
    s = degrees(g)
    assert s.delta_min == s.delta_max == 3
    assert not is_bipartite(g)
    assert nx.is_isomorphic(nx.Graph(list(g.edges)), nx.petersen_graph())


def test_random_regular():
    g = generate(spec("random_regular", 12, 3, seed=7))
    s = degrees(g)
    assert s.delta_min == s.delta_max == 3
    assert is_connected(g)
    again = generate(spec("random_regular", 12, 3, seed=7))
    assert again == g
    other = generate(spec("random_regular", 12, 3, seed=8))
    assert other != g


def test_random_regular_rejects_bad_params():
    with pytest.raises(InvalidParametersError):
        generate(spec("random_regular", 9, 3))  # n*d odd
    with pytest.raises(InvalidParametersError):
        generate(spec("random_regular", 4, 4))  # d >= n


def test_gnp_connected():
    g = generate(spec("gnp_connected", 12, 0.3, seed=5))
    assert g.n == 12
    assert is_connected(g)
    assert generate(spec("gnp_connected", 12, 0.3, seed=5)) == g
    with pytest.raises(InvalidParametersError):
        generate(spec("gnp_connected", 12, 1.5))


def test_unknown_family_and_missing_params():
    with pytest.raises(InvalidParametersError):
        generate(spec("moebius", 8))
    with pytest.raises(InvalidParametersError):
        generate(spec("cycle"))


def test_bipartite_examples():
    assert is_bipartite(generate(spec("cycle", 4)))
    assert not is_bipartite(generate(spec("cycle", 5)))


@given(graphs(max_n=9))
@settings(max_examples=100)
def test_bipartite_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert is_bipartite(g) == nx.is_bipartite(h)
