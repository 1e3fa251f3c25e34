import itertools
from math import comb

import networkx as nx
import pytest

from panconnect.graphs import (
    Graph,
    GraphMeta,
    bfs_distances,
    build_johnson,
    build_layer_graph,
    degree_stats,
    format_edge_list,
    graph_from_edges,
    is_connected,
    parse_edge_list,
    read_edge_list,
    square,
    write_edge_list,
)
from panconnect.subsets import from_elements, intersect_size

from oracles import cycle_graph, johnson_edge_count, path_graph


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.num_vertices))
    out.add_edges_from(g.edge_list)
    return out


def test_johnson_complete_case():
    g = build_johnson(5, 1)
    assert g.num_vertices == 5
    assert g.edge_count == 10
    assert degree_stats(g) == (4, 4, True)


def test_johnson_counts_against_brute_force():
    for n, m in [(4, 2), (5, 2), (6, 2), (6, 3)]:
        g = build_johnson(n, m)
        assert g.num_vertices == comb(n, m)
        assert g.edge_count == johnson_edge_count(n, m)
        stats = degree_stats(g)
        assert stats.is_regular and stats.min_degree == m * (n - m)


def test_johnson_adjacency_rule_exhaustive():
    g = build_johnson(5, 2)
    for i, j in itertools.combinations(range(g.num_vertices), 2):
        adjacent = g.has_edge(i, j)
        meets = intersect_size(g.labels[i], g.labels[j])
        assert adjacent == (meets == 1)


def test_johnson_parameter_validation():
    for n, m in [(3, 0), (3, 3), (2, 2), (65, 1)]:
        with pytest.raises(ValueError):
            build_johnson(n, m)


def test_layer_c6_fixture():
    g = build_layer_graph(3, 1)
    assert g.num_vertices == 6
    assert degree_stats(g) == (2, 2, True)
    assert is_connected(g)
    assert nx.is_isomorphic(to_networkx(g), nx.cycle_graph(6))


def test_layer_15_vertex_fixture():
    g = build_layer_graph(5, 1)
    assert g.num_vertices == 15
    assert g.edge_count == 20
    degrees = sorted(g.degree(v) for v in range(15))
    assert degrees == [2] * 10 + [4] * 5


def test_layer_degrees_by_layer():
    for n, m in [(5, 1), (6, 2), (7, 3), (9, 2)]:
        g = build_layer_graph(n, m)
        lower = comb(n, m)
        for v in range(g.num_vertices):
            expected = n - m if v < lower else m + 1
            assert g.degree(v) == expected


def test_layer_vertex_count_formula():
    for n in range(3, 10):
        for m in range(1, (n - 1) // 2 + 1):
            g = build_layer_graph(n, m)
            assert g.num_vertices == comb(n + 1, m + 1)


def test_layer_is_bipartite_by_cardinality():
    g = build_layer_graph(6, 2)
    for u, v in g.edge_list:
        assert {g.labels[u].size, g.labels[v].size} == {2, 3}


def test_layer_regular_iff_middle():
    assert degree_stats(build_layer_graph(5, 2)).is_regular
    assert degree_stats(build_layer_graph(7, 3)).is_regular
    assert not degree_stats(build_layer_graph(5, 1)).is_regular
    assert not degree_stats(build_layer_graph(6, 2)).is_regular


def test_layer_parameter_validation():
    with pytest.raises(ValueError):
        build_layer_graph(2, 1)
    with pytest.raises(ValueError):
        build_layer_graph(6, 3)  # m >= n/2
    with pytest.raises(ValueError):
        build_layer_graph(5, 0)
    build_layer_graph(7, 3)  # boundary m = (n-1)/2 is fine


def test_square_fixed_points_and_examples():
    k4 = build_johnson(4, 1)
    sq = square(k4)
    assert sq.edge_list == k4.edge_list

    p3 = path_graph(3)
    tri = square(p3)
    assert tri.edge_count == 3

    octa = square(build_layer_graph(3, 1))
    assert octa.num_vertices == 6
    assert degree_stats(octa) == (4, 4, True)
    assert nx.is_isomorphic(to_networkx(octa), to_networkx(build_johnson(4, 2)))


def test_square_never_loses_edges():
    for g in [build_layer_graph(4, 1), build_johnson(5, 2), cycle_graph(7)]:
        sq = square(g)
        assert set(sq.edge_list) >= set(g.edge_list)


def test_square_matches_distance_two():
    g = build_layer_graph(4, 1)
    sq = square(g)
    for u in range(g.num_vertices):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.num_vertices):
            assert sq.has_edge(u, v) == (1 <= dist[v] <= 2)


def test_bfs_distances():
    c6 = cycle_graph(6)
    dist = bfs_distances(c6, 0)
    assert dist[0] == 0
    assert dist[3] == 3

    g = build_johnson(6, 3)
    for u in range(g.num_vertices):
        dist = bfs_distances(g, u)
        for v in range(g.num_vertices):
            assert dist[v] == 3 - intersect_size(g.labels[u], g.labels[v])


def test_is_connected():
    assert is_connected(build_layer_graph(6, 2))
    assert is_connected(build_johnson(7, 3))
    assert not is_connected(graph_from_edges(4, [(0, 1), (2, 3)]))


def test_graph_invariant_validation():
    labels = [from_elements([1], 3), from_elements([2], 3)]
    with pytest.raises(ValueError):
        Graph(labels, [(0, 0)], GraphMeta("raw", 3, 0))
    with pytest.raises(ValueError):
        Graph(labels, [(0, 1), (1, 0)], GraphMeta("raw", 3, 0))
    with pytest.raises(ValueError):
        Graph(labels, [(0, 2)], GraphMeta("raw", 3, 0))
    with pytest.raises(ValueError):
        Graph([labels[0], labels[0]], [], GraphMeta("raw", 3, 0))
    with pytest.raises(ValueError):
        Graph(labels, [], GraphMeta("raw", 4, 0))  # ground mismatch


def test_edge_list_golden_fixture():
    g = build_layer_graph(3, 1)
    expected = (
        "# family=layer n=3 m=1 vertices=6 edges=6\n"
        "v 0 1\n"
        "v 1 2\n"
        "v 2 3\n"
        "v 3 1,2\n"
        "v 4 1,3\n"
        "v 5 2,3\n"
        "e 0 3\n"
        "e 0 4\n"
        "e 1 3\n"
        "e 1 5\n"
        "e 2 4\n"
        "e 2 5\n"
    )
    assert format_edge_list(g) == expected


def test_edge_list_round_trip(tmp_path):
    for g in [build_layer_graph(4, 1), build_johnson(5, 2), cycle_graph(5)]:
        path = tmp_path / "g.edges"
        write_edge_list(g, path)
        back = read_edge_list(path)
        assert back.labels == g.labels
        assert back.edge_list == g.edge_list
        assert back.meta == g.meta


def test_edge_list_corruption_detected():
    text = format_edge_list(build_layer_graph(3, 1))
    tampered = text.replace("edges=6", "edges=7")
    with pytest.raises(ValueError):
        parse_edge_list(tampered)
    tampered = text.replace("e 0 3\n", "")
    with pytest.raises(ValueError):
        parse_edge_list(tampered)
    tampered = text.replace("e 0 3", "e 3 0")
    with pytest.raises(ValueError):
        parse_edge_list(tampered)
