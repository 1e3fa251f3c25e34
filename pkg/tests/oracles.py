"""Brute-force reference implementations used only as test oracles.

Nothing here shares code with the package: subsets are enumerated with
itertools, paths by unpruned recursion, and separators by subset enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque

from panconnect.graphs import (
    Graph,
    build_johnson,
    build_layer_graph,
    graph_from_edges,
)


def colex_k_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {1..n} as ascending tuples, in colexicographic order."""
    combos = itertools.combinations(range(1, n + 1), k)
    return sorted(combos, key=lambda t: tuple(reversed(t)))


def johnson_edge_count(n: int, m: int) -> int:
    """Count pairs of m-subsets whose symmetric difference has two elements."""
    subsets = [frozenset(c) for c in itertools.combinations(range(1, n + 1), m)]
    count = 0
    for a, b in itertools.combinations(subsets, 2):
        if len(a ^ b) == 2:
            count += 1
    return count


def simple_path_lengths(g: Graph, u: int, v: int) -> set[int]:
    """Edge-lengths of every simple u-v path, by exhaustive enumeration."""
    lengths: set[int] = set()
    on = [False] * g.num_vertices
    on[u] = True

    def walk(x: int, depth: int) -> None:
        if x == v:
            lengths.add(depth)
            return
        for w in g.adjacency[x]:
            if not on[w]:
                on[w] = True
                walk(w, depth + 1)
                on[w] = False

    walk(u, 0)
    return lengths


def cycle_lengths(g: Graph) -> set[int]:
    """Vertex counts of every simple cycle, via path enumeration per edge."""
    found: set[int] = set()
    for u, v in g.edge_list:
        for length in simple_path_lengths(g, u, v):
            if length >= 2:
                found.add(length + 1)
    return found


def _separates(g: Graph, u: int, v: int, removed: set[int]) -> bool:
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y in removed or y in seen:
                continue
            if y == v:
                return False
            seen.add(y)
            queue.append(y)
    return True


def brute_min_separator_size(g: Graph, u: int, v: int) -> int | None:
    """Smallest vertex set separating a non-adjacent pair; None if adjacent."""
    if g.has_edge(u, v):
        return None
    others = [w for w in range(g.num_vertices) if w not in (u, v)]
    for size in range(len(others) + 1):
        for combo in itertools.combinations(others, size):
            if _separates(g, u, v, set(combo)):
                return size
    return len(others)


def brute_vertex_connectivity(g: Graph) -> int:
    """Connectivity by direct definition: smallest set whose removal disconnects
    or trivializes the graph; complete graphs give |V|-1."""
    nv = g.num_vertices
    if not all(d >= 0 for d in _bfs(g, 0)):
        return 0
    best = nv - 1
    for size in range(nv - 1):
        if size >= best:
            break
        for combo in itertools.combinations(range(nv), size):
            removed = set(combo)
            rest = [v for v in range(nv) if v not in removed]
            if len(rest) <= 1:
                continue
            seen = {rest[0]}
            queue = deque([rest[0]])
            while queue:
                x = queue.popleft()
                for y in g.adjacency[x]:
                    if y not in removed and y not in seen:
                        seen.add(y)
                        queue.append(y)
            if len(seen) != len(rest):
                return size
    return best


def _bfs(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.num_vertices
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def path_graph(k: int) -> Graph:
    return graph_from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def small_corpus() -> list[tuple[str, Graph]]:
    """Named graphs (all with at most 12 vertices) used for oracle comparisons."""
    return [
        ("P4", path_graph(4)),
        ("C6", cycle_graph(6)),
        ("K4", build_johnson(4, 1)),
        ("K5", build_johnson(5, 1)),
        ("J42", build_johnson(4, 2)),
        ("B31", build_layer_graph(3, 1)),
        ("B41", build_layer_graph(4, 1)),
        ("paw", graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])),
        ("2K2", graph_from_edges(4, [(0, 1), (2, 3)])),
    ]
