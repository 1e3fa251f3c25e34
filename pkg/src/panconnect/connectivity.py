"""Exact vertex connectivity via unit-capacity max-flow on the split digraph."""

from __future__ import annotations

import random
from collections import deque

from .graphs import Graph, is_connected

_BIG = 1 << 30


class _SplitNetwork:
    """Directed flow network with every vertex split into in/out nodes.

    Node ids: in(v) = 2v, out(v) = 2v+1.  Every vertex carries a capacity-1
    internal arc in(v) -> out(v); every undirected edge {a,b} contributes
    out(a) -> in(b) and out(b) -> in(a) with capacity edge_cap.  Arc i and its
    reverse are paired as (i, i^1).  The arc structure is immutable; each
    max-flow call works on a private copy of the capacities.
    """

    def __init__(self, g: Graph, edge_cap: int = 1):
        nv = g.num_vertices
        self.num_nodes = 2 * nv
        head: list[list[int]] = [[] for _ in range(self.num_nodes)]
        to: list[int] = []
        cap: list[int] = []

        def add(a: int, b: int, c: int) -> None:
            head[a].append(len(to))
            to.append(b)
            cap.append(c)
            head[b].append(len(to))
            to.append(a)
            cap.append(0)

        for v in range(nv):
            add(2 * v, 2 * v + 1, 1)
        for u, v in g.edge_list:
            add(2 * u + 1, 2 * v, edge_cap)
            add(2 * v + 1, 2 * u, edge_cap)
        self.head = head
        self.to = to
        self.base_cap = cap

    def max_flow(
        self, s: int, t: int, stop_at: int | None = None
    ) -> tuple[int, list[int]]:
        """BFS augmenting paths; returns (flow, residual capacities).

        Stops early once flow reaches stop_at (enough when scanning for a
        minimum over pairs).
        """
        head, to = self.head, self.to
        cap = list(self.base_cap)
        flow = 0
        while stop_at is None or flow < stop_at:
            parent = [-1] * self.num_nodes
            parent[s] = -2
            queue = deque([s])
            while queue:
                x = queue.popleft()
                if x == t:
                    break
                for a in head[x]:
                    y = to[a]
                    if cap[a] > 0 and parent[y] == -1:
                        parent[y] = a
                        queue.append(y)
            if parent[t] == -1:
                break
            path_arcs = []
            x = t
            while x != s:
                a = parent[x]
                path_arcs.append(a)
                x = to[a ^ 1]
            push = min(cap[a] for a in path_arcs)
            for a in path_arcs:
                cap[a] -= push
                cap[a ^ 1] += push
            flow += push
        return flow, cap


def _validate_pair(g: Graph, u: int, v: int) -> None:
    nv = g.num_vertices
    if not (0 <= u < nv and 0 <= v < nv):
        raise ValueError(f"({u},{v}) references a missing vertex")
    if u == v:
        raise ValueError("local connectivity needs two distinct vertices")


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally-vertex-disjoint u-v paths (Menger dual).

    Handles adjacent pairs: the direct edge counts as one path.
    """
    _validate_pair(g, u, v)
    net = _SplitNetwork(g, edge_cap=1)
    flow, _ = net.max_flow(2 * u + 1, 2 * v)
    return flow


def minimum_separator(g: Graph, u: int, v: int) -> list[int]:
    """A minimum vertex set whose removal separates the non-adjacent pair u, v."""
    _validate_pair(g, u, v)
    if g.has_edge(u, v):
        raise ValueError("no vertex set separates adjacent vertices")
    net = _SplitNetwork(g, edge_cap=_BIG)
    s, t = 2 * u + 1, 2 * v
    flow, cap = net.max_flow(s, t)
    reach = [False] * net.num_nodes
    reach[s] = True
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for a in net.head[x]:
            y = net.to[a]
            if cap[a] > 0 and not reach[y]:
                reach[y] = True
                queue.append(y)
    sep = [
        w
        for w in range(g.num_vertices)
        if w != u and w != v and reach[2 * w] and not reach[2 * w + 1]
    ]
    if len(sep) != flow:
        raise RuntimeError(
            f"min-cut extraction mismatch: flow {flow}, separator {sep}"
        )
    return sep


def _is_complete(g: Graph) -> bool:
    nv = g.num_vertices
    return g.edge_count == nv * (nv - 1) // 2


def vertex_connectivity_witness(
    g: Graph,
) -> tuple[int, tuple[int, int] | None, list[int] | None]:
    """Vertex connectivity with an attaining non-adjacent pair and separator.

    Complete graphs use the convention kappa(K_p) = p-1 (pair and separator
    are None); disconnected input yields (0, None, []).  The minimum is taken
    over non-adjacent pairs only, restricted to the classical sufficient set:
    a minimum-degree vertex against its non-neighbors, plus non-adjacent pairs
    of its neighbors (any minimum cut separates one of these pairs).
    """
    nv = g.num_vertices
    if nv <= 1:
        return 0, None, []
    if not is_connected(g):
        return 0, None, []
    if _is_complete(g):
        return nv - 1, None, None
    degrees = [g.degree(v) for v in range(nv)]
    u0 = min(range(nv), key=lambda v: (degrees[v], v))
    net = _SplitNetwork(g, edge_cap=1)
    best = degrees[u0] + 1
    best_pair: tuple[int, int] | None = None
    neighbors = set(g.adjacency[u0])

    def consider(a: int, b: int) -> None:
        nonlocal best, best_pair
        flow, _ = net.max_flow(2 * a + 1, 2 * b, stop_at=best)
        if flow < best:
            best = flow
            best_pair = (a, b)

    for w in range(nv):
        if w != u0 and w not in neighbors:
            consider(u0, w)
    nbrs = g.adjacency[u0]
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if not g.has_edge(x, y):
                consider(x, y)
    if best_pair is None:
        raise RuntimeError("connectivity scan found no attaining pair")
    return best, best_pair, minimum_separator(g, *best_pair)


def vertex_connectivity(g: Graph) -> int:
    """Minimum size of a vertex cut; 0 for disconnected input, p-1 for K_p."""
    kappa, _, _ = vertex_connectivity_witness(g)
    return kappa


def vertex_connectivity_all_pairs(g: Graph) -> int:
    """Plain minimum of local connectivity over every non-adjacent pair.

    Slower cross-check for the restricted scan in vertex_connectivity.
    """
    nv = g.num_vertices
    if nv <= 1 or not is_connected(g):
        return 0
    if _is_complete(g):
        return nv - 1
    net = _SplitNetwork(g, edge_cap=1)
    best = nv - 1
    for u in range(nv):
        for v in range(u + 1, nv):
            if not g.has_edge(u, v):
                flow, _ = net.max_flow(2 * u + 1, 2 * v, stop_at=best)
                best = min(best, flow)
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff the graph has more than k vertices and connectivity at least k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return g.num_vertices > k and vertex_connectivity(g) >= k


def deletion_spot_check(
    g: Graph, kappa: int, trials: int = 100, seed: int = 0
) -> bool:
    """Randomized sanity check: deleting any kappa-1 vertices keeps g connected."""
    nv = g.num_vertices
    keep = max(kappa - 1, 0)
    if keep >= nv:
        return True
    rng = random.Random(seed)
    for _ in range(trials):
        removed = set(rng.sample(range(nv), keep)) if keep else set()
        start = next(v for v in range(nv) if v not in removed)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in removed and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != nv - len(removed):
            return False
    return True
