"""Immutable subset-labeled graphs: Johnson graphs, lattice layer graphs, squares."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .subsets import SubsetWord, enumerate_k_subsets, from_text, to_text

FAMILIES = ("johnson", "layer", "raw")

MAX_VERTEX_GROUND = 64


@dataclass(frozen=True)
class GraphMeta:
    family: str
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown graph family {self.family!r}")


class Graph:
    """Simple undirected graph; vertex ids are positions in the label table.

    Immutable after construction: adjacency lists are sorted tuples, the edge
    list is sorted ascending by (u, v) with u < v, and the edge count is stored
    redundantly so file round-trips can be revalidated.
    """

    def __init__(
        self,
        labels: Sequence[SubsetWord],
        edges: Iterable[tuple[int, int]],
        meta: GraphMeta,
    ) -> None:
        labels = tuple(labels)
        if not labels:
            raise ValueError("graph needs at least one vertex")
        nv = len(labels)
        index: dict[int, int] = {}
        for i, lab in enumerate(labels):
            if lab.ground_n != meta.n:
                raise ValueError(
                    f"label ground [{lab.ground_n}] disagrees with meta n={meta.n}"
                )
            if lab.bits in index:
                raise ValueError(f"duplicate vertex label {to_text(lab)}")
            index[lab.bits] = i
        neighbor_sets: list[set[int]] = [set() for _ in range(nv)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"edge ({u},{v}) references missing vertex")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise ValueError(f"duplicate edge {e}")
            edge_set.add(e)
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.labels = labels
        self.meta = meta
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self.edge_list: tuple[tuple[int, int], ...] = tuple(sorted(edge_set))
        self.edge_count = len(edge_set)
        self._index = index
        self._edge_set = frozenset(edge_set)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def label_id(self, word: SubsetWord) -> int | None:
        """Vertex id carrying this label, or None if absent."""
        if word.ground_n != self.meta.n:
            return None
        return self._index.get(word.bits)

    def label_text(self, v: int) -> str:
        return to_text(self.labels[v])

    def __repr__(self) -> str:
        m = self.meta
        return (
            f"Graph({m.family} n={m.n} m={m.m} "
            f"V={self.num_vertices} E={self.edge_count})"
        )


def meta_dict(g: Graph) -> dict:
    """Graph identity block used in reports and serialized bijections."""
    return {
        "family": g.meta.family,
        "n": g.meta.n,
        "m": g.meta.m,
        "vertices": g.num_vertices,
        "edges": g.edge_count,
    }


def build_johnson(n: int, m: int) -> Graph:
    """Graph on all m-subsets of [n]; adjacency <=> symmetric difference of size two."""
    if not (1 <= m < n <= MAX_VERTEX_GROUND):
        raise ValueError(f"need 1 <= m < n <= {MAX_VERTEX_GROUND}, got n={n} m={m}")
    labels = enumerate_k_subsets(n, m)
    index = {lab.bits: i for i, lab in enumerate(labels)}
    full = (1 << n) - 1
    edges = []
    for i, lab in enumerate(labels):
        bits = lab.bits
        inside = bits
        while inside:
            out_bit = inside & -inside
            inside ^= out_bit
            outside = full & ~bits
            while outside:
                in_bit = outside & -outside
                outside ^= in_bit
                j = index[(bits ^ out_bit) | in_bit]
                if j > i:
                    edges.append((i, j))
    return Graph(labels, edges, GraphMeta("johnson", n, m))


def build_layer_graph(n: int, m: int) -> Graph:
    """Bipartite graph on the m- and (m+1)-subsets of [n] with containment edges.

    Vertices are the m-subsets in colex order followed by the (m+1)-subsets in
    colex order; requires 1 <= m < n/2 and n >= 3.
    """
    if n < 3:
        raise ValueError(f"layer graph requires n >= 3, got n={n}")
    if not (1 <= m and 2 * m < n):
        raise ValueError(f"layer graph requires 1 <= m < n/2, got n={n} m={m}")
    lower = enumerate_k_subsets(n, m)
    upper = enumerate_k_subsets(n, m + 1)
    offset = len(lower)
    upper_index = {lab.bits: offset + i for i, lab in enumerate(upper)}
    full = (1 << n) - 1
    edges = []
    for i, lab in enumerate(lower):
        outside = full & ~lab.bits
        while outside:
            in_bit = outside & -outside
            outside ^= in_bit
            edges.append((i, upper_index[lab.bits | in_bit]))
    return Graph(list(lower) + list(upper), edges, GraphMeta("layer", n, m))


def graph_from_edges(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Ad-hoc graph with singleton labels {1}, ..., {num_vertices}."""
    if not 1 <= num_vertices <= MAX_VERTEX_GROUND:
        raise ValueError(
            f"raw graphs support 1..{MAX_VERTEX_GROUND} vertices, got {num_vertices}"
        )
    labels = [SubsetWord(1 << i, num_vertices) for i in range(num_vertices)]
    return Graph(labels, edges, GraphMeta("raw", num_vertices, 0))


def square(g: Graph) -> Graph:
    """Same vertices; adjacency <=> distance in g at most two."""
    neighbor_sets = [set(a) for a in g.adjacency]
    edges = list(g.edge_list)
    for v in range(g.num_vertices):
        nb = neighbor_sets[v]
        for u in g.adjacency[v]:
            for w in g.adjacency[u]:
                if w > v and w not in nb:
                    nb.add(w)
                    neighbor_sets[w].add(v)
                    edges.append((v, w))
    return Graph(g.labels, edges, GraphMeta("raw", g.meta.n, g.meta.m))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Exact hop counts from source; unreachable vertices get -1."""
    if not 0 <= source < g.num_vertices:
        raise ValueError(f"source {source} is not a vertex id")
    dist = [-1] * g.num_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dx + 1
                queue.append(y)
    return dist


class DegreeStats(NamedTuple):
    min_degree: int
    max_degree: int
    is_regular: bool


def degree_stats(g: Graph) -> DegreeStats:
    degrees = [len(a) for a in g.adjacency]
    lo, hi = min(degrees), max(degrees)
    return DegreeStats(lo, hi, lo == hi)


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex."""
    dist = bfs_distances(g, 0)
    return all(d >= 0 for d in dist)


def format_edge_list(g: Graph) -> str:
    """Bit-exact edge-list text: header, v-lines, then e-lines sorted ascending."""
    m = g.meta
    lines = [
        f"# family={m.family} n={m.n} m={m.m} "
        f"vertices={g.num_vertices} edges={g.edge_count}"
    ]
    for i in range(g.num_vertices):
        lines.append(f"v {i} {g.label_text(i)}")
    for u, v in g.edge_list:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Inverse of format_edge_list; revalidates the redundant header counts."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValueError("edge-list text must start with a '# family=...' header")
    header: dict[str, str] = {}
    for part in lines[0][2:].split():
        key, _, value = part.partition("=")
        header[key] = value
    try:
        family = header["family"]
        n = int(header["n"])
        m = int(header["m"])
        vertices = int(header["vertices"])
        edge_total = int(header["edges"])
    except (KeyError, ValueError):
        raise ValueError(f"malformed edge-list header {lines[0]!r}") from None
    labels: list[SubsetWord] = []
    edges: list[tuple[int, int]] = []
    for line in lines[1:]:
        if not line:
            continue
        fields = line.split()
        if fields[0] == "v" and len(fields) == 3:
            if int(fields[1]) != len(labels):
                raise ValueError(f"vertex line out of order: {line!r}")
            labels.append(from_text(fields[2], n))
        elif fields[0] == "e" and len(fields) == 3:
            u, v = int(fields[1]), int(fields[2])
            if u >= v:
                raise ValueError(f"edge line must satisfy id1 < id2: {line!r}")
            edges.append((u, v))
        else:
            raise ValueError(f"unrecognized edge-list line {line!r}")
    if len(labels) != vertices:
        raise ValueError(
            f"header claims {vertices} vertices but file lists {len(labels)}"
        )
    if len(edges) != edge_total:
        raise ValueError(f"header claims {edge_total} edges but file lists {len(edges)}")
    g = Graph(labels, edges, GraphMeta(family, n, m))
    if g.edge_count != edge_total:
        raise ValueError("edge count disagrees after deduplication")
    return g


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def expected_vertex_count(family: str, n: int, m: int) -> int | None:
    """Closed-form order for the named families; None for raw graphs."""
    if family == "johnson":
        return comb(n, m)
    if family == "layer":
        return comb(n, m) + comb(n, m + 1)
    return None
