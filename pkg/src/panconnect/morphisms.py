"""Certified vertex bijections and the symmetric-group action on subset labels."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Union

from .graphs import Graph, build_johnson, build_layer_graph, meta_dict, square
from .subsets import SubsetWord, complement, to_text

UNCHECKED = "unchecked"
CERTIFIED = "certified"
REFUTED = "refuted"


class CertificationError(RuntimeError):
    """An explicitly constructed map failed its exhaustive edge check."""

    def __init__(self, message: str, bijection: "Bijection"):
        super().__init__(message)
        self.bijection = bijection


@dataclass(frozen=True)
class Permutation:
    """Permutation of [n] in one-line notation: images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"transposition needs distinct points in [{n}], got {i},{j}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def adjacent_transpositions(n: int) -> list[Permutation]:
    """The n-1 generators (i, i+1) of the full symmetric group on [n]."""
    return [transposition(n, i, i + 1) for i in range(1, n)]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying q first, then p."""
    if p.degree != q.degree:
        raise ValueError("cannot compose permutations of different degrees")
    return Permutation(tuple(p.images[q.images[i] - 1] for i in range(p.degree)))


def apply_permutation(p: Permutation, a: SubsetWord) -> SubsetWord:
    """Elementwise image {p(i) : i in a}; preserves cardinality."""
    if p.degree != a.ground_n:
        raise ValueError(
            f"permutation degree {p.degree} disagrees with ground set [{a.ground_n}]"
        )
    bits = 0
    rest = a.bits
    while rest:
        low = rest & -rest
        rest ^= low
        bits |= 1 << (p.images[low.bit_length() - 1] - 1)
    return SubsetWord(bits, a.ground_n)


@dataclass(frozen=True)
class LayerSwap:
    """Label map a -> [n] \\ a; a graph automorphism of a layer graph iff n = 2m+1."""

    ground_n: int


Generator = Union[Permutation, LayerSwap]


def apply_generator(gen: Generator, a: SubsetWord) -> SubsetWord:
    if isinstance(gen, Permutation):
        return apply_permutation(gen, a)
    if gen.ground_n != a.ground_n:
        raise ValueError(
            f"layer swap over [{gen.ground_n}] applied to subset of [{a.ground_n}]"
        )
    return complement(a)


def vertex_action(g: Graph, gen: Generator) -> tuple[int, ...]:
    """The vertex-id permutation induced by a label map, or a usage error.

    Raises ValueError with a witness when the map sends a label outside the
    vertex set or sends some edge to a non-edge.
    """
    images = []
    for v, lab in enumerate(g.labels):
        w = apply_generator(gen, lab)
        j = g.label_id(w)
        if j is None:
            raise ValueError(
                f"generator is not an automorphism: vertex {v} ({to_text(lab)}) "
                f"maps to {to_text(w)}, which is not a vertex"
            )
        images.append(j)
    for u, v in g.edge_list:
        if not g.has_edge(images[u], images[v]):
            raise ValueError(
                f"generator is not an automorphism: edge ({u},{v}) maps to "
                f"non-edge ({images[u]},{images[v]})"
            )
    return tuple(images)


def vertex_orbit(g: Graph, seed: int, generators: Sequence[Generator]) -> set[int]:
    """Closure of a vertex id under the generators, by breadth-first expansion."""
    if not 0 <= seed < g.num_vertices:
        raise ValueError(f"seed {seed} is not a vertex id")
    actions = [vertex_action(g, gen) for gen in generators]
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            for act in actions:
                w = act[v]
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def edge_orbit(
    g: Graph, seed: tuple[int, int], generators: Sequence[Generator]
) -> set[tuple[int, int]]:
    """Closure of an edge under the induced action on unordered pairs."""
    e = (seed[0], seed[1]) if seed[0] < seed[1] else (seed[1], seed[0])
    if not g.has_edge(*e):
        raise ValueError(f"seed {seed} is not an edge")
    actions = [vertex_action(g, gen) for gen in generators]
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for u, v in frontier:
            for act in actions:
                a, b = act[u], act[v]
                f = (a, b) if a < b else (b, a)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return seen


def orbit_partition(
    g: Graph, generators: Sequence[Generator]
) -> list[list[int]]:
    """Vertex orbits as disjoint sorted lists covering the vertex set."""
    actions = [vertex_action(g, gen) for gen in generators]
    assigned = [False] * g.num_vertices
    parts = []
    for seed in range(g.num_vertices):
        if assigned[seed]:
            continue
        seen = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for v in frontier:
                for act in actions:
                    w = act[v]
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        for v in seen:
            assigned[v] = True
        parts.append(sorted(seen))
    return parts


def check_vertex_transitive(
    g: Graph, generators: Sequence[Generator]
) -> tuple[bool, list[list[int]]]:
    """Single-vertex-orbit test under the generated subgroup.

    True certifies vertex-transitivity of the graph; False only says the
    generated subgroup is not transitive (refutation goes via irregular
    degrees instead).
    """
    parts = orbit_partition(g, generators)
    return len(parts) == 1, parts


def check_edge_transitive(g: Graph, generators: Sequence[Generator]) -> bool:
    """True iff the orbit of the first edge covers every edge."""
    if not g.edge_list:
        return True
    return len(edge_orbit(g, g.edge_list[0], generators)) == g.edge_count


@dataclass
class Bijection:
    """Vertex map between two graphs plus its certification status."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]
    status: str = UNCHECKED
    refutation: tuple[int, int] | None = None


def certify_bijection(b: Bijection) -> Bijection:
    """Exhaustive isomorphism check: permutation map, equal edge counts, and
    forward edge preservation (together equivalent to a full isomorphism).

    Returns a certified or refuted copy; a non-permutation map between
    equal-order graphs is a usage error.
    """
    src, tgt, mapping = b.source, b.target, b.mapping
    if len(mapping) != src.num_vertices:
        raise ValueError("map must be total on source vertices")
    if src.num_vertices != tgt.num_vertices:
        return replace(b, status=REFUTED, refutation=None)
    if sorted(mapping) != list(range(tgt.num_vertices)):
        raise ValueError("map is not a permutation of target vertex ids")
    if src.edge_count != tgt.edge_count:
        return replace(b, status=REFUTED, refutation=None)
    for u, v in src.edge_list:
        if not tgt.has_edge(mapping[u], mapping[v]):
            return replace(b, status=REFUTED, refutation=(u, v))
    return replace(b, status=CERTIFIED, refutation=None)


def layer_square_isomorphism(n: int, m: int) -> Bijection:
    """Certified isomorphism from the squared layer graph onto the Johnson graph.

    The underlying map keeps every (m+1)-set label and extends every m-set
    label by the new top element n+1; certification failure is a
    build-breaking internal error.
    """
    layer = build_layer_graph(n, m)
    squared = square(layer)
    johnson = build_johnson(n + 1, m + 1)
    top = 1 << n
    mapping = []
    for lab in squared.labels:
        if lab.size == m + 1:
            w = SubsetWord(lab.bits, n + 1)
        else:
            w = SubsetWord(lab.bits | top, n + 1)
        j = johnson.label_id(w)
        if j is None:
            raise RuntimeError(f"image {to_text(w)} missing from Johnson vertex set")
        mapping.append(j)
    result = certify_bijection(Bijection(squared, johnson, tuple(mapping)))
    if result.status != CERTIFIED:
        raise CertificationError(
            f"layer-square map onto Johnson graph refuted at edge {result.refutation}",
            result,
        )
    return result


def complement_isomorphism(n: int, m: int) -> Bijection:
    """Certified isomorphism a -> [n] \\ a between the (n,m) and (n,n-m) Johnson graphs."""
    src = build_johnson(n, m)
    tgt = build_johnson(n, n - m)
    mapping = []
    for lab in src.labels:
        j = tgt.label_id(complement(lab))
        if j is None:
            raise RuntimeError(f"complement of {to_text(lab)} missing from target")
        mapping.append(j)
    result = certify_bijection(Bijection(src, tgt, tuple(mapping)))
    if result.status != CERTIFIED:
        raise CertificationError(
            f"complement map refuted at edge {result.refutation}", result
        )
    return result


def bijection_to_dict(b: Bijection) -> dict:
    """Fixed JSON layout for serialized bijections."""
    return {
        "source": meta_dict(b.source),
        "target": meta_dict(b.target),
        "map": list(b.mapping),
        "certified": b.status == CERTIFIED,
        "refutation": None
        if b.refutation is None
        else {"u": b.refutation[0], "v": b.refutation[1]},
    }
