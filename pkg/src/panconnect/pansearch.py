"""Witness-producing search for paths and cycles of prescribed lengths.

Verifiers sweep vertex pairs and length ranges, emit explicit witnesses, and
revalidate every witness against the host adjacency through a code path that
shares nothing with the search itself.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graphs import Graph, bfs_distances, is_connected, meta_dict
from .subsets import SubsetWord

DEFAULT_NODE_BUDGET = 50_000_000

FOUND = "found"
NOT_FOUND = "not-found"
BUDGET_EXHAUSTED = "budget-exhausted"

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PathWitness:
    """Vertex sequence certifying a simple path with target_length edges."""

    vertices: tuple[int, ...]
    target_length: int


@dataclass(frozen=True)
class CycleWitness:
    """Distinct vertex sequence closed by an edge from last back to first."""

    vertices: tuple[int, ...]


@dataclass
class PathSearch:
    status: str
    witness: PathWitness | None
    nodes_expanded: int


@dataclass
class CycleSearch:
    status: str
    witness: CycleWitness | None
    nodes_expanded: int


def validate_path_witness(g: Graph, w: PathWitness) -> bool:
    """Independent replay of a path witness against the host edge set."""
    vs = w.vertices
    if len(vs) != w.target_length + 1:
        return False
    if len(set(vs)) != len(vs):
        return False
    if not all(0 <= x < g.num_vertices for x in vs):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


def validate_cycle_witness(g: Graph, w: CycleWitness) -> bool:
    """Independent replay of a cycle witness, including the closing edge."""
    vs = w.vertices
    if len(vs) < 3 or len(vs) > g.num_vertices:
        return False
    if len(set(vs)) != len(vs):
        return False
    if not all(0 <= x < g.num_vertices for x in vs):
        return False
    if not all(g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return False
    return g.has_edge(vs[-1], vs[0])


def _dfs_path(
    adj: Sequence[Sequence[int]],
    dist_to_target: Sequence[int],
    u: int,
    v: int,
    length: int,
    budget: float,
) -> tuple[str, tuple[int, ...] | None, int]:
    """Depth-first search for a simple u-v path with exactly `length` edges.

    Neighbors are tried in ascending id order; a branch is cut as soon as the
    remaining edge allowance cannot cover the BFS distance to the target.  No
    parity pruning: target graphs contain triangles, so both parities may be
    reachable.
    """
    on_path = bytearray(len(adj))
    on_path[u] = 1
    path = [u]
    state = [0, False]  # nodes expanded, budget hit

    def extend(cur: int, remaining: int) -> bool:
        if state[0] >= budget:
            state[1] = True
            return False
        state[0] += 1
        for w in adj[cur]:
            if w == v:
                if remaining == 1:
                    path.append(w)
                    return True
                continue
            if remaining > 1 and not on_path[w] and 0 <= dist_to_target[w] <= remaining - 1:
                on_path[w] = 1
                path.append(w)
                if extend(w, remaining - 1):
                    return True
                path.pop()
                on_path[w] = 0
        return False

    if extend(u, length):
        return FOUND, tuple(path), state[0]
    return (BUDGET_EXHAUSTED if state[1] else NOT_FOUND), None, state[0]


def find_path_of_length(
    g: Graph,
    u: int,
    v: int,
    length: int,
    budget: float = DEFAULT_NODE_BUDGET,
    _dist_to_target: Sequence[int] | None = None,
) -> PathSearch:
    """Search for a simple u-v path with exactly `length` edges.

    NOT_FOUND is only reported after exhausting the search space within
    budget; BUDGET_EXHAUSTED is inconclusive.
    """
    nv = g.num_vertices
    if not (0 <= u < nv and 0 <= v < nv):
        raise ValueError(f"({u},{v}) references a missing vertex")
    if u == v:
        raise ValueError("path search needs two distinct endpoints")
    if budget <= 0:
        raise ValueError("budget must be positive")
    dist = _dist_to_target if _dist_to_target is not None else bfs_distances(g, v)
    d = dist[u]
    if d < 0:
        raise ValueError(f"no u-v path exists at all ({u} cannot reach {v})")
    if not d <= length <= nv - 1:
        raise ValueError(
            f"length {length} outside valid range {d}..{nv - 1} for this pair"
        )
    status, verts, expanded = _dfs_path(g.adjacency, dist, u, v, length, budget)
    witness = None
    if status == FOUND:
        witness = PathWitness(verts, length)
        if not validate_path_witness(g, witness):
            raise RuntimeError(f"search produced an invalid witness {verts}")
    return PathSearch(status, witness, expanded)


def find_cycle_of_length(
    g: Graph, length: int, budget: float = DEFAULT_NODE_BUDGET
) -> CycleSearch:
    """Search for a cycle with exactly `length` vertices.

    For each edge {u,v} in ascending order, searches for a u-v path of length
    `length`-1 and closes it with the edge; the budget applies per edge.
    """
    nv = g.num_vertices
    if not 3 <= length <= nv:
        raise ValueError(f"cycle length {length} outside 3..{nv}")
    dist_cache: dict[int, list[int]] = {}
    total = 0
    exhausted = False
    for u, v in g.edge_list:
        if v not in dist_cache:
            dist_cache[v] = bfs_distances(g, v)
        status, verts, expanded = _dfs_path(
            g.adjacency, dist_cache[v], u, v, length - 1, budget
        )
        total += expanded
        if status == FOUND:
            witness = CycleWitness(verts)
            if not validate_cycle_witness(g, witness):
                raise RuntimeError(f"search produced an invalid cycle {verts}")
            return CycleSearch(FOUND, witness, total)
        if status == BUDGET_EXHAUSTED:
            exhausted = True
    return CycleSearch(BUDGET_EXHAUSTED if exhausted else NOT_FOUND, None, total)


@dataclass
class PairResult:
    """Achieved path-length spectrum for one vertex pair."""

    u: int
    v: int
    dist: int
    length_range: tuple[int, int]
    achieved_mask: int
    missing: tuple[int, ...]
    inconclusive: tuple[int, ...]
    witnesses: tuple[PathWitness, ...] | None
    nodes_expanded: int

    def achieved_lengths(self) -> list[int]:
        lo, hi = self.length_range
        return [l for l in range(lo, hi + 1) if self.achieved_mask >> l & 1]

    def to_dict(self, include_witnesses: bool = False) -> dict:
        out = {
            "u": self.u,
            "v": self.v,
            "dist": self.dist,
            "lengths": list(self.length_range),
            "achieved": self.achieved_lengths(),
            "missing": list(self.missing),
            "inconclusive": list(self.inconclusive),
            "nodes_expanded": self.nodes_expanded,
        }
        if include_witnesses and self.witnesses is not None:
            out["witnesses"] = [list(w.vertices) for w in self.witnesses]
        return out


@dataclass
class PanReport:
    """Outcome of a pair/length sweep (panconnected or Hamilton-connected)."""

    check: str
    graph: dict
    verdict: str
    symmetry_reduced: bool
    pairs: list[PairResult]
    counterexample: dict | None
    pairs_checked: int
    lengths_checked: int
    nodes_expanded: int
    witnesses_validated: int
    elapsed_ms: float

    def to_dict(self, include_witnesses: bool = False) -> dict:
        out = {
            "check": self.check,
            "graph": self.graph,
            "verdict": self.verdict,
            "symmetry_reduced": self.symmetry_reduced,
            "pairs_checked": self.pairs_checked,
            "lengths_checked": self.lengths_checked,
            "nodes_expanded": self.nodes_expanded,
            "witnesses_validated": self.witnesses_validated,
            "pairs": [p.to_dict(include_witnesses) for p in self.pairs],
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _sweep_pairs(
    g: Graph,
    check: str,
    pairs: Iterable[tuple[int, int]],
    range_for_dist: Callable[[int], tuple[int, int]],
    budget: float,
    keep_witnesses: bool,
    symmetry_reduced: bool,
) -> PanReport:
    started = time.perf_counter()
    dist_cache: dict[int, list[int]] = {}
    rows: list[PairResult] = []
    lengths_checked = 0
    nodes_total = 0
    validated = 0
    first_missing: tuple[int, int, int] | None = None
    any_inconclusive = False
    for u, v in pairs:
        if v not in dist_cache:
            dist_cache[v] = bfs_distances(g, v)
        dist_v = dist_cache[v]
        d = dist_v[u]
        lo, hi = range_for_dist(d)
        achieved = 0
        missing: list[int] = []
        inconclusive: list[int] = []
        wits: list[PathWitness] = []
        nodes = 0
        for length in range(lo, hi + 1):
            status, verts, expanded = _dfs_path(
                g.adjacency, dist_v, u, v, length, budget
            )
            nodes += expanded
            if status == FOUND:
                witness = PathWitness(verts, length)
                if not validate_path_witness(g, witness):
                    raise RuntimeError(f"search produced an invalid witness {verts}")
                validated += 1
                achieved |= 1 << length
                if keep_witnesses:
                    wits.append(witness)
            elif status == NOT_FOUND:
                missing.append(length)
                if first_missing is None:
                    first_missing = (u, v, length)
            else:
                inconclusive.append(length)
                any_inconclusive = True
        rows.append(
            PairResult(
                u,
                v,
                d,
                (lo, hi),
                achieved,
                tuple(missing),
                tuple(inconclusive),
                tuple(wits) if keep_witnesses else None,
                nodes,
            )
        )
        lengths_checked += hi - lo + 1
        nodes_total += nodes
    if any_inconclusive:
        verdict = INCONCLUSIVE
    elif first_missing is not None:
        verdict = FAIL
    else:
        verdict = PASS
    counterexample = None
    if verdict == FAIL:
        u, v, length = first_missing
        counterexample = {
            "type": "missing-path",
            "u": u,
            "v": v,
            "u_label": g.label_text(u),
            "v_label": g.label_text(v),
            "length": length,
        }
    elapsed = (time.perf_counter() - started) * 1000.0
    return PanReport(
        check,
        meta_dict(g),
        verdict,
        symmetry_reduced,
        rows,
        counterexample,
        len(rows),
        lengths_checked,
        nodes_total,
        validated,
        elapsed,
    )


def _require_searchable(g: Graph) -> None:
    if g.num_vertices < 3:
        raise ValueError("need at least three vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")


def _all_pairs(nv: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(nv) for v in range(u + 1, nv)]


def verify_panconnected(
    g: Graph,
    budget: float = DEFAULT_NODE_BUDGET,
    keep_witnesses: bool = False,
) -> PanReport:
    """Exhaustive sweep: every unordered pair, every length from d(u,v) to |V|-1."""
    _require_searchable(g)
    nv = g.num_vertices
    return _sweep_pairs(
        g,
        "panconnected",
        _all_pairs(nv),
        lambda d: (d, nv - 1),
        budget,
        keep_witnesses,
        symmetry_reduced=False,
    )


def representative_pairs(g: Graph) -> list[tuple[int, int]]:
    """One pair per intersection-size class of a Johnson graph.

    The base vertex is {1..m}; the class-d partner is {1..m-d} + {m+1..m+d},
    meeting the base in exactly m-d elements (d = 1..m).
    """
    if g.meta.family != "johnson":
        raise ValueError("representative pairs are defined for Johnson graphs only")
    n, m = g.meta.n, g.meta.m
    base = g.label_id(SubsetWord((1 << m) - 1, n))
    pairs = []
    for d in range(1, m + 1):
        partner_bits = ((1 << (m - d)) - 1) | (((1 << d) - 1) << m)
        pairs.append((base, g.label_id(SubsetWord(partner_bits, n))))
    return pairs


def verify_panconnected_symmetry_reduced(
    g: Graph,
    budget: float = DEFAULT_NODE_BUDGET,
    keep_witnesses: bool = False,
) -> PanReport:
    """Panconnectedness sweep over one representative pair per distance class.

    An optimization only: its verdict must agree with verify_panconnected on
    every instance where both run, and the full verifier stays the ground
    truth.
    """
    _require_searchable(g)
    nv = g.num_vertices
    report = _sweep_pairs(
        g,
        "panconnected",
        representative_pairs(g),
        lambda d: (d, nv - 1),
        budget,
        keep_witnesses,
        symmetry_reduced=True,
    )
    return report


def verify_hamilton_connected(
    g: Graph,
    budget: float = DEFAULT_NODE_BUDGET,
    keep_witnesses: bool = False,
) -> PanReport:
    """Every pair must admit a path through all |V| vertices."""
    _require_searchable(g)
    nv = g.num_vertices
    return _sweep_pairs(
        g,
        "hamilton-connected",
        _all_pairs(nv),
        lambda d: (nv - 1, nv - 1),
        budget,
        keep_witnesses,
        symmetry_reduced=False,
    )


@dataclass
class LengthResult:
    length: int
    status: str
    witness: CycleWitness | None
    nodes_expanded: int

    def to_dict(self, include_witnesses: bool = False) -> dict:
        out = {
            "length": self.length,
            "status": self.status,
            "nodes_expanded": self.nodes_expanded,
        }
        if include_witnesses and self.witness is not None:
            out["witness"] = list(self.witness.vertices)
        return out


@dataclass
class PancyclicReport:
    """Per-length cycle existence results."""

    check: str
    graph: dict
    verdict: str
    lengths: list[LengthResult]
    counterexample: dict | None
    lengths_checked: int
    nodes_expanded: int
    witnesses_validated: int
    elapsed_ms: float

    def to_dict(self, include_witnesses: bool = False) -> dict:
        out = {
            "check": self.check,
            "graph": self.graph,
            "verdict": self.verdict,
            "lengths_checked": self.lengths_checked,
            "nodes_expanded": self.nodes_expanded,
            "witnesses_validated": self.witnesses_validated,
            "lengths": [r.to_dict(include_witnesses) for r in self.lengths],
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def verify_pancyclic(
    g: Graph,
    budget: float = DEFAULT_NODE_BUDGET,
    keep_witnesses: bool = True,
    lengths: Iterable[int] | None = None,
) -> PancyclicReport:
    """Cycle of every length from 3 to |V| (or of the given lengths only)."""
    _require_searchable(g)
    started = time.perf_counter()
    nv = g.num_vertices
    targets = sorted(lengths) if lengths is not None else list(range(3, nv + 1))
    for length in targets:
        if not 3 <= length <= nv:
            raise ValueError(f"cycle length {length} outside 3..{nv}")
    rows: list[LengthResult] = []
    nodes_total = 0
    validated = 0
    first_missing: int | None = None
    any_inconclusive = False
    for length in targets:
        result = find_cycle_of_length(g, length, budget)
        nodes_total += result.nodes_expanded
        if result.status == FOUND:
            validated += 1
        elif result.status == NOT_FOUND:
            if first_missing is None:
                first_missing = length
        else:
            any_inconclusive = True
        rows.append(
            LengthResult(
                length,
                result.status,
                result.witness if keep_witnesses else None,
                result.nodes_expanded,
            )
        )
    if any_inconclusive:
        verdict = INCONCLUSIVE
    elif first_missing is not None:
        verdict = FAIL
    else:
        verdict = PASS
    counterexample = None
    if verdict == FAIL:
        counterexample = {"type": "missing-cycle", "length": first_missing}
    elapsed = (time.perf_counter() - started) * 1000.0
    return PancyclicReport(
        "pancyclic",
        meta_dict(g),
        verdict,
        rows,
        counterexample,
        len(targets),
        nodes_total,
        validated,
        elapsed,
    )
