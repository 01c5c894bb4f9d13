"""Exact abelian girth.

The abelian girth is the minimum length of a closed non-backtracking walk
that crosses every edge equally often in both directions.  It also equals
the minimum abelian length over connected leafless subgraphs of Euler
characteristic -1 (theta, figure-eight, barbell).

:func:`abelian_girth` combines both views: a structural stage finds a cheap
witness subgraph (an upper bound), ``3 * girth`` gives a lower bound, and a
pruned exhaustive walk search (:func:`abl_oracle`) closes the gap.
"""

from __future__ import annotations

import math
import sys
from collections import deque
from dataclasses import dataclass
from typing import Union

from .flow import min_cost_disjoint_paths
from .girth import bfs_distances, girth, shortest_cycle_through
from .graph import (
    Barbell,
    FigureEight,
    Multigraph,
    NotChiMinusOne,
    SubgraphClass,
    Theta,
    class_abelian_length,
    classify_edge_set,
    connected_components,
    two_core,
)
from .walks import Walk, is_edge_neutral, is_strongly_closed_nb

__all__ = [
    "SubgraphWitness",
    "WalkWitness",
    "AblWitness",
    "AblResult",
    "abl_oracle",
    "shortest_theta_bound",
    "dumbbell_bound",
    "structural_bound",
    "abelian_girth",
    "has_finite_abelian_girth",
]

_CLASS_RANK = {"theta": 0, "figure-eight": 1, "barbell": 2}


@dataclass(frozen=True)
class SubgraphWitness:
    """A theta / figure-eight / barbell inside the graph; ``bound`` is its abelian length."""

    bound: int
    edges: frozenset[int]
    cls: SubgraphClass
    kind = "subgraph"

    def sort_key(self):
        return (self.bound, _CLASS_RANK[self.cls.kind], sorted(self.edges))

    def check(self, g: Multigraph) -> bool:
        if any(not 0 <= e < g.edge_count for e in self.edges):
            return False
        cls = classify_edge_set(g, self.edges)
        return not isinstance(cls, NotChiMinusOne) and class_abelian_length(cls) == self.bound


@dataclass(frozen=True)
class WalkWitness:
    """An edge-neutral closed non-backtracking walk of length ``bound``."""

    bound: int
    walk: Walk
    kind = "walk"

    def check(self, g: Multigraph) -> bool:
        w = self.walk
        return w.graph == g and w.length == self.bound and is_strongly_closed_nb(w) and is_edge_neutral(w)


AblWitness = Union[SubgraphWitness, WalkWitness]


@dataclass(frozen=True)
class AblResult:
    """``value`` is an int, or ``math.inf``.

    From :func:`abelian_girth`, ``inf`` means the abelian girth is infinite.
    From :func:`abl_oracle`, ``inf`` with ``searched_up_to`` set means only
    that nothing exists up to that length.
    """

    value: float
    witness: AblWitness | None
    lower_bound_used: int
    upper_bound_used: float | None = None
    searched_up_to: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf


# ---------------------------------------------------------------------------
# exhaustive oracle


def _search_length(g: Multigraph, length: int) -> list[int] | None:
    """A strongly closed, edge-neutral NB walk of exactly ``length`` steps, or None.

    Walks are canonicalized: they start at the smallest vertex ``r`` of
    their support, and every departure from ``r`` (and every arrival at
    ``r``, read backwards) uses a directed edge no smaller than the first
    step.  Some rotation or reversal of any walk satisfies this.
    """
    n = g.vertex_count
    outs = g._out
    ends = g._ends
    net = [0] * g.edge_count
    path: list[int] = []

    for r in range(n):
        dist = bfs_distances(g, r, allowed=lambda x, r=r: x >= r)
        firsts = [d for d in outs[r] if ends[d] >= r]
        for d0 in firsts:
            # search state lives in closures; recursion depth <= length
            def dfs(cur: int, last: int, rem: int, imb: int) -> bool:
                for d in outs[cur]:
                    if d == last ^ 1:
                        continue
                    b = ends[d]
                    if b < r:
                        continue
                    if cur == r and d < d0:
                        continue
                    if b == r and (d ^ 1) < d0:
                        continue
                    e = d >> 1
                    old = net[e]
                    new = old - 1 if d & 1 else old + 1
                    nimb = imb + (1 if abs(new) > abs(old) else -1)
                    left = rem - 1
                    if nimb > left or dist[b] > left:
                        continue
                    if left == 0:
                        # here b == r and the walk is balanced
                        if d ^ 1 != d0:
                            path.append(d)
                            return True
                        continue
                    net[e] = new
                    path.append(d)
                    if dfs(b, d, left, nimb):
                        return True
                    path.pop()
                    net[e] = old
                return False

            e0 = d0 >> 1
            net[e0] = -1 if d0 & 1 else 1
            path.append(d0)
            if length > 1 and dist[ends[d0]] <= length - 1 and dfs(ends[d0], d0, length - 1, 1):
                return path
            path.pop()
            net[e0] = 0
    return None


def abl_oracle(g: Multigraph, max_len: int, lower_bound: int = 1) -> AblResult:
    """Exact abelian girth if it is at most ``max_len``, by iterative deepening.

    Only even lengths are tried (an edge-neutral walk has even length),
    starting from ``lower_bound``.  The caller vouches that nothing shorter
    than ``lower_bound`` exists.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), max_len + 1000))
    start = max(2, lower_bound + (lower_bound & 1))
    for length in range(start, max_len + 1, 2):
        steps = _search_length(g, length)
        if steps is not None:
            w = Walk(g, steps)
            return AblResult(length, WalkWitness(length, w), lower_bound)
    return AblResult(math.inf, None, lower_bound, searched_up_to=max_len)


# ---------------------------------------------------------------------------
# structural stage


def _subgraph_witness(g: Multigraph, edges) -> SubgraphWitness | None:
    cls = classify_edge_set(g, edges)
    if isinstance(cls, NotChiMinusOne):
        return None
    return SubgraphWitness(class_abelian_length(cls), frozenset(cls.edge_set), cls)


def _best(cands):
    cands = [c for c in cands if c is not None]
    return min(cands, key=SubgraphWitness.sort_key) if cands else None


def _lift(w: SubgraphWitness | None, g: Multigraph, edge_map) -> SubgraphWitness | None:
    """Move a witness found in a subgraph back to the edge ids of ``g``."""
    if w is None:
        return None
    return _subgraph_witness(g, [edge_map[e] for e in w.edges])


def _theta_candidates(g: Multigraph):
    n = g.vertex_count
    for s in range(n):
        for t in range(s + 1, n):
            paths = min_cost_disjoint_paths(g, s, t, 3)
            if paths is None:
                continue
            edges = {d >> 1 for p in paths for d in p}
            w = _subgraph_witness(g, edges)
            if w is not None and isinstance(w.cls, Theta):
                yield w


def shortest_theta_bound(g: Multigraph) -> SubgraphWitness | None:
    """Best theta found from min-cost triples of edge-disjoint paths.

    For every vertex pair the three edge-disjoint paths of least total
    length are computed; the triple is kept when its union is a theta.
    Returns the witness (its ``bound`` is ``2 * total``) or None.
    """
    core, _, edge_map = two_core(g)
    return _lift(_best(_theta_candidates(core)), g, edge_map)


def _bar(g: Multigraph, c1_verts: set[int], c2_verts: set[int], banned: set[int]) -> list[int] | None:
    """Shortest path from the first vertex set to the second, avoiding ``banned`` edges."""
    parent: dict[int, int] = {v: -1 for v in c1_verts}
    queue = deque(sorted(c1_verts))
    while queue:
        a = queue.popleft()
        for d in g.out_darts(a):
            if (d >> 1) in banned:
                continue
            b = g.head(d)
            if b in parent:
                continue
            parent[b] = d
            if b in c2_verts:
                path = []
                while parent[b] != -1:
                    path.append(parent[b])
                    b = g.tail(parent[b])
                return path[::-1]
            queue.append(b)
    return None


def _dumbbell_candidates(g: Multigraph):
    n = g.vertex_count
    for u in range(n):
        c1 = shortest_cycle_through(g, u)
        if c1 is None:
            continue
        e1 = {d >> 1 for d in c1}
        v1 = {g.tail(d) for d in c1}
        for v in range(n):
            c2 = shortest_cycle_through(g, v, e1)
            if c2 is None:
                continue
            e2 = {d >> 1 for d in c2}
            v2 = {g.tail(d) for d in c2}
            edges = e1 | e2
            if not (v1 & v2):
                bar = _bar(g, v1, v2, edges)
                if bar is None:
                    continue
                edges |= {d >> 1 for d in bar}
            w = _subgraph_witness(g, edges)
            if w is not None and isinstance(w.cls, (FigureEight, Barbell)):
                yield w


def dumbbell_bound(g: Multigraph) -> SubgraphWitness | None:
    """Heuristic figure-eight / barbell witness.

    For each ordered vertex pair ``(u, v)``: a shortest cycle through ``u``,
    then a shortest cycle through ``v`` edge-disjoint from it, joined by a
    shortest bar when the cycles are vertex-disjoint.
    """
    core, _, edge_map = two_core(g)
    return _lift(_best(_dumbbell_candidates(core)), g, edge_map)


def structural_bound(g: Multigraph) -> SubgraphWitness | None:
    """The better of :func:`shortest_theta_bound` and :func:`dumbbell_bound`."""
    return _best([shortest_theta_bound(g), dumbbell_bound(g)])


# ---------------------------------------------------------------------------
# pipeline


def has_finite_abelian_girth(g: Multigraph) -> bool:
    """True iff some component of the 2-core has Euler characteristic <= -1."""
    core, _, _ = two_core(g)
    for comp in connected_components(core):
        sub, _, _ = core.induced(comp)
        if sub.vertex_count - sub.edge_count <= -1:
            return True
    return False


def abelian_girth(g: Multigraph) -> AblResult:
    """Exact abelian girth with a witness.

    Upper bound ``U`` from the structural stage (falling back to ``4|E|``,
    which bounds the abelian length of any witness subgraph); lower bound
    from ``3 * girth``; the oracle searches the lengths in between.
    """
    if not has_finite_abelian_girth(g):
        return AblResult(math.inf, None, 0)
    structural = structural_bound(g)
    gir = girth(g).value
    lower = 3 * gir
    lower += lower & 1
    if structural is None:
        upper = 4 * g.edge_count
        found = abl_oracle(g, upper, lower)
        return AblResult(found.value, found.witness, lower, upper)
    upper = structural.bound
    if upper > lower:
        found = abl_oracle(g, upper - 2, lower)
        if found.is_finite:
            return AblResult(found.value, found.witness, lower, upper)
    return AblResult(upper, structural, lower, upper)
