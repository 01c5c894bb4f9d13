"""Girth and non-backtracking walk enumeration."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import Multigraph
from .walks import Walk

__all__ = [
    "GirthResult",
    "girth",
    "shortest_cycle_through",
    "enumerate_nb_walks",
    "iter_nb_step_sequences",
    "nb_distance_table",
    "bfs_distances",
]


@dataclass(frozen=True)
class GirthResult:
    value: float  # int, or math.inf for a forest
    witness: Walk | None


def _tree_path(parent: list[int], g: Multigraph, root: int, v: int) -> list[int]:
    """Directed edges of the BFS-tree path root -> v."""
    path = []
    while v != root:
        d = parent[v]
        path.append(d)
        v = g.tail(d)
    path.reverse()
    return path


def girth(g: Multigraph) -> GirthResult:
    """Length of a shortest cycle, with one such cycle as witness.

    BFS from every vertex; a non-tree edge ``(a, b)`` met from root ``r``
    closes a walk of length ``dist[a] + dist[b] + 1``.  The minimum over all
    roots is the girth, and at a minimizing root the closed walk is a cycle.
    """
    # degenerate cases first: self-loops, then parallel pairs
    seen: dict[tuple[int, int], int] = {}
    pair = None
    for e, (t, h) in enumerate(g.edges):
        if t == h:
            return GirthResult(1, Walk(g, [2 * e]))
        key = (t, h) if t < h else (h, t)
        if key in seen and pair is None:
            pair = (seen[key], e)
        seen.setdefault(key, e)
    if pair is not None:
        e1, e2 = pair
        d1 = 2 * e1
        d2 = 2 * e2 if g.tail(2 * e2) == g.head(d1) else 2 * e2 + 1
        return GirthResult(2, Walk(g, [d1, d2]))

    best = math.inf
    best_walk: list[int] | None = None
    n = g.vertex_count
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            da = dist[a]
            if 2 * da + 1 >= best:
                break
            for d in g.out_darts(a):
                if d ^ 1 == parent[a]:
                    continue
                b = g.head(d)
                if dist[b] < 0:
                    dist[b] = da + 1
                    parent[b] = d
                    queue.append(b)
                else:
                    length = da + dist[b] + 1
                    if length < best:
                        best = length
                        best_walk = (
                            _tree_path(parent, g, root, a)
                            + [d]
                            + [x ^ 1 for x in reversed(_tree_path(parent, g, root, b))]
                        )
    if best_walk is None:
        return GirthResult(math.inf, None)
    return GirthResult(best, Walk(g, best_walk))


def shortest_cycle_through(
    g: Multigraph, v: int, banned_edges: frozenset[int] | set[int] = frozenset()
) -> list[int] | None:
    """Directed edges of a shortest cycle through ``v`` avoiding ``banned_edges``.

    BFS from ``v`` labelling every vertex with the first edge of its tree
    path; a non-tree edge joining two different labels (or touching ``v``)
    closes a cycle through ``v``.
    """
    best = None
    best_len = math.inf
    for d in g.out_darts(v):
        if (d >> 1) not in banned_edges and g.head(d) == v:
            return [d]
    n = g.vertex_count
    dist = [-1] * n
    parent = [-1] * n
    branch = [-1] * n
    dist[v] = 0
    queue = deque([v])
    while queue:
        a = queue.popleft()
        if 2 * dist[a] + 1 >= best_len:
            break
        for d in g.out_darts(a):
            if (d >> 1) in banned_edges or d ^ 1 == parent[a]:
                continue
            b = g.head(d)
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                parent[b] = d
                branch[b] = d if a == v else branch[a]
                queue.append(b)
            elif b == v or a == v or branch[a] != branch[b]:
                length = dist[a] + dist[b] + 1
                if length < best_len:
                    best_len = length
                    best = (a, d, b)
    if best is None:
        return None
    a, d, b = best
    return _tree_path(parent, g, v, a) + [d] + [x ^ 1 for x in reversed(_tree_path(parent, g, v, b))]


def iter_nb_step_sequences(g: Multigraph, v: int, h: int) -> Iterator[tuple[int, ...]]:
    """Raw directed-edge tuples of every NB walk of length ``h`` from ``v``.

    Depth-first with an explicit stack; output is in lexicographic order of
    directed-edge ids.
    """
    if h < 1:
        raise ValueError("walk length must be at least 1")
    out = g._out
    ends = g._ends
    path: list[int] = []
    stack = [iter(out[v])]
    while stack:
        for d in stack[-1]:
            if path and d == path[-1] ^ 1:
                continue
            path.append(d)
            if len(path) == h:
                yield tuple(path)
                path.pop()
                continue
            stack.append(iter(out[ends[d]]))
            break
        else:
            stack.pop()
            if path:
                path.pop()


def enumerate_nb_walks(g: Multigraph, v: int, h: int) -> Iterator[Walk]:
    """Every non-backtracking walk of length ``h`` starting at ``v``, each once."""
    for steps in iter_nb_step_sequences(g, v, h):
        yield Walk(g, steps, v)


def bfs_distances(g: Multigraph, v: int, allowed=None) -> list[float]:
    """Ordinary shortest-path distances from ``v`` (``math.inf`` if unreachable).

    ``allowed`` optionally restricts the vertices the search may enter.
    """
    dist = [math.inf] * g.vertex_count
    dist[v] = 0
    queue = deque([v])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if dist[b] == math.inf and (allowed is None or allowed(b)):
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def nb_distance_table(g: Multigraph, v: int) -> dict[int, float]:
    """BFS distance from ``v`` to every vertex.

    Ordinary distances lower-bound non-backtracking walk lengths, which is
    all the searches need for pruning.
    """
    return dict(enumerate(bfs_distances(g, v)))
