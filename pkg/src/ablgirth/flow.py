"""Unit-capacity min-cost flow for edge-disjoint paths in an undirected multigraph.

Every non-loop edge becomes two opposing arcs of capacity 1 and cost 1.
Arcs are indexed by directed-edge id, so ``flow[d]`` is the flow on
directed edge ``d``.  Augmenting paths are found with Bellman-Ford on the
residual network (successive shortest paths).
"""

from __future__ import annotations

import math

from .graph import Multigraph

__all__ = ["min_cost_disjoint_paths", "max_edge_disjoint_paths"]


def _shortest_augmenting_path(g: Multigraph, flow: list[int], s: int, t: int, banned) -> list[tuple[int, int]] | None:
    """Cheapest residual s-t path as ``(directed edge, +1 push | -1 cancel)`` moves."""
    n = g.vertex_count
    dist = [math.inf] * n
    pred: list[tuple[int, int] | None] = [None] * n
    dist[s] = 0
    # Bellman-Ford; the residual network can carry cost -1 arcs.
    for _ in range(n):
        changed = False
        for a in range(n):
            da = dist[a]
            if da == math.inf:
                continue
            for d in g.out_darts(a):
                e = d >> 1
                if banned is not None and e in banned:
                    continue
                b = g.head(d)
                if b == a:
                    continue
                if flow[d ^ 1]:
                    # cancel flow running b -> a
                    cost, move = -1, (d ^ 1, -1)
                elif not flow[d]:
                    cost, move = 1, (d, 1)
                else:
                    continue
                if da + cost < dist[b]:
                    dist[b] = da + cost
                    pred[b] = move
                    changed = True
        if not changed:
            break
    if dist[t] == math.inf:
        return None
    moves = []
    v = t
    while v != s:
        d, kind = pred[v]
        moves.append((d, kind))
        v = g.tail(d) if kind == 1 else g.head(d)
    moves.reverse()
    return moves


def min_cost_disjoint_paths(g: Multigraph, s: int, t: int, k: int, banned=None) -> list[list[int]] | None:
    """``k`` edge-disjoint s-t paths of minimum total length, or None if fewer exist.

    Each path is a list of directed edges from ``s`` to ``t``.  Self-loops are
    never used; edge ids in ``banned`` are skipped.
    """
    if s == t:
        raise ValueError("source and sink must differ")
    flow = [0] * (2 * g.edge_count)
    for _ in range(k):
        moves = _shortest_augmenting_path(g, flow, s, t, banned)
        if moves is None:
            return None
        for d, kind in moves:
            flow[d] += kind
    for d in range(0, len(flow), 2):
        if flow[d] and flow[d + 1]:
            flow[d] = flow[d + 1] = 0
    # decompose; an optimal flow carries no cycles
    out_flow: dict[int, list[int]] = {}
    for d, f in enumerate(flow):
        if f:
            out_flow.setdefault(g.tail(d), []).append(d)
    paths = []
    for _ in range(k):
        path = []
        v = s
        while v != t:
            d = out_flow[v].pop()
            path.append(d)
            v = g.head(d)
        paths.append(path)
    return paths


def max_edge_disjoint_paths(g: Multigraph, s: int, t: int, limit: int = math.inf) -> int:
    """Number of edge-disjoint s-t paths, capped at ``limit``."""
    flow = [0] * (2 * g.edge_count)
    count = 0
    while count < limit:
        moves = _shortest_augmenting_path(g, flow, s, t, None)
        if moves is None:
            break
        for d, kind in moves:
            flow[d] += kind
        count += 1
    return count
