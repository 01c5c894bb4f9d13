"""Graph families used as test inputs.

Random families draw from numpy's PCG64 bit generator seeded through
``numpy.random.SeedSequence``, so a given seed gives the same graph on
every platform.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .graph import Multigraph, connected_components

__all__ = [
    "GenerationError",
    "make_rng",
    "cycle",
    "path",
    "complete",
    "petersen",
    "star",
    "make_theta",
    "make_figure_eight",
    "make_barbell",
    "random_regular",
    "random_small_multigraph",
    "canonical_form",
    "enumerate_small",
]


class GenerationError(RuntimeError):
    """A random construction ran out of attempts."""


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & (2**64 - 1))))


def _check_positive(**kw: int) -> None:
    for name, value in kw.items():
        if int(value) != value or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def cycle(n: int) -> Multigraph:
    _check_positive(n=n)
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    """Path on ``n`` vertices."""
    _check_positive(n=n)
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Multigraph:
    return Multigraph(n, list(itertools.combinations(range(n), 2)))


def star(leaves: int) -> Multigraph:
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def _add_path(edges: list, start: int, end: int, length: int, next_vertex: int) -> int:
    """Append a path of ``length`` edges from ``start`` to ``end``; returns the next free vertex id."""
    prev = start
    for _ in range(length - 1):
        edges.append((prev, next_vertex))
        prev = next_vertex
        next_vertex += 1
    edges.append((prev, end))
    return next_vertex


def make_theta(l: int, m: int, n: int) -> Multigraph:
    """Vertices 0 and 1 joined by three internally disjoint paths of the given lengths."""
    _check_positive(l=l, m=m, n=n)
    edges: list = []
    nxt = 2
    for length in (l, m, n):
        nxt = _add_path(edges, 0, 1, length, nxt)
    return Multigraph(nxt, edges)


def make_figure_eight(m: int, n: int) -> Multigraph:
    """Cycles of lengths ``m`` and ``n`` sharing vertex 0."""
    _check_positive(m=m, n=n)
    edges: list = []
    nxt = 1
    for length in (m, n):
        nxt = _add_path(edges, 0, 0, length, nxt)
    return Multigraph(nxt, edges)


def make_barbell(m: int, n: int, b: int) -> Multigraph:
    """Cycles of lengths ``m`` (through 0) and ``n`` (through 1) joined by a bar of ``b`` edges."""
    _check_positive(m=m, n=n, b=b)
    edges: list = []
    nxt = _add_path(edges, 0, 0, m, 2)
    nxt = _add_path(edges, 1, 1, n, nxt)
    nxt = _add_path(edges, 0, 1, b, nxt)
    return Multigraph(nxt, edges)


def random_regular(n: int, d: int, seed: int, max_tries: int = 10_000) -> Multigraph:
    """Simple d-regular graph from the pairing model, rejecting loops and multi-edges.

    Each attempt shuffles the ``n*d`` half-edges and pairs them off; an
    attempt producing a loop or a repeated pair is discarded whole, so the
    result is uniform over simple d-regular graphs.  Edges are returned
    sorted.
    """
    if (n * d) % 2:
        raise ValueError("n * d must be even")
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    rng = make_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        perm = rng.permutation(stubs).reshape(-1, 2)
        perm.sort(axis=1)
        if np.any(perm[:, 0] == perm[:, 1]):
            continue
        pairs = sorted(map(tuple, perm.tolist()))
        if any(pairs[i] == pairs[i + 1] for i in range(len(pairs) - 1)):
            continue
        return Multigraph(n, pairs)
    raise GenerationError(f"no simple {d}-regular graph on {n} vertices after {max_tries} pairings (seed {seed})")


def random_small_multigraph(rng: np.random.Generator, max_v: int = 7, max_e: int = 10, max_tries: int = 100_000) -> Multigraph:
    """Random connected multigraph with minimum degree >= 2 (loops and parallel edges allowed)."""
    for _ in range(max_tries):
        v = int(rng.integers(1, max_v + 1))
        e = int(rng.integers(v, max_e + 1)) if v <= max_e else max_e
        ends = rng.integers(0, v, size=(e, 2)).tolist()
        g = Multigraph(v, ends)
        if g.min_degree() >= 2 and len(connected_components(g)) == 1:
            return g
    raise GenerationError("no suitable small multigraph drawn")


# ---------------------------------------------------------------------------
# exhaustive small multigraphs


def _adjacency(g: Multigraph) -> list[list[int]]:
    n = g.vertex_count
    adj = [[0] * n for _ in range(n)]
    for t, h in g.edges:
        adj[t][h] += 1
        if t != h:
            adj[h][t] += 1
    return adj


def _refine(adj: list[list[int]]) -> list[list[int]]:
    """Ordered equitable partition by iterated colour refinement."""
    n = len(adj)
    colour = [0] * n
    while True:
        sig = [
            (colour[v], adj[v][v], tuple(sorted((colour[w], adj[v][w]) for w in range(n) if w != v and adj[v][w])))
            for v in range(n)
        ]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(keys) == len(set(colour)):
            break
        colour = new
    cells: list[list[int]] = [[] for _ in range(max(colour) + 1 if colour else 0)]
    for v, c in enumerate(colour):
        cells[c].append(v)
    return cells


def canonical_form(g: Multigraph) -> tuple:
    """Isomorphism-invariant key: the smallest upper-triangle adjacency encoding.

    Candidate orderings respect an equitable colour refinement, so the
    minimum is taken over permutations within colour classes only (all
    orderings in the worst case, which stays small for <= 7 vertices).
    """
    adj = _adjacency(g)
    n = len(adj)
    cells = _refine(adj)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for p in parts for v in p]
        code = tuple(adj[order[i]][order[j]] for i in range(n) for j in range(i, n))
        if best is None or code < best:
            best = code
    return (n, best)


def _from_canonical(key: tuple) -> Multigraph:
    n, code = key
    edges = []
    it = iter(code)
    for i in range(n):
        for j in range(i, n):
            edges.extend([(i, j)] * next(it))
    return Multigraph(n, edges)


def enumerate_small(max_v: int, max_e: int) -> Iterator[Multigraph]:
    """All connected multigraphs with min degree >= 2 and at most ``max_v`` vertices / ``max_e`` edges.

    One representative per isomorphism class.  Graphs are grown one edge at
    a time from the empty graph on ``n`` vertices, deduplicating by
    :func:`canonical_form` at each size and pruning graphs whose degree
    deficit or component count can no longer be repaired with the edges
    left.
    """
    if max_v > 7 or max_e > 10:
        raise ValueError("enumeration is limited to max_v <= 7 and max_e <= 10")
    for n in range(1, max_v + 1):
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        level = {canonical_form(Multigraph(n, [])): None}
        for e in range(1, max_e + 1):
            remaining = max_e - e
            nxt = {}
            for key in level:
                base = _from_canonical(key)
                for t, h in pairs:
                    g = base.with_edge(t, h)
                    deficit = sum(max(0, 2 - k) for k in g.degrees())
                    if deficit > 2 * remaining:
                        continue
                    if len(connected_components(g)) - 1 > remaining:
                        continue
                    ck = canonical_form(g)
                    if ck not in nxt:
                        nxt[ck] = g
            level = nxt
            for key in sorted(level):
                g = _from_canonical(key)
                if g.min_degree() >= 2 and len(connected_components(g)) == 1:
                    yield g
