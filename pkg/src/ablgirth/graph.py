"""Finite multigraphs with directed-edge views.

A graph is a vertex count plus an ordered edge list of ``(tail, head)``
pairs; the edge id is the position in that list.  Parallel edges and
self-loops are allowed.

Directed edges are encoded as plain integers: ``2*e`` is ``(e, +)`` and
``2*e + 1`` is ``(e, -)``.  The inverse of a directed edge ``d`` is
``d ^ 1``.  Sorting directed edges as integers therefore sorts them by edge
id, ``+`` before ``-``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

__all__ = [
    "Multigraph",
    "GraphFormatError",
    "directed",
    "edge_of",
    "sign_of",
    "inverse",
    "euler_characteristic",
    "connected_components",
    "two_core",
    "FigureEight",
    "Barbell",
    "Theta",
    "NotChiMinusOne",
    "NOT_CHI_MINUS_ONE",
    "SubgraphClass",
    "classify_chi_minus_one",
    "classify_edge_set",
    "abelian_length",
    "read_edge_list",
    "write_edge_list",
    "parse_edge_list",
    "format_edge_list",
]


class GraphFormatError(ValueError):
    """Raised when an edge-list file cannot be parsed."""


def directed(edge_id: int, sign: int = 1) -> int:
    """Directed edge ``(edge_id, +)`` for ``sign > 0``, ``(edge_id, -)`` otherwise."""
    return 2 * edge_id + (0 if sign > 0 else 1)


def edge_of(d: int) -> int:
    return d >> 1


def sign_of(d: int) -> int:
    return -1 if d & 1 else 1


def inverse(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Immutable multigraph; ``edges[i]`` is the ``(tail, head)`` of edge ``i``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    _out: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _ends: tuple[int, ...] = field(init=False, repr=False)

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        edges = tuple((int(t), int(h)) for t, h in edges)
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < vertex_count and 0 <= h < vertex_count):
                raise ValueError(f"edge {i} = ({t}, {h}) has an endpoint outside 0..{vertex_count - 1}")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", edges)

        # _ends[d] is the head of directed edge d; tails come from d ^ 1.
        ends = []
        out: list[list[int]] = [[] for _ in range(vertex_count)]
        for e, (t, h) in enumerate(edges):
            ends.append(h)
            ends.append(t)
            out[t].append(2 * e)
            out[h].append(2 * e + 1)
        object.__setattr__(self, "_ends", tuple(ends))
        object.__setattr__(self, "_out", tuple(tuple(sorted(o)) for o in out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(vertex_count={self.vertex_count}, edges={list(self.edges)!r})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def head(self, d: int) -> int:
        return self._ends[d]

    def tail(self, d: int) -> int:
        return self._ends[d ^ 1]

    def out_darts(self, v: int) -> tuple[int, ...]:
        """Directed edges with tail ``v``, in increasing order.

        A self-loop at ``v`` contributes both of its orientations.
        """
        return self._out[v]

    def degree(self, v: int) -> int:
        return len(self._out[v])

    def degrees(self) -> list[int]:
        return [len(o) for o in self._out]

    def neighbors(self, v: int) -> list[int]:
        ends = self._ends
        return [ends[d] for d in self._out[v]]

    def is_regular(self) -> bool:
        degs = self.degrees()
        return not degs or min(degs) == max(degs)

    def min_degree(self) -> int:
        degs = self.degrees()
        return min(degs) if degs else 0

    def subgraph(self, edge_ids: Iterable[int]) -> tuple["Multigraph", list[int], list[int]]:
        """Subgraph spanned by ``edge_ids`` (vertices = their endpoints).

        Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
        ``edge_map[j]`` are the ids in ``self`` of vertex ``i`` and edge ``j``
        of ``sub``.
        """
        edge_map = sorted(set(edge_ids))
        verts = sorted({x for e in edge_map for x in self.edges[e]})
        index = {v: i for i, v in enumerate(verts)}
        sub = Multigraph(len(verts), [(index[self.edges[e][0]], index[self.edges[e][1]]) for e in edge_map])
        return sub, verts, edge_map

    def induced(self, vertices: Iterable[int]) -> tuple["Multigraph", list[int], list[int]]:
        """Subgraph induced on ``vertices``, with the same relabeling maps as :meth:`subgraph`."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edge_map = [e for e, (t, h) in enumerate(self.edges) if t in index and h in index]
        sub = Multigraph(len(verts), [(index[self.edges[e][0]], index[self.edges[e][1]]) for e in edge_map])
        return sub, verts, edge_map

    def relabel(self, vertex_perm: Sequence[int], edge_perm: Sequence[int] | None = None) -> "Multigraph":
        """Isomorphic copy: vertex ``v`` becomes ``vertex_perm[v]``; edge ``i`` moves to slot ``edge_perm[i]``."""
        m = self.edge_count
        if edge_perm is None:
            edge_perm = range(m)
        new_edges: list[tuple[int, int] | None] = [None] * m
        for i, (t, h) in enumerate(self.edges):
            new_edges[edge_perm[i]] = (vertex_perm[t], vertex_perm[h])
        return Multigraph(self.vertex_count, new_edges)

    def with_edge(self, tail: int, head: int) -> "Multigraph":
        return Multigraph(self.vertex_count, self.edges + ((tail, head),))


def euler_characteristic(g: Multigraph) -> int:
    return g.vertex_count - g.edge_count


def connected_components(g: Multigraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _core_edges(g: Multigraph, edge_ids: Iterable[int] | None = None) -> set[int]:
    """Edge ids surviving repeated deletion of degree <= 1 vertices."""
    alive = set(range(g.edge_count)) if edge_ids is None else set(edge_ids)
    deg = [0] * g.vertex_count
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for e in alive:
        t, h = g.edges[e]
        deg[t] += 1
        deg[h] += 1
        incident[t].append(e)
        if h != t:
            incident[h].append(e)
    stack = [v for v in range(g.vertex_count) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if deg[v] != 1:
            continue
        for e in incident[v]:
            if e in alive:
                alive.discard(e)
                t, h = g.edges[e]
                deg[t] -= 1
                deg[h] -= 1
                other = h if t == v else t
                if deg[other] == 1:
                    stack.append(other)
                break
    return alive


def two_core(g: Multigraph) -> tuple[Multigraph, list[int], list[int]]:
    """Maximal subgraph with minimum degree >= 2.

    Returns ``(core, vertex_map, edge_map)`` as in :meth:`Multigraph.subgraph`;
    isolated vertices are dropped, so a forest gives the empty graph.
    """
    return g.subgraph(_core_edges(g))


# ---------------------------------------------------------------------------
# Euler characteristic -1 classification


@dataclass(frozen=True)
class FigureEight:
    cycle1: frozenset[int]
    cycle2: frozenset[int]
    kind = "figure-eight"

    @property
    def edge_set(self) -> frozenset[int]:
        return self.cycle1 | self.cycle2


@dataclass(frozen=True)
class Barbell:
    cycle1: frozenset[int]
    cycle2: frozenset[int]
    bar: frozenset[int]
    kind = "barbell"

    @property
    def edge_set(self) -> frozenset[int]:
        return self.cycle1 | self.cycle2 | self.bar


@dataclass(frozen=True)
class Theta:
    path1: frozenset[int]
    path2: frozenset[int]
    path3: frozenset[int]
    kind = "theta"

    @property
    def edge_set(self) -> frozenset[int]:
        return self.path1 | self.path2 | self.path3


@dataclass(frozen=True)
class NotChiMinusOne:
    kind = "none"

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset()


NOT_CHI_MINUS_ONE = NotChiMinusOne()

SubgraphClass = Union[FigureEight, Barbell, Theta, NotChiMinusOne]


def _sorted_parts(parts: list[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(parts, key=lambda s: (len(s), sorted(s)))


def classify_edge_set(g: Multigraph, edge_ids: Iterable[int]) -> SubgraphClass:
    """Classify the subgraph of ``g`` spanned by ``edge_ids``.

    Edge sets in the result use the edge ids of ``g``.
    """
    edge_ids = set(edge_ids)
    if not edge_ids:
        return NOT_CHI_MINUS_ONE
    deg: dict[int, int] = {}
    incident: dict[int, list[int]] = {}
    for e in edge_ids:
        t, h = g.edges[e]
        for x in (t, h):
            deg[x] = deg.get(x, 0) + 1
        incident.setdefault(t, []).append(2 * e)
        incident.setdefault(h, []).append(2 * e + 1)
    if len(deg) - len(edge_ids) != -1 or min(deg.values()) < 2:
        return NOT_CHI_MINUS_ONE

    # connectivity inside the edge set
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for d in incident[v]:
            w = g.head(d)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(deg):
        return NOT_CHI_MINUS_ONE

    # Leafless with chi = -1: either one vertex of degree 4 or two of degree 3,
    # all others of degree 2.  Trace the branches between those vertices.
    branch_vertices = sorted(v for v, k in deg.items() if k > 2)
    used: set[int] = set()
    branches: list[tuple[int, int, frozenset[int]]] = []
    for b in branch_vertices:
        for d0 in sorted(incident[b]):
            if (d0 >> 1) in used:
                continue
            path = []
            d = d0
            while True:
                used.add(d >> 1)
                path.append(d >> 1)
                w = g.head(d)
                if deg[w] != 2:
                    break
                nxt = [x for x in incident[w] if (x >> 1) != (d >> 1)]
                d = nxt[0]
            branches.append((b, w, frozenset(path)))

    if len(branch_vertices) == 1:
        c1, c2 = _sorted_parts([p for _, _, p in branches])
        return FigureEight(c1, c2)
    loops = [p for a, b, p in branches if a == b]
    links = [p for a, b, p in branches if a != b]
    if len(links) == 3:
        p1, p2, p3 = _sorted_parts(links)
        return Theta(p1, p2, p3)
    c1, c2 = _sorted_parts(loops)
    return Barbell(c1, c2, links[0])


def classify_chi_minus_one(g: Multigraph) -> SubgraphClass:
    """Class of a connected leafless graph with Euler characteristic -1.

    Returns :data:`NOT_CHI_MINUS_ONE` for anything else (a leaf, an
    isolated vertex, several components, or chi != -1).
    """
    if g.vertex_count == 0 or euler_characteristic(g) != -1:
        return NOT_CHI_MINUS_ONE
    if min(g.degrees()) < 2:
        return NOT_CHI_MINUS_ONE
    return classify_edge_set(g, range(g.edge_count))


def class_abelian_length(cls: SubgraphClass) -> int:
    """Abelian length of an already-classified subgraph."""
    if isinstance(cls, NotChiMinusOne):
        raise ValueError("not a connected leafless graph of Euler characteristic -1")
    extra = 2 * len(cls.bar) if isinstance(cls, Barbell) else 0
    return 2 * len(cls.edge_set) + extra


def abelian_length(g: Multigraph) -> int:
    """Twice the edge count, with bar edges of a barbell counted four times."""
    return class_abelian_length(classify_chi_minus_one(g))


# ---------------------------------------------------------------------------
# edge-list text format


def format_edge_list(g: Multigraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"v {g.vertex_count}")
    lines.extend(f"e {t} {h}" for t, h in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    count = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                if count is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate vertex count")
                count = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                if count is None:
                    raise GraphFormatError(f"line {lineno}: edge before vertex count")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if count is None:
        raise GraphFormatError("missing 'v <count>' line")
    try:
        return Multigraph(count, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def write_edge_list(g: Multigraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g, comments))


def read_edge_list(path: str | Path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
