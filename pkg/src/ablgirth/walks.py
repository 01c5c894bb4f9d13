"""Walks over a multigraph: reduction, inversion, products, net edge counts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Multigraph, directed

__all__ = [
    "Walk",
    "WalkError",
    "reduce",
    "is_non_backtracking",
    "is_strongly_closed_nb",
    "net_counts",
    "is_edge_neutral",
    "commutator",
    "triple_word",
    "format_darts",
    "parse_darts",
]


class WalkError(ValueError):
    """Invalid walk, or walks whose endpoints do not fit together."""


@dataclass(frozen=True)
class Walk:
    """A walk in ``graph``: a sequence of directed edges (see :mod:`ablgirth.graph`).

    ``start`` is stored explicitly so the trivial walk at a vertex is
    representable; for non-empty walks it must equal the tail of the first step.
    """

    graph: Multigraph
    steps: tuple[int, ...]
    start: int

    def __init__(self, graph: Multigraph, steps: Iterable[int], start: int | None = None):
        steps = tuple(steps)
        if start is None:
            if not steps:
                raise WalkError("the trivial walk needs an explicit start vertex")
            start = graph.tail(steps[0])
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "start", start)
        self._validate()

    def _validate(self) -> None:
        g = self.graph
        if not 0 <= self.start < g.vertex_count:
            raise WalkError(f"start vertex {self.start} not in graph")
        at = self.start
        limit = 2 * g.edge_count
        for i, d in enumerate(self.steps):
            if not 0 <= d < limit:
                raise WalkError(f"step {i}: no directed edge {d}")
            if g.tail(d) != at:
                raise WalkError(f"step {i}: tail {g.tail(d)} does not continue from vertex {at}")
            at = g.head(d)

    @classmethod
    def trivial(cls, graph: Multigraph, vertex: int) -> "Walk":
        return cls(graph, (), vertex)

    @classmethod
    def parse(cls, graph: Multigraph, text: str, start: int | None = None) -> "Walk":
        return cls(graph, parse_darts(text), start)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.graph.head(self.steps[-1]) if self.steps else self.start

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    def vertices(self) -> list[int]:
        out = [self.start]
        out.extend(self.graph.head(d) for d in self.steps)
        return out

    def edge_ids(self) -> set[int]:
        return {d >> 1 for d in self.steps}

    def inverse(self) -> "Walk":
        return Walk(self.graph, [d ^ 1 for d in reversed(self.steps)], self.end)

    def concat(self, other: "Walk") -> "Walk":
        if other.graph is not self.graph and other.graph != self.graph:
            raise WalkError("walks live in different graphs")
        if self.end != other.start:
            raise WalkError(f"cannot join a walk ending at {self.end} to one starting at {other.start}")
        return Walk(self.graph, self.steps + other.steps, self.start)

    __mul__ = concat

    def power(self, m: int) -> "Walk":
        if m != 0 and not self.is_closed:
            raise WalkError("only closed walks have powers")
        base = self if m >= 0 else self.inverse()
        return Walk(self.graph, base.steps * abs(m), self.start)

    def reduced(self) -> "Walk":
        return reduce(self)

    def __str__(self) -> str:
        return format_darts(self.steps)


def _reduce_steps(steps: Sequence[int]) -> list[int]:
    acc: list[int] = []
    for d in steps:
        if acc and acc[-1] == d ^ 1:
            acc.pop()
        else:
            acc.append(d)
    return acc


def reduce(w: Walk) -> Walk:
    """Discard reversals until none remain; the result keeps ``w``'s start vertex."""
    return Walk(w.graph, _reduce_steps(w.steps), w.start)


def _steps_nb(steps: Sequence[int]) -> bool:
    return all(steps[i] != steps[i + 1] ^ 1 for i in range(len(steps) - 1))


def is_non_backtracking(w: Walk) -> bool:
    return _steps_nb(w.steps)


def is_strongly_closed_nb(w: Walk) -> bool:
    s = w.steps
    return bool(s) and w.is_closed and _steps_nb(s) and s[0] != s[-1] ^ 1


def net_counts(w: Walk) -> dict[int, int]:
    """Net traversal count ``#(e,+) - #(e,-)`` for every edge the walk uses."""
    net: Counter[int] = Counter()
    for d in w.steps:
        net[d >> 1] += -1 if d & 1 else 1
    return {e: net[e] for e in sorted(net)}


def is_edge_neutral(w: Walk) -> bool:
    return not any(net_counts(w).values())


def commutator(a: Walk, b: Walk) -> Walk:
    """``a b a^-1 b^-1`` for closed walks at a common vertex."""
    if not (a.is_closed and b.is_closed) or a.start != b.start:
        raise WalkError("commutator needs two closed walks at the same vertex")
    return a.concat(b).concat(a.inverse()).concat(b.inverse())


def triple_word(a: Walk, b: Walk, c: Walk) -> Walk:
    """``a b^-1 c a^-1 b c^-1`` for three walks sharing both endpoints."""
    if len({a.start, b.start, c.start}) != 1 or len({a.end, b.end, c.end}) != 1:
        raise WalkError("triple_word needs three walks with common start and end vertices")
    out = a
    for part in (b.inverse(), c, a.inverse(), b, c.inverse()):
        out = out.concat(part)
    return out


def format_darts(steps: Iterable[int]) -> str:
    """Serialize as comma-separated signed edge ids, e.g. ``+3,-7,+0``."""
    return ",".join(f"{'-' if d & 1 else '+'}{d >> 1}" for d in steps)


def parse_darts(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) < 2 or tok[0] not in "+-" or not tok[1:].isdigit():
            raise WalkError(f"bad directed edge token {tok!r}")
        out.append(directed(int(tok[1:]), 1 if tok[0] == "+" else -1))
    return out
