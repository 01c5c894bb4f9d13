"""Constructive abelian-girth upper bounds for graphs of minimum degree >= 3.

With ``h`` minimal such that ``d(d-1)^(h-1) >= 2n+1``, some vertex ``u`` is
the endpoint of three distinct non-backtracking walks ``a, b, c`` of length
``h`` from ``v``.  The walk ``a b^-1 c a^-1 b c^-1`` (or the commutator of
two of them when ``u == v``) is edge-neutral and reduces to a non-empty
non-backtracking walk, which bounds the abelian girth by ``6h`` (``4h``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .girth import iter_nb_step_sequences
from .graph import Multigraph
from .walks import (
    Walk,
    commutator,
    is_edge_neutral,
    is_non_backtracking,
    reduce,
    triple_word,
)

__all__ = [
    "MooreCertificate",
    "TheoremContradiction",
    "moore_h",
    "find_three_walks",
    "certify_abl_upper",
    "scholium_certify",
    "pick_non_inverse_pair",
    "replay",
]


class TheoremContradiction(RuntimeError):
    """The constructed edge-neutral walk reduced to nothing; this must never happen."""


@dataclass(frozen=True)
class MooreCertificate:
    base_vertex: int
    meeting_vertex: int
    h: int
    walks: tuple[Walk, ...]
    ell_reduced: Walk

    @property
    def bound(self) -> int:
        return self.ell_reduced.length

    @property
    def a(self) -> Walk:
        return self.walks[0]

    @property
    def b(self) -> Walk:
        return self.walks[1]

    @property
    def c(self) -> Walk | None:
        return self.walks[2] if len(self.walks) > 2 else None

    def rebuild(self) -> Walk:
        """The unreduced walk: a commutator for two walks, the six-fold word for three."""
        if len(self.walks) == 2:
            return commutator(*self.walks)
        return triple_word(*self.walks)


def moore_h(n: int, d: int) -> int:
    """Smallest ``h >= 1`` with ``d (d-1)^(h-1) >= 2n + 1``."""
    if d < 3:
        raise ValueError(f"degree {d} < 3: the walk count never outgrows 2n+1 reliably")
    if n < 1:
        raise ValueError("n must be positive")
    h = 1
    while d * (d - 1) ** (h - 1) < 2 * n + 1:
        h += 1
    return h


def find_three_walks(g: Multigraph, v: int, h: int) -> tuple[int, Walk, Walk, Walk]:
    """First endpoint (in DFS order) reached by three distinct NB walks of length ``h`` from ``v``."""
    if g.min_degree() < 3:
        raise ValueError(f"minimum degree {g.min_degree()} < 3")
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for steps in iter_nb_step_sequences(g, v, h):
        u = g.head(steps[-1])
        bucket = buckets.setdefault(u, [])
        bucket.append(steps)
        if len(bucket) == 3:
            return u, *(Walk(g, s, v) for s in bucket)
    raise ValueError(f"no vertex is reached by three NB walks of length {h} from {v}")


def pick_non_inverse_pair(walks: Sequence[Walk]) -> tuple[Walk, Walk]:
    """Lexicographically first pair that are not each other's inverse."""
    for x, y in combinations(walks, 2):
        if x.steps != y.inverse().steps:
            return x, y
    raise ValueError("every pair of walks is mutually inverse")


def _certificate(base: int, meet: int, h: int, walks: tuple[Walk, ...]) -> MooreCertificate:
    ell = commutator(*walks) if len(walks) == 2 else triple_word(*walks)
    red = reduce(ell)
    if red.length == 0:
        raise TheoremContradiction(f"the constructed walk at vertex {base} reduced to the empty walk")
    return MooreCertificate(base, meet, h, walks, red)


def certify_abl_upper(g: Multigraph, v: int = 0) -> MooreCertificate:
    """Edge-neutral closed NB walk of length <= 6h (<= 4h if the walks close up)."""
    d = g.min_degree()
    h = moore_h(g.vertex_count, d)
    u, a, b, c = find_three_walks(g, v, h)
    if u == v:
        return _certificate(v, u, h, pick_non_inverse_pair((a, b, c)))
    return _certificate(v, u, h, (a, b, c))


def scholium_certify(g: Multigraph, v: int, length: int, walks: Sequence[Walk]) -> MooreCertificate:
    """Bound ``4 * length`` from three distinct closed NB walks of that length at ``v``."""
    walks = tuple(walks)
    if len(walks) != 3 or len({w.steps for w in walks}) != 3:
        raise ValueError("need three distinct walks")
    for w in walks:
        if w.graph != g or w.start != v or not w.is_closed:
            raise ValueError("walks must be closed at the given vertex")
        if w.length != length or not is_non_backtracking(w):
            raise ValueError(f"walks must be non-backtracking of length {length}")
    return _certificate(v, v, length, pick_non_inverse_pair(walks))


def replay(cert: MooreCertificate, g: Multigraph) -> list[str]:
    """Problems found re-checking ``cert`` against ``g``; empty when it holds."""
    problems = []
    walks = cert.walks
    if len({w.steps for w in walks}) != len(walks):
        problems.append("walks are not distinct")
    for name, w in zip("abc", walks):
        if w.graph != g:
            problems.append(f"walk {name} is not in this graph")
        if w.length != cert.h or not is_non_backtracking(w):
            problems.append(f"walk {name} is not a NB walk of length {cert.h}")
        if w.start != cert.base_vertex or w.end != cert.meeting_vertex:
            problems.append(f"walk {name} does not run {cert.base_vertex} -> {cert.meeting_vertex}")
    if len(walks) == 2:
        if cert.base_vertex != cert.meeting_vertex:
            problems.append("commutator certificate needs closed walks")
        elif walks[0].steps == walks[1].inverse().steps:
            problems.append("commutator of mutually inverse walks")
    if problems:
        return problems
    red = reduce(cert.rebuild())
    if red.steps != cert.ell_reduced.steps or red.start != cert.ell_reduced.start:
        problems.append("reduced walk does not match the rebuilt one")
    ell = cert.ell_reduced
    if ell.length == 0 or not ell.is_closed or not is_non_backtracking(ell):
        problems.append("reduced walk is not a non-empty closed NB walk")
    if not is_edge_neutral(ell):
        problems.append("reduced walk is not edge-neutral")
    limit = (4 if len(walks) == 2 else 6) * cert.h
    if ell.length > limit:
        problems.append(f"bound {ell.length} exceeds {limit}")
    return problems
