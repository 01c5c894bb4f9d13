"""LPS Cayley graphs built from integral quaternions of norm ``p``.

The quotient group is modelled concretely in PGL(2, q): with ``i`` a
square root of -1 mod ``q`` the quaternion ``a0 + a1 i + a2 j + a3 k``
maps to the matrix ``[[a0 + i a1, a2 + i a3], [-a2 + i a3, a0 - i a1]]``.
Vertices are projective matrices normalized so that the first nonzero
entry (row-major) is 1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .girth import bfs_distances
from .graph import Multigraph
from .moore import MooreCertificate, scholium_certify
from .walks import Walk

__all__ = [
    "Quaternion",
    "LpsParams",
    "LpsGraph",
    "LpsSearchBudgetExceeded",
    "legendre",
    "quaternion_generators",
    "sqrt_minus_one",
    "quaternion_matrix",
    "pgl_normalize",
    "pgl_mul",
    "validate_params",
    "build_lps",
    "is_good",
    "r0",
    "goodness_witnesses",
    "find_closed_nb_walks",
    "certify_lps_abl",
    "lps_log_bound",
]


class LpsSearchBudgetExceeded(RuntimeError):
    """The closed-walk search hit its node budget before finding three walks."""


class Quaternion(NamedTuple):
    a0: int
    a1: int
    a2: int
    a3: int

    @property
    def norm(self) -> int:
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a, b, c, d = self
        e, f, g, h = o
        return Quaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )


Matrix = tuple[int, int, int, int]


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def quaternion_generators(p: int) -> list[Quaternion]:
    """Norm-``p`` quaternions with ``a0`` odd and positive and ``a1, a2, a3`` even."""
    if not isprime(p) or p % 4 != 1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    bound = math.isqrt(p)
    out = []
    for a0 in range(1, bound + 1, 2):
        rest = p - a0 * a0
        evens = range(-bound + (bound & 1), bound + 1, 2)
        for a1, a2 in product(evens, repeat=2):
            r = rest - a1 * a1 - a2 * a2
            if r < 0:
                continue
            a3 = math.isqrt(r)
            if a3 * a3 != r or a3 & 1:
                continue
            out.append(Quaternion(a0, a1, a2, a3))
            if a3:
                out.append(Quaternion(a0, a1, a2, -a3))
    return sorted(out)


def sqrt_minus_one(q: int) -> int:
    """Smallest positive ``i`` with ``i*i = -1 (mod q)``."""
    if q % 4 != 1:
        raise ValueError(f"-1 is not a square mod {q}")
    roots = sqrt_mod(q - 1, q, all_roots=True)
    if not roots:
        raise ValueError(f"-1 is not a square mod {q}")
    return min(roots)


def pgl_normalize(m: Matrix, q: int) -> Matrix:
    for x in m:
        if x % q:
            inv = pow(x, -1, q)
            return tuple(y * inv % q for y in m)
    raise ValueError("zero matrix")


def pgl_mul(x: Matrix, y: Matrix, q: int) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return pgl_normalize(((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q), q)


def quaternion_matrix(alpha: Quaternion, q: int, i: int | None = None) -> Matrix:
    if i is None:
        i = sqrt_minus_one(q)
    a0, a1, a2, a3 = alpha
    return pgl_normalize(((a0 + i * a1) % q, (a2 + i * a3) % q, (-a2 + i * a3) % q, (a0 - i * a1) % q), q)


@dataclass(frozen=True)
class LpsParams:
    p: int
    q: int
    legendre_pq: int
    bipartite: bool
    expected_n: int
    r0: int

    @property
    def degree(self) -> int:
        return self.p + 1

    @property
    def quoted_n(self) -> int:
        """The vertex count ``q(q^2 + 1)`` quoted in the literature for this family."""
        return self.q * (self.q ** 2 + 1)


@dataclass(frozen=True)
class LpsGraph:
    graph: Multigraph
    params: LpsParams
    labels: tuple[Matrix, ...]
    generators: tuple[Quaternion, ...]

    @property
    def identity(self) -> int:
        return 0

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    def notes(self) -> list[str]:
        out = []
        if self.n != self.params.expected_n:
            out.append(f"vertex count {self.n} differs from the group order {self.params.expected_n}")
        if self.n != self.params.quoted_n:
            out.append(
                f"vertex count {self.n} differs from q(q^2+1) = {self.params.quoted_n}; "
                f"|PGL(2,{self.params.q})| = {self.params.q * (self.params.q ** 2 - 1)}"
            )
        regime = "(p/q) = -1: PGL(2,q), bipartite" if self.params.legendre_pq == -1 else "(p/q) = +1: PSL(2,q), not bipartite"
        out.append(f"regime {regime}")
        return out


def validate_params(p: int, q: int) -> None:
    for name, x in (("p", p), ("q", q)):
        if not isprime(x) or x % 4 != 1:
            raise ValueError(f"{name} = {x} must be a prime congruent to 1 mod 4")
    if p == q:
        raise ValueError("p and q must differ")
    if q * q <= p:
        raise ValueError("need q > sqrt(p)")


def r0(p: int, q: int) -> int:
    """Smallest ``r >= 1`` with ``p**r > 10 q**2``."""
    r = 1
    while p ** r <= 10 * q * q:
        r += 1
    return r


def lps_params(p: int, q: int) -> LpsParams:
    validate_params(p, q)
    leg = legendre(p, q)
    order = q * (q * q - 1)
    return LpsParams(
        p=p, q=q, legendre_pq=leg, bipartite=leg == -1,
        expected_n=order if leg == -1 else order // 2, r0=r0(p, q),
    )


def build_lps(p: int, q: int) -> LpsGraph:
    """Cayley graph on the subgroup of PGL(2, q) generated by the norm-``p`` quaternions.

    Vertex 0 is the identity; ids follow breadth-first discovery.  For each
    vertex ``x`` and each generator of a conjugate pair ``{s, s-bar}``, one
    edge ``x -> x s`` is added; the conjugate gives the reverse direction,
    so every vertex has degree ``p + 1``.
    """
    params = lps_params(p, q)
    gens = quaternion_generators(p)
    i = sqrt_minus_one(q)
    mats = [quaternion_matrix(a, q, i) for a in gens]
    half = [m for a, m in zip(gens, mats) if a > a.conjugate()]

    identity = pgl_normalize((1, 0, 0, 1), q)
    index = {identity: 0}
    labels = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for m in mats:
            y = pgl_mul(x, m, q)
            if y not in index:
                index[y] = len(labels)
                labels.append(y)
                queue.append(y)
    edges = [(index[x], index[pgl_mul(x, m, q)]) for x in labels for m in half]
    return LpsGraph(Multigraph(len(labels), edges), params, tuple(labels), tuple(gens))


# ---------------------------------------------------------------------------
# number theory behind the closed-walk count


def is_good(n: int) -> bool:
    """True unless ``n = 4**a (8b + 7)``, i.e. iff ``n`` is a sum of three squares."""
    if n < 1:
        raise ValueError("n must be positive")
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def goodness_witnesses(p: int, q: int, r: int, ms=(4, 12, 20)) -> list[tuple[int, int, bool, bool]]:
    """``(m, 2 m p^r - m^2 q^2, positive, good)`` for each ``m``."""
    if r < 1:
        raise ValueError("r must be positive")
    out = []
    for m in ms:
        value = 2 * m * p ** r - m * m * q * q
        out.append((m, value, value > 0, value > 0 and is_good(value)))
    return out


def lps_log_bound(p: int, n: int) -> float:
    """``(16/3) log_p n``, the asymptotic abelian-girth bound for this family."""
    return 16 / 3 * math.log(n) / math.log(p)


def find_closed_nb_walks(g: Multigraph, v: int, length: int, count: int = 3, budget: int = 50_000_000) -> list[Walk]:
    """First ``count`` closed NB walks at ``v`` of the given length, in DFS order.

    A prefix is abandoned when its endpoint is further from ``v`` than the
    steps left.  ``budget`` caps the number of extensions tried.
    """
    dist = bfs_distances(g, v)
    outs = g._out
    ends = g._ends
    found: list[Walk] = []
    path: list[int] = []
    tried = 0
    stack = [iter(outs[v])]
    while stack:
        for d in stack[-1]:
            if path and d == path[-1] ^ 1:
                continue
            tried += 1
            if tried > budget:
                raise LpsSearchBudgetExceeded(f"budget of {budget} extensions used up at length {length}")
            left = length - len(path) - 1
            b = ends[d]
            if dist[b] > left:
                continue
            path.append(d)
            if left == 0:
                found.append(Walk(g, path, v))
                if len(found) == count:
                    return found
                path.pop()
                continue
            stack.append(iter(outs[b]))
            break
        else:
            stack.pop()
            if path:
                path.pop()
    return found


@dataclass(frozen=True)
class LpsCertificateReport:
    certificate: MooreCertificate | None
    length: int
    r0: int
    bound_limit: int
    log_bound: float
    falsified: bool


def certify_lps_abl(lps: LpsGraph | tuple[int, int], budget: int = 50_000_000) -> LpsCertificateReport:
    """Three closed NB walks of length ``2 r0`` at the identity, turned into a bound ``<= 8 r0``.

    If the search finishes without three walks, the report is marked
    ``falsified`` instead of raising.
    """
    if not isinstance(lps, LpsGraph):
        lps = build_lps(*lps)
    rr = lps.params.r0
    length = 2 * rr
    walks = find_closed_nb_walks(lps.graph, lps.identity, length, 3, budget)
    log_bound = lps_log_bound(lps.params.p, lps.n)
    if len(walks) < 3:
        return LpsCertificateReport(None, length, rr, 8 * rr, log_bound, True)
    cert = scholium_certify(lps.graph, lps.identity, length, walks)
    return LpsCertificateReport(cert, length, rr, 8 * rr, log_bound, False)
