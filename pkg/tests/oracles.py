"""Slow, obviously-correct reference computations used only by the tests.

None of these share code with the search paths they check.
"""

from __future__ import annotations

import itertools
import math


def darts_from(edges, v):
    """(dart, head) pairs leaving ``v``; dart = (edge id, +1/-1)."""
    out = []
    for e, (t, h) in enumerate(edges):
        if t == v:
            out.append(((e, 1), h))
        if h == v:
            out.append(((e, -1), t))
    return out


def all_nb_walks(edges, n, v, length):
    """Every non-backtracking walk of ``length`` steps from ``v`` by plain recursion."""
    out = []

    def rec(at, walk):
        if len(walk) == length:
            out.append(tuple(walk))
            return
        for (e, s), h in darts_from(edges, at):
            if walk and walk[-1] == (e, -s):
                continue
            walk.append((e, s))
            rec(h, walk)
            walk.pop()

    rec(v, [])
    return out


def walk_end(edges, v, walk):
    at = v
    for e, s in walk:
        t, h = edges[e]
        at = h if s > 0 else t
    return at


def brute_girth(edges, n, max_len=12):
    """Shortest closed NB walk length, by trying every walk."""
    for length in range(1, max_len + 1):
        for v in range(n):
            for w in all_nb_walks(edges, n, v, length):
                if walk_end(edges, v, w) == v:
                    return length
    return math.inf


def brute_abl(edges, n, max_len):
    """Shortest closed NB edge-neutral walk length (no pruning, no canonicalization)."""
    for length in range(1, max_len + 1):
        for v in range(n):
            for w in all_nb_walks(edges, n, v, length):
                if walk_end(edges, v, w) != v:
                    continue
                net = [0] * len(edges)
                for e, s in w:
                    net[e] += s
                if not any(net):
                    return length
    return math.inf


def simple_paths(edges, n, s, t):
    """Edge sets of all simple s-t paths (no repeated vertex)."""
    out = []

    def rec(at, seen, used):
        if at == t:
            out.append(frozenset(used))
            return
        for (e, _), h in darts_from(edges, at):
            if h in seen or h == at:
                continue
            seen.add(h)
            used.append(e)
            rec(h, seen, used)
            used.pop()
            seen.discard(h)

    rec(s, {s}, [])
    return out


def brute_three_disjoint_paths(edges, n, s, t):
    """Minimum total length of three pairwise edge-disjoint simple s-t paths."""
    paths = simple_paths(edges, n, s, t)
    best = math.inf
    for a, b, c in itertools.combinations(paths, 3):
        if a & b or a & c or b & c:
            continue
        best = min(best, len(a) + len(b) + len(c))
    return best
