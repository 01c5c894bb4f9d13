import itertools
import random

from ablgirth.flow import max_edge_disjoint_paths, min_cost_disjoint_paths
from ablgirth.generators import complete, cycle, make_theta
from ablgirth.graph import Multigraph

from oracles import brute_three_disjoint_paths


def _check_paths(g, paths, s, t):
    used = [d >> 1 for p in paths for d in p]
    assert len(used) == len(set(used))
    for p in paths:
        assert g.tail(p[0]) == s and g.head(p[-1]) == t
        for a, b in zip(p, p[1:]):
            assert g.head(a) == g.tail(b)


def test_k4_adjacent_pair():
    g = complete(4)
    paths = min_cost_disjoint_paths(g, 0, 1, 3)
    _check_paths(g, paths, 0, 1)
    assert sorted(map(len, paths)) == [1, 2, 2]
    assert brute_three_disjoint_paths(g.edges, 4, 0, 1) == 5


def test_cycle_has_only_two_paths():
    assert min_cost_disjoint_paths(cycle(5), 0, 2, 3) is None
    assert max_edge_disjoint_paths(cycle(5), 0, 2) == 2


def test_theta_terminals():
    g = make_theta(2, 3, 4)
    paths = min_cost_disjoint_paths(g, 0, 1, 3)
    assert sorted(map(len, paths)) == [2, 3, 4]
    assert max_edge_disjoint_paths(g, 0, 1, limit=2) == 2


def test_banned_edges_are_avoided():
    g = complete(4)
    paths = min_cost_disjoint_paths(g, 0, 1, 2, banned={0})
    assert all(d >> 1 != 0 for p in paths for d in p)
    assert sum(map(len, paths)) == 4


def test_min_cost_matches_brute_force():
    rng = random.Random(8)
    checked = 0
    for _ in range(150):
        n = rng.randint(2, 6)
        edges = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(3, 10))]
        g = Multigraph(n, edges)
        for s, t in itertools.combinations(range(n), 2):
            ref = brute_three_disjoint_paths(edges, n, s, t)
            paths = min_cost_disjoint_paths(g, s, t, 3)
            if paths is None:
                assert ref == float("inf")
                continue
            _check_paths(g, paths, s, t)
            assert sum(map(len, paths)) == ref
            checked += 1
    assert checked > 50
