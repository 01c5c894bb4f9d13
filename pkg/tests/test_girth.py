import math
import random

import pytest

from ablgirth.generators import complete, cycle, make_theta, path, petersen, random_regular, star
from ablgirth.girth import enumerate_nb_walks, girth, nb_distance_table, shortest_cycle_through
from ablgirth.graph import Multigraph
from ablgirth.walks import Walk, is_strongly_closed_nb

from oracles import all_nb_walks, brute_girth


def _check_witness(res):
    w = res.witness
    assert is_strongly_closed_nb(w)
    assert w.length == res.value
    assert len(w.edge_ids()) == w.length  # each edge at most once


def test_girth_examples():
    assert girth(cycle(5)).value == 5
    assert girth(complete(4)).value == 3
    assert girth(petersen()).value == 5
    for g in (cycle(5), complete(4), petersen()):
        _check_witness(girth(g))


def test_petersen_against_brute_force():
    g = petersen()
    assert brute_girth(g.edges, g.vertex_count) == 5


def test_forest_self_loop_and_parallel_pair():
    assert girth(path(4)).value == math.inf
    assert girth(path(4)).witness is None
    assert girth(Multigraph(3, [(0, 1), (1, 1)])).value == 1
    res = girth(Multigraph(3, [(0, 1), (1, 2), (2, 1)]))
    assert res.value == 2
    _check_witness(res)


def test_girth_matches_brute_force_on_random_multigraphs():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 7)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 9))]
        g = Multigraph(n, edges)
        res = girth(g)
        assert res.value == brute_girth(edges, n, max_len=n + 1)
        if res.value != math.inf:
            _check_witness(res)


def test_girth_invariant_under_relabeling():
    rng = random.Random(2)
    for seed in range(20):
        g = random_regular(16, 3, seed)
        vp = list(range(g.vertex_count))
        ep = list(range(g.edge_count))
        rng.shuffle(vp)
        rng.shuffle(ep)
        h = g.relabel(vp, ep)
        assert girth(h).value == girth(g).value


@pytest.mark.parametrize(
    "g,h,count",
    [(complete(4), 1, 3), (complete(4), 2, 6), (cycle(5), 3, 2)],
)
def test_enumerate_nb_walk_examples(g, h, count):
    for v in range(g.vertex_count):
        assert len(list(enumerate_nb_walks(g, v, h))) == count


@pytest.mark.parametrize("d", [3, 4])
def test_nb_walk_count_in_regular_graphs(d):
    g = random_regular(12, d, 9)
    for h in range(1, 7):
        walks = list(enumerate_nb_walks(g, 0, h))
        assert len(walks) == d * (d - 1) ** (h - 1)
        assert len({w.steps for w in walks}) == len(walks)


def test_enumeration_is_lexicographic_and_complete():
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2), (2, 0), (0, 0)])
    for h in range(1, 5):
        ours = [w.steps for w in enumerate_nb_walks(g, 0, h)]
        assert ours == sorted(ours)
        ref = {tuple(2 * e + (0 if s > 0 else 1) for e, s in w) for w in all_nb_walks(g.edges, 3, 0, h)}
        assert set(ours) == ref


def test_enumerate_rejects_zero_length():
    with pytest.raises(ValueError):
        list(enumerate_nb_walks(complete(4), 0, 0))


def test_distance_table_examples():
    assert sorted(nb_distance_table(cycle(5), 2).values()) == [0, 1, 1, 2, 2]
    assert sorted(nb_distance_table(complete(4), 0).values()) == [0, 1, 1, 1]
    table = nb_distance_table(star(5), 0)
    assert all(table[v] == 1 for v in range(1, 6))


def test_shortest_cycle_through_vertex():
    g = make_theta(1, 3, 4)
    # vertex 2 lies on the length-3 path: shortest cycle through it is 1 + 3
    c = shortest_cycle_through(g, 2)
    w = Walk(g, c)
    assert is_strongly_closed_nb(w) and w.length == 4 and 2 in w.vertices()
    assert shortest_cycle_through(g, 2, banned_edges={0}).__len__() == 7
    assert shortest_cycle_through(path(3), 1) is None
