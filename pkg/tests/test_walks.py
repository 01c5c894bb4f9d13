import random
from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ablgirth.generators import complete, cycle, make_figure_eight, random_regular
from ablgirth.girth import enumerate_nb_walks
from ablgirth.graph import Multigraph, directed
from ablgirth.walks import (
    Walk,
    WalkError,
    commutator,
    format_darts,
    is_edge_neutral,
    is_non_backtracking,
    is_strongly_closed_nb,
    net_counts,
    parse_darts,
    reduce,
    triple_word,
)

from helpers import random_nb_walk, random_walk

P = lambda e: directed(e, 1)  # noqa: E731
M = lambda e: directed(e, -1)  # noqa: E731


def test_non_backtracking_examples():
    g = Multigraph(2, [(0, 1)])
    assert not is_non_backtracking(Walk(g, [P(0), M(0)]))
    assert is_non_backtracking(Walk(g, [P(0)]))
    c3 = cycle(3)
    assert is_non_backtracking(Walk(c3, [P(0), P(1), P(2)]))


def test_strongly_closed_examples():
    c3 = cycle(3)
    assert is_strongly_closed_nb(Walk(c3, [P(0), P(1), P(2)]))
    g = Multigraph(3, [(0, 1), (1, 2)])
    assert not is_strongly_closed_nb(Walk(g, [P(0), P(1), M(1), M(0)]))
    assert not is_strongly_closed_nb(Walk(c3, [P(0), P(1)]))
    # closed and NB but first and last are inverse: a lollipop traversal
    lolly = Multigraph(2, [(0, 1), (1, 1)])
    assert not is_strongly_closed_nb(Walk(lolly, [P(0), P(1), M(0)]))


def test_rejects_invalid_walk():
    g = Multigraph(3, [(0, 1), (1, 2)])
    with pytest.raises(WalkError):
        Walk(g, [P(0), P(0)])
    with pytest.raises(WalkError):
        Walk(g, [])


def test_reduce_examples():
    g = Multigraph(4, [(0, 1), (1, 2), (1, 3)])
    r = reduce(Walk(g, [P(0), M(0)]))
    assert r.length == 0 and r.start == 0
    assert reduce(Walk(g, [P(0), P(1), M(1), P(2)])).steps == (P(0), P(2))


def test_net_count_examples():
    g = Multigraph(2, [(0, 1)])
    assert net_counts(Walk(g, [P(0), M(0)])) == {0: 0}
    assert net_counts(Walk(cycle(3), [P(0), P(1), P(2)])) == {0: 1, 1: 1, 2: 1}


def test_commutator_examples():
    fe = make_figure_eight(3, 3)
    a = Walk(fe, [P(0), P(1), P(2)])
    b = Walk(fe, [P(3), P(4), P(5)])
    ell = commutator(a, b)
    assert ell.length == 12 and reduce(ell).length == 12
    assert is_edge_neutral(ell) and is_strongly_closed_nb(ell)
    assert reduce(commutator(a, a)).length == 0
    with pytest.raises(WalkError):
        commutator(a, Walk(fe, [P(0)]))


def test_commutator_of_distinct_equal_length_walks_survives_reduction():
    g = complete(4)
    closed = [w for w in enumerate_nb_walks(g, 0, 3) if w.is_closed]
    assert len(closed) == 6
    checked = 0
    for i, a in enumerate(closed):
        for b in closed[i + 1:]:
            if a.steps == b.inverse().steps:
                continue
            ell = commutator(a, b)
            assert ell.length == 12 and is_edge_neutral(ell)
            assert reduce(ell).length > 0
            checked += 1
    assert checked == 12


def test_triple_word_examples():
    g = random_regular(20, 3, 7)
    a = next(enumerate_nb_walks(g, 0, 4))
    assert reduce(triple_word(a, a, a)).length == 0

    buckets = defaultdict(list)
    for w in enumerate_nb_walks(g, 0, 5):
        buckets[w.end].append(w)
    triples = [b[:3] for b in buckets.values() if len(b) >= 3]
    assert triples
    for x, y, z in triples:
        ell = triple_word(x, y, z)
        assert ell.length == 30 and ell.is_closed
        red = reduce(ell)
        assert red.length > 0 and is_edge_neutral(red) and is_non_backtracking(red)


def test_triple_word_net_counts_vanish_on_random_triples(walk_graphs):
    rng = random.Random(11)
    for _ in range(300):
        g = rng.choice(walk_graphs)
        v = rng.randrange(g.vertex_count)
        a = random_walk(g, rng, rng.randint(0, 6), v)
        # b, c: a bridge from v to a.end through random detours
        detour = random_walk(g, rng, rng.randint(0, 4), v)
        b = detour.concat(reduce(detour.inverse().concat(a)))
        c = random_walk(g, rng, 3, v)
        c = c.concat(c.inverse()).concat(a)
        assert not any(net_counts(triple_word(a, b, c)).values())
    with pytest.raises(WalkError):
        triple_word(a, b, Walk(g, (), (a.start + 1) % g.vertex_count))


def test_serialization_round_trip():
    steps = [P(3), M(7), P(0), M(0)]
    text = format_darts(steps)
    assert text == "+3,-7,+0,-0"
    assert parse_darts(text) == steps
    assert parse_darts("") == []
    with pytest.raises(WalkError):
        parse_darts("3,-1")


# ---------------------------------------------------------------------------
# properties


@st.composite
def walks(draw):
    g = draw(st.sampled_from(_GRAPHS))
    v = draw(st.integers(0, g.vertex_count - 1))
    picks = draw(st.lists(st.integers(0, 10**6), max_size=30))
    steps = []
    for p in picks:
        outs = g.out_darts(v)
        d = outs[p % len(outs)]
        steps.append(d)
        v = g.head(d)
    start = g.tail(steps[0]) if steps else v
    return Walk(g, steps, start)


_GRAPHS = [
    complete(4),
    random_regular(10, 3, 1),
    Multigraph(2, [(0, 1), (0, 1), (0, 0), (1, 1)]),
    Multigraph(1, [(0, 0), (0, 0)]),
]


@settings(max_examples=1000, deadline=None)
@given(walks())
def test_reduce_idempotent_inverse_and_neutral(w):
    r = reduce(w)
    assert is_non_backtracking(r)
    assert reduce(r) == r
    assert reduce(w.inverse()) == r.inverse()
    nonzero = lambda x: {e: k for e, k in net_counts(x).items() if k}  # noqa: E731
    assert nonzero(r) == nonzero(w)
    assert is_edge_neutral(r) == is_edge_neutral(w)
    assert r.start == w.start and r.end == w.end


def _random_schedule_reduce(steps, rng):
    steps = list(steps)
    while True:
        spots = [i for i in range(len(steps) - 1) if steps[i] == steps[i + 1] ^ 1]
        if not spots:
            return steps
        i = rng.choice(spots)
        del steps[i:i + 2]


def test_reduce_confluent_under_random_schedules(walk_graphs):
    rng = random.Random(5)
    for _ in range(1000):
        g = rng.choice(walk_graphs)
        w = random_walk(g, rng, rng.randint(0, 40))
        assert _random_schedule_reduce(w.steps, rng) == list(reduce(w).steps)


def test_inverse_is_anti_homomorphism_and_concat_associative(walk_graphs):
    rng = random.Random(6)
    for _ in range(1000):
        g = rng.choice(walk_graphs)
        w = random_walk(g, rng, rng.randint(0, 8))
        k = random_walk(g, rng, rng.randint(0, 8), w.end)
        j = random_walk(g, rng, rng.randint(0, 8), k.end)
        assert (w * k).inverse() == k.inverse() * w.inverse()
        assert (w * k) * j == w * (k * j)
        assert w.inverse().inverse() == w
        assert net_counts(w.inverse()) == {e: -x for e, x in net_counts(w).items()}


def _cyclically_reduced_closed_walk(g, rng, u, max_len=10):
    while True:
        length = rng.randint(1, max_len)
        x = random_nb_walk(g, rng, length, u)
        if x.end == u and x.steps[0] != x.steps[-1] ^ 1:
            return x


def test_reduced_power_length_of_conjugate():
    """|red(w^m)| = 2|y| + |m||x| for w = y x y^-1 with y maximal."""
    rng = random.Random(7)
    graphs = [random_regular(10, 3, 2), complete(5), random_regular(14, 4, 3)]
    cases = 0
    while cases < 1000:
        g = rng.choice(graphs)
        u = rng.randrange(g.vertex_count)
        x = _cyclically_reduced_closed_walk(g, rng, u)
        # z = y^-1 leaves u without undoing x's last step or entering x's first
        z = random_nb_walk(g, rng, rng.randint(0, 4), u, first_exclude=(x.steps[0], x.steps[-1] ^ 1))
        y = z.inverse()
        w = y * x * z
        assert is_non_backtracking(w) and w.is_closed
        for m in (1, 2, 3, -1, -2, -3):
            assert reduce(w.power(m)).length == 2 * y.length + abs(m) * x.length
            cases += 1
