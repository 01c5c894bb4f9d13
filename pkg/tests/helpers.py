import random

from ablgirth.walks import Walk


def random_walk(g, rng: random.Random, length: int, start=None) -> Walk:
    """Uniform random walk (backtracking allowed)."""
    start = rng.randrange(g.vertex_count) if start is None else start
    v = start
    steps = []
    for _ in range(length):
        d = rng.choice(g.out_darts(v))
        steps.append(d)
        v = g.head(d)
    return Walk(g, steps, start)


def random_nb_walk(g, rng: random.Random, length: int, start: int, first_exclude=()) -> Walk:
    steps = []
    v = start
    for i in range(length):
        choices = [d for d in g.out_darts(v) if not (steps and d == steps[-1] ^ 1)]
        if i == 0:
            choices = [d for d in choices if d not in first_exclude]
        d = rng.choice(choices)
        steps.append(d)
        v = g.head(d)
    return Walk(g, steps, start)
