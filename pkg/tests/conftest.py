import random
from itertools import combinations, permutations

import pytest

from gallai_ramsey.coloring import EdgeColoring, new_complete
from gallai_ramsey.construct import BlowupSpec, blow_up

ACCEPTANCE_LOG = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)


def random_coloring(rng, n, k):
    return EdgeColoring.from_function(n, k, lambda u, v: rng.randint(1, k))


def random_gallai(rng, n, k):
    """Recursive random blow-up: a 1- or 2-colored base over random sub-blocks."""
    if n == 1:
        return new_complete(1, k, rng.randint(1, k))
    t = rng.randint(2, min(n, 5))
    cuts = sorted(rng.sample(range(1, n), t - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    pair = rng.sample(range(1, k + 1), min(2, k))
    base = EdgeColoring.from_function(t, k, lambda u, v: rng.choice(pair))
    return blow_up(BlowupSpec(base, [random_gallai(rng, m, k) for m in sizes]))


# brute-force oracles (plain enumeration over the color matrix) -----------------

def brute_rainbow(c):
    return [t for t in combinations(range(c.n), 3)
            if len({c.color(t[0], t[1]), c.color(t[0], t[2]), c.color(t[1], t[2])}) == 3]


def brute_has_clique(c, size, color):
    return any(all(c.color(a, b) == color for a, b in combinations(q, 2))
               for q in combinations(range(c.n), size))


def brute_has_k4plus(c, color):
    for q in combinations(range(c.n), 4):
        if all(c.color(a, b) == color for a, b in combinations(q, 2)):
            if any(c.color(x, y) == color for x in q for y in range(c.n) if y not in q):
                return True
    return False


def brute_has_pattern(c, p, color):
    return any(all(c.color(emb[a], emb[b]) == color for a, b in p.edges)
               for emb in permutations(range(c.n), p.m))


@pytest.fixture
def rng():
    return random.Random(20261016)
