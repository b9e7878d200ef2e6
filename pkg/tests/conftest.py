import random

import pytest

from ncdigraph.digraphs import Digraph, enumerate_noncrossing_digraphs, is_noncrossing


@pytest.fixture(scope="session")
def digraphs_by_n():
    """Noncrossing digraph lists for small n, shared across tests."""
    return {n: list(enumerate_noncrossing_digraphs(n)) for n in range(1, 5)}


def random_noncrossing_digraph(rng: random.Random, n_max: int = 8) -> Digraph:
    n = rng.randint(1, n_max)
    pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
    while True:
        arcs = set()
        for (u, v) in pairs:
            state = rng.randrange(8)
            if state == 1:
                arcs.add((u, v))
            elif state == 2:
                arcs.add((v, u))
            elif state == 3:
                arcs.add((u, v))
                arcs.add((v, u))
        g = Digraph(n, frozenset(arcs))
        if is_noncrossing(g):
            return g
