"""Shared test utilities: reference graphs and brute-force checks."""

import random
from itertools import combinations

from trifree.graph import Graph


def brute_alpha(g: Graph) -> int:
    """Independence number by scanning all vertex subsets.  Only for n <= 16."""
    best = 0
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if g.adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok and mask.bit_count() > best:
            best = mask.bit_count()
    return best


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_triangle_free(rng: random.Random, n: int) -> Graph:
    """Insert shuffled pairs, skipping any whose endpoints share a neighbor."""
    adj = [0] * n
    edges = []
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    density = rng.random()
    for a, b in pairs:
        if adj[a] & adj[b]:
            continue
        if rng.random() > density:
            continue
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        edges.append((a, b))
    return Graph(n, edges)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


def double_c5() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    return Graph(10, edges)


def complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
