import itertools
import random

import pytest

from topopar.graph import Graph, from_edges, generate_topology

# acceptance criterion number -> PASS/FAIL line, printed in the terminal summary
ACCEPTANCE: dict[int, str] = {}

G6_EDGES = [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (1, 5),
            (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)]


def g6() -> Graph:
    return from_edges(6, G6_EDGES)


def connected(g: Graph) -> bool:
    if not g.vertices:
        return False
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def all_graphs(n):
    """Every labeled graph on n vertices (edge-subset enumeration)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def small_graphs(max_n=5):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


@pytest.fixture
def G6():
    return g6()


@pytest.fixture
def C6():
    return generate_topology("ring", 6)


@pytest.fixture
def K3():
    return generate_topology("complete", 3)


@pytest.fixture
def K4():
    return generate_topology("complete", 4)


@pytest.fixture
def Q3():
    return generate_topology("hypercube", 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
