"""Named base graphs used by the verification suite."""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations

from .base_graph import BaseGraph

RANDOM_SEED = 20240517
RANDOM_COUNT = 20


def path(n: int) -> BaseGraph:
    return BaseGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> BaseGraph:
    return BaseGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> BaseGraph:
    return BaseGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> BaseGraph:
    return BaseGraph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> BaseGraph:
    return BaseGraph.from_edges(n, [])


def petersen() -> BaseGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return BaseGraph.from_edges(10, outer + spokes + inner)


def random_graphs(count: int = RANDOM_COUNT, seed: int = RANDOM_SEED) -> list[BaseGraph]:
    """Reproducible G(n, 1/2) samples with 2 <= n <= 6."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, 6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        graphs.append(BaseGraph.from_edges(n, edges))
    return graphs


def named_corpus() -> list[tuple[str, BaseGraph]]:
    graphs = [(f"P{n}", path(n)) for n in range(2, 6)]
    graphs += [(f"C{n}", cycle(n)) for n in range(3, 7)]
    graphs += [(f"K1,{k}", star(k)) for k in range(2, 5)]
    graphs += [(f"K{n}", complete(n)) for n in range(2, 6)]
    graphs.append(("Petersen", petersen()))
    graphs += [
        ("empty2", empty(2)),
        ("empty3", empty(3)),
        ("K2+K1", BaseGraph.from_edges(3, [(0, 1)])),
        ("P3+2K1", BaseGraph.from_edges(5, [(0, 1), (1, 2)])),
        ("K3+K1", BaseGraph.from_edges(4, [(0, 1), (1, 2), (0, 2)])),
    ]
    graphs += [(f"random{i:02d}", g) for i, g in enumerate(random_graphs())]
    return graphs


def corpus_instances(max_order: int) -> Iterator[tuple[str, BaseGraph, int]]:
    """Every (name, graph, t) in the corpus with n**t <= max_order."""
    for name, graph in named_corpus():
        t = 1
        while graph.n**t <= max_order:
            yield name, graph, t
            t += 1
