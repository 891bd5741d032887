"""Simple undirected base graphs: parsing, validation, degree classes.

Vertices are 0-based internally. The text format is 1-based::

    # optional comments
    n m
    u v      (m lines)
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TextIO

from .errors import (
    DuplicateEdge,
    LabelOutOfRange,
    MalformedInput,
    NegativeExponent,
    OrderTooSmall,
    SelfLoop,
)


@dataclass(frozen=True)
class BaseGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _adj_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 2:
            raise OrderTooSmall(f"base graph needs order n >= 2, got {self.n}")
        if len(self.adjacency) != self.n:
            raise MalformedInput(
                f"adjacency has {len(self.adjacency)} rows for n={self.n}"
            )
        sets = tuple(frozenset(row) for row in self.adjacency)
        for v, row in enumerate(self.adjacency):
            if len(sets[v]) != len(row):
                raise DuplicateEdge(f"duplicate neighbour in adjacency of {v}")
            if v in sets[v]:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in row:
                if not 0 <= u < self.n:
                    raise LabelOutOfRange(f"neighbour {u} of {v} outside [0, {self.n})")
                if v not in sets[u]:
                    raise MalformedInput(f"adjacency not symmetric for {{{u}, {v}}}")
        object.__setattr__(self, "_adj_sets", sets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BaseGraph":
        """Build from 0-based edges, rejecting loops and repeated edges."""
        if n < 2:
            raise OrderTooSmall(f"base graph needs order n >= 2, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise LabelOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise DuplicateEdge(f"edge {{{u}, {v}}} listed twice")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(row)) for row in adj))

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class DegreeClasses:
    """Sparse partition of the vertices by degree: k -> sorted vertex IDs."""

    classes: dict[int, tuple[int, ...]]

    @property
    def counts(self) -> dict[int, int]:
        return {k: len(vs) for k, vs in self.classes.items()}

    def size(self, k: int) -> int:
        return len(self.classes.get(k, ()))


def degree_classes(graph: BaseGraph) -> DegreeClasses:
    buckets: dict[int, list[int]] = {}
    for v, row in enumerate(graph.adjacency):
        buckets.setdefault(len(row), []).append(v)
    return DegreeClasses({k: tuple(buckets[k]) for k in sorted(buckets)})


def base_zagreb(graph: BaseGraph, alpha: int) -> int:
    """General first Zagreb index sum(deg(v)**alpha), with 0**0 == 1."""
    if alpha < 0:
        raise NegativeExponent(f"alpha must be >= 0, got {alpha}")
    return sum(d**alpha for d in graph.degrees())


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise MalformedInput(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(source: str | TextIO) -> BaseGraph:
    """Parse the 1-based "n m" edge-list format into a validated graph."""
    text = source if isinstance(source, str) else source.read()
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise MalformedInput("missing 'n m' header")

    lineno, header = rows[0]
    if len(header) != 2:
        raise MalformedInput("header must be 'n m'", lineno)
    n, m = _ints(header, lineno)
    if n < 2:
        raise OrderTooSmall(f"base graph needs order n >= 2, got {n}", lineno)
    if m < 0:
        raise MalformedInput(f"negative edge count {m}", lineno)

    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else None
        raise MalformedInput(f"header promises {m} edges, found {len(body)}", at)

    adj: list[set[int]] = [set() for _ in range(n)]
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise MalformedInput("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        for label in (u, v):
            if not 1 <= label <= n:
                raise LabelOutOfRange(f"label {label} outside 1..{n}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        if v - 1 in adj[u - 1]:
            raise DuplicateEdge(f"edge {{{u}, {v}}} listed twice", lineno)
        adj[u - 1].add(v - 1)
        adj[v - 1].add(u - 1)
    return BaseGraph(n, tuple(tuple(sorted(row)) for row in adj))


def serialize_edge_list(graph: BaseGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{u + 1} {v + 1}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"
