"""Exact invariants of S(G,t) computed from base-graph data alone.

Nothing here enumerates S(G,t); every function runs in time polynomial in
t and the size of G, using Python integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .base_graph import base_zagreb, degree_classes
from .core import SierpinskiParams
from .errors import InternalInconsistency, NegativeExponent, NotATree


def _render(values: dict[int, int]) -> str:
    if not values:
        return ""
    width = max(len(str(k)) for k in values)
    return "".join(f"{k:>{width}}: {v}\n" for k, v in values.items())


@dataclass(frozen=True)
class DegreeHistogram:
    """Degree -> number of vertices with that degree. Zero counts are absent."""

    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def degree_sum(self) -> int:
        return sum(k * c for k, c in self.counts.items())

    def power_sum(self, alpha: int) -> int:
        return sum(c * k**alpha for k, c in self.counts.items())

    def to_text(self) -> str:
        return _render(self.counts)

    def to_dict(self) -> dict[str, str]:
        # decimal strings keep unbounded counts exact in any JSON consumer
        return {str(k): str(c) for k, c in self.counts.items()}


@dataclass(frozen=True)
class ZagrebTable:
    values: dict[int, int]

    def to_text(self) -> str:
        return _render(self.values)

    def to_dict(self) -> dict[str, str]:
        return {str(a): str(v) for a, v in self.values.items()}


def geometric_sum(n: int, terms: int) -> int:
    """1 + n + ... + n**(terms-1), accumulated without division."""
    total = 0
    power = 1
    for _ in range(terms):
        total += power
        power *= n
    return total


def degree_histogram_closed(params: SierpinskiParams) -> DegreeHistogram:
    base = params.base
    n, t = params.n, params.t
    sizes = degree_classes(base).counts
    outer = n ** (t - 1)
    geo = geometric_sum(n, t - 1)

    counts = {}
    for k in range(base.min_degree, base.max_degree + 2):
        here = sizes.get(k, 0)
        below = sizes.get(k - 1, 0)
        c = here * outer - geo * (k * here - (k - 1) * below)
        if c < 0:
            raise InternalInconsistency(f"negative count {c} for degree {k}")
        if c:
            counts[k] = c
    return DegreeHistogram(counts)


def min_degree(params: SierpinskiParams) -> int:
    return params.base.min_degree


def max_degree(params: SierpinskiParams) -> int:
    base = params.base
    if params.t == 1 or base.m == 0:
        return base.max_degree
    return base.max_degree + 1


def zagreb_closed(params: SierpinskiParams, alpha: int) -> int:
    if alpha < 0:
        raise NegativeExponent(f"alpha must be >= 0, got {alpha}")
    base = params.base
    n, t = params.n, params.t
    geo = geometric_sum(n, t - 1)
    # (n^t - n^(t-1) + (n^(t-1) - 1) alpha) / (n - 1), split into exact parts
    lead = n ** (t - 1) + geo * alpha
    tail = sum(comb(alpha, j - 1) * base_zagreb(base, j) for j in range(1, alpha))
    return lead * base_zagreb(base, alpha) + geo * tail


def zagreb_table(params: SierpinskiParams, alphas) -> ZagrebTable:
    return ZagrebTable({a: zagreb_closed(params, a) for a in alphas})


def vertex_count(params: SierpinskiParams) -> int:
    return params.n**params.t


def edge_count(params: SierpinskiParams) -> int:
    return geometric_sum(params.n, params.t) * params.base.m


def first_zagreb(params: SierpinskiParams) -> int:
    """M1 of S(G,t), cross-checked against its specialised expansion."""
    base = params.base
    n, t = params.n, params.t
    general = zagreb_closed(params, 2)
    num, rem = divmod(n**t + n ** (t - 1) - 2, n - 1)
    special = num * base_zagreb(base, 2) + geometric_sum(n, t - 1) * 2 * base.m
    if rem or special != general:
        raise InternalInconsistency(f"M1 paths disagree: {general} vs {special}")
    return general


def forgotten_index(params: SierpinskiParams) -> int:
    """F of S(G,t), cross-checked against its specialised expansion."""
    base = params.base
    n, t = params.n, params.t
    general = zagreb_closed(params, 3)
    num, rem = divmod(n**t + 2 * n ** (t - 1) - 3, n - 1)
    special = num * base_zagreb(base, 3) + geometric_sum(n, t - 1) * (
        2 * base.m + 3 * base_zagreb(base, 2)
    )
    if rem or special != general:
        raise InternalInconsistency(f"F paths disagree: {general} vs {special}")
    return general


def tree_leaf_count(params: SierpinskiParams) -> int:
    base = params.base
    if not base.is_tree():
        raise NotATree("leaf-count formula needs a tree base graph")
    n, t = params.n, params.t
    leaves = degree_classes(base).size(1)
    num, rem = divmod(leaves * (n**t - 2 * n ** (t - 1) + 1), n - 1)
    if rem:
        raise InternalInconsistency("leaf-count numerator not divisible by n - 1")
    return num
