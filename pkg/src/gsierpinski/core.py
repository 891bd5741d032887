"""Vertices, adjacency and edge streams of generalized Sierpinski graphs.

A vertex of S(G, t) is a word of t base-vertex IDs, stored as a tuple with
the most significant letter first. Words rank bijectively onto [0, n**t) by
reading them as base-n numerals.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from .base_graph import BaseGraph
from .errors import (
    CapExceeded,
    LengthMismatch,
    LetterOutOfRange,
    MalformedInput,
    RankOutOfRange,
    SierpinskiError,
)

Word = tuple[int, ...]

DEFAULT_EXPLICIT_CAP = 10**6


@dataclass(frozen=True)
class SierpinskiParams:
    base: BaseGraph
    t: int
    explicit_cap: int = DEFAULT_EXPLICIT_CAP

    def __post_init__(self):
        if self.t < 1:
            raise SierpinskiError(f"dimension t must be >= 1, got {self.t}")
        if self.explicit_cap < 1:
            raise SierpinskiError(f"explicit_cap must be >= 1, got {self.explicit_cap}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def order(self) -> int:
        return self.base.n**self.t

    def check_cap(self) -> None:
        if self.order > self.explicit_cap:
            raise CapExceeded(
                f"S(G,{self.t}) has {self.order} vertices, above the explicit cap "
                f"{self.explicit_cap}; use the closed-form commands instead"
            )


def _check_word(params: SierpinskiParams, w: Sequence[int]) -> None:
    if len(w) != params.t:
        raise LengthMismatch(f"word has length {len(w)}, expected t={params.t}")
    n = params.n
    for letter in w:
        if not 0 <= letter < n:
            raise LetterOutOfRange(f"letter {letter} outside [0, {n})")


def word_rank(params: SierpinskiParams, w: Sequence[int]) -> int:
    _check_word(params, w)
    n = params.n
    r = 0
    for letter in w:
        r = r * n + letter
    return r


def word_unrank(params: SierpinskiParams, r: int) -> Word:
    if not 0 <= r < params.order:
        raise RankOutOfRange(f"rank {r} outside [0, {params.n}**{params.t})")
    n = params.n
    letters = [0] * params.t
    for i in range(params.t - 1, -1, -1):
        r, letters[i] = divmod(r, n)
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    """1-based dotted form, e.g. (0, 2, 2) -> '1.3.3'."""
    return ".".join(str(letter + 1) for letter in w)


def parse_word(params: SierpinskiParams, text: str) -> Word:
    try:
        w = tuple(int(tok) - 1 for tok in text.strip().split("."))
    except ValueError:
        raise MalformedInput(f"bad word {text!r}") from None
    _check_word(params, w)
    return w


def is_edge(params: SierpinskiParams, u: Sequence[int], v: Sequence[int]) -> bool:
    _check_word(params, u)
    _check_word(params, v)
    # condition (i) pins i to the first differing position
    for i, (a, b) in enumerate(zip(u, v)):
        if a != b:
            break
    else:
        return False
    if not params.base.has_edge(a, b):
        return False
    return all(u[j] == b and v[j] == a for j in range(i + 1, params.t))


def _last_differing(x: Sequence[int]) -> int:
    """Index of the rightmost letter differing from the final one, or -1."""
    last = x[-1]
    for i in range(len(x) - 2, -1, -1):
        if x[i] != last:
            return i
    return -1


def neighbors(params: SierpinskiParams, x: Sequence[int]) -> set[Word]:
    _check_word(params, x)
    x = tuple(x)
    last = x[-1]
    head = x[:-1]
    result = {head + (y,) for y in params.base.adjacency[last]}
    i = _last_differing(x)
    if i >= 0 and params.base.has_edge(x[i], last):
        result.add(x[:i] + (last,) + (x[i],) * (params.t - i - 1))
    return result


def degree_of(params: SierpinskiParams, x: Sequence[int]) -> int:
    _check_word(params, x)
    base = params.base
    last = x[-1]
    i = _last_differing(x)
    if i >= 0 and base.has_edge(x[i], last):
        return base.degree(last) + 1
    return base.degree(last)


def enumerate_edges(params: SierpinskiParams) -> Iterator[tuple[Word, Word]]:
    """Stream every edge of S(G,t) once, ordered by level, prefix, base edge.

    At level i the two words share a prefix of length i-1 and continue as
    a.b...b and b.a...a for a base edge {a, b} with a < b, so the first word
    always has the smaller rank.
    """
    params.check_cap()
    n, t = params.n, params.t
    base_edges = params.base.edges()
    for level in range(1, t + 1):
        tail = t - level
        for prefix in product(range(n), repeat=level - 1):
            for a, b in base_edges:
                yield prefix + (a,) + (b,) * tail, prefix + (b,) + (a,) * tail


def enumerate_edge_ranks(params: SierpinskiParams) -> Iterator[tuple[int, int]]:
    """Rank-valued twin of enumerate_edges, same order, no word tuples built."""
    params.check_cap()
    n, t = params.n, params.t
    base_edges = params.base.edges()
    for level in range(1, t + 1):
        tail = t - level
        scale = n**tail
        repunit = (scale - 1) // (n - 1)  # rank of the word 1...1 of length tail
        offsets = [(a * scale + b * repunit, b * scale + a * repunit) for a, b in base_edges]
        block = scale * n
        for prefix_rank in range(n ** (level - 1)):
            origin = prefix_rank * block
            for du, dv in offsets:
                yield origin + du, origin + dv


def iter_words(params: SierpinskiParams) -> Iterator[Word]:
    """All words in rank order."""
    params.check_cap()
    return product(range(params.n), repeat=params.t)
