"""Brute-force oracles over explicitly constructed S(G,t).

Degrees here come from counting edge incidences in the edge stream, never
from the last-letter degree rule, so an oracle and the closed forms share
no code path for the quantity under test.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from . import closed_form as cf
from .core import SierpinskiParams, degree_of, enumerate_edge_ranks, iter_words
from .errors import InternalInconsistency, NegativeExponent


def incidence_degrees(params: SierpinskiParams) -> tuple[list[int], int]:
    """Per-rank degrees counted from the edge stream, plus the stream length."""
    params.check_cap()
    degrees = [0] * params.order
    edges = 0
    for u, v in enumerate_edge_ranks(params):
        degrees[u] += 1
        degrees[v] += 1
        edges += 1
    return degrees, edges


def oracle_degrees(params: SierpinskiParams) -> list[int]:
    """Incidence degrees, each confirmed against the per-word degree rule."""
    degrees, _ = incidence_degrees(params)
    for rank, word in enumerate(iter_words(params)):
        if degree_of(params, word) != degrees[rank]:
            raise InternalInconsistency(
                f"word rank {rank}: degree rule gives {degree_of(params, word)}, "
                f"edge stream gives {degrees[rank]}"
            )
    return degrees


def histogram_bruteforce(params: SierpinskiParams) -> cf.DegreeHistogram:
    census = Counter(oracle_degrees(params))
    return cf.DegreeHistogram({k: census[k] for k in sorted(census)})


def zagreb_bruteforce(params: SierpinskiParams, alpha: int) -> int:
    if alpha < 0:
        raise NegativeExponent(f"alpha must be >= 0, got {alpha}")
    params.check_cap()
    degrees, _ = incidence_degrees(params)
    return sum(d**alpha for d in degrees)


@dataclass
class Check:
    name: str
    closed: object
    oracle: object
    passed: bool


@dataclass
class CrossCheckReport:
    graph_id: str
    t: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, closed, oracle) -> None:
        self.checks.append(Check(name, closed, oracle, closed == oracle))

    def to_text(self) -> str:
        lines = [f"cross-check {self.graph_id} t={self.t}"]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  {mark}  {c.name:<{width}}  closed={_show(c.closed)} oracle={_show(c.oracle)}")
        lines.append("overall: " + ("pass" if self.overall else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "t": self.t,
            "overall": self.overall,
            "checks": [
                {**asdict(c), "closed": _jsonable(c.closed), "oracle": _jsonable(c.oracle)}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _jsonable(value):
    if isinstance(value, cf.DegreeHistogram):
        return value.to_dict()
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    return value


def _show(value) -> str:
    if isinstance(value, cf.DegreeHistogram):
        return "{" + ", ".join(f"{k}: {c}" for k, c in value.counts.items()) + "}"
    return str(value)


def cross_check(
    params: SierpinskiParams, alpha_max: int = 4, graph_id: str = "G"
) -> CrossCheckReport:
    """Compare every closed form with the explicit construction.

    All checks run even after a failure; the report carries the full picture.
    """
    params.check_cap()
    report = CrossCheckReport(graph_id, params.t)

    incidence, stream_length = incidence_degrees(params)
    rule_agrees = all(
        degree_of(params, w) == incidence[r] for r, w in enumerate(iter_words(params))
    )
    report.add("degree rule vs edge stream", True, rule_agrees)

    census = Counter(incidence)
    oracle_hist = cf.DegreeHistogram({k: census[k] for k in sorted(census)})
    report.add("histogram", cf.degree_histogram_closed(params), oracle_hist)
    report.add("vertex_count", cf.vertex_count(params), len(incidence))
    report.add("edge_count", cf.edge_count(params), stream_length)
    report.add("min_degree", cf.min_degree(params), min(incidence))
    report.add("max_degree", cf.max_degree(params), max(incidence))
    for alpha in range(alpha_max + 1):
        report.add(
            f"zagreb[{alpha}]",
            cf.zagreb_closed(params, alpha),
            sum(d**alpha for d in incidence),
        )
    if params.base.is_tree():
        report.add("tree_leaf_count", cf.tree_leaf_count(params), census.get(1, 0))
    return report
