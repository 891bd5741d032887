import json

import pytest

from gsierpinski import (
    SierpinskiParams,
    cross_check,
    degree_classes,
    histogram_bruteforce,
    zagreb_bruteforce,
)
from gsierpinski.corpus import complete, corpus_instances, empty, named_corpus
from gsierpinski.errors import CapExceeded, NegativeExponent
from gsierpinski.verify import CrossCheckReport, incidence_degrees
from oracles import degree_census


def test_histogram_bruteforce_examples(c4):
    assert histogram_bruteforce(SierpinskiParams(c4, 3)).counts == {2: 24, 3: 40}
    assert histogram_bruteforce(SierpinskiParams(complete(3), 2)).counts == {2: 3, 3: 6}


@pytest.mark.parametrize("name, g", named_corpus())
def test_histogram_bruteforce_t1(name, g):
    assert histogram_bruteforce(SierpinskiParams(g, 1)).counts == degree_classes(g).counts


def test_zagreb_bruteforce_examples(c4, k2):
    assert zagreb_bruteforce(SierpinskiParams(c4, 3), 2) == 456
    assert zagreb_bruteforce(SierpinskiParams(c4, 3), 0) == 64
    assert zagreb_bruteforce(SierpinskiParams(k2, 3), 1) == 14
    with pytest.raises(NegativeExponent):
        zagreb_bruteforce(SierpinskiParams(c4, 3), -1)


def test_oracles_respect_cap(c4):
    p = SierpinskiParams(c4, 4, explicit_cap=100)
    for call in (histogram_bruteforce, lambda p: zagreb_bruteforce(p, 1), cross_check):
        with pytest.raises(CapExceeded):
            call(p)


@pytest.mark.parametrize("name, g, t", list(corpus_instances(3000)))
def test_oracle_totals_and_independent_census(name, g, t):
    p = SierpinskiParams(g, t)
    degrees, stream_length = incidence_degrees(p)
    assert len(degrees) == g.n**t
    assert stream_length * (g.n - 1) == (g.n**t - 1) * g.m
    assert histogram_bruteforce(p).counts == degree_census(g.n, g.edges(), t)


def test_cross_check_c4(c4):
    report = cross_check(SierpinskiParams(c4, 3), alpha_max=4, graph_id="C4")
    assert report.overall
    names = [c.name for c in report.checks]
    assert "histogram" in names and "zagreb[4]" in names
    assert "tree_leaf_count" not in names


def test_cross_check_p3_includes_leaves(p3):
    report = cross_check(SierpinskiParams(p3, 2), alpha_max=3)
    leaf = [c for c in report.checks if c.name == "tree_leaf_count"]
    assert report.overall
    assert leaf[0].closed == leaf[0].oracle == 4


def test_cross_check_empty_graph():
    report = cross_check(SierpinskiParams(empty(3), 3), alpha_max=2)
    assert report.overall
    hist = next(c for c in report.checks if c.name == "histogram")
    assert hist.oracle.counts == {0: 27}


def test_report_collects_every_failure():
    report = CrossCheckReport("demo", 2)
    report.add("a", 1, 2)
    report.add("b", 3, 3)
    report.add("c", 5, 4)
    assert not report.overall
    assert [c.passed for c in report.checks] == [False, True, False]
    assert report.to_text().count("FAIL") == 3


def test_report_serialisation(c4):
    report = cross_check(SierpinskiParams(c4, 2), alpha_max=2, graph_id="C4")
    doc = json.loads(report.to_json())
    assert doc["overall"] is True
    assert doc["graph_id"] == "C4"
    hist = next(r for r in doc["checks"] if r["name"] == "histogram")
    assert hist["closed"] == hist["oracle"]
    assert all(set(r) == {"name", "closed", "oracle", "passed"} for r in doc["checks"])
    assert "overall: pass" in report.to_text()
