"""Acceptance criteria, one test group per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary ends with a
PASS/FAIL line for each criterion.
"""

import itertools
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import (
    FIXTURES,
    all_graph_classes,
    complete,
    complete_bipartite,
    cycle,
    graph_from_pairs,
    petersen,
    star,
)
from girththick import io
from girththick.construct import construct, construct_special, k10_decomposition
from girththick.graph import Decomposition, SimpleGraph, edge, make_complete_tripartite
from girththick.metrics import (
    girth,
    lower_bound_table,
    lower_bound_theta4_knnn,
    theta4_knnn,
)
from girththick.oracles import has_kuratowski_minor
from girththick.planarity import is_planar, planarity_verdict, validate_embedding
from girththick.verify import exact_girth_thickness_small, verify_decomposition


def crit(number, title):
    return pytest.mark.acceptance(str(number), title)


def fixture(name):
    return io.loads_edgelist((FIXTURES / name).read_text()).decomposition


# -- 1 ------------------------------------------------------------------------

@crit(1, "construct(n) verifies with theta4 parts for n = 1..60 in < 10 s")
def test_construct_verifies_up_to_60():
    start = time.perf_counter()
    failures = []
    for n in range(1, 61):
        d = construct(n)
        report = verify_decomposition(d, 4)
        if not report.verdict or d.n_parts != theta4_knnn(n):
            failures.append(n)
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < 10.0, f"took {elapsed:.2f} s"


# -- 2 ------------------------------------------------------------------------

@crit(2, "lower bound equals ceil((n+1)/2) for 2 <= n <= 10^6 in < 1 s")
def test_lower_bound_closed_form_table():
    start = time.perf_counter()
    table = lower_bound_table(10**6)
    elapsed = time.perf_counter() - start
    n = np.arange(2, 10**6 + 1, dtype=np.float64)
    expected = np.ceil((n + 1) / 2).astype(np.int64)
    assert np.array_equal(table, expected)
    assert elapsed < 1.0


@crit(2, "lower bound equals ceil((n+1)/2) for 2 <= n <= 10^6 in < 1 s")
def test_lower_bound_scalar_full_range():
    start = time.perf_counter()
    values = [lower_bound_theta4_knnn(n) for n in range(2, 10**6 + 1)]
    elapsed = time.perf_counter() - start
    assert values == [-(-(n + 1) // 2) for n in range(2, 10**6 + 1)]
    assert elapsed < 1.0, f"took {elapsed:.2f} s"


@crit(2, "lower bound equals ceil((n+1)/2) for 2 <= n <= 10^6 in < 1 s")
@pytest.mark.parametrize("n", [2, 3, 4, 5, 10, 11, 999, 1000, 10**6 - 1, 10**6])
def test_lower_bound_exact_rational(n):
    bound = Fraction(3 * n * n, 2 * (3 * n - 2))
    assert lower_bound_theta4_knnn(n) == math.ceil(bound) == math.ceil(Fraction(n + 1, 2))


# -- 3 ------------------------------------------------------------------------

@crit(3, "K_10 decomposition verifies and theta = 3 (lower bound ceil(45/16) = 3)")
def test_k10():
    d = k10_decomposition()
    report = verify_decomposition(d, 4)
    assert report.verdict
    assert report.host_edge_count == 45
    assert math.ceil(Fraction(45, 16)) == 3
    assert report.bounds == (3, 3)
    assert "exactly 3" in report.summary()
    assert sorted(p.edge_count for p in report.parts) == [14, 15, 16]


# -- 4 ------------------------------------------------------------------------

@crit(4, "construct(4), construct(5) equal the figure fixtures; construct_special(3) verifies")
@pytest.mark.parametrize("n, name", [(4, "k444_figure.edges"), (5, "k555_figure.edges")])
def test_matches_figure(n, name):
    ours = construct(n)
    figure = fixture(name)
    assert ours.host == figure.host
    assert sorted(map(sorted, ours.parts)) == sorted(map(sorted, figure.parts))


@crit(4, "construct(4), construct(5) equal the figure fixtures; construct_special(3) verifies")
def test_special_3_verifies():
    report = verify_decomposition(construct_special(3), 4)
    assert report.verdict
    assert len(report.parts) == 2


# -- 5 ------------------------------------------------------------------------

@crit(5, "exhaustive oracle gives 2 for K_{1,1,1} and K_{2,2,2} in < 5 s")
@pytest.mark.parametrize("n", [1, 2])
def test_exhaustive_small(n):
    start = time.perf_counter()
    k = exact_girth_thickness_small(make_complete_tripartite(n), 4)
    elapsed = time.perf_counter() - start
    assert k == 2
    assert elapsed < 5.0


# -- 6 ------------------------------------------------------------------------

@crit(6, "planarity suite: Kuratowski graphs, minor-oracle agreement, Euler validation")
def test_kuratowski_graphs_rejected():
    assert not planarity_verdict(complete(5))
    assert not planarity_verdict(complete_bipartite(3, 3))


@crit(6, "planarity suite: Kuratowski graphs, minor-oracle agreement, Euler validation")
@pytest.mark.parametrize("base", ["K5", "K3,3"])
def test_kuratowski_minus_any_edge_accepted(base):
    g = complete(5) if base == "K5" else complete_bipartite(3, 3)
    for e in sorted(g.edges):
        h = SimpleGraph(g.vertices, g.edges - {e})
        result = is_planar(h)
        assert result.is_planar, e
        assert validate_embedding(h, result.embedding)


def _check_against_oracle(g):
    result = is_planar(g)
    assert result.is_planar == (not has_kuratowski_minor(g))
    if result.is_planar:
        assert validate_embedding(g, result.embedding)


@crit(6, "planarity suite: Kuratowski graphs, minor-oracle agreement, Euler validation")
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_labelled_graphs_up_to_5(n):
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        _check_against_oracle(
            graph_from_pairs(n, [s for b, s in enumerate(slots) if mask >> b & 1]))


@crit(6, "planarity suite: Kuratowski graphs, minor-oracle agreement, Euler validation")
def test_all_graphs_on_6_vertices():
    classes = all_graph_classes(6)
    assert len(classes) == 156
    non_planar = 0
    for g in classes:
        _check_against_oracle(g)
        non_planar += not planarity_verdict(g)
    assert non_planar > 0


@crit(6, "planarity suite: Kuratowski graphs, minor-oracle agreement, Euler validation")
def test_random_graphs_7_to_8():
    rng = np.random.default_rng(20240607)
    verdicts = []
    for _ in range(200):
        n = int(rng.integers(7, 9))
        p = float(rng.uniform(0.3, 0.8))
        slots = list(itertools.combinations(range(n), 2))
        keep = rng.random(len(slots)) < p
        g = graph_from_pairs(n, [s for s, k in zip(slots, keep) if k])
        _check_against_oracle(g)
        verdicts.append(planarity_verdict(g))
    assert any(verdicts) and not all(verdicts)


# -- 7 ------------------------------------------------------------------------

@crit(7, "girth: C_k = k for 3 <= k <= 12, forests infinite, Petersen 5")
@pytest.mark.parametrize("k", range(3, 13))
def test_cycle_girth(k):
    assert girth(cycle(k)) == k


@crit(7, "girth: C_k = k for 3 <= k <= 12, forests infinite, Petersen 5")
@pytest.mark.parametrize("g", [
    graph_from_pairs(1, []),
    graph_from_pairs(6, []),
    star(7),
    graph_from_pairs(8, [(i, i + 1) for i in range(7)]),
    graph_from_pairs(9, [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6), (6, 7)]),
], ids=["K1", "empty6", "star7", "path8", "two-trees"])
def test_forest_girth(g):
    assert girth(g) == math.inf


@crit(7, "girth: C_k = k for 3 <= k <= 12, forests infinite, Petersen 5")
def test_petersen_girth():
    assert girth(petersen()) == 5


# -- 8 ------------------------------------------------------------------------

def _with_parts(d, parts):
    return Decomposition(d.host, tuple(parts))


def tamper_delete(d):
    parts = list(d.parts)
    parts[0] = parts[0] - {min(parts[0])}
    return _with_parts(d, parts)


def tamper_duplicate(d):
    parts = list(d.parts)
    parts[1] = parts[1] | {min(parts[0])}
    return _with_parts(d, parts)


def tamper_triangle(d):
    """Move the host edge closing a path a-b-c of part i into part i."""
    owner = {e: i for i, part in enumerate(d.parts) for e in part}
    for i, part in enumerate(d.parts):
        g = d.part_graph(i)
        for b in g.sorted_vertices:
            for a, c in itertools.combinations(sorted(g.neighbors(b)), 2):
                closing = edge(a, c)
                j = owner.get(closing)
                if j is not None and j != i:
                    parts = list(d.parts)
                    parts[j] = parts[j] - {closing}
                    parts[i] = parts[i] | {closing}
                    return _with_parts(d, parts), i
    raise AssertionError("no triangle-closing move found")


TAMPER_TARGETS = {"n2": lambda: construct(2), "n4": lambda: construct(4),
                  "n5": lambda: construct(5), "K10": k10_decomposition}


@crit(8, "tampering flips the verdict with the right category")
@pytest.mark.parametrize("target", sorted(TAMPER_TARGETS))
def test_tamper_delete(target):
    report = verify_decomposition(tamper_delete(TAMPER_TARGETS[target]()), 4)
    assert not report.verdict
    assert report.coverage.status == "MissingEdges"
    assert len(report.coverage.missing) == 1


@crit(8, "tampering flips the verdict with the right category")
@pytest.mark.parametrize("target", sorted(TAMPER_TARGETS))
def test_tamper_duplicate(target):
    report = verify_decomposition(tamper_duplicate(TAMPER_TARGETS[target]()), 4)
    assert not report.verdict
    assert report.coverage.status == "DuplicatedEdges"
    assert len(report.coverage.duplicated) == 1


@crit(8, "tampering flips the verdict with the right category")
@pytest.mark.parametrize("target", sorted(TAMPER_TARGETS))
def test_tamper_triangle(target):
    tampered, i = tamper_triangle(TAMPER_TARGETS[target]())
    report = verify_decomposition(tampered, 4)
    assert not report.verdict
    assert report.coverage.exact
    assert report.parts[i].girth == 3 and not report.parts[i].girth_ok
    assert i + 1 in report.failing_parts()


# -- 9 ------------------------------------------------------------------------

@crit(9, "edge counts: 12p-4 per class, 4p for the last, totals 12p^2 / 12p^2+12p+3")
@pytest.mark.parametrize("p", range(1, 31))
def test_edge_count_formulas(p):
    even = construct(2 * p, emit_trace=True)
    gbar = even.traces("Gbar")
    assert sorted(gbar) == list(range(1, p + 2))
    assert [len(gbar[i]) for i in range(1, p + 1)] == [12 * p - 4] * p
    assert len(gbar[p + 1]) == 4 * p
    assert [len(part) for part in even.parts] == [len(gbar[i]) for i in range(1, p + 2)]
    assert even.edge_count() == 12 * p * p
    assert construct(2 * p + 1).edge_count() == 12 * p * p + 12 * p + 3
