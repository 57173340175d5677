import itertools
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from girththick.graph import SimpleGraph, plain

FIXTURES = Path(__file__).parent / "fixtures"


def graph_from_pairs(n, pairs):
    vs = [plain(i) for i in range(1, n + 1)]
    return SimpleGraph(vs, [(vs[a], vs[b]) for a, b in pairs])


def cycle(k):
    return graph_from_pairs(k, [(i, (i + 1) % k) for i in range(k)])


def complete(n):
    return graph_from_pairs(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a, b):
    return graph_from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen():
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, 5 + i) for i in range(5)]
    return graph_from_pairs(10, pairs)


def star(k):
    return graph_from_pairs(k + 1, [(0, i) for i in range(1, k + 1)])


def all_graph_classes(n):
    """One labelled representative per isomorphism class of n-vertex graphs.

    Canonical form = minimum edge bitmask over all vertex permutations,
    evaluated for every labelled graph at once with numpy.
    """
    slots = list(itertools.combinations(range(n), 2))
    index = {s: i for i, s in enumerate(slots)}
    masks = np.arange(1 << len(slots), dtype=np.int64)
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        permuted = np.zeros_like(masks)
        for bit, (a, b) in enumerate(slots):
            pa, pb = perm[a], perm[b]
            target = index[(min(pa, pb), max(pa, pb))]
            permuted |= ((masks >> bit) & 1) << target
        np.minimum(canon, permuted, out=canon)
    reps = np.unique(canon)
    return [graph_from_pairs(n, [slots[b] for b in range(len(slots)) if (int(m) >> b) & 1])
            for m in reps]


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    slots = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return graph_from_pairs(n, [s for s, keep in zip(slots, chosen) if keep])


# -- acceptance criterion reporting -----------------------------------------

_ACCEPTANCE: dict[str, list] = {}



def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    entry = _ACCEPTANCE.setdefault(marker[0], [marker[1], "PASS"])
    if report.failed:
        entry[1] = "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = m.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE, key=int):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
