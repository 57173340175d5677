"""Machine checks for girth-constrained planar decompositions.

``verify_decomposition`` regenerates the host from its descriptor, checks
that the parts partition its edges and analyses every part for planarity
and girth.  ``exact_girth_thickness_small`` is an exhaustive search that
serves as an independent oracle on tiny graphs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Optional

from .graph import Decomposition, Edge, SimpleGraph, edge_union_multiset
from .metrics import edge_lower_bound, girth, max_planar_edges
from .planarity import lr_rotation, planarity_verdict

DEFAULT_EDGE_BUDGET = 16


class BudgetExceeded(ValueError):
    """The exhaustive search was asked to run outside its edge budget."""


@dataclass(frozen=True)
class Coverage:
    missing: tuple[Edge, ...] = ()
    duplicated: tuple[Edge, ...] = ()
    foreign: tuple[Edge, ...] = ()

    @property
    def exact(self) -> bool:
        return not (self.missing or self.duplicated or self.foreign)

    @property
    def status(self) -> str:
        if self.foreign:
            return "ForeignEdges"
        if self.duplicated:
            return "DuplicatedEdges"
        if self.missing:
            return "MissingEdges"
        return "ExactPartition"


@dataclass(frozen=True)
class PartReport:
    edge_count: int
    is_planar: bool
    girth: int | float
    girth_ok: bool

    @property
    def ok(self) -> bool:
        return self.is_planar and self.girth_ok


@dataclass(frozen=True)
class VerificationReport:
    host_edge_count: int
    girth_min: int
    parts: tuple[PartReport, ...]
    coverage: Coverage
    bounds: tuple[int, Optional[int]] = field(default=(0, None))

    @property
    def verdict(self) -> bool:
        return self.coverage.exact and all(p.ok for p in self.parts)

    def failing_parts(self) -> list[int]:
        return [i for i, p in enumerate(self.parts, 1) if not p.ok]

    def to_dict(self) -> dict[str, Any]:
        def name(e: Edge) -> list[str]:
            return [str(e[0]), str(e[1])]

        lower, upper = self.bounds
        return {
            "verdict": self.verdict,
            "girth_min": self.girth_min,
            "host_edge_count": self.host_edge_count,
            "coverage": {
                "status": self.coverage.status,
                "missing": [name(e) for e in self.coverage.missing],
                "duplicated": [name(e) for e in self.coverage.duplicated],
                "foreign": [name(e) for e in self.coverage.foreign],
            },
            "parts": [
                {
                    "index": i,
                    "edge_count": p.edge_count,
                    "is_planar": p.is_planar,
                    "girth": "infinite" if math.isinf(p.girth) else p.girth,
                    "girth_ok": p.girth_ok,
                }
                for i, p in enumerate(self.parts, 1)
            ],
            "bounds": {"lower": lower, "upper": upper},
        }

    def summary(self) -> str:
        lines = [
            f"verdict: {'PASS' if self.verdict else 'FAIL'}",
            f"host edges: {self.host_edge_count}, parts: {len(self.parts)}, "
            f"girth_min: {self.girth_min}",
            f"coverage: {self.coverage.status}",
        ]
        for label, es in (("missing", self.coverage.missing),
                          ("duplicated", self.coverage.duplicated),
                          ("foreign", self.coverage.foreign)):
            if es:
                shown = ", ".join(f"{a}-{b}" for a, b in es[:10])
                more = f" (+{len(es) - 10} more)" if len(es) > 10 else ""
                lines.append(f"  {label}: {shown}{more}")
        for i, p in enumerate(self.parts, 1):
            flags = []
            if not p.is_planar:
                flags.append("NOT PLANAR")
            if not p.girth_ok:
                flags.append(f"girth {p.girth} < {self.girth_min}")
            g = "inf" if math.isinf(p.girth) else p.girth
            lines.append(f"  part {i}: {p.edge_count} edges, planar={p.is_planar}, girth={g}"
                         + (f"  <-- {'; '.join(flags)}" if flags else ""))
        lower, upper = self.bounds
        if upper is not None and upper == lower:
            lines.append(f"thickness: exactly {upper} (edge-count lower bound met)")
        elif upper is not None:
            lines.append(f"thickness: between {lower} and {upper}")
        else:
            lines.append(f"thickness: at least {lower}")
        return "\n".join(lines)


def check_coverage(d: Decomposition) -> Coverage:
    host = d.host_graph()
    counts = edge_union_multiset(d)
    missing = sorted(host.edges - counts.keys())
    duplicated = sorted(e for e, c in counts.items() if c > 1 and e in host.edges)
    foreign = sorted(e for e in counts if e not in host.edges)
    return Coverage(tuple(missing), tuple(duplicated), tuple(foreign))


def analyse_part(g: SimpleGraph, girth_min: int, backend: str | None = None) -> PartReport:
    gi = girth(g, backend)
    return PartReport(g.n_edges, planarity_verdict(g), gi, gi >= girth_min)


def thickness_bounds(d: Decomposition, girth_min: int, verdict: bool) -> tuple[int, Optional[int]]:
    """Edge-count lower bound on the host and, if ``verdict``, the part count."""
    host = d.host_graph()
    if host.n_vertices < 3:
        lower = 1 if host.n_edges else 0
    else:
        lower = edge_lower_bound(host.n_vertices, host.n_edges, girth_min)
    return lower, (d.n_parts if verdict else None)


def verify_decomposition(d: Decomposition, girth_min: int = 4,
                         backend: str | None = None) -> VerificationReport:
    """Check every part of ``d`` and the exactness of the edge partition.

    All parts are analysed even after a failure so the report pinpoints
    every problem.
    """
    if girth_min < 3:
        raise ValueError(f"girth_min must be >= 3, got {girth_min}")
    host = d.host_graph()
    coverage = check_coverage(d)
    parts = tuple(analyse_part(d.part_graph(i), girth_min, backend) for i in range(d.n_parts))
    verdict = coverage.exact and all(p.ok for p in parts)
    return VerificationReport(
        host_edge_count=host.n_edges,
        girth_min=girth_min,
        parts=parts,
        coverage=coverage,
        bounds=thickness_bounds(d, girth_min, verdict),
    )


# -- exhaustive oracle ------------------------------------------------------

class _Class:
    """One colour class during the search, on integer vertices."""

    __slots__ = ("adj", "edges", "deg_vertices")

    def __init__(self, n: int):
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.edges: list[tuple[int, int]] = []
        self.deg_vertices = 0

    def short_cycle(self, a: int, b: int, girth_min: int) -> bool:
        """Would edge a-b close a cycle shorter than ``girth_min``?"""
        limit = girth_min - 2
        frontier = {a}
        seen = {a}
        for _ in range(limit):
            nxt = set()
            for x in frontier:
                for y in self.adj[x]:
                    if y == b:
                        return True
                    if y not in seen:
                        seen.add(y)
                        nxt.add(y)
            if not nxt:
                return False
            frontier = nxt
        return False

    def push(self, a: int, b: int) -> None:
        self.deg_vertices += (not self.adj[a]) + (not self.adj[b])
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.edges.append((a, b))

    def pop(self) -> None:
        a, b = self.edges.pop()
        self.adj[a].discard(b)
        self.adj[b].discard(a)
        self.deg_vertices -= (not self.adj[a]) + (not self.adj[b])


def _partition_exists(n: int, edges: list[tuple[int, int]], k: int, girth_min: int) -> bool:
    classes = [_Class(n) for _ in range(k)]

    def fits(c: _Class, a: int, b: int) -> bool:
        if c.short_cycle(a, b, girth_min):
            return False
        c.push(a, b)
        ok = True
        # the girth bound only applies with a cycle present; a forest may have V - 1 edges
        if c.deg_vertices >= 3 and len(c.edges) > max(
                c.deg_vertices - 1, max_planar_edges(c.deg_vertices, girth_min)):
            ok = False
        # K3,3 (9 edges) is the smallest non-planar graph
        elif len(c.edges) >= 9 and lr_rotation(n, c.edges) is None:
            ok = False
        if not ok:
            c.pop()
        return ok

    def place(t: int, used: int) -> bool:
        if t == len(edges):
            return True
        a, b = edges[t]
        # classes 0..used-1 are open; at most one fresh class is tried
        for ci in range(min(used + 1, k)):
            c = classes[ci]
            if fits(c, a, b):
                if place(t + 1, max(used, ci + 1)):
                    return True
                c.pop()
        return False

    return place(0, 0)


def exact_girth_thickness_small(
    g: SimpleGraph,
    girth_min: int = 4,
    max_parts: Optional[int] = None,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    shuffle_seed: Optional[int] = None,
) -> Optional[int]:
    """Least number of planar classes of girth >= ``girth_min`` covering ``g``.

    Searches k = 1, 2, ... up to ``max_parts`` (default: the edge count) over
    canonical set partitions of the edges, so the answer is exact.  Returns
    ``None`` when no partition exists within ``max_parts``.  ``shuffle_seed``
    permutes the branching order, which must not change the answer.
    """
    if girth_min < 3:
        raise ValueError(f"girth_min must be >= 3, got {girth_min}")
    if g.n_edges > edge_budget:
        raise BudgetExceeded(
            f"graph has {g.n_edges} edges; the exhaustive search is limited to {edge_budget}")
    if max_parts is not None and max_parts < 1:
        raise ValueError("max_parts must be >= 1")
    if g.n_edges == 0:
        return 1
    n, src, dst = g.index_arrays
    edges = list(zip(src.tolist(), dst.tolist()))
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(edges)
    top = g.n_edges if max_parts is None else max_parts
    for k in range(1, top + 1):
        if _partition_exists(n, edges, k, girth_min):
            return k
    return None
