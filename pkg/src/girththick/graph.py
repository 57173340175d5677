"""Graph and decomposition data model.

Vertices are ``PartiteVertex`` tuples ``(part, index)``.  Tuple ordering
gives the canonical total order U < V < W < Plain, then by index, and every
edge is stored as an ordered pair ``(a, b)`` with ``a < b``.
"""

from __future__ import annotations

import enum
import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Union

import numpy as np


class Part(enum.IntEnum):
    U = 0
    V = 1
    W = 2
    PLAIN = 3


_PART_PREFIX = {Part.U: "u", Part.V: "v", Part.W: "w", Part.PLAIN: ""}
_NAME_RE = re.compile(r"^([uvw]?)([1-9][0-9]*)$")


class PartiteVertex(NamedTuple):
    part: Part
    index: int

    def __str__(self) -> str:
        return f"{_PART_PREFIX[self.part]}{self.index}"

    @classmethod
    def parse(cls, name: str) -> "PartiteVertex":
        """Parse ``"u3"``, ``"w12"`` or a bare positive integer like ``"7"``."""
        m = _NAME_RE.match(name.strip())
        if m is None:
            raise ValueError(f"bad vertex name {name!r}")
        prefix, idx = m.groups()
        part = {"u": Part.U, "v": Part.V, "w": Part.W, "": Part.PLAIN}[prefix]
        return cls(part, int(idx))


Edge = tuple[PartiteVertex, PartiteVertex]


def u(i: int) -> PartiteVertex:
    return PartiteVertex(Part.U, i)


def v(i: int) -> PartiteVertex:
    return PartiteVertex(Part.V, i)


def w(i: int) -> PartiteVertex:
    return PartiteVertex(Part.W, i)


def plain(i: int) -> PartiteVertex:
    return PartiteVertex(Part.PLAIN, i)


def edge(a: PartiteVertex, b: PartiteVertex) -> Edge:
    """Canonical edge between ``a`` and ``b``; rejects loops."""
    if a == b:
        raise ValueError(f"loop at {a}")
    return (a, b) if a < b else (b, a)


def parse_edge(text: str) -> Edge:
    """Parse ``"u1v2"``, ``"u1 v2"``, ``"u1-v2"`` or ``"3-7"`` into an edge."""
    text = text.strip()
    parts = re.split(r"[\s\-]+", text)
    if len(parts) == 1:
        m = re.match(r"^([uvw][0-9]+)([uvw][0-9]+)$", text)
        if m is None:
            raise ValueError(f"bad edge {text!r}")
        parts = list(m.groups())
    if len(parts) != 2:
        raise ValueError(f"bad edge {text!r}")
    return edge(PartiteVertex.parse(parts[0]), PartiteVertex.parse(parts[1]))


def edge_str(e: Edge, sep: str = " ") -> str:
    return f"{e[0]}{sep}{e[1]}"


class SimpleGraph:
    """Immutable finite simple undirected graph.

    Isolated vertices are kept, so a subgraph can live on the full vertex
    set of its host.
    """

    def __init__(self, vertices: Iterable[PartiteVertex], edges: Iterable[Edge]):
        vs = frozenset(vertices)
        es = set()
        for a, b in edges:
            es.add(edge(a, b))
        missing = {x for e in es for x in e} - vs
        if missing:
            raise ValueError(f"edge endpoints not in vertex set: {sorted(missing)[:5]}")
        parts = {x.part for x in vs}
        if Part.PLAIN in parts and len(parts) > 1:
            raise ValueError("plain vertices cannot be mixed with U/V/W vertices")
        self.vertices: frozenset[PartiteVertex] = vs
        self.edges: frozenset[Edge] = frozenset(es)

    @classmethod
    def _canonical(cls, vertices: frozenset[PartiteVertex], edges: frozenset[Edge]) -> "SimpleGraph":
        """Build from edges already in canonical ``(a, b)``, ``a < b`` form."""
        g = cls.__new__(cls)
        if not all(a in vertices and b in vertices for a, b in edges):
            raise ValueError("edge endpoints not in vertex set")
        g.vertices = vertices
        g.edges = edges
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "SimpleGraph":
        es = list(edges)
        return cls({x for e in es for x in e}, es)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_vertices(self) -> list[PartiteVertex]:
        return sorted(self.vertices)

    @cached_property
    def adjacency(self) -> dict[PartiteVertex, frozenset[PartiteVertex]]:
        adj: dict[PartiteVertex, set[PartiteVertex]] = {x: set() for x in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {x: frozenset(nb) for x, nb in adj.items()}

    def neighbors(self, x: PartiteVertex) -> frozenset[PartiteVertex]:
        return self.adjacency[x]

    def degree(self, x: PartiteVertex) -> int:
        return len(self.adjacency[x])

    def has_edge(self, a: PartiteVertex, b: PartiteVertex) -> bool:
        return a != b and edge(a, b) in self.edges

    @cached_property
    def index_arrays(self) -> tuple[int, np.ndarray, np.ndarray]:
        """Integer form ``(n, src, dst)`` over ``sorted_vertices`` positions.

        Each undirected edge appears once, sorted canonically.
        """
        pos = {x: i for i, x in enumerate(self.sorted_vertices)}
        es = sorted(self.edges)
        src = np.fromiter((pos[a] for a, _ in es), dtype=np.int64, count=len(es))
        dst = np.fromiter((pos[b] for _, b in es), dtype=np.int64, count=len(es))
        return len(pos), src, dst

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Symmetric CSR adjacency ``(indptr, indices)`` over ``sorted_vertices``."""
        n, src, dst = self.index_arrays
        heads = np.concatenate([src, dst])
        tails = np.concatenate([dst, src])
        order = np.lexsort((tails, heads))
        heads, tails = heads[order], tails[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, heads + 1, 1)
        np.cumsum(indptr, out=indptr)
        return indptr, tails.astype(np.int64)

    def subgraph(self, edges: Iterable[Edge]) -> "SimpleGraph":
        """Spanning subgraph: same vertex set, given edges."""
        return SimpleGraph(self.vertices, edges)

    def components(self) -> list[frozenset[PartiteVertex]]:
        seen: set[PartiteVertex] = set()
        comps = []
        for s in self.sorted_vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def relabel(self, mapping: dict[PartiteVertex, PartiteVertex]) -> "SimpleGraph":
        return SimpleGraph(
            (mapping.get(x, x) for x in self.vertices),
            ((mapping.get(a, a), mapping.get(b, b)) for a, b in self.edges),
        )


def make_complete_tripartite(n: int) -> SimpleGraph:
    """K_{n,n,n} on u1..un, v1..vn, w1..wn."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    us = [u(i) for i in range(1, n + 1)]
    vs = [v(i) for i in range(1, n + 1)]
    ws = [w(i) for i in range(1, n + 1)]
    edges = [
        (a, b)
        for left, right in ((us, vs), (us, ws), (vs, ws))
        for a, b in itertools.product(left, right)
    ]
    return SimpleGraph(us + vs + ws, edges)


def make_complete(m: int) -> SimpleGraph:
    """K_m on plain vertices 1..m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    vs = [plain(i) for i in range(1, m + 1)]
    return SimpleGraph(vs, itertools.combinations(vs, 2))


@dataclass(frozen=True)
class CompleteTripartite:
    n: int

    def graph(self) -> SimpleGraph:
        return _cached_host(("knnn", self.n))


@dataclass(frozen=True)
class Complete:
    m: int

    def graph(self) -> SimpleGraph:
        return _cached_host(("kn", self.m))


@dataclass(frozen=True)
class Explicit:
    host_graph: SimpleGraph

    def graph(self) -> SimpleGraph:
        return self.host_graph


Host = Union[CompleteTripartite, Complete, Explicit]

_HOST_CACHE: dict[tuple[str, int], SimpleGraph] = {}


def _cached_host(key: tuple[str, int]) -> SimpleGraph:
    g = _HOST_CACHE.get(key)
    if g is None:
        kind, size = key
        g = make_complete_tripartite(size) if kind == "knnn" else make_complete(size)
        if len(_HOST_CACHE) > 64:
            _HOST_CACHE.clear()
        _HOST_CACHE[key] = g
    return g


@dataclass(frozen=True)
class ConstructionTrace:
    """One named intermediate edge set recorded by a constructor.

    ``stage`` is one of ``"G1"``, ``"G2"``, ``"Gbar"``, ``"Ghat"``,
    ``"Gtilde"``; ``index`` is the 1-based subgraph number.
    """

    stage: str
    index: int
    edges: frozenset[Edge]


@dataclass(frozen=True)
class Decomposition:
    """A host descriptor plus an ordered list of edge classes.

    Membership of part edges in the host is not enforced here; the verifier
    reports foreign edges instead of refusing to load them.
    """

    host: Host
    parts: tuple[frozenset[Edge], ...]
    trace: tuple[ConstructionTrace, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a decomposition needs at least one part")
        canon = tuple(frozenset(edge(a, b) for a, b in p) for p in self.parts)
        object.__setattr__(self, "parts", canon)

    @property
    def n_parts(self) -> int:
        return len(self.parts)

    def host_graph(self) -> SimpleGraph:
        return self.host.graph()

    def part_graph(self, i: int) -> SimpleGraph:
        """Part ``i`` (0-based) on the host vertex set plus any stray endpoints."""
        hv = self.host_graph().vertices
        es = self.parts[i]
        extra = {x for e in es for x in e} - hv
        return SimpleGraph._canonical(hv | extra if extra else hv, es)

    def edge_count(self) -> int:
        return sum(len(p) for p in self.parts)

    def traces(self, stage: str) -> dict[int, frozenset[Edge]]:
        return {t.index: t.edges for t in self.trace if t.stage == stage}

    def with_parts(self, parts: Iterable[Iterable[Edge]]) -> "Decomposition":
        return Decomposition(self.host, tuple(frozenset(p) for p in parts))


def edge_union_multiset(d: Decomposition) -> Counter[Edge]:
    """Multiplicity of each edge across all parts of ``d``."""
    counts: Counter[Edge] = Counter()
    for p in d.parts:
        counts.update(p)
    return counts
