"""Planarity testing with a combinatorial embedding as certificate.

The test is the left-right (LR) algorithm in Brandes' formulation: a DFS
orientation, a constraint-stack test phase and an embedding phase that turns
the resolved left/right sides into a rotation system.  Every planar verdict
carries a rotation system that can be checked independently with
``validate_embedding``; non-planar verdicts can optionally carry a
Kuratowski subdivision extracted by edge deletion.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .graph import Edge, PartiteVertex, SimpleGraph, edge

Rotation = dict[PartiteVertex, tuple[PartiteVertex, ...]]


class EmbeddingError(ValueError):
    """A rotation system does not cover exactly the edges of its graph."""


@dataclass(frozen=True)
class PlanarityResult:
    is_planar: bool
    embedding: Optional[Rotation] = None
    witness: Optional[frozenset[Edge]] = None

    def __bool__(self) -> bool:
        return self.is_planar


@contextmanager
def _recursion_headroom(depth: int) -> Iterator[None]:
    old = sys.getrecursionlimit()
    need = depth * 2 + 200
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        if need > old:
            sys.setrecursionlimit(old)


class _ConflictPair:
    __slots__ = ("llow", "lhigh", "rlow", "rhigh")

    def __init__(self, llow=-1, lhigh=-1, rlow=-1, rhigh=-1):
        self.llow = llow
        self.lhigh = lhigh
        self.rlow = rlow
        self.rhigh = rhigh

    def swap(self) -> None:
        self.llow, self.lhigh, self.rlow, self.rhigh = (
            self.rlow, self.rhigh, self.llow, self.lhigh)

    def left_empty(self) -> bool:
        return self.llow == -1 and self.lhigh == -1

    def right_empty(self) -> bool:
        return self.rlow == -1 and self.rhigh == -1


class _LRPlanarity:
    """Single-use LR state over integer vertices ``0..n-1``.

    Oriented edges get ids in DFS order; ``src``/``dst`` hold endpoints and
    all per-edge state lives in flat lists indexed by that id.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for k, (a, b) in enumerate(edges):
            self.adj[a].append((b, k))
            self.adj[b].append((a, k))
        self.oriented = [False] * len(edges)
        self.src: list[int] = []
        self.dst: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.height = [-1] * n
        self.parent_edge = [-1] * n
        self.lowpt: list[int] = []
        self.lowpt2: list[int] = []
        self.nesting: list[int] = []
        self.roots: list[int] = []

    # -- orientation ------------------------------------------------------

    def _new_edge(self, v: int, w: int) -> int:
        e = len(self.src)
        self.src.append(v)
        self.dst.append(w)
        self.out[v].append(e)
        self.lowpt.append(0)
        self.lowpt2.append(0)
        self.nesting.append(0)
        return e

    def _orient(self, v: int) -> None:
        height, lowpt, lowpt2 = self.height, self.lowpt, self.lowpt2
        e = self.parent_edge[v]
        for w, k in self.adj[v]:
            if self.oriented[k]:
                continue
            self.oriented[k] = True
            vw = self._new_edge(v, w)
            lowpt[vw] = height[v]
            lowpt2[vw] = height[v]
            if height[w] == -1:
                self.parent_edge[w] = vw
                height[w] = height[v] + 1
                self._orient(w)
            else:
                lowpt[vw] = height[w]
            self.nesting[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
            if e != -1:
                if lowpt[vw] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[vw])
                    lowpt[e] = lowpt[vw]
                elif lowpt[vw] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[vw])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[vw])

    # -- testing ----------------------------------------------------------

    def _conflicting(self, low: int, high: int, b: int) -> bool:
        return not (low == -1 and high == -1) and self.lowpt[high] > self.lowpt[b]

    def _lowest(self, p: _ConflictPair) -> int:
        if p.left_empty():
            return self.lowpt[p.rlow]
        if p.right_empty():
            return self.lowpt[p.llow]
        return min(self.lowpt[p.llow], self.lowpt[p.rlow])

    def _test(self, v: int) -> bool:
        S = self.S
        e = self.parent_edge[v]
        first = True
        for ei in self.ordered[v]:
            w = self.dst[ei]
            self.stack_bottom[ei] = S[-1] if S else None
            if ei == self.parent_edge[w]:
                if not self._test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                S.append(_ConflictPair(rlow=ei, rhigh=ei))
            if self.lowpt[ei] < self.height[v]:
                if first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
            first = False
        if e != -1:
            self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: int, e: int) -> bool:
        S, lowpt, ref = self.S, self.lowpt, self.ref
        P = _ConflictPair()
        bottom = self.stack_bottom[ei]
        while True:
            Q = S.pop()
            if not Q.left_empty():
                Q.swap()
            if not Q.left_empty():
                return False
            if lowpt[Q.rlow] > lowpt[e]:
                if P.right_empty():
                    P.rhigh = Q.rhigh
                else:
                    ref[P.rlow] = Q.rhigh
                P.rlow = Q.rlow
            elif Q.rlow != -1:
                ref[Q.rlow] = self.lowpt_edge[e]
            if (S[-1] if S else None) is bottom:
                break
        while S and (self._conflicting(S[-1].llow, S[-1].lhigh, ei)
                     or self._conflicting(S[-1].rlow, S[-1].rhigh, ei)):
            Q = S.pop()
            if self._conflicting(Q.rlow, Q.rhigh, ei):
                Q.swap()
            if self._conflicting(Q.rlow, Q.rhigh, ei):
                return False
            if P.rlow != -1:
                ref[P.rlow] = Q.rhigh
            if Q.rlow != -1:
                P.rlow = Q.rlow
            if P.left_empty():
                P.lhigh = Q.lhigh
            elif P.llow != -1:
                ref[P.llow] = Q.lhigh
            P.llow = Q.llow
        if not (P.left_empty() and P.right_empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e: int) -> None:
        S, ref, side, dst = self.S, self.ref, self.side, self.dst
        u = self.src[e]
        hu = self.height[u]
        while S and self._lowest(S[-1]) == hu:
            P = S.pop()
            if P.llow != -1:
                side[P.llow] = -1
        if S:
            P = S.pop()
            while P.lhigh != -1 and dst[P.lhigh] == u:
                P.lhigh = ref[P.lhigh]
            if P.lhigh == -1 and P.llow != -1:
                ref[P.llow] = P.rlow
                side[P.llow] = -1
                P.llow = -1
            while P.rhigh != -1 and dst[P.rhigh] == u:
                P.rhigh = ref[P.rhigh]
            if P.rhigh == -1 and P.rlow != -1:
                ref[P.rlow] = P.llow
                side[P.rlow] = -1
                P.rlow = -1
            S.append(P)
        if self.lowpt[e] < hu and S:
            hl, hr = S[-1].lhigh, S[-1].rhigh
            if hl != -1 and (hr == -1 or self.lowpt[hl] > self.lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    # -- embedding --------------------------------------------------------

    def _sign(self, e: int) -> int:
        ref, side = self.ref, self.side
        chain = []
        while ref[e] != -1:
            chain.append(e)
            e = ref[e]
        for x in reversed(chain):
            side[x] *= side[ref[x]]
            ref[x] = -1
        return side[chain[0]] if chain else side[e]

    def _insert_after(self, v: int, ref_w: int, w: int) -> None:
        # w goes immediately clockwise of ref_w
        cw, ccw = self.cw[v], self.ccw[v]
        nxt = cw[ref_w]
        cw[ref_w] = w
        ccw[w] = ref_w
        cw[w] = nxt
        ccw[nxt] = w

    def _insert_before(self, v: int, ref_w: int, w: int) -> None:
        # w goes immediately counterclockwise of ref_w
        cw, ccw = self.cw[v], self.ccw[v]
        prv = ccw[ref_w]
        ccw[ref_w] = w
        cw[w] = ref_w
        ccw[w] = prv
        cw[prv] = w
        if self.first[v] == ref_w:
            self.first[v] = w

    def _add_half_edge(self, v: int, w: int, after: Optional[int] = None,
                       before: Optional[int] = None) -> None:
        if self.first[v] == -1:
            self.first[v] = w
            self.cw[v][w] = w
            self.ccw[v][w] = w
        elif after is not None:
            self._insert_after(v, after, w)
        elif before is not None:
            self._insert_before(v, before, w)
        else:
            raise AssertionError("reference neighbour required")

    def _embed(self, v: int) -> None:
        for ei in self.ordered[v]:
            w = self.dst[ei]
            if ei == self.parent_edge[w]:
                self._add_half_edge(w, v, before=self.first[w])
                self.left_ref[v] = w
                self.right_ref[v] = w
                self._embed(w)
            elif self.side[ei] == 1:
                self._add_half_edge(w, v, after=self.right_ref[w])
            else:
                self._add_half_edge(w, v, before=self.left_ref[w])
                self.left_ref[w] = v

    # -- driver -----------------------------------------------------------

    def run(self) -> Optional[list[list[int]]]:
        """Clockwise rotation per vertex, or ``None`` when non-planar."""
        n = self.n
        m = sum(len(a) for a in self.adj) // 2
        if n > 2 and m > 3 * n - 6:
            return None
        with _recursion_headroom(n):
            for s in range(n):
                if self.height[s] == -1:
                    self.height[s] = 0
                    self.roots.append(s)
                    self._orient(s)

            ne = len(self.src)
            self.ordered = [sorted(self.out[x], key=self.nesting.__getitem__) for x in range(n)]
            self.S: list[_ConflictPair] = []
            self.stack_bottom: list[Optional[_ConflictPair]] = [None] * ne
            self.lowpt_edge = [-1] * ne
            self.ref = [-1] * ne
            self.side = [1] * ne
            for s in self.roots:
                if not self._test(s):
                    return None

            for e in range(ne):
                self.nesting[e] *= self._sign(e)
            self.ordered = [sorted(self.out[x], key=self.nesting.__getitem__) for x in range(n)]
            self.cw: list[dict[int, int]] = [{} for _ in range(n)]
            self.ccw: list[dict[int, int]] = [{} for _ in range(n)]
            self.first = [-1] * n
            for x in range(n):
                prev = None
                for e in self.ordered[x]:
                    self._add_half_edge(x, self.dst[e], after=prev)
                    prev = self.dst[e]
            self.left_ref = [-1] * n
            self.right_ref = [-1] * n
            for s in self.roots:
                self._embed(s)

        rotation = []
        for x in range(n):
            start = self.first[x]
            order = []
            if start != -1:
                y = start
                while True:
                    order.append(y)
                    y = self.cw[x][y]
                    if y == start:
                        break
            rotation.append(order)
        return rotation


def lr_rotation(n: int, edges: Sequence[tuple[int, int]]) -> Optional[list[list[int]]]:
    """Run the LR test on integer vertices ``0..n-1``.

    Returns a clockwise rotation (one neighbour list per vertex) for planar
    input and ``None`` otherwise.  ``edges`` must be simple.
    """
    return _LRPlanarity(n, edges).run()


def _integer_form(g: SimpleGraph) -> tuple[list[PartiteVertex], list[tuple[int, int]]]:
    verts = g.sorted_vertices
    _, src, dst = g.index_arrays
    return verts, list(zip(src.tolist(), dst.tolist()))


def planarity_verdict(g: SimpleGraph) -> bool:
    """Boolean-only planarity check."""
    verts, edges = _integer_form(g)
    return _LRPlanarity(len(verts), edges).run() is not None


def is_planar(g: SimpleGraph, witness: bool = False) -> PlanarityResult:
    """Decide planarity of ``g``.

    A planar verdict always carries a clockwise rotation system.  With
    ``witness=True`` a non-planar verdict also carries an edge-minimal
    non-planar subgraph, which is a subdivision of K5 or K3,3.
    """
    verts, edges = _integer_form(g)
    rot = _LRPlanarity(len(verts), edges).run()
    if rot is not None:
        embedding = {verts[i]: tuple(verts[j] for j in nbrs) for i, nbrs in enumerate(rot)}
        return PlanarityResult(True, embedding=embedding)
    wit = kuratowski_witness(g) if witness else None
    return PlanarityResult(False, witness=wit)


def kuratowski_witness(g: SimpleGraph) -> frozenset[Edge]:
    """Edge-minimal non-planar subgraph of a non-planar ``g``.

    Deletes each edge in canonical order whenever the remainder stays
    non-planar; O(E) planarity runs, intended for small graphs.
    """
    verts, edges = _integer_form(g)
    n = len(verts)
    if _LRPlanarity(n, edges).run() is not None:
        raise ValueError("graph is planar; no Kuratowski witness exists")
    keep = list(edges)
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1:]
        if _LRPlanarity(n, trial).run() is None:
            keep = trial
        else:
            i += 1
    return frozenset(edge(verts[a], verts[b]) for a, b in keep)


def kuratowski_type(witness: frozenset[Edge]) -> Optional[str]:
    """``"K5"`` or ``"K3,3"`` if ``witness`` is a subdivision of one, else ``None``."""
    g = SimpleGraph.from_edges(witness)
    degs = {x: g.degree(x) for x in g.vertices}
    if any(d < 2 for d in degs.values()) or len(g.components()) != 1:
        return None
    branch = [x for x, d in degs.items() if d > 2]
    # contract the degree-2 threads into direct branch-to-branch links
    links: set[frozenset[PartiteVertex]] = set()
    for b in branch:
        for nb in g.neighbors(b):
            prev, cur = b, nb
            while degs[cur] == 2:
                a, c = g.neighbors(cur)
                prev, cur = cur, (c if a == prev else a)
            if cur == b:
                return None
            links.add(frozenset((b, cur)))
    n_links = sum(len(g.neighbors(b)) for b in branch) // 2
    if len(links) != n_links:
        return None
    if len(branch) == 5 and all(degs[b] == 4 for b in branch) and len(links) == 10:
        return "K5"
    if len(branch) == 6 and all(degs[b] == 3 for b in branch) and len(links) == 9:
        nbrs0 = {y for lk in links if branch[0] in lk for y in lk if y != branch[0]}
        side_a = {x for x in branch if x not in nbrs0}
        side_b = nbrs0
        if len(side_a) == 3 and len(side_b) == 3 and all(
            frozenset((a, b)) in links for a in side_a for b in side_b
        ):
            return "K3,3"
    return None


def trace_faces(rotation: Mapping[PartiteVertex, Sequence[PartiteVertex]]) -> list[list[PartiteVertex]]:
    """Faces of a rotation system as vertex cycles.

    The successor of dart ``(a, b)`` is ``(b, c)`` where ``c`` follows ``a``
    in the cyclic order at ``b``.
    """
    pos = {x: {y: i for i, y in enumerate(nb)} for x, nb in rotation.items()}
    seen: set[tuple[PartiteVertex, PartiteVertex]] = set()
    faces = []
    for a in rotation:
        for b in rotation[a]:
            if (a, b) in seen:
                continue
            face = []
            x, y = a, b
            while (x, y) not in seen:
                seen.add((x, y))
                face.append(x)
                nb = rotation[y]
                z = nb[(pos[y][x] + 1) % len(nb)]
                x, y = y, z
            faces.append(face)
    return faces


def validate_embedding(g: SimpleGraph, rotation: Mapping[PartiteVertex, Sequence[PartiteVertex]]) -> bool:
    """Check that ``rotation`` is a planar embedding of ``g``.

    Raises ``EmbeddingError`` when the rotation does not list exactly the
    neighbours of each vertex.  Otherwise returns whether every connected
    component satisfies V - E + F = 2 under face tracing.
    """
    for x in g.vertices:
        nb = rotation.get(x, ())
        if len(nb) != len(set(nb)) or set(nb) != g.neighbors(x):
            raise EmbeddingError(f"rotation at {x} does not match its neighbourhood")
    extra = set(rotation) - g.vertices
    if any(rotation[x] for x in extra):
        raise EmbeddingError(f"rotation mentions vertices outside the graph: {sorted(extra)[:3]}")

    for comp in g.components():
        n_edges = sum(g.degree(x) for x in comp) // 2
        if n_edges == 0:
            continue
        sub = {x: rotation[x] for x in comp}
        n_faces = len(trace_faces(sub))
        if len(comp) - n_edges + n_faces != 2:
            return False
    return True
