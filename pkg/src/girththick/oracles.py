"""Brute-force reference checks for small graphs.

These share no code with the planarity test or the girth kernels and exist
to cross-check them.  Each refuses inputs beyond its size limit.
"""

from __future__ import annotations

import itertools
import math

from .graph import SimpleGraph

MINOR_ORACLE_MAX_VERTICES = 9
CYCLE_ORACLE_MAX_VERTICES = 12


def _bitmask_adjacency(g: SimpleGraph) -> list[int]:
    pos = {x: i for i, x in enumerate(g.sorted_vertices)}
    adj = [0] * len(pos)
    for a, b in g.edges:
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    return adj


def _connected(mask: int, adj: list[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & mask & ~seen
        seen |= nb
        frontier |= nb
    return seen == mask


def _branch_sets(n: int, k: int):
    """Partitions of a subset of ``range(n)`` into exactly ``k`` labelled-in-order blocks."""
    blocks = [0] * k

    def rec(x: int, used: int):
        if n - x < k - used:
            return
        if x == n:
            if used == k:
                yield tuple(blocks)
            return
        yield from rec(x + 1, used)  # x deleted
        for b in range(min(used + 1, k)):
            blocks[b] |= 1 << x
            yield from rec(x + 1, max(used, b + 1))
            blocks[b] &= ~(1 << x)

    yield from rec(0, 0)


def _touches(a: int, b: int, adj: list[int]) -> bool:
    m = a
    while m:
        low = m & -m
        m ^= low
        if adj[low.bit_length() - 1] & b:
            return True
    return False


def has_k5_minor(g: SimpleGraph) -> bool:
    n = g.n_vertices
    if n > MINOR_ORACLE_MAX_VERTICES:
        raise ValueError(f"minor oracle limited to {MINOR_ORACLE_MAX_VERTICES} vertices")
    if n < 5 or g.n_edges < 10:
        return False
    adj = _bitmask_adjacency(g)
    for blocks in _branch_sets(n, 5):
        if all(_connected(b, adj) for b in blocks) and all(
            _touches(a, b, adj) for a, b in itertools.combinations(blocks, 2)
        ):
            return True
    return False


def has_k33_minor(g: SimpleGraph) -> bool:
    n = g.n_vertices
    if n > MINOR_ORACLE_MAX_VERTICES:
        raise ValueError(f"minor oracle limited to {MINOR_ORACLE_MAX_VERTICES} vertices")
    if n < 6 or g.n_edges < 9:
        return False
    adj = _bitmask_adjacency(g)
    for blocks in _branch_sets(n, 6):
        if not all(_connected(b, adj) for b in blocks):
            continue
        touch = {(i, j) for i, j in itertools.combinations(range(6), 2)
                 if _touches(blocks[i], blocks[j], adj)}
        for side in itertools.combinations(range(1, 6), 2):
            left = (0, *side)
            right = [x for x in range(6) if x not in left]
            if all((min(a, b), max(a, b)) in touch for a in left for b in right):
                return True
    return False


def has_kuratowski_minor(g: SimpleGraph) -> bool:
    """True iff ``g`` has a K5 or K3,3 minor, i.e. ``g`` is non-planar."""
    return has_k5_minor(g) or has_k33_minor(g)


def shortest_cycle_bruteforce(g: SimpleGraph) -> int | float:
    """Girth by enumerating simple cycles from their smallest vertex."""
    n = g.n_vertices
    if n > CYCLE_ORACLE_MAX_VERTICES:
        raise ValueError(f"cycle oracle limited to {CYCLE_ORACLE_MAX_VERTICES} vertices")
    order = {x: i for i, x in enumerate(g.sorted_vertices)}
    best = math.inf

    for s in g.sorted_vertices:
        # paths s -> ... using only vertices ranked above s
        stack = [(s, (s,))]
        while stack:
            x, path = stack.pop()
            if len(path) >= best:
                continue
            for y in g.neighbors(x):
                if y == s and len(path) >= 3:
                    best = min(best, len(path))
                elif order[y] > order[s] and y not in path:
                    stack.append((y, path + (y,)))
    return best


def has_triangle(g: SimpleGraph) -> bool:
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(g.sorted_vertices, 3)
    )
