"""Girth kernels over CSR adjacency.

Two interchangeable paths compute the same integer:

* ``numba``: per-root BFS with early cut-off, compiled with ``@njit``.
* ``numpy``: all-roots BFS distance matrix via boolean matrix products,
  then shortest odd/even cycle detection from the distance layers.

``GIRTHTHICK_NUMBA=0`` (or a missing numba) selects the numpy path by
default.  Both return ``-1`` for a forest.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("GIRTHTHICK_NUMBA", "1").strip().lower()
NUMBA_AVAILABLE = numba is not None
NUMBA_ENABLED = NUMBA_AVAILABLE and _FLAG not in ("0", "false", "no", "off")
DEFAULT_BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def _girth_bfs(indptr, indices, n):
    best = n + 1
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    queue = np.empty(max(n, 1), dtype=np.int64)
    for r in range(n):
        head = 0
        tail = 1
        queue[0] = r
        dist[r] = 0
        parent[r] = -1
        while head < tail:
            x = queue[head]
            head += 1
            # every cycle found from here on has length >= 2 * dist[x]
            if 2 * dist[x] >= best:
                break
            for k in range(indptr[x], indptr[x + 1]):
                y = indices[k]
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue[tail] = y
                    tail += 1
                elif y != parent[x]:
                    c = dist[x] + dist[y] + 1
                    if c < best:
                        best = c
        for i in range(tail):
            dist[queue[i]] = -1
        if best == 3:
            break
    return -1 if best == n + 1 else best


if NUMBA_AVAILABLE:
    _girth_bfs_jit = numba.njit(cache=True, nogil=True)(_girth_bfs)
else:  # pragma: no cover
    _girth_bfs_jit = None


def _girth_dense(indptr: np.ndarray, indices: np.ndarray, n: int) -> int:
    if n == 0 or indices.size == 0:
        return -1
    heads = np.repeat(np.arange(n), np.diff(indptr))
    adj = np.zeros((n, n), dtype=np.float32)
    adj[heads, indices] = 1.0

    # dist[r, x]: BFS layer of x from root r, -1 if unreachable
    dist = np.full((n, n), -1, dtype=np.int64)
    frontier = np.eye(n, dtype=np.float32)
    reached = frontier.astype(bool)
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        nxt = ((frontier @ adj) > 0) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt.astype(np.float32)

    best = n + 1
    src, dst = heads, indices
    mask = src < dst
    src, dst = src[mask], dst[mask]
    dx, dy = dist[:, src], dist[:, dst]
    odd = (dx == dy) & (dx >= 0)
    if odd.any():
        best = min(best, int(2 * dx[odd].min() + 1))
    for k in range(1, level + 1):
        if 2 * k >= best:
            break
        prev_layer = (dist == k - 1).astype(np.float32)
        # number of neighbours of x lying in layer k-1, per root
        counts = prev_layer @ adj
        if ((dist == k) & (counts >= 2)).any():
            best = min(best, 2 * k)
            break
    return -1 if best == n + 1 else best


def girth_csr(indptr: np.ndarray, indices: np.ndarray, n: int, backend: str | None = None) -> int:
    """Girth of a CSR graph, or ``-1`` when acyclic."""
    backend = backend or DEFAULT_BACKEND
    if backend == "numba":
        if _girth_bfs_jit is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return int(_girth_bfs_jit(indptr, indices, n))
    if backend == "numpy":
        return _girth_dense(indptr, indices, n)
    if backend == "python":
        return int(_girth_bfs(indptr, indices, n))
    raise ValueError(f"unknown girth backend {backend!r}")
