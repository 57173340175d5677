"""Girth and the edge-count bounds behind the girth-thickness formulas.

Girth is an ``int`` for graphs with a cycle and ``math.inf`` for forests, so
``girth(g) >= k`` reads naturally.  All bound arithmetic is exact integer
arithmetic.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .graph import SimpleGraph

INFINITE = math.inf


def girth(g: SimpleGraph, backend: str | None = None) -> int | float:
    """Length of a shortest cycle of ``g``, ``math.inf`` if ``g`` is a forest.

    ``backend`` picks the kernel (``"numba"``, ``"numpy"`` or ``"python"``);
    the default follows ``GIRTHTHICK_NUMBA``.
    """
    if g.n_edges < 3:
        return INFINITE
    indptr, indices = g.csr
    k = _kernels.girth_csr(indptr, indices, g.n_vertices, backend)
    return INFINITE if k < 0 else k


def girth_at_least(g: SimpleGraph, threshold: int, backend: str | None = None) -> bool:
    if threshold < 3:
        raise ValueError(f"girth threshold must be >= 3, got {threshold}")
    return girth(g, backend) >= threshold


def max_planar_edges(v: int, g: int) -> int:
    """Largest edge count of a planar graph on ``v`` vertices with girth ``g``.

    ``floor(g * (v - 2) / (g - 2))``; for ``g = 3`` this is ``3v - 6``.
    """
    if v < 3:
        raise ValueError(f"need v >= 3 vertices, got {v}")
    if g < 3:
        raise ValueError(f"need girth g >= 3, got {g}")
    return g * (v - 2) // (g - 2)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def edge_lower_bound(n_vertices: int, n_edges: int, girth_min: int) -> int:
    """Parts needed by edge counting alone: ``ceil(E / max_planar_edges(V, g))``."""
    return _ceil_div(n_edges, max_planar_edges(n_vertices, girth_min))


def lower_bound_theta4_knnn(n: int) -> int:
    """``ceil(3n^2 / (2(3n - 2)))``, the counting bound for K_{n,n,n}, n >= 2."""
    if n < 2:
        raise ValueError(f"the counting bound is stated for n >= 2, got {n}")
    return _ceil_div(3 * n * n, 2 * (3 * n - 2))


def lower_bound_table(n_max: int) -> np.ndarray:
    """Vectorised ``lower_bound_theta4_knnn`` for ``n = 2..n_max`` (int64, exact).

    Exactness holds while ``3 n^2`` fits in int64, i.e. ``n < 1.7e9``.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if n_max >= 1_700_000_000:
        raise OverflowError("n_max too large for exact int64 arithmetic")
    n = np.arange(2, n_max + 1, dtype=np.int64)
    return -(-(3 * n * n) // (2 * (3 * n - 2)))


def theta4_knnn(n: int) -> int:
    """4-girth-thickness of K_{n,n,n}: 2 at n = 1, else ``ceil((n + 1) / 2)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 2
    return (n + 2) // 2
