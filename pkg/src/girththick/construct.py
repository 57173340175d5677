"""Decompositions of K_{n,n,n} and K_10 into planar subgraphs of girth >= 4.

``construct(n)`` returns ``theta4_knnn(n)`` edge classes covering K_{n,n,n}:

* even ``n = 2p``: ``p`` classes built around alternating U-V cycles of
  length ``4p`` with two W hubs each, plus one forest of 2-stars;
* odd ``n = 2p + 1`` with ``p >= 2``: the even decomposition for ``2p``
  extended by ``u_{2p+1}``, ``v_{2p+1}``, ``w_{2p+1}``;
* ``n = 1`` and ``n = 3``: stored tables.

Indices of u, v, w below ``2p + 1`` are read modulo ``2p`` with
representatives ``1..2p``.  The edge sets are the artifact; planarity is
re-established by the planarity test rather than by a drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import (
    Complete,
    CompleteTripartite,
    ConstructionTrace,
    Decomposition,
    Edge,
    edge,
    u,
    v,
    w,
)
from .metrics import theta4_knnn


@dataclass(frozen=True)
class KnnnConstructionParams:
    n: int
    emit_trace: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def p(self) -> int:
        return self.n // 2

    @property
    def case(self) -> str:
        if self.n in (1, 3):
            return "special"
        return "even" if self.n % 2 == 0 else "odd"


def wrap_index(k: int, modulus: int) -> int:
    """Representative of ``k`` modulo ``modulus`` in ``1..modulus``."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return (k - 1) % modulus + 1


def _edges(*pairs) -> frozenset[Edge]:
    return frozenset(edge(a, b) for a, b in pairs)


def _cycle_edges(p: int, i: int) -> frozenset[Edge]:
    """The 4p-cycle u_1 v_{3-2i} u_2 v_{4-2i} ... u_{2p} v_{2p-2i+2}."""
    m = 2 * p
    out = []
    for j in range(1, m + 1):
        out.append((u(j), v(wrap_index(j + 2 - 2 * i, m))))
        out.append((u(j), v(wrap_index(j + 1 - 2 * i, m))))
    return _edges(*out)


def _hub_edges(p: int, i: int) -> frozenset[Edge]:
    m = 2 * p
    inner = [(w(2 * i - 1), u(j)) for j in range(1, m + 1)]
    outer = [(w(2 * i), v(j)) for j in range(1, m + 1)]
    return _edges(*inner, *outer)


def _interior_edges(p: int, i: int) -> frozenset[Edge]:
    """Other W vertices as 2-stars on u_{2i-1}, u_{2i} or v_{2i-1}, v_{2i}."""
    out = []
    for j in range(1, p + 1):
        if j == i:
            continue
        out += [(w(2 * j), u(2 * i - 1)), (w(2 * j), u(2 * i))]
        out += [(w(2 * j - 1), v(2 * i - 1)), (w(2 * j - 1), v(2 * i))]
    return _edges(*out)


def _star_forest(p: int) -> frozenset[Edge]:
    out = []
    for i in range(1, p + 1):
        out += [(w(2 * i - 1), v(2 * i - 1)), (w(2 * i - 1), v(2 * i))]
        out += [(w(2 * i), u(2 * i - 1)), (w(2 * i), u(2 * i))]
    return _edges(*out)


def construct_even(p: int, emit_trace: bool = False) -> Decomposition:
    """Decompose K_{2p,2p,2p} into ``p + 1`` planar classes of girth >= 4.

    Classes ``1..p`` have ``12p - 4`` edges each, the last one ``4p``.
    With ``emit_trace`` the stages ``G1`` (cycle), ``G2`` (cycle plus hubs)
    and ``Gbar`` (finished class) are recorded.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    parts = []
    trace = []
    for i in range(1, p + 1):
        g1 = _cycle_edges(p, i)
        g2 = g1 | _hub_edges(p, i)
        gbar = g2 | _interior_edges(p, i)
        parts.append(gbar)
        if emit_trace:
            trace += [ConstructionTrace("G1", i, g1), ConstructionTrace("G2", i, g2),
                      ConstructionTrace("Gbar", i, gbar)]
    last = _star_forest(p)
    parts.append(last)
    if emit_trace:
        trace.append(ConstructionTrace("Gbar", p + 1, last))
    return Decomposition(CompleteTripartite(2 * p), tuple(parts), tuple(trace))


def even_target_map(p: int) -> dict[int, int]:
    """Which even-indexed W vertex ``u_{2p+1}`` joins in class ``i`` (odd case).

    The base rule is ``2p - 2i + 2``.  For odd ``p`` that rule sends
    ``i0 = (p + 1) / 2`` to ``2 * i0``, the outer hub of class ``i0`` rather
    than one of its interior 2-stars, and the result is not planar; the
    values at ``i0`` and ``i0 + 1`` are swapped to repair it.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    e = {i: wrap_index(2 * p - 2 * i + 2, 2 * p) for i in range(1, p + 1)}
    if p % 2 == 1:
        i0 = (p + 1) // 2
        e[i0], e[i0 + 1] = e[i0 + 1], e[i0]
    return e


def construct_odd(p: int, emit_trace: bool = False) -> Decomposition:
    """Decompose K_{2p+1,2p+1,2p+1} (``p >= 2``) into ``p + 1`` classes.

    Starts from ``construct_even(p)``.  Class 1 drops ``v_1 u_2``, which
    moves to the last class; ``u_{2p+1}`` gets two edges in each of the first
    ``p`` classes, ``v_{2p+1}`` and ``w_{2p+1}`` sit as 2-stars there, and
    the last class takes the three stars centred at the new vertices.
    Stages ``Ghat`` and ``Gtilde`` are added to the trace.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p} (n = 3 is a stored table)")
    base = construct_even(p, emit_trace)
    top = 2 * p + 1
    un, vn, wn = u(top), v(top), w(top)
    targets = even_target_map(p)
    parts = []
    trace = list(base.trace)
    for i in range(1, p + 1):
        gbar = base.parts[i - 1]
        ghat = gbar | _edges((un, w(2 * i - 1)), (un, w(targets[i])))
        if i == 1:
            gtilde = (ghat - {edge(v(1), u(2))}) | _edges(
                (vn, wn), (vn, u(1)), (vn, u(2)), (wn, v(1)), (wn, v(2)))
        else:
            gtilde = ghat | _edges(
                (vn, u(2 * i - 1)), (vn, u(2 * i)), (wn, v(2 * i - 1)), (wn, v(2 * i)))
        parts.append(gtilde)
        if emit_trace:
            trace += [ConstructionTrace("Ghat", i, ghat), ConstructionTrace("Gtilde", i, gtilde)]
    stars = []
    for j in range(1, 2 * p + 1):
        stars += [(un, v(j)), (vn, w(j)), (wn, u(j))]
    last = base.parts[p] | _edges(*stars, (un, vn), (un, wn), (v(1), u(2)))
    parts.append(last)
    if emit_trace:
        trace.append(ConstructionTrace("Gtilde", p + 1, last))
    return Decomposition(CompleteTripartite(top), tuple(parts), tuple(trace))


@lru_cache(maxsize=None)
def _stored(name: str) -> Decomposition:
    from .io import loads_edgelist

    text = resources.files("girththick").joinpath("data").joinpath(name).read_text()
    return loads_edgelist(text).decomposition


def construct_special(n: int) -> Decomposition:
    """Stored decompositions for ``n = 1`` (two forests) and ``n = 3``."""
    if n == 1:
        return Decomposition(
            CompleteTripartite(1),
            (_edges((u(1), v(1)), (v(1), w(1))), _edges((u(1), w(1)))),
        )
    if n == 3:
        return _stored("k333.edges")
    raise ValueError(f"no stored decomposition for n = {n}")


def construct(n: int, emit_trace: bool = False) -> Decomposition:
    """Decomposition of K_{n,n,n} into ``theta4_knnn(n)`` planar girth-4 classes."""
    params = KnnnConstructionParams(n, emit_trace)
    if params.case == "special":
        d = construct_special(n)
    elif params.case == "even":
        d = construct_even(params.p, emit_trace)
    else:
        d = construct_odd(params.p, emit_trace)
    assert d.n_parts == theta4_knnn(n)
    return d


def k10_decomposition() -> Decomposition:
    """Three planar girth-4 classes (15, 16 and 14 edges) covering K_10."""
    d = _stored("k10.edges")
    assert d.host == Complete(10)
    return d
