"""Seifert's algorithm on knot diagrams.

The oriented smoothing replaces every crossing by two non-crossing arcs that
respect strand orientation; the resulting closed curves are the Seifert
circles.  Attaching a twisted band per crossing builds a surface whose genus
is (C - s + 1)/2 for a knot diagram with C crossings and s circles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import InconsistencyError, ValidationError, is_alternating, _valid
from . import invariants


@dataclass(frozen=True)
class SeifertDecomposition:
    circle_count: int
    circle_membership: dict  # edge label -> circle index
    seifert_graph: tuple  # one (circle, circle) pair per crossing
    genus: int


@dataclass(frozen=True)
class IncompressibilityCertificate:
    method: str  # "alternating" | "span-equality" | "none"
    seifert_genus: int
    span_half: int

    @property
    def certified(self):
        return self.method != "none"


def _require_knot(pd):
    rr = _valid(pd)
    if len(rr.components) != 1:
        raise ValidationError(f"expected a knot, got {len(rr.components)} components")
    return rr


def seifert_circles(pd):
    rr = _require_knot(pd)
    succ = {}
    for ci, x in enumerate(pd.crossings):
        if rr.signs[ci] > 0:
            succ[x.a] = x.d
            succ[x.b] = x.c
        else:
            succ[x.a] = x.b
            succ[x.d] = x.c
    membership = {}
    count = 0
    for start in sorted(succ):
        if start in membership:
            continue
        e = start
        while e not in membership:
            membership[e] = count
            e = succ[e]
        count += 1
    edges = []
    for ci, x in enumerate(pd.crossings):
        over_in = x.b if rr.signs[ci] > 0 else x.d
        edges.append((membership[x.a], membership[over_in]))
    twice_genus = len(pd) - count + 1
    if twice_genus % 2:
        raise InconsistencyError("C - s + 1 is odd on a knot diagram")
    _check_connected(count, edges)
    return SeifertDecomposition(count, membership, tuple(edges), twice_genus // 2)


def _check_connected(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    if len({find(i) for i in range(n)}) != 1:
        raise InconsistencyError("Seifert graph of a connected diagram is split")


def incompressibility_certificate(pd):
    """Certify that this diagram's Seifert surface is incompressible.

    Two sufficient conditions are checked, in order: the diagram is
    alternating (Seifert's algorithm on an alternating projection gives a
    least-genus surface), or the surface genus meets the Alexander span bound
    genus >= span/2.  Least genus implies incompressible for knots.
    """
    dec = seifert_circles(pd)
    span = invariants.alexander(pd).span
    half = span // 2
    if is_alternating(pd):
        method = "alternating"
    elif dec.genus == half:
        method = "span-equality"
    else:
        method = "none"
    return IncompressibilityCertificate(method, dec.genus, half)


def seifert_genus(pd):
    return seifert_circles(pd).genus
