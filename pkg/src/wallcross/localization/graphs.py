"""Decorated fixed-point graphs for M̄_{g,n}(P^1, d), g <= 1.

A graph is bipartite between vertices over 0 and over ∞.  Vertices carry
a genus and a set of legs; edges carry a covering degree.  Graphs are
stored in a canonical vertex order so that equality is isomorphism.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Dict, List, Optional, Tuple

__all__ = [
    "Vertex",
    "Edge",
    "DecoratedGraph",
    "GraphAut",
    "ScopeError",
    "enumerate_graphs",
    "canonicalize",
]


class ScopeError(ValueError):
    """Request outside the supported (genus <= 1, stable) range."""


@dataclass(frozen=True, order=True)
class Vertex:
    j: str  # "0" or "inf"
    genus: int = 0
    legs: Tuple[int, ...] = ()


@dataclass(frozen=True, order=True)
class Edge:
    a: int  # index of the vertex over 0
    b: int  # index of the vertex over ∞
    degree: int


@dataclass(frozen=True)
class GraphAut:
    order: int
    degree_product: int

    @property
    def weight(self) -> int:
        """|Aut(Γ)| · Π d(e)."""
        return self.order * self.degree_product


@dataclass(frozen=True)
class DecoratedGraph:
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]

    @property
    def degree(self) -> int:
        return sum(e.degree for e in self.edges)

    @property
    def n_legs(self) -> int:
        return sum(len(v.legs) for v in self.vertices)

    @property
    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @property
    def genus(self) -> int:
        return self.betti + sum(v.genus for v in self.vertices)

    def incident(self, i: int) -> List[Tuple[int, Edge]]:
        """(edge index, edge) pairs touching vertex ``i``."""
        return [(k, e) for k, e in enumerate(self.edges) if i in (e.a, e.b)]

    def valence(self, i: int) -> int:
        return len(self.incident(i)) + len(self.vertices[i].legs)

    def is_stable(self, i: int) -> bool:
        return 2 * self.vertices[i].genus - 2 + self.valence(i) > 0

    def unstable_vertices(self) -> List[int]:
        return [i for i in range(len(self.vertices)) if not self.is_stable(i)]

    def leg_vertex(self, leg: int) -> int:
        for i, v in enumerate(self.vertices):
            if leg in v.legs:
                return i
        raise KeyError(leg)

    def other_end(self, e: Edge, i: int) -> int:
        return e.b if e.a == i else e.a

    def branch_legs(self, root: int, edge_index: int) -> Tuple[int, ...]:
        """Legs in the component hanging off ``root`` through ``edge_index``.

        Only meaningful when that edge is a bridge (always true for trees).
        """
        e = self.edges[edge_index]
        start = self.other_end(e, root)
        seen = {root, start}
        stack = [start]
        legs = list(self.vertices[start].legs)
        while stack:
            i = stack.pop()
            for k, f in self.incident(i):
                if k == edge_index:
                    continue
                nb = self.other_end(f, i)
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
                    legs.extend(self.vertices[nb].legs)
        return tuple(sorted(legs))

    def as_dict(self) -> dict:
        return {
            "vertices": [{"j": v.j, "genus": v.genus, "legs": list(v.legs)} for v in self.vertices],
            "edges": [{"ends": [e.a, e.b], "degree": e.degree} for e in self.edges],
        }

    def __str__(self):
        vs = ", ".join(f"{v.j}:g{v.genus}{list(v.legs) if v.legs else ''}" for v in self.vertices)
        es = ", ".join(f"{e.a}-{e.b}(d={e.degree})" for e in self.edges)
        return f"Γ[{vs} | {es}]"


def _key(vertices, edges, order0, orderinf):
    # relabel: new index of old vertex
    new = {}
    for pos, old in enumerate(order0):
        new[old] = pos
    for pos, old in enumerate(orderinf):
        new[old] = len(order0) + pos
    vkey = tuple(vertices[old] for old in (*order0, *orderinf))
    ekey = tuple(sorted(Edge(new[e.a], new[e.b], e.degree) for e in edges))
    return vkey, ekey


def canonicalize(vertices, edges) -> Tuple[DecoratedGraph, GraphAut]:
    """Canonical representative and automorphism data by brute force.

    Vertex orders are searched within each fixed-point side; |Aut| counts
    vertex permutations preserving the graph times permutations of
    parallel edges with equal degree.
    """
    vertices = tuple(Vertex(v.j, v.genus, tuple(sorted(v.legs))) for v in vertices)
    zeros = [i for i, v in enumerate(vertices) if v.j == "0"]
    infs = [i for i, v in enumerate(vertices) if v.j == "inf"]
    best = None
    keys = []
    for p0 in permutations(zeros):
        for pinf in permutations(infs):
            k = _key(vertices, edges, p0, pinf)
            keys.append(k)
            if best is None or k < best:
                best = k
    stab = sum(1 for k in keys if k == best)
    mult = Counter(best[1])
    order = stab * prod(factorial(c) for c in mult.values())
    graph = DecoratedGraph(best[0], best[1])
    return graph, GraphAut(order, prod(e.degree for e in graph.edges))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _connected(nv: int, edges) -> bool:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        parent[find(e.a)] = find(e.b)
    return len({find(i) for i in range(nv)}) == 1


def enumerate_graphs(g: int, n: int, d: int) -> List[Tuple[DecoratedGraph, GraphAut]]:
    """All fixed-point graphs of M̄_{g,n}(P^1, d) up to isomorphism.

    For d = 0 the two single-vertex graphs (M̄_{g,n} over 0 or ∞) are
    returned when 2g - 2 + n > 0.
    """
    return list(_enumerate(int(g), int(n), int(d)))


@lru_cache(maxsize=None)
def _enumerate(g: int, n: int, d: int) -> Tuple[Tuple[DecoratedGraph, GraphAut], ...]:
    if g < 0 or n < 0 or d < 0:
        raise ScopeError("g, n, d must be non-negative")
    if g > 1:
        raise ScopeError("graph enumeration is implemented for genus <= 1")
    legs = tuple(range(1, n + 1))
    if d == 0:
        if 2 * g - 2 + n <= 0:
            raise ScopeError(f"M̄_({g},{n})(P^1, 0) is empty")
        return tuple(canonicalize((Vertex(j, g, legs),), ()) for j in ("0", "inf"))

    found: Dict[DecoratedGraph, GraphAut] = {}
    for n_edges in range(1, d + 1):
        for betti in range(0, g + 1):
            nv = n_edges + 1 - betti
            if nv < 2:
                continue
            spare = g - betti  # genus carried by vertices
            for n0 in range(1, nv):
                sides = ["0"] * n0 + ["inf"] * (nv - n0)
                ends = list(product(range(n0), range(n0, nv)))
                genus_options = [None] if spare == 0 else list(range(nv))
                for degs in _compositions(d, n_edges):
                    for choice in product(ends, repeat=n_edges):
                        edges = [Edge(a, b, dd) for (a, b), dd in zip(choice, degs)]
                        if not _connected(nv, edges):
                            continue
                        for gv in genus_options:
                            for placement in product(range(nv), repeat=n):
                                verts = tuple(
                                    Vertex(sides[i], 1 if gv == i else 0,
                                           tuple(l for l, p in zip(legs, placement) if p == i))
                                    for i in range(nv)
                                )
                                graph, aut = canonicalize(verts, edges)
                                found.setdefault(graph, aut)
    return tuple(sorted(found.items(), key=lambda ga: (len(ga[0].edges), ga[0].vertices, ga[0].edges)))
