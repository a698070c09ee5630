"""Naive fixed-point graph generator used as an oracle for enumerate_graphs.

Generates every labeled graph (side pattern, genus vector, leg placement,
edge multiset), rejects isomorphic copies by exhaustive bijection search,
and counts automorphisms as explicit (vertex bijection, edge bijection)
pairs.  Deliberately shares no code with :mod:`.graphs`.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, permutations, product
from typing import List, Tuple

Labeled = Tuple[tuple, tuple]  # (vertex labels (side, genus, legs)), (edges (u, v, d)))


def _connected(nv, edges):
    adj = {i: set() for i in range(nv)}
    for u, v, _ in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == nv


def _edge_bijections(e1, e2, perm):
    """Number of bijections e1 -> e2 compatible with the vertex map ``perm``."""
    count = 0
    for target in permutations(range(len(e2))):
        ok = True
        for i, k in enumerate(target):
            u, v, d = e1[i]
            uu, vv, dd = e2[k]
            if d != dd or {perm[u], perm[v]} != {uu, vv}:
                ok = False
                break
        if ok:
            count += 1
    return count


def _morphisms(a: Labeled, b: Labeled) -> int:
    va, ea = a
    vb, eb = b
    if len(va) != len(vb) or len(ea) != len(eb):
        return 0
    total = 0
    for perm in permutations(range(len(vb))):
        if all(va[i] == vb[perm[i]] for i in range(len(va))):
            total += _edge_bijections(ea, eb, perm)
    return total


def brute_force_graphs(g: int, n: int, d: int) -> List[Tuple[Labeled, int]]:
    """(labeled representative, |Aut|) for each isomorphism class, d >= 1."""
    reps: List[Labeled] = []
    legs = list(range(1, n + 1))
    for nv in range(2, d + 2):
        pairs_all = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
        for sides in product(("0", "inf"), repeat=nv):
            if len(set(sides)) < 2:
                continue
            pairs = [(u, v) for u, v in pairs_all if sides[u] != sides[v]]
            for genera in product((0, 1), repeat=nv):
                if sum(genera) > g:
                    continue
                for ne in range(1, d + 1):
                    betti = ne - nv + 1
                    if betti < 0 or betti + sum(genera) != g:
                        continue
                    slots = [(p, dd) for p in pairs for dd in range(1, d + 1)]
                    for chosen in combinations_with_replacement(slots, ne):
                        if sum(dd for _, dd in chosen) != d:
                            continue
                        edges = tuple((u, v, dd) for (u, v), dd in chosen)
                        if not _connected(nv, edges):
                            continue
                        for placement in product(range(nv), repeat=n):
                            verts = tuple(
                                (sides[i], genera[i], tuple(l for l, p in zip(legs, placement) if p == i))
                                for i in range(nv)
                            )
                            cand = (verts, edges)
                            if not any(_morphisms(cand, r) for r in reps):
                                reps.append(cand)
    return [(r, _morphisms(r, r)) for r in reps]
