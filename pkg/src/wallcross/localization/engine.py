"""Graber-Pandharipande localization on M̄_{g,n}(P^1, d) for g <= 1.

Conventions: the fixed point j has tangent weight w_j = σ_j λ, the flag of
an edge of degree d at j has tangent weight ω = w_j / d, and the
equivariant point class of 0 is H (H|_0 = λ, H|_∞ = 0).  A graph Γ
contributes

    1/(|Aut Γ| Π d_e) · Π_e E(d_e) · Π_v V(v)

with E(d) = (-1)^d d^{2d} / ((d!)^2 λ^{2d}) and vertex factors

* stable v:   ∫_{M̄_{g,val}} e(E^∨ ⊗ w) w^{k-1} Π_flags 1/(ω_F - ψ_F) · legs
* (0, 1 edge):           ω_F            (moving the free ramification point)
* (0, 2 edges):          w / (ω_1 + ω_2) (node joining two edges)
* (0, 1 edge + 1 leg):   marking on the edge, ψ = -ω_F

where k is the number of edges at v and e(E^∨ ⊗ w) = w - λ_1 in genus 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from ..cohomology import SIGMA, P1QuantumRing, restrict
from ..series import Series, TruncationSpec
from .graphs import DecoratedGraph, GraphAut, ScopeError, enumerate_graphs
from .intersection import (
    dimension,
    genus1_lambda1_pullback_psi,
    psi_hodge_integral,
)

__all__ = [
    "Insertion",
    "Contribution",
    "edge_factor",
    "edge_weight_enumeration",
    "vertex_factor",
    "graph_contribution",
    "gw_invariant",
    "omega_from_localization",
    "omega_degree_zero",
    "localization_trunc",
]


@dataclass(frozen=True)
class Insertion:
    """An insertion ev^*(cls) ψ^psi at one marking."""

    cls: Series
    psi: int = 0


@dataclass
class Contribution:
    graph: DecoratedGraph
    aut: GraphAut
    value: Series

    def as_dict(self) -> dict:
        return {"graph": self.graph.as_dict(), "aut": self.aut.order,
                "degree_product": self.aut.degree_product, "value": self.value.to_list()}


def localization_trunc(yorder: int = 0, degree: int = 3) -> TruncationSpec:
    return P1QuantumRing(yorder, lam_window=max(8 * yorder + 24, 8 * degree + 24)).trunc


def _lam(trunc: TruncationSpec, power: int, coeff=1) -> Series:
    return Series.monomial(trunc, coeff, lam=power)


def edge_factor(d: int, trunc: TruncationSpec) -> Series:
    """Inverse Euler class of the moving part of H^0(C_e, f^*T_{P^1})."""
    if d < 1:
        raise ValueError("edge degree must be >= 1")
    c = Fraction((-1) ** d * d ** (2 * d), factorial(d) ** 2)
    return _lam(trunc, -2 * d, c)


def edge_weight_enumeration(d: int, trunc: TruncationSpec) -> Series:
    """Same quantity from the explicit weights aλ/d, a = -d..d, a != 0."""
    out = Series.one(trunc)
    for a in range(-d, d + 1):
        if a:
            out = out * _lam(trunc, 1, Fraction(a, d))
    return 1 / out


def _leg_value(ins: Insertion, j: str) -> Series:
    return restrict(ins.cls, j)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def vertex_factor(genus: int, j: str, flag_degrees: Sequence[int], leg_psi: Sequence[int],
                  trunc: TruncationSpec, lambda1: bool = False,
                  pullback: Optional[Tuple[int, Sequence[int]]] = None) -> Series:
    """Integral over a stable vertex moduli M̄_{g, k + #legs}.

    ``flag_degrees`` are the degrees of incident edges; ``leg_psi`` the
    ψ-powers at legs.  Leg classes are multiplied in by the caller.
    ``lambda1`` inserts λ_1 (genus 1 only).  ``pullback = (b, forgotten)``
    inserts π^*ψ_b, with points indexed flags first, then legs.
    """
    if genus > 1:
        raise ScopeError("vertex factors are implemented for genus <= 1")
    k = len(flag_degrees)
    val = k + len(leg_psi)
    if 2 * genus - 2 + val <= 0:
        raise ValueError("vertex_factor is for stable vertices")
    w = SIGMA[j]
    dim = dimension(genus, val)

    # (coefficient as (sign, λ-power), hodge index) pieces of e(E^∨ ⊗ w)
    if genus == 0:
        if lambda1:
            return Series.zero(trunc)
        hodge = [(Fraction(1), 0, 0)]
    elif lambda1:
        hodge = [(Fraction(w), 1, 1)]  # λ_1 (w - λ_1) = w λ_1
    else:
        hodge = [(Fraction(w), 1, 0), (Fraction(-1), 0, 1)]
    if pullback is not None and not (genus == 1 and lambda1):
        raise ScopeError("pulled-back ψ is supported on a genus-1 vertex with λ_1 only")

    total: dict = {}
    extra = 1 if pullback is not None else 0
    for coeff, lam_pow, h in hodge:
        free = dim - h - extra - sum(leg_psi)
        if free < 0:
            continue
        for ms in _compositions(free, k):
            exps = list(ms) + list(leg_psi)
            if pullback is None:
                val_int = psi_hodge_integral(genus, exps, h)
            else:
                b, forgotten = pullback
                val_int = genus1_lambda1_pullback_psi(range(val), dict(enumerate(exps)), b, forgotten)
            if not val_int:
                continue
            # Π_F ω_F^{-m-1},  ω_F = w/d
            c = coeff * val_int
            p = lam_pow
            for m, d in zip(ms, flag_degrees):
                c *= Fraction(d, w) ** (m + 1)
                p -= m + 1
            # w^{k-1}
            c *= Fraction(w) ** (k - 1)
            p += k - 1
            total[p] = total.get(p, 0) + c
    return Series({(0, 0, 0, p, 0): c for p, c in total.items()}, trunc)


def graph_contribution(graph: DecoratedGraph, aut: GraphAut, insertions: Sequence[Insertion],
                       trunc: TruncationSpec, lambda1: bool = False,
                       pullback_leg: Optional[int] = None) -> Series:
    """Contribution of one fixed locus, including 1/(|Aut| Π d_e).

    ``lambda1`` caps the integrand with the Hodge class λ_1 of the source
    curve; ``pullback_leg`` (requires ``lambda1``) caps it with the pullback
    of ψ_leg from M̄_{1,n} under stabilization.
    """
    n = graph.n_legs
    if len(insertions) != n:
        raise ValueError(f"graph has {n} legs, got {len(insertions)} insertions")
    g1 = [i for i, v in enumerate(graph.vertices) if v.genus == 1]
    if lambda1 and not g1:
        return Series.zero(trunc)  # λ_1 vanishes on loop and genus-0 loci
    pull = None
    if pullback_leg is not None:
        if not lambda1:
            raise ScopeError("pullback ψ requires the λ_1 cap")
        pull = _pullback_data(graph, g1[0], pullback_leg)
        if pull is None:
            return Series.zero(trunc)

    out = Series.one(trunc)
    for e in graph.edges:
        out = out * edge_factor(e.degree, trunc)
    for i, v in enumerate(graph.vertices):
        inc = graph.incident(i)
        w = SIGMA[v.j]
        if graph.is_stable(i):
            flag_degrees = [e.degree for _, e in inc]
            psis = [insertions[l - 1].psi for l in v.legs]
            pb = None
            if pull is not None and i == g1[0]:
                pb = pull
            out = out * vertex_factor(v.genus, v.j, flag_degrees, psis, trunc,
                                      lambda1=lambda1 and i == g1[0], pullback=pb)
            for l in v.legs:
                out = out * _leg_value(insertions[l - 1], v.j)
            continue
        # unstable genus-0 vertices
        if len(inc) == 1 and not v.legs:
            d = inc[0][1].degree
            out = out * _lam(trunc, 1, Fraction(w, d))
        elif len(inc) == 2:
            d1, d2 = inc[0][1].degree, inc[1][1].degree
            s = Fraction(w, d1) + Fraction(w, d2)
            out = out * _lam(trunc, 0, Fraction(w) / s)
        elif len(inc) == 1 and len(v.legs) == 1:
            d = inc[0][1].degree
            ins = insertions[v.legs[0] - 1]
            out = out * _leg_value(ins, v.j) * _lam(trunc, ins.psi, Fraction(-w, d) ** ins.psi)
        else:
            raise AssertionError(f"unexpected unstable vertex {v} in {graph}")
    return out * Fraction(1, aut.weight)


def _pullback_data(graph: DecoratedGraph, root: int, leg: int):
    """(b, forgotten) for π^*ψ_leg at the genus-1 vertex, or None if it vanishes.

    Point indices at the root: incident flags first, then its legs.
    """
    v = graph.vertices[root]
    inc = graph.incident(root)
    branches = [graph.branch_legs(root, k) for k, _ in inc]
    b = None
    forgotten = []
    for pos, legs in enumerate(branches):
        if not legs:
            forgotten.append(pos)
        elif len(legs) > 1:
            if leg in legs:
                return None  # ψ_leg restricted to a rational tail of M̄_{0,3} is 0
        elif leg in legs:
            b = pos
    if leg in v.legs:
        b = len(inc) + v.legs.index(leg)
    if b is None:
        raise AssertionError("leg not found")
    return b, forgotten


def gw_invariant(g: int, d: int, insertions: Sequence[Union[Insertion, Series]],
                 trunc: Optional[TruncationSpec] = None, detail: bool = False):
    """∫_{[M̄_{g,n}(P^1,d)]^vir} Π ev_i^*(α_i) ψ_i^{a_i} by localization."""
    ins = [x if isinstance(x, Insertion) else Insertion(x) for x in insertions]
    if trunc is None:
        trunc = ins[0].cls.trunc if ins else localization_trunc(0, d)
    graphs = enumerate_graphs(g, len(ins), d)
    parts = [Contribution(G, A, graph_contribution(G, A, ins, trunc)) for G, A in graphs]
    total = Series.zero(trunc)
    for p in parts:
        total = total + p.value
    return (total, parts) if detail else total


_OMEGA_CAPS = {
    # (g, n): (normalization, lambda1, pullback leg); ∫_{M̄_{g,n}} cap = 1/normalization
    (0, 3): (1, False, None),
    (1, 1): (24, True, None),
    (1, 2): (24, True, 1),
}


def omega_degree_zero(g: int, insertions: Sequence[Series]) -> Series:
    """y^0 term: fixed-point integration on M̄_{g,n} × P^1, Σ_j w_j^{g-1} Π α|_j."""
    t = insertions[0].trunc
    total = Series.zero(t)
    for j in ("0", "inf"):
        term = _lam(t, g - 1, Fraction(SIGMA[j]) ** (g - 1))
        for a in insertions:
            term = term * restrict(a, j)
        total = total + term
    return total


def omega_from_localization(g: int, insertions: Sequence[Series], ymax: int,
                            detail: bool = False):
    """Σ_d y^d (degree-zero part of p_*(Π ev^*α ∩ [M̄_{g,n}(P^1,d)]^vir)).

    The degree-zero coefficient c of a class on M̄_{g,n} is read off by
    capping with a top class P of known degree, pulled back to the map
    space: P = 1 for (0,3), 24 λ_1 for (1,1), 24 λ_1 ψ_1 for (1,2).
    """
    n = len(insertions)
    if (g, n) not in _OMEGA_CAPS:
        raise ScopeError(f"ω_({g},{n}) from localization supports (g,n) in {sorted(_OMEGA_CAPS)}")
    norm, lam1, pull = _OMEGA_CAPS[g, n]
    t = insertions[0].trunc
    if t.y_max < ymax:
        raise ValueError("insertion truncation must carry y up to ymax")
    ins = [Insertion(a) for a in insertions]
    total = omega_degree_zero(g, insertions)
    per_degree = {0: total}
    contributions = {}
    y = Series.var("y", t)
    for d in range(1, ymax + 1):
        part = Series.zero(t)
        contribs = []
        for G, A in enumerate_graphs(g, n, d):
            c = graph_contribution(G, A, ins, t, lambda1=lam1, pullback_leg=pull) * norm
            if not c.is_zero():
                contribs.append(Contribution(G, A, c))
            part = part + c
        per_degree[d] = part
        contributions[d] = contribs
        total = total + part * y ** d
    if detail:
        return total, per_degree, contributions
    return total
