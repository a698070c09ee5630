"""ψ/λ intersection numbers on M̄_{g,n} for g <= 1 (and DVV for any g).

Genus-1 integrals against λ_1 are reduced to genus 0 through
``λ_1 = δ_irr / 12``: the non-separating boundary is the image of
M̄_{0,n+2} under a degree-2 gluing map, so

    ∫_{M̄_{1,n}} λ_1 X = (1/24) ∫_{M̄_{0,n+2}} X|,

with the two node branches carrying no ψ.  The same reduction handles
ψ classes pulled back along forgetful maps.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "dimension",
    "dimension_matches",
    "genus0_psi",
    "dvv",
    "lambda1_psi",
    "psi_hodge_integral",
    "IntegralValue",
    "genus0_pullback_psi",
    "genus1_lambda1_pullback_psi",
]


def dimension(g: int, n: int) -> int:
    return 3 * g - 3 + n


def dimension_matches(g: int, exponents: Sequence[int], hodge_index: int = 0) -> bool:
    return 2 * g - 2 + len(exponents) > 0 and sum(exponents) + hodge_index == dimension(g, len(exponents))


def genus0_psi(exponents: Sequence[int]) -> Fraction:
    """∫_{M̄_{0,n}} Π ψ_i^{a_i} = (n-3)! / Π a_i!."""
    n = len(exponents)
    if n < 3 or any(a < 0 for a in exponents) or sum(exponents) != n - 3:
        return Fraction(0)
    return Fraction(factorial(n - 3), prod(factorial(a) for a in exponents))


def _dfact(k: int) -> int:
    """(2k+1)!! with (-1)!! = 1."""
    out = 1
    for i in range(3, 2 * k + 2, 2):
        out *= i
    return out


def dvv(g: int, exponents: Sequence[int]) -> Fraction:
    """⟨τ_{a_1} ... τ_{a_n}⟩_g by the DVV (Virasoro) recursion."""
    return _dvv(g, tuple(sorted(exponents, reverse=True)))


@lru_cache(maxsize=None)
def _dvv(g: int, a: tuple) -> Fraction:
    n = len(a)
    if g < 0 or n == 0 or any(x < 0 for x in a):
        return Fraction(0)
    if sum(a) != 3 * g - 3 + n or 2 * g - 2 + n <= 0:
        return Fraction(0)
    if g == 0 and a == (0, 0, 0):
        return Fraction(1)
    if g == 1 and a == (1,):
        return Fraction(1, 24)
    if a[0] == 0:
        return Fraction(0)
    k = a[0] - 1
    rest = a[1:]
    total = Fraction(0)
    for i, d in enumerate(rest):
        new = list(rest)
        new[i] = d + k
        total += Fraction(_dfact(k + d), _dfact(d - 1)) * dvv(g, new)
    for r in range(k):
        s = k - 1 - r
        w = _dfact(r) * _dfact(s)
        total += Fraction(w, 2) * dvv(g - 1, (r, s) + rest)
        idx = range(len(rest))
        for size in range(len(rest) + 1):
            for I in combinations(idx, size):
                J = [rest[i] for i in idx if i not in I]
                Iv = [rest[i] for i in I]
                for g1 in range(g + 1):
                    left = dvv(g1, [r] + Iv)
                    if left:
                        total += Fraction(w, 2) * left * dvv(g - g1, [s] + J)
    return total / _dfact(k + 1)


def lambda1_psi(exponents: Sequence[int]) -> Fraction:
    """∫_{M̄_{1,n}} λ_1 Π ψ_i^{a_i} = (1/24) (n-1)! / Π a_i!."""
    n = len(exponents)
    if n < 1 or any(a < 0 for a in exponents) or sum(exponents) != n - 1:
        return Fraction(0)
    return Fraction(factorial(n - 1), 24 * prod(factorial(a) for a in exponents))


class IntegralValue(NamedTuple):
    value: Fraction
    dimension_mismatch: bool


def psi_hodge_integral(g: int, exponents: Sequence[int], hodge_index: int = 0,
                       *, flagged: bool = False):
    """∫_{M̄_{g,n}} λ_{hodge_index} Π ψ_i^{a_i} for g <= 1.

    A dimension mismatch gives 0 rather than an error, since localization
    sums produce many such terms.  With ``flagged=True`` the result is an
    :class:`IntegralValue` that also records whether that happened.
    """
    if flagged:
        bad = not dimension_matches(g, exponents, hodge_index) or not 0 <= hodge_index <= g
        return IntegralValue(Fraction(0) if bad else psi_hodge_integral(g, exponents, hodge_index), bad)
    if hodge_index < 0 or hodge_index > g:
        return Fraction(0)
    if g == 0:
        return genus0_psi(exponents)
    if g == 1:
        if hodge_index == 1:
            return lambda1_psi(exponents)
        return dvv(1, exponents)
    raise NotImplementedError("Hodge integrals are implemented for genus <= 1 only")


def genus0_pullback_psi(points: Sequence, exponents: Mapping, b, forgotten: Iterable) -> Fraction:
    """∫_{M̄_{0,P}} π^*ψ_b · Π_p ψ_p^{e_p}, π forgetting ``forgotten``.

    Uses ψ_b = π^*ψ_b + Σ_S D_{b ∪ S} over nonempty S ⊆ forgotten.
    """
    points = list(points)
    F = list(forgotten)
    if b in F:
        raise ValueError("the pulled-back point cannot be forgotten")
    if len(points) - len(F) < 3:
        return Fraction(0)
    e = {p: exponents.get(p, 0) for p in points}

    def exps_of(ps):
        return [e[p] for p in ps]

    base = dict(e)
    base[b] = base[b] + 1
    total = genus0_psi([base[p] for p in points])
    for size in range(1, len(F) + 1):
        for S in combinations(F, size):
            tail = [b, *S]
            other = [p for p in points if p not in tail]
            total -= genus0_psi(exps_of(tail) + [0]) * genus0_psi(exps_of(other) + [0])
    return total


def genus1_lambda1_pullback_psi(points: Sequence, exponents: Mapping, b, forgotten: Iterable) -> Fraction:
    """∫_{M̄_{1,P}} λ_1 π^*ψ_b Π ψ_p^{e_p} via the δ_irr reduction."""
    nodes = ("node+", "node-")
    return Fraction(1, 24) * genus0_pullback_psi(list(points) + list(nodes), exponents, b, forgotten)
