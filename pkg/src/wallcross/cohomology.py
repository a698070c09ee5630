"""Cohomology of complete intersections and the equivariant quantum ring of P^1.

Classes are :class:`~wallcross.series.Series` in ``H`` (plus ``λ`` and
``y`` where relevant).  For P^1 a class is stored as ``c0 + c1*H`` with
``h_bound = 2``; products must go through :func:`quantum_product`, which
reduces by ``H**2 = λH + y`` (plain series multiplication would set
``H**2 = 0``, which is wrong equivariantly).

Fixed-point conventions: ``H|_0 = λ``, ``H|_∞ = 0``, tangent weights
``λ`` at 0 and ``-λ`` at ∞.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Sequence, Tuple

from .series import Series, TruncationSpec, nth_root

__all__ = [
    "TargetDescriptor",
    "pairing_Z",
    "P1QuantumRing",
    "quantum_product",
    "idempotents",
    "restrict",
    "equivariant_integral_P1",
    "SIGMA",
    "FIXED_POINTS",
]

FIXED_POINTS = ("0", "inf")
SIGMA = {"0": 1, "inf": -1}


@dataclass(frozen=True)
class TargetDescriptor:
    """Complete intersection of degrees ``degrees`` in P^N."""

    N: int
    degrees: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.N < 1:
            raise ValueError("ambient dimension N must be positive")
        if any(d < 1 for d in self.degrees):
            raise ValueError("hypersurface degrees must be >= 1")
        if self.dim < 0:
            raise ValueError(f"more equations ({self.r}) than ambient dimension ({self.N})")

    @classmethod
    def parse(cls, ambient: int, degrees: str | Sequence[int] = "") -> "TargetDescriptor":
        if isinstance(degrees, str):
            degrees = [int(d) for d in degrees.split(",") if d.strip()]
        return cls(int(ambient), tuple(degrees))

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.N - self.r

    @property
    def degree(self) -> int:
        """∫_Z H^m, the product of the defining degrees."""
        return prod(self.degrees)

    @property
    def h_bound(self) -> int:
        return self.dim + 1

    @property
    def c1_excess(self) -> int:
        """Σ d_i - N - 1; the z-degree drift per unit of q in z^-1 I."""
        return sum(self.degrees) - self.N - 1

    def __str__(self):
        degs = ",".join(map(str, self.degrees))
        return f"Z(N={self.N}; {degs})" if degs else f"P^{self.N}"


def pairing_Z(t: TargetDescriptor, a: Series, b: Series) -> Fraction:
    """Poincaré pairing on Z, normalized by ``∫_Z H^m = Π d_i``."""
    if a.trunc.h_bound != t.h_bound:
        raise ValueError(f"classes on {t} need h_bound {t.h_bound}, got {a.trunc.h_bound}")
    top = (a * b).coefficient(H=t.dim)
    extra = [m for m in top.terms if any(m)]
    if extra:
        raise ValueError("pairing_Z takes non-equivariant classes")
    return top.constant_term() * t.degree


# ---------------------------------------------------------------------------
# P^1


def _parts(a: Series):
    return a.coefficient(H=0), a.coefficient(H=1)


def quantum_product(a: Series, b: Series) -> Series:
    """Product in C[λ, H][[y]] / (H(H - λ) - y)."""
    if a.trunc.h_bound != 2:
        raise ValueError("P^1 classes need h_bound 2")
    a0, a1 = _parts(a)
    b0, b1 = _parts(b)
    t = a.trunc
    H = Series.var("H", t)
    y = Series.var("y", t)
    lam = Series.var("λ", t)
    top = a1 * b1
    return a0 * b0 + top * y + (a0 * b1 + a1 * b0 + top * lam) * H


def restrict(a: Series, j: str) -> Series:
    """Restriction to the fixed point ``j``: H -> λ at 0, H -> 0 at ∞."""
    a0, a1 = _parts(a)
    if j == "0":
        return a0 + a1 * Series.var("λ", a.trunc)
    if j == "inf":
        return a0
    raise ValueError(f"fixed point must be '0' or 'inf', got {j!r}")


def tangent_weight(j: str, trunc: TruncationSpec) -> Series:
    return Series.monomial(trunc, SIGMA[j], lam=1)


def equivariant_integral_P1(a: Series) -> Series:
    """Atiyah-Bott sum ``a|_0/λ + a|_∞/(-λ)``."""
    t = a.trunc
    inv_lam = Series.var("λ", t, -1)
    return (restrict(a, "0") - restrict(a, "inf")) * inv_lam


@dataclass(frozen=True)
class P1QuantumRing:
    """Equivariant quantum cohomology of P^1 truncated at ``y**yorder``.

    Caches the roots of ``φ = 1 + 4y/λ^2`` that every TFT quantity needs.
    """

    yorder: int
    lam_window: int = field(default=0)

    def __post_init__(self):
        if self.yorder < 0:
            raise ValueError("yorder must be non-negative")
        if not self.lam_window:
            object.__setattr__(self, "lam_window", 8 * self.yorder + 24)

    @cached_property
    def trunc(self) -> TruncationSpec:
        w = self.lam_window
        return TruncationSpec(y_max=self.yorder, h_bound=2, lam_min=-w, lam_max=w, z_min=0, z_max=0)

    def const(self, c) -> Series:
        return Series.const(c, self.trunc)

    @cached_property
    def one(self) -> Series:
        return Series.one(self.trunc)

    @cached_property
    def H(self) -> Series:
        return Series.var("H", self.trunc)

    @cached_property
    def lam(self) -> Series:
        return Series.var("λ", self.trunc)

    @cached_property
    def y(self) -> Series:
        return Series.var("y", self.trunc)

    @cached_property
    def phi(self) -> Series:
        return self.one + self.y * Series.monomial(self.trunc, 4, lam=-2)

    def phi_power(self, num: int, den: int = 1) -> Series:
        """``φ**(num/den)`` as a y-series."""
        return self._phi_powers(Fraction(num, den))

    def _phi_powers(self, p: Fraction) -> Series:
        cache = self.__dict__.setdefault("_phi_cache", {})
        if p not in cache:
            cache[p] = nth_root(self.phi, p.numerator, p.denominator)
        return cache[p]

    @cached_property
    def sqrt_phi(self) -> Series:
        return self.phi_power(1, 2)

    @cached_property
    def eigenvalues(self) -> Tuple[Series, Series]:
        """H = u_0 e_0 + u_∞ e_∞ with u = λ/2 ± (λ/2)√φ."""
        half = self.lam * Fraction(1, 2)
        return half + half * self.sqrt_phi, half - half * self.sqrt_phi

    @cached_property
    def idempotents(self) -> Tuple[Series, Series]:
        half = self.lam * Fraction(1, 2)
        denom = 1 / (self.lam * self.sqrt_phi)
        e0 = (-half + half * self.sqrt_phi + self.H) * denom
        einf = (half + half * self.sqrt_phi - self.H) * denom
        return e0, einf

    @cached_property
    def norms(self) -> Tuple[Series, Series]:
        """∫ e_j ★ e_j, i.e. ±λ^-1 φ^-1/2."""
        inv = Series.var("λ", self.trunc, -1) * self.phi_power(-1, 2)
        return inv, -inv

    def product(self, a: Series, b: Series) -> Series:
        return quantum_product(a, b)

    def integral(self, a: Series) -> Series:
        return equivariant_integral_P1(a)

    def idempotent_coordinates(self, a: Series) -> Tuple[Series, Series]:
        """Coefficients (a^(0), a^(∞)) with a = a^(0) e_0 + a^(∞) e_∞."""
        a0, a1 = _parts(a)
        u0, uinf = self.eigenvalues
        return a0 + a1 * u0, a0 + a1 * uinf

    def parse_class(self, token: str) -> Series:
        """Map a CLI/test token (1, H, e0, einf) to a class."""
        key = token.strip()
        if key in ("1", "one"):
            return self.one
        if key == "H":
            return self.H
        if key in ("e0", "e_0"):
            return self.idempotents[0]
        if key in ("einf", "e_inf", "e∞", "e_∞"):
            return self.idempotents[1]
        raise ValueError(f"unknown P^1 class {token!r}; use 1, H, e0 or einf")


def idempotents(order: int) -> Tuple[Series, Series]:
    return P1QuantumRing(order).idempotents
