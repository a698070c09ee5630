"""Quasimap I-functions, unstable truncations and mirror transformations.

For a complete intersection Z of degrees d_1..d_r in P^N::

    I(q, z) = z Σ_β q^β Π_i Π_{b=1}^{d_i β} (d_i H + b z) / Π_{b=1}^{β} (H + b z)^{N+1}

with ``H^{m+1} = 0``.  The twisted variant multiplies the q^β coefficient
by ``Π_{a=0}^{β-1} (λ - H + a z)``.  The ε-stable J-function agrees with
I up to q^⌊1/ε⌋ in its unstable part, and the mirror transformation is
the q-expansion of ``-z + [J^ε]_+``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, Optional

from .cohomology import TargetDescriptor
from .series import Series, TruncationSpec, invert_unit, substitute

__all__ = [
    "IFunction",
    "MirrorTransform",
    "EdgeIdentityReport",
    "i_trunc",
    "i_coefficient",
    "twist_factor",
    "ifunction",
    "twisted_ifunction",
    "unstable_truncation",
    "positive_part",
    "mirror_transform",
    "edge_identity_check",
    "max_unstable_degree",
]


def i_trunc(t: TargetDescriptor, qmax: int, twisted: bool = False) -> TruncationSpec:
    """Windows wide enough for every intermediate product up to q^qmax."""
    m = t.dim
    z_min = -(t.N + 1) * qmax - m - 1
    # the denominator Π (H + bz)^(N+1) is built before it is inverted
    z_max = max(sum(t.degrees), t.N + 1) * qmax + 2
    lam = qmax + 2 if twisted else 0
    return TruncationSpec(q_max=qmax, h_bound=m + 1, lam_min=-lam, lam_max=lam,
                          z_min=z_min, z_max=z_max)


def twist_factor(beta: int, trunc: TruncationSpec) -> Series:
    """Π_{a=0}^{β-1} (λ - H + a z)."""
    out = Series.one(trunc)
    lam_t = Series.var("λ", trunc) - Series.var("H", trunc)
    z = Series.var("z", trunc)
    for a in range(beta):
        out = out * (lam_t + z * a)
    return out


def i_coefficient(t: TargetDescriptor, beta: int, trunc: TruncationSpec,
                  twisted: bool = False, with_z: bool = True) -> Series:
    """The q^β coefficient of I (or of z^-1 I when ``with_z`` is False)."""
    H = Series.var("H", trunc)
    z = Series.var("z", trunc)
    num = Series.one(trunc)
    for d in t.degrees:
        for b in range(1, d * beta + 1):
            num = num * (H * d + z * b)
    den = Series.one(trunc)
    for b in range(1, beta + 1):
        den = den * (H + z * b) ** (t.N + 1)
    out = num * invert_unit(den)
    if twisted:
        out = out * twist_factor(beta, trunc)
    return out * z if with_z else out


@dataclass(frozen=True)
class IFunction:
    target: TargetDescriptor
    qmax: int
    twisted: bool
    data: Series

    def coefficient(self, beta: int) -> Series:
        """q^β coefficient (a series in z, H and possibly λ)."""
        return self.data.coefficient(q=beta)

    def __str__(self):
        return str(self.data)


def ifunction(t: TargetDescriptor, qmax: int, twisted: bool = False) -> IFunction:
    if qmax < 0:
        raise ValueError("qmax must be non-negative")
    trunc = i_trunc(t, qmax, twisted)
    q = Series.var("q", trunc)
    total = Series.zero(trunc)
    for beta in range(qmax + 1):
        total = total + i_coefficient(t, beta, trunc, twisted) * q ** beta
    return IFunction(t, qmax, twisted, total)


def twisted_ifunction(t: TargetDescriptor, qmax: int) -> IFunction:
    return ifunction(t, qmax, twisted=True)


def max_unstable_degree(epsilon) -> int:
    """Largest β with β <= 1/ε."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("ε must be a positive rational")
    return floor(1 / eps)


def unstable_truncation(I: IFunction, epsilon) -> Series:
    """Keep the q^β terms of I with β <= 1/ε."""
    bmax = max_unstable_degree(epsilon)
    return I.data.filter(lambda m: m.q <= bmax)


def positive_part(S: Series) -> Series:
    """Drop every monomial with a negative power of z."""
    return S.filter(lambda m: m.z >= 0)


@dataclass(frozen=True)
class MirrorTransform:
    epsilon: Fraction
    twisted: bool
    qmax: int
    series: Series  # Σ_β q^β μ_β(z)

    def mu(self, beta: int) -> Series:
        return self.series.coefficient(q=beta)

    @property
    def components(self) -> Dict[int, Series]:
        return {b: self.mu(b) for b in range(1, self.qmax + 1)}

    def is_zero(self) -> bool:
        return self.series.is_zero()


def mirror_transform(t: TargetDescriptor, epsilon, twisted: bool = False, qmax: int = 3,
                     I: Optional[IFunction] = None) -> MirrorTransform:
    """``Σ_β q^β μ^ε_β(z) = -z + [J^ε]_+`` computed from the unstable part."""
    eps = Fraction(epsilon)
    if I is None:
        I = ifunction(t, qmax, twisted)
    J_unstable = unstable_truncation(I, eps)
    z = Series.var("z", I.data.trunc)
    mu = positive_part(J_unstable) - z
    return MirrorTransform(eps, twisted, I.qmax, mu)


# ---------------------------------------------------------------------------
# edge substitution identity


@dataclass
class EdgeIdentityReport:
    target: TargetDescriptor
    beta: int
    edge_degree: int
    sign: int
    include_a0: bool
    lhs: Series
    rhs: Series
    difference: Series
    numerator_match: bool
    denominator_match: bool
    twist_direct: Series
    twist_shifted_range: Series
    notes: list = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.difference.is_zero()

    def as_dict(self) -> dict:
        return {
            "target": {"N": self.target.N, "degrees": list(self.target.degrees)},
            "beta": self.beta,
            "edge_degree": self.edge_degree,
            "sign": self.sign,
            "include_a0": self.include_a0,
            "equal": self.equal,
            "numerator_match": self.numerator_match,
            "denominator_match": self.denominator_match,
            "lhs": self.lhs.to_list(),
            "rhs": self.rhs.to_list(),
            "difference": self.difference.to_list(),
            "twist_direct": self.twist_direct.to_list(),
            "twist_shifted_range": self.twist_shifted_range.to_list(),
            "notes": list(self.notes),
        }


def _edge_trunc(t: TargetDescriptor, beta: int) -> TruncationSpec:
    w = (t.N + 1 + sum(t.degrees) + 2) * (beta + 1) + t.dim + 4
    return TruncationSpec(h_bound=t.dim + 1, lam_min=-w, lam_max=w, z_min=-w, z_max=w)


def edge_identity_check(t: TargetDescriptor, beta: int, d: int, sign: int = -1,
                        include_a0: bool = False) -> EdgeIdentityReport:
    """Compare the basepoint-edge quotient with the substituted I-coefficient.

    LHS = Π_i Π_{a=a_min}^{d_i β} (d_i H - (a/d) λ~) / Π_{a=1}^{β} (H - (a/d) λ~)^{N+1}
    RHS = [q^β] z^-1 I  at  z = sign * λ~ / d,   λ~ = λ - H.
    """
    if beta < 0 or d < 1:
        raise ValueError("need β >= 0 and edge degree d >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    trunc = _edge_trunc(t, beta)
    H = Series.var("H", trunc)
    lam_t = Series.var("λ", trunc) - H
    step = lam_t * Fraction(1, d)
    a_min = 0 if include_a0 else 1

    num = Series.one(trunc)
    for di in t.degrees:
        for a in range(a_min, di * beta + 1):
            num = num * (H * di - step * a)
    den = Series.one(trunc)
    for a in range(1, beta + 1):
        den = den * (H - step * a) ** (t.N + 1)
    lhs = num * invert_unit(den)

    zval = step * sign
    num_I = Series.one(trunc)
    z = Series.var("z", trunc)
    for di in t.degrees:
        for b in range(1, di * beta + 1):
            num_I = num_I * (H * di + z * b)
    den_I = Series.one(trunc)
    for b in range(1, beta + 1):
        den_I = den_I * (H + z * b) ** (t.N + 1)
    num_sub = substitute(num_I, "z", zval)
    den_sub = substitute(den_I, "z", zval)
    rhs = substitute(i_coefficient(t, beta, trunc, with_z=False), "z", zval)

    twist_direct = substitute(twist_factor(beta, trunc), "z", zval)
    twist_shifted = Series.one(trunc)
    for b in range(d - beta - 1, d + 1):
        twist_shifted = twist_shifted * (lam_t * Fraction(b, d))

    notes = []
    if sign == 1:
        notes.append("z = +λ~/d: the I-function factors become H + (b/d)λ~, "
                     "opposite in sign to the basepoint-edge factors H - (a/d)λ~")
    if include_a0 and t.r:
        notes.append("a = 0 factor included: extra Π d_i H (nilpotent) multiplies the LHS")
    notes.append(
        f"twist range b = {d - beta - 1}..{d} has {beta + 2} factors; direct substitution "
        f"of Π_(a=0)^(β-1)(λ~ + a z) has {beta}"
    )
    return EdgeIdentityReport(
        target=t, beta=beta, edge_degree=d, sign=sign, include_a0=include_a0,
        lhs=lhs, rhs=rhs, difference=lhs - rhs,
        numerator_match=(num == num_sub), denominator_match=(den == den_sub),
        twist_direct=twist_direct, twist_shifted_range=twist_shifted, notes=notes,
    )
