"""The semisimple TFT of equivariant P^1 and the S~ values at z = 0.

With idempotent norms η_0 = λ^-1 φ^-1/2 and η_∞ = -λ^-1 φ^-1/2 the forms

    ω_{g,n}(α_1, ..., α_n) = Σ_j η_j^{1-g} Π_k α_k^{(j)}

are multilinear with all mixed-idempotent values zero.  The closed forms

    S~_0(1, 0) = S~_∞(1, 0) = φ^-1/4
    S~_0(H, 0) = φ^-1/4 (λ/2 + (λ/2)√φ),   S~_∞(H, 0) = φ^-1/4 (λ/2 - (λ/2)√φ)

are checked against the cubic system that ω_{0,3} imposes on them, and
against the dilaton form ``Σ_j (σ_j λ)^{g-1} (1 - ε~^1_j)^{-(2g-2+n)} Π S~_j(α_k, 0)``.

The series S_j(α, z), ε_j(z), ε~_j(z) at nonzero z are not modeled; only
their z = 0 values and the scalar ε~^1_j are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from .cohomology import FIXED_POINTS, SIGMA, P1QuantumRing, quantum_product
from .report import VerificationReport, timed
from .series import Series

__all__ = [
    "UNCOMPUTED_SYMBOLS",
    "STildeValue",
    "TFTForm",
    "phi",
    "s_tilde",
    "eta_power",
    "epsilon_tilde_linear",
    "omega_closed",
    "omega_dilaton_form",
    "solve_tft_system",
    "verify_tft_system",
    "irrationality_witness",
]

UNCOMPUTED_SYMBOLS = {
    "S_j(alpha, z)": "tree series with one marking; only S~_j(alpha, 0) is computed",
    "eps_j(z)": "tree series with no marking",
    "eps~_j(z)": "string-flowed tree series; only its linear coefficient is modeled",
    "U_{l,k}": "quasimap classes on the twisted graph space; symbolic only",
    "D_beta(lambda, y)": "needs quasimap virtual classes with beta > 0; symbolic only",
}


def _ring(order_or_ring) -> P1QuantumRing:
    if isinstance(order_or_ring, P1QuantumRing):
        return order_or_ring
    return P1QuantumRing(int(order_or_ring))


def phi(order: int) -> Series:
    """φ = 1 + 4y/λ^2 truncated at y^order."""
    return P1QuantumRing(order).phi


@dataclass(frozen=True)
class STildeValue:
    j: str
    alpha: Series
    value: Series


def _s_tilde_basis(ring: P1QuantumRing, j: str) -> Tuple[Series, Series]:
    """(S~_j(1, 0), S~_j(H, 0))."""
    quarter = ring.phi_power(-1, 4)
    u0, uinf = ring.eigenvalues
    return quarter, quarter * (u0 if j == "0" else uinf)


def s_tilde(j: str, alpha: Series, ring) -> STildeValue:
    """S~_j(α, 0), extended linearly from the basis {1, H}."""
    ring = _ring(ring)
    if j not in FIXED_POINTS:
        raise ValueError(f"fixed point must be '0' or 'inf', got {j!r}")
    s1, sH = _s_tilde_basis(ring, j)
    a0, a1 = alpha.coefficient(H=0), alpha.coefficient(H=1)
    return STildeValue(j, alpha, a0 * s1 + a1 * sH)


def eta_power(ring: P1QuantumRing, j: str, k: int) -> Series:
    """η_j^k with η_j = σ_j λ^-1 φ^-1/2."""
    sign = SIGMA[j] ** (k % 2)
    return Series.monomial(ring.trunc, sign, lam=-k) * ring.phi_power(-k, 2)


def epsilon_tilde_linear(ring, j: str = "0") -> Series:
    """ε~^1_j, fixed by 1 - ε~^1_j = φ^-1/4 (same for both j)."""
    ring = _ring(ring)
    return ring.one - ring.phi_power(-1, 4)


def omega_closed(g: int, insertions: Sequence[Series], ring) -> Series:
    """ω_{g,n} from the semisimple TFT."""
    ring = _ring(ring)
    if g < 0:
        raise ValueError("genus must be non-negative")
    total = Series.zero(ring.trunc)
    coords = [ring.idempotent_coordinates(a) for a in insertions]
    for idx, j in enumerate(FIXED_POINTS):
        term = eta_power(ring, j, 1 - g)
        for c in coords:
            term = term * c[idx]
        total = total + term
    return total


class TFTForm:
    """ω_{g,n} as a callable multilinear form."""

    def __init__(self, g: int, n: int, ring):
        self.g, self.n, self.ring = g, n, _ring(ring)

    def __call__(self, *insertions: Series) -> Series:
        if len(insertions) != self.n:
            raise TypeError(f"ω_{{{self.g},{self.n}}} takes {self.n} insertions")
        return omega_closed(self.g, insertions, self.ring)


def omega_dilaton_form(g: int, insertions: Sequence[Series], ring) -> Series:
    """ω_{g,n} = Σ_j (σ_j λ)^{g-1} (1 - ε~^1_j)^{-(2g-2+n)} Π S~_j(α_k, 0)."""
    ring = _ring(ring)
    n = len(insertions)
    total = Series.zero(ring.trunc)
    for j in FIXED_POINTS:
        # (1 - ε~^1)^{-(2g-2+n)} = φ^{(2g-2+n)/4}
        term = Series.monomial(ring.trunc, SIGMA[j] ** ((g - 1) % 2), lam=g - 1)
        term = term * ring.phi_power(2 * g - 2 + n, 4)
        for a in insertions:
            term = term * s_tilde(j, a, ring).value
        total = total + term
    return total


def _cubic_residuals(ring: P1QuantumRing, s: Dict[Tuple[str, str], Series]) -> List[Series]:
    """The four cubic equations, as LHS - RHS."""
    pref = Series.monomial(ring.trunc, 1, lam=-1) * ring.phi_power(1, 4)
    rhs = Series.monomial(ring.trunc, 1, lam=-1) * ring.phi_power(-1, 2)
    a, b = s["0", "e0"], s["inf", "e0"]
    c, d = s["0", "einf"], s["inf", "einf"]
    return [
        pref * (a * a * a) - pref * (b * b * b) - rhs,
        pref * (a * a * c) - pref * (b * b * d),
        pref * (a * c * c) - pref * (b * d * d),
        pref * (c * c * c) - pref * (d * d * d) + rhs,
    ]


def _closed_s_values(ring: P1QuantumRing) -> Dict[Tuple[str, str], Series]:
    e0, einf = ring.idempotents
    return {(j, name): s_tilde(j, e, ring).value
            for j in FIXED_POINTS for name, e in (("e0", e0), ("einf", einf))}


def solve_tft_system(ring) -> Dict[Tuple[str, str], Series]:
    """Solve the cubic system order by order in y from the y = 0 boundary values.

    Uses a fixed Jacobian at (a, b, c, d) = (1, 0, 0, 1); each sweep fixes
    at least one more order of y.  Independent of the closed forms.
    """
    ring = _ring(ring)
    one, zero = ring.one, Series.zero(ring.trunc)
    s = {("0", "e0"): one, ("inf", "e0"): zero, ("0", "einf"): zero, ("inf", "einf"): one}
    # residuals scaled by λ φ^-1/4 so the Jacobian at y = 0 is constant
    scale = Series.monomial(ring.trunc, 1, lam=1) * ring.phi_power(-1, 4)
    for _ in range(ring.yorder + 2):
        r1, r2, r3, r4 = (scale * r for r in _cubic_residuals(ring, s))
        if all(r.is_zero() for r in (r1, r2, r3, r4)):
            break
        # linearization: δr1 = 3δa, δr2 = δc, δr3 = -δb, δr4 = -3δd
        s["0", "e0"] = s["0", "e0"] - r1 * Fraction(1, 3)
        s["0", "einf"] = s["0", "einf"] - r2
        s["inf", "e0"] = s["inf", "e0"] + r3
        s["inf", "einf"] = s["inf", "einf"] + r4 * Fraction(1, 3)
    return s


def verify_tft_system(yorder: int) -> VerificationReport:
    ring = P1QuantumRing(yorder)
    rep = VerificationReport("lemma-p1")
    s = _closed_s_values(ring)

    with timed() as dt:
        residuals = _cubic_residuals(ring, s)
    for i, r in enumerate(residuals, 1):
        rep.add_residual(f"cubic-equation-{i}", r, dt[0] / 4, yorder=yorder)

    at0 = {k: v.coefficient(y=0) for k, v in s.items()}
    one0 = ring.one.coefficient(y=0)
    rep.add_residual("boundary S~_0(e_0)|y=0 = 1", at0["0", "e0"] - one0)
    rep.add_residual("boundary S~_inf(e_inf)|y=0 = 1", at0["inf", "einf"] - one0)
    rep.add_residual("boundary S~_0(e_inf)|y=0 = 0", at0["0", "einf"])
    rep.add_residual("boundary S~_inf(e_0)|y=0 = 0", at0["inf", "e0"])

    with timed() as dt:
        solved = solve_tft_system(ring)
    for key in sorted(s):
        rep.add_residual(f"unique-solution S~_{key[0]}({key[1]})", solved[key] - s[key], dt[0] / 4)

    s1 = s_tilde("0", ring.one, ring).value
    sH = s_tilde("0", ring.H, ring).value
    u0 = ring.eigenvalues[0]
    rep.add_residual("ratio S~_0(H)/S~_0(1) = λ/2 + (λ/2)√φ", sH / s1 - u0)
    rep.add_residual("ratio × φ^1/4 S~_0(1) reproduces φ^1/4 S~_0(H)",
                     u0 * ring.phi_power(1, 4) * s1 - ring.phi_power(1, 4) * sH)

    for g in range(4):
        rep.add_residual(f"epsilon~ consistency ω_{{{g},0}}",
                         omega_dilaton_form(g, [], ring) - omega_closed(g, [], ring))

    basis = {"1": ring.one, "H": ring.H}
    for g, n in ((0, 3), (1, 1), (2, 0)):
        for names in product(sorted(basis), repeat=n):
            args = [basis[k] for k in names]
            with timed() as dt:
                diff = omega_dilaton_form(g, args, ring) - omega_closed(g, args, ring)
            rep.add_residual(f"dilaton form = TFT ω_{{{g},{n}}}({','.join(names)})", diff, dt[0])
    return rep


def irrationality_witness(kmax: int) -> VerificationReport:
    """λ/2 + (λ/2)√φ has a nonzero λ^{1-2k} term at every y^k, 1 <= k <= kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    ring = P1QuantumRing(kmax)
    u0 = ring.eigenvalues[0]
    rep = VerificationReport("irrationality")
    for k in range(0, kmax + 1):
        coeff = u0.coefficient(y=k)
        expected_exp = 1 - 2 * k
        ok = (len(coeff) == 1 and all(m.lam == expected_exp and not (m.z or m.H) for m in coeff.terms)
              and coeff.coefficient(lam=expected_exp).constant_term() != 0)
        c = coeff.coefficient(lam=expected_exp).constant_term()
        rep.add(f"y^{k} coefficient is c·λ^{expected_exp}, c != 0", ok,
                None if ok else coeff, coefficient=c)
    return rep
