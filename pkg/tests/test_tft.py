from fractions import Fraction
from math import comb

import pytest

from wallcross.cohomology import P1QuantumRing, quantum_product
from wallcross.series import Series
from wallcross.tft import (
    TFTForm,
    eta_power,
    irrationality_witness,
    omega_closed,
    omega_dilaton_form,
    phi,
    s_tilde,
    solve_tft_system,
    verify_tft_system,
)


@pytest.fixture(scope="module")
def ring():
    return P1QuantumRing(5)


def lam(ring, p, c=1):
    return Series.monomial(ring.trunc, c, lam=p)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_phi_coefficients():
    p = phi(3)
    assert p.coefficient(y=0) == Series.one(p.trunc).coefficient(y=0)
    assert p.coefficient(y=1) == Series.monomial(p.trunc, 4, lam=-2)


class TestSTilde:
    def test_unit_insertion(self, ring):
        assert s_tilde("0", ring.one, ring).value == ring.phi_power(-1, 4)

    def test_idempotent_insertions(self, ring):
        e0, einf = ring.idempotents
        assert s_tilde("0", e0, ring).value == ring.phi_power(-1, 4)
        assert s_tilde("0", einf, ring).value.is_zero()
        assert s_tilde("inf", e0, ring).value.is_zero()

    def test_ratio(self, ring):
        r = s_tilde("0", ring.H, ring).value / s_tilde("0", ring.one, ring).value
        half = lam(ring, 1, Fraction(1, 2))
        assert r == half + half * ring.sqrt_phi

    def test_rejects_unknown_point(self, ring):
        with pytest.raises(ValueError):
            s_tilde("1", ring.one, ring)


class TestOmega:
    def test_n_zero(self, ring):
        for g in range(4):
            expected = (lam(ring, g - 1) + lam(ring, g - 1, Fraction(-1) ** (g - 1))) * ring.phi_power(g - 1, 2)
            assert omega_closed(g, [], ring) == expected

    def test_three_point_idempotent(self, ring):
        e0 = ring.idempotents[0]
        assert omega_closed(0, [e0, e0, e0], ring) == lam(ring, -1) * ring.phi_power(-1, 2)

    def test_two_point(self, ring):
        assert omega_closed(0, [ring.H, ring.H], ring) == ring.lam

    def test_small_values(self, ring):
        H, y = ring.H, ring.y
        assert omega_closed(1, [H], ring) == ring.lam
        assert omega_closed(1, [H, H], ring) == ring.lam * ring.lam + y * 2
        assert omega_closed(0, [H, H, H], ring) == ring.lam * ring.lam + y

    def test_three_point_is_quantum_pairing(self, ring):
        classes = [ring.one, ring.H, ring.idempotents[0], ring.H * 2 - ring.one]
        for a in classes:
            for b in classes:
                assert omega_closed(0, [a, b, ring.one], ring) == ring.integral(quantum_product(a, b))

    def test_gluing(self, ring):
        """ω_{g+1,n}(α) = Σ_j η_j^{-1} ω_{g,n+2}(α, e_j, e_j)."""
        e = dict(zip(("0", "inf"), ring.idempotents))
        for g in range(3):
            for alpha in ([], [ring.H], [ring.one, ring.H]):
                glued = Series.zero(ring.trunc)
                for j in ("0", "inf"):
                    glued = glued + eta_power(ring, j, -1) * omega_closed(g, alpha + [e[j], e[j]], ring)
                assert glued == omega_closed(g + 1, alpha, ring)

    def test_symmetric_multilinear(self, ring):
        H, one, e0 = ring.H, ring.one, ring.idempotents[0]
        form = TFTForm(0, 3, ring)
        assert form(H, one, e0) == form(e0, H, one)
        assert form(H * 3 + one, one, e0) == form(H, one, e0) * 3 + form(one, one, e0)
        with pytest.raises(TypeError):
            form(H)

    @pytest.mark.parametrize("g,n", [(0, 3), (1, 1), (1, 2), (2, 0), (2, 1)])
    def test_dilaton_form(self, ring, g, n):
        args = [ring.H] * n
        assert omega_dilaton_form(g, args, ring) == omega_closed(g, args, ring)


class TestSystem:
    def test_cubic_system_report_passes(self):
        rep = verify_tft_system(6)
        assert rep.passed, rep.to_text()

    def test_solver_is_unique_solution(self, ring):
        s = solve_tft_system(ring)
        e0, einf = ring.idempotents
        assert s["0", "e0"] == s_tilde("0", e0, ring).value
        assert s["inf", "einf"] == s_tilde("inf", einf, ring).value
        assert s["0", "einf"].is_zero() and s["inf", "e0"].is_zero()

    def test_degenerate_order(self):
        assert verify_tft_system(0).passed


class TestIrrationality:
    def test_catalan_coefficients(self):
        r = P1QuantumRing(10)
        u0 = r.eigenvalues[0]
        for k in range(1, 11):
            expected = Series.monomial(r.trunc, (-1) ** (k - 1) * catalan(k - 1), lam=1 - 2 * k)
            assert u0.coefficient(y=k) == expected

    def test_report(self):
        rep = irrationality_witness(10)
        assert rep.passed and len(rep.checks) == 11

    def test_bad_depth(self):
        with pytest.raises(ValueError):
            irrationality_witness(0)
