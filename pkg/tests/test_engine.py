from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from wallcross.cohomology import P1QuantumRing
from wallcross.localization.engine import (
    Insertion,
    edge_factor,
    edge_weight_enumeration,
    graph_contribution,
    gw_invariant,
    localization_trunc,
    omega_degree_zero,
    omega_from_localization,
    vertex_factor,
)
from wallcross.localization.graphs import ScopeError, enumerate_graphs
from wallcross.series import Series
from wallcross.tft import omega_closed

I = Insertion


@pytest.fixture(scope="module")
def ring():
    return P1QuantumRing(0, lam_window=64)


def lam(t, p, c=1):
    return Series.monomial(t, c, lam=p)


class TestFactors:
    @pytest.mark.parametrize("d", range(1, 6))
    def test_edge_factor_matches_weight_enumeration(self, d):
        t = localization_trunc(0, d)
        assert edge_factor(d, t) == edge_weight_enumeration(d, t)

    def test_edge_factor_values(self):
        t = localization_trunc(0, 3)
        assert edge_factor(1, t) == lam(t, -2, -1)
        assert edge_factor(2, t) == lam(t, -4, 4)
        assert edge_factor(1, t) * edge_factor(1, t) == lam(t, -4)
        with pytest.raises(ValueError):
            edge_factor(0, t)

    def test_trivalent_genus0_vertex(self):
        t = localization_trunc(0, 3)
        # w^{k-1} Π 1/ω_F with ⟨τ_0^3⟩ = 1
        assert vertex_factor(0, "0", [1, 1, 1], [], t) == lam(t, -1)
        assert vertex_factor(0, "inf", [1, 1, 1], [], t) == lam(t, -1, -1)

    def test_genus1_one_flag_vertex(self):
        t = localization_trunc(0, 3)
        # (w - λ_1)/(ω - ψ) on M̄_{1,1}: ψ and λ_1 terms cancel
        assert vertex_factor(1, "0", [1], [], t).is_zero()
        # capped by λ_1 only w λ_1 / ω survives
        assert vertex_factor(1, "0", [1], [], t, lambda1=True) == lam(t, 0, Fraction(1, 24))

    def test_vertex_scope(self):
        t = localization_trunc(0, 3)
        with pytest.raises(ScopeError):
            vertex_factor(2, "0", [1], [], t)
        with pytest.raises(ValueError):
            vertex_factor(0, "0", [1, 1], [], t)


class TestInvariants:
    def test_three_point_line(self, ring):
        H = ring.H
        assert gw_invariant(0, 1, [H, H, H]) == Series.one(gw_invariant(0, 1, [H, H, H]).trunc)

    def test_quantum_ring_oracle(self):
        r = P1QuantumRing(1)
        H = r.H
        cube = r.integral(r.product(r.product(H, H), H)).coefficient(y=1)
        assert gw_invariant(0, 1, [H, H, H]) == cube

    def test_divisor_equation(self, ring):
        H = ring.H
        for d in (1, 2):
            assert gw_invariant(0, d, [H, H, H]) == gw_invariant(0, d, [H, H]) * d
        # ⟨H, τ_2(pt)⟩_{0,2} = 2⟨τ_2(pt)⟩ + ⟨τ_1(H·H)⟩, the last term vanishes by degree
        assert gw_invariant(0, 2, [I(H), I(H, 2)]) == gw_invariant(0, 2, [I(H, 2)]) * 2

    def test_string_equation(self, ring):
        H, one = ring.H, ring.one
        assert gw_invariant(0, 1, [I(one), I(H, 1), I(H), I(H)]) == gw_invariant(0, 1, [H, H, H])
        assert gw_invariant(0, 2, [I(one), I(H, 3)]) == gw_invariant(0, 2, [I(H, 2)])
        assert gw_invariant(1, 1, [I(one), I(H, 3)]) == gw_invariant(1, 1, [I(H, 2)])

    def test_dilaton_equation(self, ring):
        H, one = ring.H, ring.one
        assert gw_invariant(0, 1, [I(one, 1), H, H, H]) == gw_invariant(0, 1, [H, H, H])
        assert gw_invariant(0, 2, [I(one, 1), I(H, 2)]) == -gw_invariant(0, 2, [I(H, 2)])
        assert gw_invariant(1, 1, [I(one, 1), I(H, 2)]) == gw_invariant(1, 1, [I(H, 2)])

    @pytest.mark.parametrize("g,d,value", [
        # [z^{2g}] S(z)^{2d-1} / (d!)^2 with S(z) = 1 + z^2/24 + ...
        (0, 1, Fraction(1)), (0, 2, Fraction(1, 4)), (0, 3, Fraction(1, 36)),
        (1, 1, Fraction(1, 24)), (1, 2, Fraction(1, 32)), (1, 3, Fraction(5, 864)),
    ])
    def test_one_point_point_class(self, ring, g, d, value):
        got = gw_invariant(g, d, [I(ring.H, 2 * g + 2 * d - 2)])
        assert got == Series.const(value, got.trunc)

    @pytest.mark.parametrize("g,d", [(0, 1), (0, 2), (1, 1), (1, 2)])
    def test_laurent_polynomial_in_lambda(self, ring, g, d):
        # insertions polynomial in λ; e_0 itself carries λ^-1
        classes = [ring.one, ring.H, ring.H - ring.lam]
        n = 3 if g == 0 else 1
        for names in combinations_with_replacement(range(3), n):
            for psi in range(3):
                ins = [I(classes[names[0]], psi)] + [I(classes[k]) for k in names[1:]]
                assert all(m.lam >= 0 for m in gw_invariant(g, d, ins).terms)

    def test_detail_sums_to_total(self, ring):
        total, parts = gw_invariant(0, 2, [ring.H, ring.H], detail=True)
        acc = Series.zero(total.trunc)
        for p in parts:
            acc = acc + p.value
        assert acc == total and len(parts) == len(enumerate_graphs(0, 2, 2))


class TestOmega:
    def test_degree_zero_graph_route(self, ring):
        e0 = ring.idempotents[0]
        for ins in ([ring.H] * 3, [ring.one, ring.H, e0], [e0] * 3):
            assert gw_invariant(0, 0, ins) == omega_degree_zero(0, ins)
        for a in (ring.H, ring.one, e0):
            t = ring.trunc
            via_graphs = Series.zero(t)
            for G, A in enumerate_graphs(1, 1, 0):
                via_graphs = via_graphs + graph_contribution(G, A, [I(a)], t, lambda1=True) * 24
            assert via_graphs == omega_degree_zero(1, [a])

    @pytest.mark.parametrize("g,names", [
        (0, ("e0", "e0", "e0")), (0, ("H", "H", "H")), (0, ("1", "H", "einf")),
        (1, ("H",)), (1, ("e0",)), (1, ("H", "H")), (1, ("e0", "einf")), (1, ("1", "e0")),
    ])
    def test_matches_tft(self, g, names):
        r = P1QuantumRing(2)
        ins = [r.parse_class(k) for k in names]
        assert omega_from_localization(g, ins, 2) == omega_closed(g, ins, r)

    def test_unsupported_shape(self):
        r = P1QuantumRing(1)
        with pytest.raises(ScopeError):
            omega_from_localization(0, [r.H] * 4, 1)

    def test_needs_enough_y(self):
        r = P1QuantumRing(1)
        with pytest.raises(ValueError):
            omega_from_localization(1, [r.H], 2)
