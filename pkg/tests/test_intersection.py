import random
from fractions import Fraction
from itertools import product

import pytest

from wallcross.localization.intersection import (
    IntegralValue,
    dimension_matches,
    dvv,
    genus0_psi,
    genus0_pullback_psi,
    genus1_lambda1_pullback_psi,
    lambda1_psi,
    psi_hodge_integral,
)


def compositions(total, parts):
    return [a for a in product(range(total + 1), repeat=parts) if sum(a) == total]


@pytest.mark.parametrize("n", range(3, 8))
def test_genus0_closed_form_matches_dvv(n):
    for a in compositions(n - 3, n):
        assert genus0_psi(a) == dvv(0, a)


@pytest.mark.parametrize("g,a,value", [
    (1, (1,), Fraction(1, 24)),
    (1, (1, 1), Fraction(1, 24)),
    (1, (2, 1, 0), Fraction(1, 12)),
    (2, (4,), Fraction(1, 1152)),
    (2, (3, 2), Fraction(29, 5760)),
    (2, (2, 2, 2), Fraction(7, 240)),
    (3, (7,), Fraction(1, 82944)),
])
def test_dvv_known_values(g, a, value):
    assert dvv(g, a) == value


def test_small_values():
    assert psi_hodge_integral(0, [0, 0, 0]) == 1
    assert psi_hodge_integral(0, [1, 0, 0, 0]) == 1
    assert psi_hodge_integral(1, [1]) == Fraction(1, 24)
    assert psi_hodge_integral(1, [0], 1) == Fraction(1, 24)


def test_dimension_mismatch_is_zero_and_flagged():
    assert psi_hodge_integral(1, [2]) == 0
    assert psi_hodge_integral(1, [2], flagged=True) == IntegralValue(Fraction(0), True)
    assert psi_hodge_integral(0, [1, 0, 0, 0], flagged=True) == IntegralValue(Fraction(1), False)
    assert not dimension_matches(0, [0, 0])


def test_higher_genus_hodge_is_out_of_scope():
    with pytest.raises(NotImplementedError):
        psi_hodge_integral(2, [4])


def lambda1_by_recursion(a):
    """Reduce ∫λ_1 Πψ^a on M̄_{1,n} to ∫_{M̄_{1,1}} λ_1 by string and dilaton."""
    a = list(a)
    if len(a) == 1:
        return Fraction(1, 24) if a == [0] else Fraction(0)
    if 0 in a:
        i = a.index(0)
        rest = a[:i] + a[i + 1:]
        return sum((lambda1_by_recursion(rest[:k] + [rest[k] - 1] + rest[k + 1:])
                    for k in range(len(rest)) if rest[k] > 0), Fraction(0))
    if 1 in a:
        i = a.index(1)
        rest = a[:i] + a[i + 1:]
        return (len(rest)) * lambda1_by_recursion(rest)
    return Fraction(0)  # Σa = n - 1 forces some a_i <= 1


@pytest.mark.parametrize("n", range(1, 6))
def test_lambda1_closed_form_matches_string_dilaton(n):
    for a in compositions(n - 1, n):
        assert lambda1_psi(a) == lambda1_by_recursion(a)


def random_cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        g = rng.randrange(2)
        h = rng.randrange(g + 1)
        n = rng.randrange(3 if g == 0 else 1, 6)
        yield g, h, n, rng


@pytest.mark.parametrize("case", list(random_cases(7, 20)), ids=lambda c: f"g{c[0]}-h{c[1]}-n{c[2]}")
def test_string_and_dilaton(case):
    g, h, n, rng = case
    a = [0] * n
    for _ in range(3 * g - 2 + n - h):
        a[rng.randrange(n)] += 1
    lhs = psi_hodge_integral(g, [0] + a, h)
    rhs = sum((psi_hodge_integral(g, a[:i] + [a[i] - 1] + a[i + 1:], h) for i in range(n) if a[i]), Fraction(0))
    assert lhs == rhs
    b = [0] * n
    for _ in range(3 * g - 3 + n - h):
        b[rng.randrange(n)] += 1
    assert psi_hodge_integral(g, [1] + b, h) == (2 * g - 2 + n) * psi_hodge_integral(g, b, h)


class TestPullbacks:
    def test_pullback_from_point_space_vanishes(self):
        assert genus0_pullback_psi([1, 2, 3, 4], {}, 1, [4]) == 0

    def test_no_forgotten_points_is_plain_psi(self):
        assert genus0_pullback_psi([1, 2, 3, 4], {}, 1, []) == 1

    def test_pullback_against_comparison_formula(self):
        # on M̄_{0,5}: ∫ψ_1 π^*ψ_1 with π forgetting 5 is ∫_{M̄_{0,4}} ψ_1 = 1
        assert genus0_pullback_psi([1, 2, 3, 4, 5], {1: 1}, 1, [5]) == 1

    def test_genus1(self):
        # ∫_{M̄_{1,2}} λ_1 π^*ψ_1 = ∫_{M̄_{1,1}} λ_1 ψ_1 = 0 and λ_1 ψ_1 itself is 1/24
        assert genus1_lambda1_pullback_psi([1, 2], {}, 1, [2]) == 0
        assert genus1_lambda1_pullback_psi([1, 2], {}, 1, []) == Fraction(1, 24)

    def test_forgotten_point_must_differ(self):
        with pytest.raises(ValueError):
            genus0_pullback_psi([1, 2, 3, 4], {}, 4, [4])
