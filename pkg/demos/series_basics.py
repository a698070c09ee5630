"""
Exact truncated series
======================

Every series carries its truncation.  q, y and H are cut off by an
ideal; z and λ live in a finite Laurent window that raises on overflow.
"""

from fractions import Fraction

from wallcross import Series, TruncationSpec, invert_unit, nth_root, substitute

t = TruncationSpec(y_max=3, h_bound=2)
y = Series.var("y", t)
lam = Series.var("λ", t)
H = Series.var("H", t)

# φ = 1 + 4y/λ², and its square root as a binomial series
phi = 1 + y * 4 / lam ** 2
print("φ^(1/2)  =", nth_root(phi, 1, 2))
print("φ^(-1/4) =", nth_root(phi, -1, 4))

# geometric series: the leading monomial is a unit, the rest is nilpotent
print("1/(1-y)  =", invert_unit(1 - y))
print("1/(λ-H)  =", invert_unit(lam - H))

# substituting z = (λ - H)/2 into H + z
z = Series.var("z", t)
print("H + z at z=(λ-H)/2:", substitute(H + z, "z", (lam - H) * Fraction(1, 2)))

# JSON keeps rationals exact
print(nth_root(phi, 1, 2).to_json())
