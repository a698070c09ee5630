"""
The quintic I-function and its wall-crossing
============================================

The q^β coefficient of I is a ratio of linear products in H and z.  The
ε-mirror transformation keeps the z-polynomial part of the q^β terms with
β <= 1/ε, so it only changes when 1/ε crosses an integer.
"""

from fractions import Fraction

from wallcross import TargetDescriptor, ifunction, mirror_transform

quintic = TargetDescriptor(4, (5,))
I = ifunction(quintic, qmax=3)

for beta in range(4):
    c = I.data.coefficient(q=beta, z=1, H=0).constant_term()
    print(f"[q^{beta} z H^0] I = {c}")

mu = mirror_transform(quintic, 1, I=I)
print("μ^1_1(z) =", mu.mu(1))

# one value of ε per chamber (1/(k+1), 1/k], plus one above the last wall
for eps in (Fraction(2), Fraction(1), Fraction(2, 3), Fraction(2, 5), Fraction(2, 7)):
    m = mirror_transform(quintic, eps, I=I)
    kept = [b for b, s in m.components.items() if not s.is_zero()]
    print(f"ε = {eps}: nonzero μ_β for β in {kept}")

# with the λ-twist the q^1 term picks up a factor λ - H
tw = ifunction(quintic, qmax=1, twisted=True)
print("twisted [q z H^0] =", tw.data.coefficient(q=1, z=1, H=0))
