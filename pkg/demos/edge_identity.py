"""
Substituting an edge weight into the I-function
===============================================

Setting z = -(λ-H)/d turns the q^β coefficient of z^-1 I into the
basepoint-edge quotient.  The opposite sign, or keeping the a = 0
factor for a hypersurface, breaks the match.
"""

from wallcross import TargetDescriptor, edge_identity_check

P2 = TargetDescriptor(2, ())
quintic = TargetDescriptor(4, (5,))

for beta in (1, 2):
    for d in (1, 2, 3):
        r = edge_identity_check(P2, beta, d)
        print(f"P^2 β={beta} d={d}: equal={r.equal}")

for sign, a0 in ((-1, False), (1, False), (-1, True)):
    r = edge_identity_check(quintic, 1, 1, sign=sign, include_a0=a0)
    print(f"quintic sign={sign:+d} a0={a0}: equal={r.equal}, "
          f"numerator={r.numerator_match}, denominator={r.denominator_match}")
print(edge_identity_check(quintic, 1, 1).notes[-1])
