"""
Torus localization on stable maps to P^1
========================================

Fixed loci are indexed by bipartite decorated graphs.  Summing their
contributions gives Gromov-Witten invariants, and extracting the degree-0
part of the pushforward recovers the TFT forms.
"""

from wallcross import P1QuantumRing, omega_closed
from wallcross.localization import Insertion, enumerate_graphs, gw_invariant, omega_from_localization

for G, aut in enumerate_graphs(0, 0, 2):
    print(G, "|Aut| =", aut.order)

ring = P1QuantumRing(0, lam_window=48)
H = ring.H
total, parts = gw_invariant(0, 1, [H, H, H], detail=True)
print("⟨H,H,H⟩_{0,1} =", total)
for p in parts:
    if not p.value.is_zero():
        print("   ", p.graph, "->", p.value)

# one-point invariants ⟨τ_{2g+2d-2}(pt)⟩_{g,d}
for g in (0, 1):
    for d in (1, 2, 3):
        v = gw_invariant(g, d, [Insertion(H, 2 * g + 2 * d - 2)])
        print(f"⟨τ_{2 * g + 2 * d - 2}(pt)⟩_({g},{d}) =", v)

r3 = P1QuantumRing(3)
e0 = r3.idempotents[0]
loc = omega_from_localization(1, [e0, e0], 3)
print("ω_{1,2}(e0,e0) by graphs =", loc)
print("equals the TFT value:", loc == omega_closed(1, [e0, e0], r3))
