"""
Equivariant P^1 as a semisimple TFT
===================================

The quantum ring H² = λH + y has two idempotents.  The S~ values at z = 0
solve a cubic system fixed by the three-point form, and the eigenvalue
λ/2 + (λ/2)√φ has infinitely many negative powers of λ.
"""

from wallcross import P1QuantumRing, irrationality_witness, omega_closed, verify_tft_system
from wallcross.cohomology import quantum_product

ring = P1QuantumRing(4)
e0, einf = ring.idempotents
print("e0 ★ e0 - e0 =", quantum_product(e0, e0) - e0)
print("e0 ★ e∞      =", quantum_product(e0, einf))
print("∫ e0 ★ e0    =", ring.integral(quantum_product(e0, e0)))

H = ring.H
print("ω_{0,3}(H,H,H) =", omega_closed(0, [H, H, H], ring))
print("ω_{1,2}(H,H)   =", omega_closed(1, [H, H], ring))
print("ω_{2,0}        =", omega_closed(2, [], ring))

print(verify_tft_system(6).to_text())

u0 = ring.eigenvalues[0]
for k in range(5):
    print(f"[y^{k}] (λ/2 + (λ/2)√φ) =", u0.coefficient(y=k))
print("witness to y^10 passes:", irrationality_witness(10).passed)
