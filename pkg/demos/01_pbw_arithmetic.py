"""
Exact arithmetic in U_q(sl2) at a root of unity
===============================================

Every element of the algebra is a linear combination of PBW monomials
E^m F^n K^l with coefficients in the cyclotomic field Q(q), where
q = exp(pi*i/p).  This script multiplies a few elements at p = 3 and
shows that the defining relations hold exactly -- no floating point.
"""

from uqsl2 import AlgebraElement, CycNum, all_monomials, q_int

p = 3

E = AlgebraElement.gen_e(p)
F = AlgebraElement.gen_f(p)
K = AlgebraElement.gen_k(p)
Kinv = AlgebraElement.gen_k_inv(p)

# The PBW basis has 2p^3 monomials.
print(f"p = {p}: the algebra has dimension {len(all_monomials(p))}")

# K E K^-1 = q^2 E, exactly.
lhs = K * E * Kinv
rhs = E.scale(CycNum.q_power(p, 2))
print("K E K^-1 == q^2 E:", lhs == rhs)

# The quantum Serre-type truncations: E^p = F^p = 0.
print("E^p == 0:", not E**p)
print("F^p == 0:", not F**p)

# [E, F] = (K - K^-1)/(q - q^-1).
nu = (CycNum.q_power(p, 1) - CycNum.q_power(p, -1)).inverse()
print("[E,F] relation:", E * F - F * E == (K - Kinv).scale(nu))

# q-integers live in the same field; [p] vanishes at the root of unity.
for n in range(p + 1):
    print(f"[{n}] =", q_int(p, n).to_strings())

# A product is normal-ordered automatically.
x = F * K * E * E * F
print("normal-ordered terms of F K E^2 F:")
for mono, coeff in sorted(x.terms.items()):
    m, n, l = mono
    print(f"  E^{m} F^{n} K^{l} * {coeff.to_strings()}")
