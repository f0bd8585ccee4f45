"""
Symmetric linear functions and the twisted integral
===================================================

The blocks Q_0, ..., Q_p carry an explicit A/B/X/Y basis with a known
multiplication table.  Dualizing the diagonal basis elements yields the
3p-1 symmetric linear functions T_0, T_p, T_s^+/-, G_s -- a basis of the
SLF space, whose dimension equals that of the center.  The symmetric
functional g^-1 -> lambda decomposes exactly in this basis.
"""

from uqsl2 import (
    center_dimension,
    check_symmetry,
    check_trig_identities,
    decompose_twisted_integral,
    q_basis,
    slf_functionals,
    slf_space_dimension,
    verify_block_tables,
)

p = 3

# Block sizes: p^2 for the matrix blocks, 2p^2 for the others.
for s in range(p + 1):
    print(f"|Q_{s} basis| =", len(q_basis(p, s)))

# The multiplication table of Q_1 (and its vanishing against the other
# blocks) holds exactly.
print(verify_block_tables(p, 1).render_text())

# The 3p-1 functionals are symmetric: phi(ab) = phi(ba) on all pairs.
basis = slf_functionals(p)
for name, func in basis.named():
    print(f"{name} symmetric:", check_symmetry(func))

# Both brute-force dimensions agree with 3p-1.
print("dim SLF  =", slf_space_dimension(p))
print("dim Z(A) =", center_dimension(p))

# The twisted integral decomposes with exact rational coefficients.
coeffs = decompose_twisted_integral(p)
for name, value in coeffs.ordered():
    print(f"{name} = {value.to_strings()}")

# Their closed sine forms match numerically to 1e-9.
print(check_trig_identities(p).render_text())
