"""
Primitive idempotents and projective modules
============================================

The p(p+1) primitive idempotents e^alpha(s,t) are built from explicit
weight vectors inside the algebra itself.  They are orthogonal, sum to
1, and generate the indecomposable projective left ideals (dimension 2p
for s < p, dimension p for the simple Steinberg-type blocks s = p).
"""

from uqsl2 import (
    AlgebraElement,
    all_idempotents,
    casimir,
    casimir_eigenvalue,
    check_casimir_blocks,
    check_module_actions,
    idempotent,
    left_ideal_dimension,
    ProjLabel,
)

p = 3

system = all_idempotents(p)
print(f"p = {p}: {len(system)} primitive idempotents (p(p+1) = {p * (p + 1)})")

# Orthogonality and the decomposition of 1.
total = AlgebraElement.zero(p)
for _label, e in system:
    total = total + e
print("sum of idempotents == 1:", total == AlgebraElement.one(p))

e1 = idempotent(p, ProjLabel(1, 1, 1))
e2 = idempotent(p, ProjLabel(-1, 2, 1))
print("e+(1,1) * e-(2,1) == 0:", not e1 * e2)

# Left ideal dimensions: 2p per non-simple block column, p at s = p.
for label, e in system[:4]:
    print(f"dim A*{label.pretty()} =", left_ideal_dimension(p, e))

# The Casimir acts on each block with a single (generalized) eigenvalue;
# the blocks with s < p carry a genuine Jordan block.
C = casimir(p)
one = AlgebraElement.one(p)
beta = casimir_eigenvalue(p, 1)
shift = C - one.scale(beta)
print("(C - beta_1) e+(1,1) != 0:", bool(shift * e1))
print("(C - beta_1)^2 e+(1,1) == 0:", not shift * shift * e1)
print(check_casimir_blocks(p).render_text())

# The a/x/b/y ladder relations of the projective modules, checked for
# one label.
print(check_module_actions(p, 1, 2, 1).render_text())
