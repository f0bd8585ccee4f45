"""
Integrals, dual integrals and the balancing element
===================================================

The algebra is unimodular: Lambda = E^(p-1) F^(p-1) sum_l K^l is a
two-sided integral.  Its dual partners lambda and mu are delta
functionals on single PBW monomials, and the grouplike element
g = K^(p+1) implements the square of the antipode and twists lambda
into a symmetric linear function.
"""

from uqsl2 import (
    balancing_element,
    check_radford_symmetry,
    check_s2_inner,
    check_two_sided_integral,
    dual_integral_space_dimensions,
    integral_element,
    lambda_functional,
    twisted_lambda,
)

p = 3

Lambda = integral_element(p)
print("integral element terms:", sorted(Lambda.terms))
print(check_two_sided_integral(p).render_text())

# lambda is the delta functional at E^(p-1) F^(p-1) K^(p-1).
lam = lambda_functional(p)
print("lambda(E^2 F^2 K^2) =", lam.on_monomial((p - 1, p - 1, p - 1)).to_strings())

# Each dual-integral space is one-dimensional: lambda and mu are unique
# up to scalar.
print("dual integral space dimensions (left, right):",
      dual_integral_space_dimensions(p))

# The balancing element is grouplike and conjugates to S^2.
g = balancing_element(p)
print("g terms:", sorted(g.terms))
print(check_s2_inner(p).render_text())

# The twist g^-1 -> lambda is the delta functional at E^(p-1) F^(p-1) K^0,
# and it is symmetric (Radford's trace laws).
from uqsl2 import all_monomials

twisted = twisted_lambda(p)
support = [mono for mono in all_monomials(p) if twisted.on_monomial(mono)]
print("twisted lambda support:", support)
print(check_radford_symmetry(p).render_text())
