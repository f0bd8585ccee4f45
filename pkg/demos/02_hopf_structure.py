"""
The Hopf algebra structure
==========================

U_q(sl2) carries a coproduct, counit and antipode.  This script applies
them to generators, verifies the axioms on the full basis at p = 2, and
compares the closed-form coproduct of a PBW monomial (a q-binomial
double sum) against the generator-by-generator route.
"""

from uqsl2 import (
    AlgebraElement,
    all_monomials,
    antipode,
    check_hopf_axioms,
    coproduct,
    coproduct_closed_form,
    counit,
)

p = 2

E = AlgebraElement.gen_e(p)
K = AlgebraElement.gen_k(p)

# Delta(E) = 1 (x) E + E (x) K
print("Delta(E) terms:")
for (left, right), coeff in sorted(coproduct(E).terms.items()):
    print(f"  {left} (x) {right} * {coeff.to_strings()}")

# The counit kills E and F and sends K to 1.
print("eps(E) =", counit(E).to_strings())
print("eps(K) =", counit(K).to_strings())

# S(E) = -E K^-1; applying S twice is not the identity here.
print("S(E) terms:", sorted(antipode(E).terms))
print("S(S(E)) == E:", antipode(antipode(E)) == E)

# The closed form of Delta(E^m F^n K^l) matches the generator route on
# every monomial.
agree = all(
    coproduct_closed_form(p, mono) == coproduct(AlgebraElement.monomial(p, mono))
    for mono in all_monomials(p)
)
print("closed-form coproduct agrees on all monomials:", agree)

# The full axiom suite: coassociativity, counit, antipode,
# multiplicativity of Delta.
report = check_hopf_axioms(p)
print(report.render_text())
