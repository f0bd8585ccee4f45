"""Acceptance suite: ten end-to-end criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as the
criteria complete.
"""

import random

import pytest

from uqsl2.algebra import (
    AlgebraElement,
    all_monomials,
    casimir,
    casimir_eigenvalue,
    casimir_min_poly,
    eval_central_poly,
    is_central,
)
from uqsl2.cyclotomic import CycNum, Rat
from uqsl2.hopf import check_hopf_axioms, coproduct, coproduct_closed_form
from uqsl2.integrals import (
    check_dual_integrals,
    check_s2_inner,
    check_two_sided_integral,
    dual_integral_space_dimensions,
    twisted_lambda,
)
from uqsl2.projectives import (
    check_casimir_blocks,
    check_idempotent_system,
    check_module_actions,
)
from uqsl2.slf import (
    center_dimension,
    check_alpha_delta_relation,
    check_decomposition,
    check_slf_suite,
    check_trig_identities,
    decompose_twisted_integral,
    verify_block_tables,
    verify_matrix_units,
)


def _emit(number, title, passed):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {number:2d} [{status}] {title}")
    assert passed, f"acceptance criterion {number} ({title}) failed"


def test_criterion_01_basis_dimension():
    ok = True
    for p in (2, 3, 4, 5):
        monos = all_monomials(p)
        ok = ok and len(monos) == 2 * p**3 and len(set(monos)) == 2 * p**3
        gens = (
            AlgebraElement.gen_e(p),
            AlgebraElement.gen_f(p),
            AlgebraElement.gen_k(p),
        )
        for mono in monos:
            x = AlgebraElement.monomial(p, mono)
            for g in gens:
                for (m, n, l) in (g * x).support():
                    ok = ok and 0 <= m < p and 0 <= n < p and 0 <= l < 2 * p
    _emit(1, "basis closes on exactly 2p^3 monomials (p=2..5)", ok)


def test_criterion_02_hopf_axioms():
    ok = True
    for p in (2, 3):
        ok = ok and check_hopf_axioms(p).passed
    ok = ok and check_hopf_axioms(4, pair_sample=200, monomial_sample=200).passed
    rng = random.Random(2)
    monos = all_monomials(4)
    for mono in rng.sample(monos, 50):
        ok = ok and coproduct_closed_form(4, mono) == coproduct(
            AlgebraElement.monomial(4, mono)
        )
    _emit(2, "Hopf axioms and closed-form coproduct (p=2,3 exhaustive; p=4 sampled)", ok)


def test_criterion_03_integrals():
    ok = True
    for p in (2, 3, 4):
        ok = ok and check_two_sided_integral(p).passed
        ok = ok and check_dual_integrals(p).passed
        ok = ok and dual_integral_space_dimensions(p) == (1, 1)
    _emit(3, "two-sided integral, dual integrals, one-dimensionality (p=2..4)", ok)


def test_criterion_04_balancing():
    ok = True
    for p in (2, 3, 4, 5):
        ok = ok and check_s2_inner(p).passed
        twisted = twisted_lambda(p)
        for mono in all_monomials(p):
            want = (
                CycNum.one(p)
                if mono == (p - 1, p - 1, 0)
                else CycNum.zero(p)
            )
            ok = ok and twisted.on_monomial(mono) == want
    _emit(4, "S^2 = g(.)g^-1 and twisted integral is the delta functional (p=2..5)", ok)


def test_criterion_05_casimir():
    ok = True
    for p in (2, 3, 4):
        cas = casimir(p)
        ok = ok and is_central(cas)
        ok = ok and not eval_central_poly(cas, casimir_min_poly(p))
        one = AlgebraElement.one(p)
        roots = [casimir_eigenvalue(p, 0), casimir_eigenvalue(p, p)]
        for s in range(1, p):
            roots.extend([casimir_eigenvalue(p, s)] * 2)
        for skip in range(len(roots)):
            acc = one
            for i, beta in enumerate(roots):
                if i != skip:
                    acc = acc * (cas - one.scale(beta))
            ok = ok and bool(acc)
    _emit(5, "Casimir centrality and minimal polynomial (p=2..4)", ok)


def test_criterion_06_idempotent_system():
    ok = True
    for p in (2, 3):
        ok = ok and check_idempotent_system(p).passed
        ok = ok and check_casimir_blocks(p).passed
        for alpha in (1, -1):
            for s in range(1, p + 1):
                for t in range(1, s + 1):
                    ok = ok and check_module_actions(p, alpha, s, t).passed
    report4 = check_idempotent_system(4, include_ideal_dims=False)
    ok = ok and report4.passed
    _emit(6, "p(p+1) idempotent system and module actions (p=2,3; p=4 partial)", ok)


def test_criterion_07_multiplication_tables():
    ok = True
    for p in (2, 3):
        for s in (0, p):
            ok = ok and verify_matrix_units(p, s).passed
        for s in range(1, p):
            ok = ok and verify_block_tables(p, s).passed
    _emit(7, "block multiplication tables and cross-block zeros (p=2,3)", ok)


def test_criterion_08_slf_center_dimensions():
    ok = True
    for p in (2, 3, 4):
        ok = ok and slf_dims_ok(p)
    _emit(8, "SLF and center dimensions 3p-1 with spanning basis (p=2..4)", ok)


def slf_dims_ok(p):
    if center_dimension(p) != 3 * p - 1:
        return False
    return check_slf_suite(p).passed


def test_criterion_09_decomposition():
    ok = True
    for p in (2, 3, 4):
        ok = ok and check_decomposition(p).passed
        ok = ok and check_alpha_delta_relation(p).passed
    coeffs2 = decompose_twisted_integral(2)
    mk2 = lambda a, b: CycNum.from_rational(2, Rat(a, b))
    ok = ok and coeffs2.alpha0 == mk2(-1, 4)
    ok = ok and coeffs2.alphap == mk2(1, 4)
    ok = ok and not coeffs2.alpha_plus[0] and not coeffs2.alpha_minus[0]
    ok = ok and coeffs2.beta[0] == mk2(1, 4)
    coeffs3 = decompose_twisted_integral(3)
    mk3 = lambda a, b: CycNum.from_rational(3, Rat(a, b))
    ok = ok and coeffs3.beta[0] == mk3(-1, 6)
    ok = ok and coeffs3.alphap == mk3(1, 6)
    _emit(9, "twisted-integral decomposition matches closed forms (p=2..4)", ok)


def test_criterion_10_trig_identities():
    ok = True
    for p in range(2, 8):
        ok = ok and check_trig_identities(p, tol=1e-9, sin_tol=1e-12).passed
    _emit(10, "trigonometric coefficient identities (p=2..7)", ok)
