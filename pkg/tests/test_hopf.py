import random

import pytest

from uqsl2.algebra import AlgebraElement, all_monomials
from uqsl2.cyclotomic import CycNum
from uqsl2.hopf import (
    TensorElement,
    antipode,
    check_hopf_axioms,
    coproduct,
    coproduct_closed_form,
    counit,
    tensor,
)


@pytest.mark.parametrize("p", [2, 3])
def test_hopf_axioms_exhaustive(p):
    report = check_hopf_axioms(p)
    assert report.passed, report.render_text()


def test_hopf_axioms_sampled_p4():
    report = check_hopf_axioms(4, pair_sample=100, monomial_sample=100, seed=1)
    assert report.passed, report.render_text()


@pytest.mark.parametrize("p", [2, 3])
def test_generator_coproducts(p):
    E, F = AlgebraElement.gen_e(p), AlgebraElement.gen_f(p)
    K, Kinv = AlgebraElement.gen_k(p), AlgebraElement.gen_k_inv(p)
    one = AlgebraElement.one(p)
    assert coproduct(E) == tensor(one, E) + tensor(E, K)
    assert coproduct(F) == tensor(Kinv, F) + tensor(F, one)
    assert coproduct(K) == tensor(K, K)


@pytest.mark.parametrize("p", [2, 3])
def test_generator_counit_antipode(p):
    E, F = AlgebraElement.gen_e(p), AlgebraElement.gen_f(p)
    K, Kinv = AlgebraElement.gen_k(p), AlgebraElement.gen_k_inv(p)
    assert not counit(E)
    assert not counit(F)
    assert counit(K) == CycNum.one(p)
    assert antipode(E) == -(E * Kinv)
    assert antipode(F) == -(K * F)
    assert antipode(K) == Kinv


@pytest.mark.parametrize("p", [2, 3])
def test_closed_form_matches_generator_route(p):
    for mono in all_monomials(p):
        x = AlgebraElement.monomial(p, mono)
        assert coproduct_closed_form(p, mono) == coproduct(x), mono


def test_closed_form_sampled_p4():
    rng = random.Random(5)
    monos = all_monomials(4)
    for mono in rng.sample(monos, 40):
        x = AlgebraElement.monomial(4, mono)
        assert coproduct_closed_form(4, mono) == coproduct(x), mono


@pytest.mark.parametrize("p", [2, 3])
def test_coproduct_is_algebra_map_sampled(p):
    rng = random.Random(11)
    monos = all_monomials(p)
    for _ in range(40):
        a = AlgebraElement.monomial(p, rng.choice(monos))
        b = AlgebraElement.monomial(p, rng.choice(monos))
        assert coproduct(a * b) == coproduct(a) * coproduct(b)


@pytest.mark.parametrize("p", [2, 3])
def test_antipode_is_antihomomorphism_sampled(p):
    rng = random.Random(17)
    monos = all_monomials(p)
    for _ in range(40):
        a = AlgebraElement.monomial(p, rng.choice(monos))
        b = AlgebraElement.monomial(p, rng.choice(monos))
        assert antipode(a * b) == antipode(b) * antipode(a)


def test_tensor_json_round_trip():
    p = 2
    E, K = AlgebraElement.gen_e(p), AlgebraElement.gen_k(p)
    t = coproduct(E * K)
    assert TensorElement.from_json(t.to_json()) == t
