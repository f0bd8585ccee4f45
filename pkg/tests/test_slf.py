import pytest

from uqsl2.algebra import AlgebraElement
from uqsl2.cyclotomic import CycNum, Rat
from uqsl2.hopf import counit
from uqsl2.integrals import Functional, lambda_functional
from uqsl2.projectives import ProjLabel, idempotent
from uqsl2.slf import (
    center_dimension,
    check_alpha_delta_relation,
    check_decomposition,
    check_slf_suite,
    check_symmetry,
    check_trig_identities,
    decompose_twisted_integral,
    expected_product,
    full_q_basis,
    q_basis,
    slf_functionals,
    slf_space_dimension,
    verify_block_tables,
    verify_matrix_units,
)


@pytest.mark.parametrize("p", [2, 3])
def test_q_basis_counts(p):
    total = 0
    for s in range(p + 1):
        basis = q_basis(p, s)
        want = p**2 if s in (0, p) else 2 * p**2
        assert len(basis) == want
        total += len(basis)
    assert total == 2 * p**3
    assert len(full_q_basis(p)) == 2 * p**3


@pytest.mark.parametrize("p", [2, 3])
def test_diagonal_elements_are_idempotents(p):
    for s in range(p + 1):
        for e in q_basis(p, s):
            if e.idx != e.col - 1:
                continue
            if s in (0, p):
                assert e.element == idempotent(p, ProjLabel(e.sign, p, e.col))
            elif e.kind == "B":
                assert e.element == idempotent(
                    p, ProjLabel(e.sign, e.module_dim(p), e.col)
                )


@pytest.mark.parametrize("p", [2, 3])
def test_matrix_unit_blocks(p):
    for s in (0, p):
        report = verify_matrix_units(p, s)
        assert report.passed, report.render_text()


@pytest.mark.parametrize("p", [2, 3])
def test_block_tables(p):
    for s in range(1, p):
        report = verify_block_tables(p, s)
        assert report.passed, report.render_text()


def test_expected_product_spot_rules():
    p = 3
    basis = {e.key(): e for e in q_basis(p, 1)}
    b = basis[(1, "B", 1, 1, 0)]
    a = basis[(1, "A", 1, 1, 0)]
    x = basis[(1, "X", 1, 1, 0)]
    y = basis[(1, "Y", 1, 1, 0)]
    xm = basis[(1, "X", -1, 1, 0)]
    ym = basis[(1, "Y", -1, 1, 0)]
    assert expected_product(b, b) == (1, "B", 1, 1, 0)
    assert expected_product(b, a) == (1, "A", 1, 1, 0)
    assert expected_product(b, x) is None
    assert expected_product(a, b) == (1, "A", 1, 1, 0)
    assert expected_product(a, a) is None
    assert expected_product(x, ym) == (1, "A", -1, 1, 0)
    assert expected_product(y, xm) == (1, "A", -1, 1, 0)
    assert expected_product(x, y) is None


@pytest.mark.parametrize("p", [2, 3])
def test_symmetry_of_functionals(p):
    basis = slf_functionals(p)
    for name, func in basis.named():
        assert check_symmetry(func), name


@pytest.mark.parametrize("p", [2, 3])
def test_counit_symmetric_lambda_not(p):
    eps = Functional.from_callable(
        p, lambda mono: counit(AlgebraElement.monomial(p, mono))
    )
    assert check_symmetry(eps)
    assert not check_symmetry(lambda_functional(p))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_dimensions(p):
    assert slf_space_dimension(p) == 3 * p - 1
    assert center_dimension(p) == 3 * p - 1


@pytest.mark.parametrize("p", [2, 3])
def test_slf_suite(p):
    report = check_slf_suite(p)
    assert report.passed, report.render_text()


def test_decomposition_values_p2():
    coeffs = decompose_twisted_integral(2)
    mk = lambda num, den: CycNum.from_rational(2, Rat(num, den))
    assert coeffs.alpha0 == mk(-1, 4)
    assert coeffs.alphap == mk(1, 4)
    assert not coeffs.alpha_plus[0]
    assert not coeffs.alpha_minus[0]
    assert coeffs.beta[0] == mk(1, 4)


def test_decomposition_values_p3():
    coeffs = decompose_twisted_integral(3)
    mk = lambda num, den: CycNum.from_rational(3, Rat(num, den))
    assert coeffs.beta[0] == mk(-1, 6)
    assert coeffs.alphap == mk(1, 6)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_decomposition_closed_forms(p):
    report = check_decomposition(p)
    assert report.passed, report.render_text()


@pytest.mark.parametrize("p", [2, 3, 4])
def test_alpha_delta_relation(p):
    report = check_alpha_delta_relation(p)
    assert report.passed, report.render_text()


@pytest.mark.parametrize("p", list(range(2, 8)))
def test_trig_identities(p):
    report = check_trig_identities(p)
    assert report.passed, report.render_text()
