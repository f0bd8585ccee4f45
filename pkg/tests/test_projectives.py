import pytest

from uqsl2.algebra import AlgebraElement
from uqsl2.cyclotomic import CycNum, q_int
from uqsl2.projectives import (
    ProjLabel,
    all_idempotents,
    check_casimir_blocks,
    check_idempotent_system,
    check_module_actions,
    delta_const,
    gamma_const,
    idempotent,
    irreducible_rep,
    lambda_coeffs,
    left_ideal_dimension,
    weight_projector,
)


def all_labels(p):
    for alpha in (1, -1):
        for s in range(1, p + 1):
            for t in range(1, s + 1):
                yield alpha, s, t


@pytest.mark.parametrize("p", [2, 3])
def test_weight_projector_is_k_eigenvector(p):
    K = AlgebraElement.gen_k(p)
    for alpha, s, t in all_labels(p):
        v = weight_projector(p, alpha, s, t)
        weight = CycNum.q_power(p, s - 2 * t + 1)
        if alpha == -1:
            weight = -weight
        assert K * v == v.scale(weight)


@pytest.mark.parametrize("p", [2, 3])
def test_module_action_relations(p):
    for alpha, s, t in all_labels(p):
        report = check_module_actions(p, alpha, s, t)
        assert report.passed, report.render_text()


@pytest.mark.parametrize("p", [2, 3])
def test_lambda_coeffs_closed_form_diagonal(p):
    # lambda_(n,n) = prod_(i=1)^n alpha [i][s-i]
    for alpha, s, _t in all_labels(p):
        for n in range(s):
            coeffs = lambda_coeffs(p, alpha, s, n)
            acc = CycNum.one(p)
            for i in range(1, n + 1):
                factor = q_int(p, i) * q_int(p, s - i)
                if alpha == -1:
                    factor = -factor
                acc = acc * factor
            assert coeffs[n] == acc


@pytest.mark.parametrize("p", [2, 3])
def test_irreducible_rep_relations(p):
    from uqsl2.linalg import invert_dense

    for alpha in (1, -1):
        for s in range(1, p + 1):
            rep = irreducible_rep(p, alpha, s)
            zero = CycNum.zero(p)

            def mul(a, b):
                return [
                    [
                        sum((a[i][k] * b[k][j] for k in range(s)), zero)
                        for j in range(s)
                    ]
                    for i in range(s)
                ]

            e, f, k = rep.e_mat, rep.f_mat, rep.k_mat
            kinv = invert_dense(p, k)
            q2 = CycNum.q_power(p, 2)
            assert mul(k, e) == [
                [v * q2 for v in row] for row in mul(e, k)
            ]
            nu = (CycNum.q_power(p, 1) - CycNum.q_power(p, -1)).inverse()
            ef = mul(e, f)
            fe = mul(f, e)
            for i in range(s):
                for j in range(s):
                    want = (k[i][j] - kinv[i][j]) * nu
                    assert ef[i][j] - fe[i][j] == want


@pytest.mark.parametrize("p", [2, 3, 4])
def test_idempotent_count_and_laws(p):
    system = all_idempotents(p)
    assert len(system) == p * (p + 1)
    report = check_idempotent_system(p, include_ideal_dims=(p <= 3))
    assert report.passed, report.render_text()


@pytest.mark.parametrize("p", [2, 3])
def test_left_ideal_dimensions(p):
    for label, e in all_idempotents(p):
        want = p if label.s == p else 2 * p
        assert left_ideal_dimension(p, e) == want


@pytest.mark.parametrize("p", [2, 3])
def test_casimir_block_structure(p):
    report = check_casimir_blocks(p)
    assert report.passed, report.render_text()


def test_gamma_delta_values_small_p():
    # gamma_1 = 2p at p=2 (both ladder products empty); delta_1 = 0
    assert gamma_const(2, 1, 1) == CycNum.one(2).scale(4)
    assert not delta_const(2, 1, 1)
    # p=3: gamma_1 = 2p * (-[1][1]) * (empty) = -6
    assert gamma_const(3, 1, 1) == CycNum.one(3).scale(-6)


def test_bad_labels_rejected():
    with pytest.raises(ValueError):
        ProjLabel(0, 1, 1)
    with pytest.raises(ValueError):
        ProjLabel(1, 2, 3)
    with pytest.raises(ValueError):
        idempotent(3, ProjLabel(1, 4, 1))
