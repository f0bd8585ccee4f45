"""Exact computer algebra for the restricted quantum group U_q(sl2)
at a primitive 2p-th root of unity.

The package works entirely over the cyclotomic field Q(q) with exact
rational coefficients: the PBW multiplication engine, the Hopf algebra
structure, integrals and the balancing element, the primitive
idempotents and projective modules, the symmetric linear functions, and
the decomposition of the twisted integral are all computed and verified
without floating point (trigonometric cross-checks excepted).
"""

from .algebra import (
    AlgebraElement,
    all_monomials,
    casimir,
    casimir_eigenvalue,
    casimir_min_poly,
    eval_central_poly,
    is_central,
    mono_index,
    mono_product,
)
from .cyclotomic import CycNum, Rat, q_binom, q_factorial, q_int
from .hopf import (
    TensorElement,
    antipode,
    check_hopf_axioms,
    coproduct,
    coproduct_closed_form,
    counit,
    tensor,
)
from .integrals import (
    Functional,
    balancing_element,
    check_dual_integrals,
    check_radford_symmetry,
    check_s2_inner,
    check_two_sided_integral,
    dual_integral_space_dimensions,
    integral_element,
    lambda_functional,
    mu_functional,
    twisted_lambda,
)
from .projectives import (
    ProjLabel,
    RepMatrices,
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
    mu_coeffs,
    vec_a,
    vec_b,
    vec_x,
    vec_y,
    weight_projector,
)
from .report import VerificationReport, merge_reports
from .slf import (
    DecompCoeffs,
    QBasisElem,
    SLFBasis,
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

__version__ = "1.0.0"
