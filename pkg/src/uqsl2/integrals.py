"""Two-sided integral, dual integrals, balancing element, twisted functional.

The integral element is E^(p-1) F^(p-1) sum_l K^l; the dual integrals are
the delta functionals picking out E^(p-1) F^(p-1) K^(p-1) (left) and
E^(p-1) F^(p-1) K^(p+1) (right).  The balancing element g = K^(p+1)
implements the antipode square by conjugation and twists the left dual
integral into a symmetric functional.
"""

from __future__ import annotations

from .algebra import AlgebraElement, Mono, all_monomials, mono_index, mono_product
from .cyclotomic import CycNum
from .hopf import antipode, coproduct_monomial, counit
from .linalg import SparseEchelon
from .report import VerificationReport

__all__ = [
    "Functional",
    "integral_element",
    "lambda_functional",
    "mu_functional",
    "balancing_element",
    "twisted_lambda",
    "check_two_sided_integral",
    "check_dual_integrals",
    "dual_integral_space_dimensions",
    "check_s2_inner",
    "check_radford_symmetry",
]


class Functional:
    """A linear functional as a dense vector over the PBW basis."""

    __slots__ = ("p", "values")

    def __init__(self, p: int, values: list[CycNum]):
        if len(values) != 2 * p**3:
            raise ValueError(f"functional vector must have length {2 * p**3}")
        self.p = p
        self.values = values

    @staticmethod
    def zero(p: int) -> "Functional":
        return Functional(p, [CycNum.zero(p)] * (2 * p**3))

    @staticmethod
    def delta(p: int, mono: Mono) -> "Functional":
        values = [CycNum.zero(p)] * (2 * p**3)
        values[mono_index(p, mono)] = CycNum.one(p)
        return Functional(p, values)

    @staticmethod
    def from_callable(p: int, func) -> "Functional":
        return Functional(p, [func(mono) for mono in all_monomials(p)])

    def on_monomial(self, mono: Mono) -> CycNum:
        return self.values[mono_index(self.p, mono)]

    def __call__(self, x) -> CycNum:
        """Evaluate on an AlgebraElement or a raw term dict."""
        terms = x.terms if isinstance(x, AlgebraElement) else x
        acc = CycNum.zero(self.p)
        for mono, c in terms.items():
            v = self.values[mono_index(self.p, mono)]
            if v:
                acc = acc + c * v
        return acc

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self.p == other.p and self.values == other.values

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(self.p, [a + b for a, b in zip(self.values, other.values)])

    def scale(self, coeff: CycNum) -> "Functional":
        return Functional(self.p, [v * coeff for v in self.values])

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "values": [
                [list(mono), self.on_monomial(mono).to_strings()]
                for mono in all_monomials(self.p)
            ],
        }


# -- the named elements and functionals --------------------------------

def integral_element(p: int) -> AlgebraElement:
    """The two-sided integral E^(p-1) F^(p-1) sum_l K^l (2p terms)."""
    one = CycNum.one(p)
    return AlgebraElement(p, {(p - 1, p - 1, l): one for l in range(2 * p)})


def lambda_functional(p: int) -> Functional:
    return Functional.delta(p, (p - 1, p - 1, p - 1))


def mu_functional(p: int) -> Functional:
    return Functional.delta(p, (p - 1, p - 1, p + 1))


def balancing_element(p: int) -> AlgebraElement:
    return AlgebraElement.gen_k(p, p + 1)


def twisted_lambda(p: int) -> Functional:
    """The symmetric functional x -> lambda(x g^-1).

    Raises if the three equivalent descriptions (right g^-1 shift of
    lambda, left g shift of mu, and the explicit delta form) disagree.
    """
    lam = lambda_functional(p)
    mu = mu_functional(p)
    g = balancing_element(p)
    g_inv = AlgebraElement.gen_k(p, -(p + 1))
    via_lambda = Functional(
        p, [lam(AlgebraElement.monomial(p, mono) * g_inv) for mono in all_monomials(p)]
    )
    via_mu = Functional(
        p, [mu(g * AlgebraElement.monomial(p, mono)) for mono in all_monomials(p)]
    )
    delta_form = Functional.delta(p, (p - 1, p - 1, 0))
    if via_lambda != via_mu or via_lambda != delta_form:
        raise ArithmeticError("twisted integral descriptions disagree")
    return via_lambda


# -- verification suites -----------------------------------------------

def check_two_sided_integral(p: int) -> VerificationReport:
    """a Lam = eps(a) Lam = Lam a for every basis element a."""
    report = VerificationReport("integrals", p)
    lam_elem = integral_element(p)

    def left():
        for mono in all_monomials(p):
            a = AlgebraElement.monomial(p, mono)
            if a * lam_elem != lam_elem.scale(counit(a)):
                return False, f"left integral property fails for a={mono}"
        return True

    def right():
        for mono in all_monomials(p):
            a = AlgebraElement.monomial(p, mono)
            if lam_elem * a != lam_elem.scale(counit(a)):
                return False, f"right integral property fails for a={mono}"
        return True

    report.timed("integral_left", left)
    report.timed("integral_right", right)
    return report


def check_dual_integrals(p: int) -> VerificationReport:
    """Pointwise dual-integral property of lambda (left) and mu (right)."""
    report = VerificationReport("dual_integrals", p)
    lam = lambda_functional(p)
    mu = mu_functional(p)

    def left_dual():
        for mono in all_monomials(p):
            # (id (x) lambda) Delta(x) must equal lambda(x) 1
            acc = AlgebraElement.zero(p)
            for (a, b), c in coproduct_monomial(p, mono).terms.items():
                v = lam.on_monomial(b)
                if v:
                    acc = acc + AlgebraElement.monomial(p, a, c * v)
            if acc != AlgebraElement.one(p).scale(lam.on_monomial(mono)):
                return False, f"left dual-integral property fails on {mono}"
        return True

    def right_dual():
        for mono in all_monomials(p):
            # (mu (x) id) Delta(x) must equal mu(x) 1
            acc = AlgebraElement.zero(p)
            for (a, b), c in coproduct_monomial(p, mono).terms.items():
                v = mu.on_monomial(a)
                if v:
                    acc = acc + AlgebraElement.monomial(p, b, c * v)
            if acc != AlgebraElement.one(p).scale(mu.on_monomial(mono)):
                return False, f"right dual-integral property fails on {mono}"
        return True

    report.timed("lambda_left_dual_integral", left_dual)
    report.timed("mu_right_dual_integral", right_dual)
    return report


def dual_integral_space_dimensions(p: int) -> tuple[int, int]:
    """Nullities of the left/right dual-integral linear systems.

    Both must be 1: the dual integral spaces are lines.
    """
    n = 2 * p**3
    unit = mono_index(p, (0, 0, 0))
    dims = []
    for side in ("left", "right"):
        ech = SparseEchelon()
        for mono in all_monomials(p):
            rows: dict[Mono, dict[int, CycNum]] = {}
            for (a, b), c in coproduct_monomial(p, mono).terms.items():
                out_mono, unknown = (a, b) if side == "left" else (b, a)
                row = rows.setdefault(out_mono, {})
                col = mono_index(p, unknown)
                prev = row.get(col)
                acc = c if prev is None else prev + c
                if acc:
                    row[col] = acc
                elif prev is not None:
                    del row[col]
            # subtract the lambda(x)*1 side from the unit row
            unit_row = rows.setdefault((0, 0, 0), {})
            col = mono_index(p, mono)
            prev = unit_row.get(col)
            one = CycNum.one(p)
            acc = -one if prev is None else prev - one
            if acc:
                unit_row[col] = acc
            elif prev is not None:
                del unit_row[col]
            for row in rows.values():
                if row:
                    ech.insert(row)
        dims.append(n - ech.rank)
    return dims[0], dims[1]


def antipode_squared(p: int, mono: Mono) -> AlgebraElement:
    return antipode(antipode(AlgebraElement.monomial(p, mono)))


def check_s2_inner(p: int) -> VerificationReport:
    """S^2 equals conjugation by g = K^(p+1) on every basis monomial."""
    report = VerificationReport("balancing", p)
    g = balancing_element(p)
    g_inv = AlgebraElement.gen_k(p, -(p + 1))

    def conjugation():
        for mono in all_monomials(p):
            if antipode_squared(p, mono) != g * AlgebraElement.monomial(p, mono) * g_inv:
                return False, f"S^2 != g x g^-1 on {mono}"
        return True

    def grouplike():
        from .hopf import coproduct, tensor

        ok = coproduct(g) == tensor(g, g) and counit(g) == CycNum.one(p)
        return ok, "g is not grouplike"

    def twisted_consistent():
        try:
            twisted_lambda(p)
        except ArithmeticError as exc:
            return False, str(exc)
        return True

    report.timed("antipode_square_is_conjugation", conjugation)
    report.timed("balancing_element_grouplike", grouplike)
    report.timed("twisted_integral_three_forms_agree", twisted_consistent)
    return report


def check_radford_symmetry(p: int) -> VerificationReport:
    """lambda(ab) = lambda(b S^2(a)), mu(ab) = mu(S^2(b) a), and symmetry
    of the g-twisted functional, on all basis pairs."""
    report = VerificationReport("radford", p)
    lam = lambda_functional(p)
    mu = mu_functional(p)
    twisted = twisted_lambda(p)
    monos = all_monomials(p)
    s2 = {mono: antipode_squared(p, mono) for mono in monos}

    def lambda_law():
        for a in monos:
            xa = AlgebraElement.monomial(p, a)
            for b in monos:
                xb = AlgebraElement.monomial(p, b)
                if lam(xa * xb) != lam(xb * s2[a]):
                    return False, f"lambda Radford law fails on {a}, {b}"
        return True

    def mu_law():
        for a in monos:
            xa = AlgebraElement.monomial(p, a)
            for b in monos:
                xb = AlgebraElement.monomial(p, b)
                if mu(xa * xb) != mu(s2[b] * xa):
                    return False, f"mu Radford law fails on {a}, {b}"
        return True

    def twisted_symmetric():
        for a in monos:
            xa = AlgebraElement.monomial(p, a)
            for b in monos:
                xb = AlgebraElement.monomial(p, b)
                if twisted(xa * xb) != twisted(xb * xa):
                    return False, f"twisted functional not symmetric on {a}, {b}"
        return True

    report.timed("lambda_radford_law", lambda_law)
    report.timed("mu_radford_law", mu_law)
    report.timed("twisted_functional_symmetric", twisted_symmetric)
    return report
