"""Weight vectors, irreducible representations and primitive idempotents.

Everything here is built inside the algebra itself: the weight projector
v, the ladder elements a/x/b/y obtained by acting with generators, the
p(p+1) primitive idempotents, and exhaustive verification of the module
action relations, the orthogonal decomposition of 1, and the generalized
Casimir eigenspace structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraElement,
    all_monomials,
    casimir,
    casimir_eigenvalue,
    mono_index,
)
from .cyclotomic import CycNum, q_int
from .linalg import SparseEchelon
from .report import VerificationReport

__all__ = [
    "ProjLabel",
    "weight_projector",
    "vec_a",
    "vec_b",
    "vec_x",
    "vec_y",
    "lambda_coeffs",
    "mu_coeffs",
    "RepMatrices",
    "irreducible_rep",
    "gamma_const",
    "delta_const",
    "idempotent",
    "all_idempotents",
    "left_ideal_dimension",
    "check_module_actions",
    "check_idempotent_system",
    "check_casimir_blocks",
]


@dataclass(frozen=True)
class ProjLabel:
    """Label (alpha, s, t) of a primitive idempotent; alpha is +1 or -1."""

    alpha: int
    s: int
    t: int

    def __post_init__(self):
        if self.alpha not in (1, -1):
            raise ValueError(f"alpha must be +-1, got {self.alpha}")
        if not 1 <= self.t <= self.s:
            raise ValueError(f"label out of range: s={self.s}, t={self.t}")

    def pretty(self) -> str:
        return f"e{'+' if self.alpha == 1 else '-'}({self.s},{self.t})"


def _check_label(p: int, alpha: int, s: int, t: int):
    if alpha not in (1, -1):
        raise ValueError(f"alpha must be +-1, got {alpha}")
    if not (1 <= s <= p and 1 <= t <= s):
        raise ValueError(f"label out of range for p={p}: s={s}, t={t}")


def weight_projector(p: int, alpha: int, s: int, t: int) -> AlgebraElement:
    """v = sum_l (alpha q^-(s-2t+1))^l K^l; K-eigenvector of weight
    alpha q^(s-2t+1)."""
    _check_label(p, alpha, s, t)
    terms = {}
    for l in range(2 * p):
        c = CycNum.q_power(p, -(s - 2 * t + 1) * l)
        if alpha == -1 and l % 2 == 1:
            c = -c
        terms[(0, 0, l)] = c
    return AlgebraElement(p, terms)


# seed elements, cached per (p, alpha, s, t)
_seed_cache: dict[tuple, dict[str, AlgebraElement]] = {}


def _seeds(p: int, alpha: int, s: int, t: int) -> dict[str, AlgebraElement]:
    key = (p, alpha, s, t)
    cached = _seed_cache.get(key)
    if cached is not None:
        return cached
    v = weight_projector(p, alpha, s, t)
    E = AlgebraElement.gen_e(p)
    F = AlgebraElement.gen_f(p)
    a0 = E ** (p - 1) * F ** (p - t) * v
    seeds = {"a0": a0}
    if s <= p - 1:
        # highest-weight seed of the opposite-sign ladder
        seeds["x0"] = E ** (p - 1) * F ** (s - t) * v
        mus = mu_coeffs(p, alpha, s)
        b0 = AlgebraElement.zero(p)
        for i in range(1, p - s + 1):
            b0 = b0 + (E ** (p - i - 1) * F ** (p - t - i) * v).scale(mus[i - 1])
        seeds["b0"] = b0
    _seed_cache[key] = seeds
    return seeds


def vec_a(p: int, alpha: int, s: int, t: int, n: int) -> AlgebraElement:
    """a_n = F^n E^(p-1) F^(p-t) v, for 0 <= n <= s-1."""
    _check_label(p, alpha, s, t)
    if not 0 <= n <= s - 1:
        raise ValueError(f"a-index out of range: n={n}, s={s}")
    return AlgebraElement.gen_f(p) ** n * _seeds(p, alpha, s, t)["a0"]


def vec_x(p: int, alpha: int, s: int, t: int, k: int) -> AlgebraElement:
    """x_k = F^k x_0 with x_0 = E^(p-1) F^(s-t) v, for 0 <= k <= p-s-1."""
    _check_label(p, alpha, s, t)
    if not (s <= p - 1 and 0 <= k <= p - s - 1):
        raise ValueError(f"x-index out of range: k={k}, s={s}, p={p}")
    return AlgebraElement.gen_f(p) ** k * _seeds(p, alpha, s, t)["x0"]


def vec_b(p: int, alpha: int, s: int, t: int, n: int) -> AlgebraElement:
    """b_n = F^n b_0 with b_0 the mu-weighted seed sum, for 0 <= n <= s-1."""
    _check_label(p, alpha, s, t)
    if not (s <= p - 1 and 0 <= n <= s - 1):
        raise ValueError(f"b-index out of range: n={n}, s={s}, p={p}")
    return AlgebraElement.gen_f(p) ** n * _seeds(p, alpha, s, t)["b0"]


def vec_y(p: int, alpha: int, s: int, t: int, k: int) -> AlgebraElement:
    """y_k = F^(s+k) b_0, for 0 <= k <= p-s-1."""
    _check_label(p, alpha, s, t)
    if not (s <= p - 1 and 0 <= k <= p - s - 1):
        raise ValueError(f"y-index out of range: k={k}, s={s}, p={p}")
    return AlgebraElement.gen_f(p) ** (s + k) * _seeds(p, alpha, s, t)["b0"]


def lambda_coeffs(p: int, alpha: int, s: int, n: int) -> list[CycNum]:
    """Coefficients lambda_(l,n) of the expansion of a_n, by the recursion
    lambda_(l,n) = lambda_(l,n-1) + alpha [n][s-2n+l] lambda_(l-1,n-1)."""
    if n < 0:
        raise ValueError("negative ladder index")
    prev = [CycNum.one(p)]
    for m in range(1, n + 1):
        cur = [prev[0]]
        for l in range(1, m):
            bump = q_int(p, m) * q_int(p, s - 2 * m + l) * prev[l - 1]
            if alpha == -1:
                bump = -bump
            cur.append(prev[l] + bump)
        top = q_int(p, m) * q_int(p, s - m) * prev[m - 1]
        if alpha == -1:
            top = -top
        cur.append(top)
        prev = cur
    return prev


def mu_coeffs(p: int, alpha: int, s: int) -> list[CycNum]:
    """mu_n = prod_(k=p-s-(n-1))^(p-s-1) (-alpha [k][p-s-k]), n = 1..p-s."""
    if not 1 <= s <= p - 1:
        raise ValueError(f"mu coefficients need 1 <= s <= p-1, got s={s}")
    out = []
    for n in range(1, p - s + 1):
        acc = CycNum.one(p)
        for k in range(p - s - (n - 1), p - s):
            factor = q_int(p, k) * q_int(p, p - s - k)
            if alpha == 1:
                factor = -factor
            acc = acc * factor
        out.append(acc)
    return out


# -- irreducible representations --------------------------------------

@dataclass
class RepMatrices:
    """Matrices of E, F, K on the s-dimensional irreducible module."""

    p: int
    alpha: int
    s: int
    e_mat: list[list[CycNum]]
    f_mat: list[list[CycNum]]
    k_mat: list[list[CycNum]]

    @property
    def dim(self) -> int:
        return self.s


def irreducible_rep(p: int, alpha: int, s: int) -> RepMatrices:
    """Matrices in the weight basis a_0 ... a_(s-1)."""
    if not 1 <= s <= p:
        raise ValueError(f"irreducible label out of range: s={s}, p={p}")
    zero = CycNum.zero(p)
    e_mat = [[zero] * s for _ in range(s)]
    f_mat = [[zero] * s for _ in range(s)]
    k_mat = [[zero] * s for _ in range(s)]
    for n in range(s):
        kval = CycNum.q_power(p, s - 1 - 2 * n)
        if alpha == -1:
            kval = -kval
        k_mat[n][n] = kval
        if n + 1 <= s - 1:
            f_mat[n + 1][n] = CycNum.one(p)
        if n >= 1:
            ev = q_int(p, n) * q_int(p, s - n)
            if alpha == -1:
                ev = -ev
            e_mat[n - 1][n] = ev
    return RepMatrices(p, alpha, s, e_mat, f_mat, k_mat)


# -- idempotents -------------------------------------------------------

def _signed_ladder_product(p: int, alpha: int, length: int, width: int) -> CycNum:
    """prod_(i=1)^(length) (alpha [i][width - i])."""
    acc = CycNum.one(p)
    for i in range(1, length + 1):
        factor = q_int(p, i) * q_int(p, width - i)
        if alpha == -1:
            factor = -factor
        acc = acc * factor
    return acc


def gamma_const(p: int, alpha: int, s: int) -> CycNum:
    """gamma = 2p prod_m (-alpha [m][p-s-m]) prod_i (alpha [i][s-i])."""
    if not 1 <= s <= p - 1:
        raise ValueError(f"gamma needs 1 <= s <= p-1, got s={s}")
    acc = _signed_ladder_product(p, -alpha, p - s - 1, p - s)
    acc = acc * _signed_ladder_product(p, alpha, s - 1, s)
    return acc.scale(2 * p)


def delta_const(p: int, alpha: int, s: int) -> CycNum:
    """The companion constant with one ladder factor deleted from each side."""
    if not 1 <= s <= p - 1:
        raise ValueError(f"delta needs 1 <= s <= p-1, got s={s}")
    first = CycNum.zero(p)
    for j in range(1, s):
        acc = CycNum.one(p)
        for k in range(1, s):
            if k == j:
                continue
            factor = q_int(p, k) * q_int(p, s - k)
            if alpha == -1:
                factor = -factor
            acc = acc * factor
        first = first + acc
    first = first * _signed_ladder_product(p, -alpha, p - s - 1, p - s)
    second = CycNum.zero(p)
    for n in range(1, p - s):
        acc = CycNum.one(p)
        for k in range(1, p - s):
            if k == n:
                continue
            factor = q_int(p, k) * q_int(p, p - s - k)
            if alpha == 1:
                factor = -factor
            acc = acc * factor
        second = second + acc
    second = second * _signed_ladder_product(p, alpha, s - 1, s)
    return (first + second).scale(2 * p)


def idempotent(p: int, label: ProjLabel) -> AlgebraElement:
    """The primitive idempotent for the given label; idempotency is
    verified at construction."""
    alpha, s, t = label.alpha, label.s, label.t
    _check_label(p, alpha, s, t)
    if s == p:
        norm = _signed_ladder_product(p, alpha, p - 1, p).scale(2 * p)
        e = vec_a(p, alpha, p, t, t - 1).scale(norm.inverse())
    else:
        gamma = gamma_const(p, alpha, s)
        delta = delta_const(p, alpha, s)
        gamma_inv = gamma.inverse()
        ratio = delta * gamma_inv
        e = (vec_b(p, alpha, s, t, t - 1) - vec_a(p, alpha, s, t, t - 1).scale(ratio)).scale(
            gamma_inv
        )
    if e * e != e:
        raise ArithmeticError(f"constructed element {label.pretty()} is not idempotent")
    return e


def all_idempotents(p: int) -> list[tuple[ProjLabel, AlgebraElement]]:
    """All p(p+1) primitive idempotents in canonical label order."""
    out = []
    for alpha in (1, -1):
        for s in range(1, p + 1):
            for t in range(1, s + 1):
                label = ProjLabel(alpha, s, t)
                out.append((label, idempotent(p, label)))
    return out


def left_ideal_dimension(p: int, e: AlgebraElement) -> int:
    """Dimension of the left ideal generated by e, by generator closure."""
    gens = [
        AlgebraElement.gen_e(p),
        AlgebraElement.gen_f(p),
        AlgebraElement.gen_k(p),
    ]
    ech = SparseEchelon()
    frontier = [e]
    ech.insert({mono_index(p, m): c for m, c in e.terms.items()})
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y and ech.insert({mono_index(p, m): c for m, c in y.terms.items()}):
                    new_frontier.append(y)
        frontier = new_frontier
    return ech.rank


# -- verification suites -----------------------------------------------

def _k_weight(p: int, x: AlgebraElement, expected: CycNum) -> bool:
    return AlgebraElement.gen_k(p) * x == x.scale(expected)


def check_module_actions(p: int, alpha: int, s: int, t: int) -> VerificationReport:
    """Verify the full generator action table on the a/x/b/y ladder."""
    _check_label(p, alpha, s, t)
    report = VerificationReport("module_actions", p)
    E = AlgebraElement.gen_e(p)
    F = AlgebraElement.gen_f(p)

    def sgn(c: CycNum, positive: bool) -> CycNum:
        return c if positive else -c

    a = [vec_a(p, alpha, s, t, n) for n in range(s)]
    tag = f"{'+' if alpha == 1 else '-'}({s},{t})"

    def a_ladder():
        for n in range(s):
            w = sgn(CycNum.q_power(p, s - 1 - 2 * n), alpha == 1)
            if not _k_weight(p, a[n], w):
                return False, f"K action on a_{n}{tag}"
            if n >= 1:
                ev = sgn(q_int(p, n) * q_int(p, s - n), alpha == 1)
                if E * a[n] != a[n - 1].scale(ev):
                    return False, f"E action on a_{n}{tag}"
            if n <= s - 2:
                if F * a[n] != a[n + 1]:
                    return False, f"F action on a_{n}{tag}"
        if E * a[0]:
            return False, f"a_0{tag} is not highest weight"
        if F * a[s - 1]:
            return False, f"F a_{s - 1}{tag} != 0"
        if not all(a[n] for n in range(s)):
            return False, f"vanishing a-vector in {tag}"
        return True

    report.timed("a_ladder_relations", a_ladder)

    def lambda_expansion():
        # the recursion coefficients must rebuild a_n termwise
        v = weight_projector(p, alpha, s, t)
        for n in range(s):
            coeffs = lambda_coeffs(p, alpha, s, n)
            acc = AlgebraElement.zero(p)
            for l in range(n + 1):
                part = (
                    AlgebraElement.gen_e(p) ** (p - 1 - l)
                    * AlgebraElement.gen_f(p) ** (p - t + n - l)
                    * v
                )
                acc = acc + part.scale(coeffs[l])
            if acc != a[n]:
                return False, f"lambda-coefficient expansion differs at a_{n}{tag}"
        return True

    report.timed("lambda_coefficient_expansion", lambda_expansion)

    if s <= p - 1:
        x = [vec_x(p, alpha, s, t, k) for k in range(p - s)]
        b = [vec_b(p, alpha, s, t, n) for n in range(s)]
        y = [vec_y(p, alpha, s, t, k) for k in range(p - s)]

        def x_ladder():
            for k in range(p - s):
                w = sgn(CycNum.q_power(p, p - s - 1 - 2 * k), alpha == -1)
                if not _k_weight(p, x[k], w):
                    return False, f"K action on x_{k}{tag}"
                if k >= 1:
                    ev = sgn(q_int(p, k) * q_int(p, p - s - k), alpha == -1)
                    if E * x[k] != x[k - 1].scale(ev):
                        return False, f"E action on x_{k}{tag}"
            if E * x[0]:
                return False, f"x_0{tag} is not highest weight"
            for k in range(p - s - 1):
                if F * x[k] != x[k + 1]:
                    return False, f"F action on x_{k}{tag}"
            if F * x[p - s - 1] != a[0]:
                return False, f"F x_(p-s-1){tag} != a_0"
            if not all(x[k] for k in range(p - s)):
                return False, f"vanishing x-vector in {tag}"
            return True

        def b_ladder():
            for n in range(s):
                w = sgn(CycNum.q_power(p, s - 1 - 2 * n), alpha == 1)
                if not _k_weight(p, b[n], w):
                    return False, f"K action on b_{n}{tag}"
                if n >= 1:
                    ev = sgn(q_int(p, n) * q_int(p, s - n), alpha == 1)
                    if E * b[n] != b[n - 1].scale(ev) + a[n - 1]:
                        return False, f"E action on b_{n}{tag}"
            if E * b[0] != x[p - s - 1]:
                return False, f"E b_0{tag} != x_(p-s-1)"
            for n in range(s - 1):
                if F * b[n] != b[n + 1]:
                    return False, f"F action on b_{n}{tag}"
            if F * b[s - 1] != y[0]:
                return False, f"F b_(s-1){tag} != y_0"
            if not all(b[n] for n in range(s)):
                return False, f"vanishing b-vector in {tag}"
            return True

        def y_ladder():
            for k in range(p - s):
                w = sgn(CycNum.q_power(p, p - s - 1 - 2 * k), alpha == -1)
                if not _k_weight(p, y[k], w):
                    return False, f"K action on y_{k}{tag}"
                if k >= 1:
                    ev = sgn(q_int(p, k) * q_int(p, p - s - k), alpha == -1)
                    if E * y[k] != y[k - 1].scale(ev):
                        return False, f"E action on y_{k}{tag}"
            if E * y[0] != a[s - 1]:
                return False, f"E y_0{tag} != a_(s-1)"
            for k in range(p - s - 1):
                if F * y[k] != y[k + 1]:
                    return False, f"F action on y_{k}{tag}"
            if F * y[p - s - 1]:
                return False, f"F y_(p-s-1){tag} != 0"
            if not all(y[k] for k in range(p - s)):
                return False, f"vanishing y-vector in {tag}"
            return True

        def span_closed():
            vectors = b + x + y + a
            ech = SparseEchelon()
            for w in vectors:
                ech.insert({mono_index(p, m): c for m, c in w.terms.items()})
            if ech.rank != 2 * p:
                return False, f"ladder span of {tag} has dimension {ech.rank}, want {2 * p}"
            for g in (E, F, AlgebraElement.gen_k(p)):
                for w in vectors:
                    if not ech.contains(
                        {mono_index(p, m): c for m, c in (g * w).terms.items()}
                    ):
                        return False, f"ladder span of {tag} is not closed under generators"
            return True

        report.timed("x_ladder_relations", x_ladder)
        report.timed("b_ladder_relations", b_ladder)
        report.timed("y_ladder_relations", y_ladder)
        report.timed("ladder_span_dimension_and_closure", span_closed)

    return report


def check_idempotent_system(p: int, include_ideal_dims: bool = True) -> VerificationReport:
    """Count, idempotency, orthogonality, decomposition of 1, ideal sizes."""
    report = VerificationReport("idempotents", p)
    try:
        system = all_idempotents(p)
    except ArithmeticError as exc:
        report.add("idempotency", False, str(exc))
        return report
    report.add("idempotency", True)
    report.timed(
        "count_p_times_p_plus_1",
        lambda: (len(system) == p * (p + 1), f"count {len(system)} != {p * (p + 1)}"),
    )

    def orthogonal():
        for label1, e1 in system:
            for label2, e2 in system:
                if label1 != label2 and e1 * e2:
                    return False, f"{label1.pretty()} * {label2.pretty()} != 0"
        return True

    def sum_is_one():
        acc = AlgebraElement.zero(p)
        for _label, e in system:
            acc = acc + e
        return acc == AlgebraElement.one(p), "idempotents do not sum to 1"

    report.timed("pairwise_orthogonality", orthogonal)
    report.timed("sum_equals_one", sum_is_one)

    if include_ideal_dims:

        def ideal_dims():
            total = 0
            for label, e in system:
                want = p if label.s == p else 2 * p
                got = left_ideal_dimension(p, e)
                if got != want:
                    return False, f"ideal of {label.pretty()} has dim {got}, want {want}"
                total += got
            if total != 2 * p**3:
                return False, f"ideal dimensions sum to {total}, want {2 * p**3}"
            return True

        report.timed("left_ideal_dimensions", ideal_dims)
    return report


def check_casimir_blocks(p: int) -> VerificationReport:
    """Generalized-eigenspace structure of the Casimir on each idempotent."""
    report = VerificationReport("casimir_blocks", p)
    cas = casimir(p)
    one = AlgebraElement.one(p)

    def blocks():
        for label, e in all_idempotents(p):
            alpha, s = label.alpha, label.s
            if s == p:
                block = p if alpha == 1 else 0
                shift = cas - one.scale(casimir_eigenvalue(p, block))
                if shift * e:
                    return False, f"(C - beta_{block}) does not kill {label.pretty()}"
            else:
                block = s if alpha == 1 else p - s
                shift = cas - one.scale(casimir_eigenvalue(p, block))
                if shift * shift * e:
                    return False, f"(C - beta_{block})^2 does not kill {label.pretty()}"
                if not shift * e:
                    return False, f"(C - beta_{block}) annihilates {label.pretty()} (no Jordan block)"
        return True

    report.timed("generalized_eigenspace_structure", blocks)
    return report
