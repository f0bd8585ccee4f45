"""The restricted quantum group as an associative algebra over Q(q).

Elements are sparse linear combinations of the normal-ordered monomials
E^m F^n K^l with 0 <= m, n <= p-1 and 0 <= l <= 2p-1.  Multiplication
rewrites any product back into this basis using memoized power
commutators [E^r, F^s] = sum_i E^(r-i) F^(s-i) f_i(K).
"""

from __future__ import annotations

from .cyclotomic import CycNum, Rat, q_int

__all__ = [
    "Mono",
    "AlgebraElement",
    "all_monomials",
    "mono_index",
    "commutator_powers",
    "mono_product",
    "casimir",
    "casimir_eigenvalue",
    "casimir_min_poly",
    "eval_central_poly",
    "is_central",
]

Mono = tuple[int, int, int]  # (E-exponent, F-exponent, K-exponent)


def all_monomials(p: int) -> list[Mono]:
    """PBW basis monomials in canonical lexicographic order."""
    return [
        (m, n, l)
        for m in range(p)
        for n in range(p)
        for l in range(2 * p)
    ]


def mono_index(p: int, mono: Mono) -> int:
    m, n, l = mono
    return (m * p + n) * 2 * p + l


def _check_mono(p: int, mono: Mono):
    m, n, l = mono
    if not (0 <= m < p and 0 <= n < p and 0 <= l < 2 * p):
        raise ValueError(f"monomial {mono} out of range for p={p}")


# -- power commutators -------------------------------------------------

# (p, r, s) -> {i: {k_exponent mod 2p: CycNum}} describing
# [E^r, F^s] = sum_i E^(r-i) F^(s-i) f_i(K)
_comm_cache: dict[tuple[int, int, int], dict] = {}


def _laurent_mul(p: int, a: dict, b: dict) -> dict:
    out: dict[int, CycNum] = {}
    tp = 2 * p
    for i, ci in a.items():
        for j, cj in b.items():
            k = (i + j) % tp
            c = ci * cj
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
    return {k: c for k, c in out.items() if c}


def commutator_powers(p: int, r: int, s: int) -> dict:
    """The Laurent polynomials f_i(K) of the power commutator [E^r, F^s].

    Derived recursively from the single-power commutation relation:
    [E^r, F^s] = E [E^(r-1), F^s] + [E, F^s] E^(r-1), with the K-factor of
    the second summand pushed through E^(r-1).  Memoized on (p, r, s).
    """
    if not (0 <= r <= p - 1 and 0 <= s <= p - 1):
        raise ValueError(f"commutator exponents out of range: r={r}, s={s}, p={p}")
    key = (p, r, s)
    cached = _comm_cache.get(key)
    if cached is not None:
        return cached
    if r == 0 or s == 0:
        _comm_cache[key] = {}
        return {}
    tp = 2 * p
    result: dict[int, dict] = {i: dict(f) for i, f in commutator_powers(p, r - 1, s).items()}
    # [E, F^s] E^(r-1) = [s] F^(s-1) (q^-(s-1) K - q^(s-1) K^-1)/(q - q^-1) E^(r-1)
    denom_inv = (CycNum.q_power(p, 1) - CycNum.q_power(p, -1)).inverse()
    factor = q_int(p, s) * denom_inv
    g_hat = {
        1 % tp: factor * CycNum.q_power(p, -(s - 1) + 2 * (r - 1)),
        (-1) % tp: -(factor * CycNum.q_power(p, (s - 1) - 2 * (r - 1))),
    }
    g_hat = {k: c for k, c in g_hat.items() if c}
    f1 = result.setdefault(1, {})
    for k, c in g_hat.items():
        prev = f1.get(k)
        f1[k] = c if prev is None else prev + c
    for i, fi in commutator_powers(p, r - 1, s - 1).items():
        extra = _laurent_mul(p, fi, g_hat)
        target = result.setdefault(i + 1, {})
        for k, c in extra.items():
            prev = target.get(k)
            target[k] = -c if prev is None else prev - c
    result = {
        i: {k: c for k, c in fi.items() if c}
        for i, fi in result.items()
    }
    result = {i: fi for i, fi in result.items() if fi}
    _comm_cache[key] = result
    return result


# -- monomial products -------------------------------------------------

_mono_cache: dict[tuple[int, Mono, Mono], dict] = {}


def mono_product(p: int, a: Mono, b: Mono) -> dict:
    """Normal-ordered product of two basis monomials as {mono: CycNum}."""
    key = (p, a, b)
    cached = _mono_cache.get(key)
    if cached is not None:
        return cached
    m1, n1, l1 = a
    m2, n2, l2 = b
    tp = 2 * p
    base = CycNum.q_power(p, 2 * l1 * (m2 - n2))
    lsum = (l1 + l2) % tp
    out: dict[Mono, CycNum] = {}
    if m1 + m2 <= p - 1 and n1 + n2 <= p - 1:
        out[(m1 + m2, n1 + n2, lsum)] = base
    # F^n1 E^m2 = E^m2 F^n1 - [E^m2, F^n1]
    for i, fi in commutator_powers(p, m2, n1).items():
        m = m1 + m2 - i
        n = n1 - i + n2
        if m > p - 1 or n > p - 1:
            continue
        for j, c in fi.items():
            # K^j passes F^n2 with scalar q^(-2 j n2)
            coeff = base * c * CycNum.q_power(p, -2 * j * n2)
            mono = (m, n, (j + lsum) % tp)
            prev = out.get(mono)
            acc = -coeff if prev is None else prev - coeff
            if acc:
                out[mono] = acc
            elif prev is not None:
                del out[mono]
    _mono_cache[key] = out
    return out


# -- algebra elements --------------------------------------------------

class AlgebraElement:
    """A sparse element of the algebra in the PBW basis."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict):
        self.p = p
        self.terms = terms

    @staticmethod
    def zero(p: int) -> "AlgebraElement":
        return AlgebraElement(p, {})

    @staticmethod
    def one(p: int) -> "AlgebraElement":
        return AlgebraElement(p, {(0, 0, 0): CycNum.one(p)})

    @staticmethod
    def monomial(p: int, mono: Mono, coeff=None) -> "AlgebraElement":
        _check_mono(p, mono)
        c = CycNum.one(p) if coeff is None else coeff
        if not c:
            return AlgebraElement.zero(p)
        return AlgebraElement(p, {mono: c})

    @staticmethod
    def gen_e(p: int) -> "AlgebraElement":
        return AlgebraElement.monomial(p, (1, 0, 0))

    @staticmethod
    def gen_f(p: int) -> "AlgebraElement":
        return AlgebraElement.monomial(p, (0, 1, 0))

    @staticmethod
    def gen_k(p: int, power: int = 1) -> "AlgebraElement":
        return AlgebraElement.monomial(p, (0, 0, power % (2 * p)))

    @staticmethod
    def gen_k_inv(p: int) -> "AlgebraElement":
        return AlgebraElement.gen_k(p, -1)

    def _check(self, other: "AlgebraElement"):
        if self.p != other.p:
            raise ValueError(f"mixed root orders: {self.p} vs {other.p}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            prev = terms.get(mono)
            acc = c if prev is None else prev + c
            if acc:
                terms[mono] = acc
            elif prev is not None:
                del terms[mono]
        return AlgebraElement(self.p, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.p, {m: -c for m, c in self.terms.items()})

    def scale(self, coeff) -> "AlgebraElement":
        if isinstance(coeff, CycNum):
            if not coeff:
                return AlgebraElement.zero(self.p)
            return AlgebraElement(self.p, {m: c * coeff for m, c in self.terms.items()})
        r = Rat(coeff)
        if not r:
            return AlgebraElement.zero(self.p)
        return AlgebraElement(self.p, {m: c.scale(r) for m, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        p = self.p
        out: dict[Mono, CycNum] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                cab = ca * cb
                if not cab:
                    continue
                for mono, c in mono_product(p, a, b).items():
                    prev = out.get(mono)
                    acc = cab * c if prev is None else prev + cab * c
                    if acc:
                        out[mono] = acc
                    elif prev is not None:
                        del out[mono]
        return AlgebraElement(p, out)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers of algebra elements are not defined")
        result = AlgebraElement.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coefficient(self, mono: Mono) -> CycNum:
        return self.terms.get(mono, CycNum.zero(self.p))

    def support(self) -> list[Mono]:
        return sorted(self.terms)

    def to_dense(self) -> list[CycNum]:
        zero = CycNum.zero(self.p)
        vec = [zero] * (2 * self.p**3)
        for mono, c in self.terms.items():
            vec[mono_index(self.p, mono)] = c
        return vec

    # -- serialization (canonical, bit-stable) -------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [
                {"e": m, "f": n, "k": l, "c": self.terms[(m, n, l)].to_strings()}
                for (m, n, l) in sorted(self.terms)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraElement":
        p = data["p"]
        terms = {}
        for item in data["terms"]:
            mono = (item["e"], item["f"], item["k"])
            _check_mono(p, mono)
            c = CycNum.from_strings(p, item["c"])
            if c:
                terms[mono] = c
        return AlgebraElement(p, terms)

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement(p={self.p}, 0)"
        bits = []
        for m, n, l in self.support():
            c = self.terms[(m, n, l)]
            name = "".join(
                part
                for part in (f"E^{m}" if m else "", f"F^{n}" if n else "", f"K^{l}" if l else "")
                if part
            ) or "1"
            bits.append(f"({'+'.join(c.to_strings())})*{name}")
        return f"AlgebraElement(p={self.p}, {' + '.join(bits)})"


# -- Casimir element ---------------------------------------------------

def casimir(p: int) -> AlgebraElement:
    """C = EF + (q^-1 K + q K^-1)/(q - q^-1)^2 in PBW form."""
    denom_inv = ((CycNum.q_power(p, 1) - CycNum.q_power(p, -1)) ** 2).inverse()
    return AlgebraElement(
        p,
        {
            (1, 1, 0): CycNum.one(p),
            (0, 0, 1): CycNum.q_power(p, -1) * denom_inv,
            (0, 0, 2 * p - 1): CycNum.q_power(p, 1) * denom_inv,
        },
    )


def casimir_eigenvalue(p: int, s: int) -> CycNum:
    """The Casimir scalar (q^s + q^-s)/(q - q^-1)^2 for 0 <= s <= p."""
    if not 0 <= s <= p:
        raise ValueError(f"eigenvalue label out of range: s={s}, p={p}")
    denom_inv = ((CycNum.q_power(p, 1) - CycNum.q_power(p, -1)) ** 2).inverse()
    return (CycNum.q_power(p, s) + CycNum.q_power(p, -s)) * denom_inv


def casimir_min_poly(p: int) -> list[CycNum]:
    """Ascending coefficients of the degree-2p minimal polynomial of C.

    Simple roots at the s = 0 and s = p eigenvalues, double roots at the
    p-1 intermediate ones.
    """
    roots = [casimir_eigenvalue(p, 0), casimir_eigenvalue(p, p)]
    for s in range(1, p):
        roots.extend([casimir_eigenvalue(p, s)] * 2)
    poly = [CycNum.one(p)]
    for root in roots:
        new = [CycNum.zero(p)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - root * c
        poly = new
    return poly


def eval_central_poly(x: AlgebraElement, coeffs: list[CycNum]) -> AlgebraElement:
    """Evaluate a univariate polynomial (ascending coefficients) at x."""
    p = x.p
    acc = AlgebraElement.zero(p)
    for c in reversed(coeffs):
        acc = acc * x + AlgebraElement.one(p).scale(c)
    return acc


def is_central(x: AlgebraElement) -> bool:
    """True iff x commutes with the generators (hence with everything)."""
    p = x.p
    for g in (AlgebraElement.gen_e(p), AlgebraElement.gen_f(p), AlgebraElement.gen_k(p)):
        if x * g != g * x:
            return False
    return True
