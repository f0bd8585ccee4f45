"""Coproduct, counit and antipode, with exhaustive axiom verification.

The coproduct is extended multiplicatively from the generator values
Delta(E) = 1 (x) E + E (x) K, Delta(F) = K^-1 (x) F + F (x) 1,
Delta(K) = K (x) K; the antipode anti-multiplicatively from
S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1.
"""

from __future__ import annotations

import random

from .algebra import AlgebraElement, Mono, all_monomials, mono_product
from .cyclotomic import CycNum, q_binom
from .report import VerificationReport

__all__ = [
    "TensorElement",
    "tensor",
    "coproduct",
    "coproduct_closed_form",
    "counit",
    "antipode",
    "check_hopf_axioms",
]


class TensorElement:
    """Sparse element of the two-fold tensor square of the algebra."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict):
        self.p = p
        self.terms = terms  # {(mono, mono): CycNum}

    @staticmethod
    def zero(p: int) -> "TensorElement":
        return TensorElement(p, {})

    @staticmethod
    def unit(p: int) -> "TensorElement":
        return TensorElement(p, {((0, 0, 0), (0, 0, 0)): CycNum.one(p)})

    def _check(self, other: "TensorElement"):
        if self.p != other.p:
            raise ValueError(f"mixed root orders: {self.p} vs {other.p}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            prev = terms.get(key)
            acc = c if prev is None else prev + c
            if acc:
                terms[key] = acc
            elif prev is not None:
                del terms[key]
        return TensorElement(self.p, terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale_rat(-1)

    def scale(self, coeff: CycNum) -> "TensorElement":
        if not coeff:
            return TensorElement.zero(self.p)
        return TensorElement(self.p, {k: c * coeff for k, c in self.terms.items()})

    def scale_rat(self, value) -> "TensorElement":
        return TensorElement(self.p, {k: c.scale(value) for k, c in self.terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Componentwise product: (a (x) b)(c (x) d) = ac (x) bd."""
        self._check(other)
        p = self.p
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c12 = c1 * c2
                left = mono_product(p, a1, a2)
                if not left:
                    continue
                right = mono_product(p, b1, b2)
                for ml, cl in left.items():
                    c12l = c12 * cl
                    for mr, cr in right.items():
                        key = (ml, mr)
                        c = c12l * cr
                        prev = out.get(key)
                        acc = c if prev is None else prev + c
                        if acc:
                            out[key] = acc
                        elif prev is not None:
                            del out[key]
        return TensorElement(p, out)

    def __pow__(self, n: int) -> "TensorElement":
        result = TensorElement.unit(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [
                {
                    "left": list(left),
                    "right": list(right),
                    "c": self.terms[(left, right)].to_strings(),
                }
                for (left, right) in sorted(self.terms)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "TensorElement":
        p = data["p"]
        terms = {}
        for item in data["terms"]:
            key = (tuple(item["left"]), tuple(item["right"]))
            coeff = CycNum.from_strings(p, item["c"])
            if coeff:
                terms[key] = coeff
        return TensorElement(p, terms)

    def __repr__(self):
        return f"TensorElement(p={self.p}, {len(self.terms)} terms)"


def tensor(x: AlgebraElement, y: AlgebraElement) -> TensorElement:
    if x.p != y.p:
        raise ValueError("mixed root orders in tensor")
    out = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            c = ca * cb
            if c:
                out[(a, b)] = c
    return TensorElement(x.p, out)


# -- coproduct ---------------------------------------------------------

_delta_mono_cache: dict[tuple[int, Mono], TensorElement] = {}
_delta_gen_powers: dict[int, tuple[list, list, list]] = {}


def _generator_power_tables(p: int):
    cached = _delta_gen_powers.get(p)
    if cached is None:
        one = CycNum.one(p)
        d_e = TensorElement(p, {((0, 0, 0), (1, 0, 0)): one, ((1, 0, 0), (0, 0, 1)): one})
        d_f = TensorElement(p, {((0, 0, 2 * p - 1), (0, 1, 0)): one, ((0, 1, 0), (0, 0, 0)): one})
        e_pows = [TensorElement.unit(p)]
        f_pows = [TensorElement.unit(p)]
        for _ in range(p - 1):
            e_pows.append(e_pows[-1] * d_e)
            f_pows.append(f_pows[-1] * d_f)
        k_pows = [
            TensorElement(p, {((0, 0, l), (0, 0, l)): one}) for l in range(2 * p)
        ]
        _delta_gen_powers[p] = cached = (e_pows, f_pows, k_pows)
    return cached


def coproduct_monomial(p: int, mono: Mono) -> TensorElement:
    key = (p, mono)
    cached = _delta_mono_cache.get(key)
    if cached is None:
        m, n, l = mono
        e_pows, f_pows, k_pows = _generator_power_tables(p)
        cached = e_pows[m] * f_pows[n] * k_pows[l]
        _delta_mono_cache[key] = cached
    return cached


def coproduct(x: AlgebraElement) -> TensorElement:
    out = TensorElement.zero(x.p)
    for mono, c in x.terms.items():
        out = out + coproduct_monomial(x.p, mono).scale(c)
    return out


def coproduct_closed_form(p: int, mono: Mono) -> TensorElement:
    """The double-sum closed form of the coproduct of a basis monomial.

    The r-sum is weighted by the bracketed binomial in r (the natural
    reading; equality with the generator route is enforced by tests).
    """
    m, n, l = mono
    tp = 2 * p
    out: dict = {}
    for r in range(m + 1):
        for s in range(n + 1):
            coeff = (
                CycNum.q_power(p, r * (m - r) + s * (n - s) - 2 * r * s)
                * q_binom(p, m, r)
                * q_binom(p, n, s)
            )
            if not coeff:
                continue
            key = ((r, n - s, (l - s) % tp), (m - r, s, (l + r) % tp))
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
    return TensorElement(p, {k: c for k, c in out.items() if c})


# -- counit and antipode ----------------------------------------------

def counit(x: AlgebraElement) -> CycNum:
    """epsilon kills monomials containing E or F and sends K^l to 1."""
    acc = CycNum.zero(x.p)
    for (m, n, _l), c in x.terms.items():
        if m == 0 and n == 0:
            acc = acc + c
    return acc


_antipode_mono_cache: dict[tuple[int, Mono], AlgebraElement] = {}
_antipode_gen_powers: dict[int, tuple[list, list]] = {}


def _antipode_power_tables(p: int):
    cached = _antipode_gen_powers.get(p)
    if cached is None:
        s_e = AlgebraElement.monomial(p, (1, 0, 2 * p - 1)).scale(-1)  # -E K^-1
        s_f = (AlgebraElement.gen_k(p) * AlgebraElement.gen_f(p)).scale(-1)  # -K F
        se_pows = [AlgebraElement.one(p)]
        sf_pows = [AlgebraElement.one(p)]
        for _ in range(p - 1):
            se_pows.append(se_pows[-1] * s_e)
            sf_pows.append(sf_pows[-1] * s_f)
        _antipode_gen_powers[p] = cached = (se_pows, sf_pows)
    return cached


def antipode_monomial(p: int, mono: Mono) -> AlgebraElement:
    key = (p, mono)
    cached = _antipode_mono_cache.get(key)
    if cached is None:
        m, n, l = mono
        se_pows, sf_pows = _antipode_power_tables(p)
        # S reverses products: S(E^m F^n K^l) = K^-l S(F)^n S(E)^m
        cached = AlgebraElement.gen_k(p, -l) * sf_pows[n] * se_pows[m]
        _antipode_mono_cache[key] = cached
    return cached


def antipode(x: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement.zero(x.p)
    for mono, c in x.terms.items():
        out = out + antipode_monomial(x.p, mono).scale(c)
    return out


# -- axiom verification ------------------------------------------------

def _apply_delta_left(t: TensorElement) -> dict:
    """(Delta (x) id) applied to a 2-tensor, as a 3-tensor dict."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (a1, a2), ca in coproduct_monomial(t.p, a).terms.items():
            key = (a1, a2, b)
            v = c * ca
            prev = out.get(key)
            acc = v if prev is None else prev + v
            if acc:
                out[key] = acc
            elif prev is not None:
                del out[key]
    return out


def _apply_delta_right(t: TensorElement) -> dict:
    """(id (x) Delta) applied to a 2-tensor, as a 3-tensor dict."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), cb in coproduct_monomial(t.p, b).terms.items():
            key = (a, b1, b2)
            v = c * cb
            prev = out.get(key)
            acc = v if prev is None else prev + v
            if acc:
                out[key] = acc
            elif prev is not None:
                del out[key]
    return out


def _counit_contract(t: TensorElement, side: str) -> AlgebraElement:
    """(eps (x) id) or (id (x) eps) applied to a 2-tensor."""
    out = AlgebraElement.zero(t.p)
    for (a, b), c in t.terms.items():
        if side == "left":
            if a[0] == 0 and a[1] == 0:
                out = out + AlgebraElement.monomial(t.p, b, c)
        else:
            if b[0] == 0 and b[1] == 0:
                out = out + AlgebraElement.monomial(t.p, a, c)
    return out


def _antipode_contract(t: TensorElement, side: str) -> AlgebraElement:
    """m(S (x) id) or m(id (x) S) applied to a 2-tensor."""
    out = AlgebraElement.zero(t.p)
    for (a, b), c in t.terms.items():
        if side == "left":
            prod = antipode_monomial(t.p, a) * AlgebraElement.monomial(t.p, b)
        else:
            prod = AlgebraElement.monomial(t.p, a) * antipode_monomial(t.p, b)
        out = out + prod.scale(c)
    return out


def check_hopf_axioms(
    p: int,
    pair_sample: int | None = None,
    monomial_sample: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Verify the Hopf axioms on PBW basis monomials, exactly.

    With pair_sample/monomial_sample set, random subsets are used instead
    of the exhaustive grids (needed above p = 3 to keep desk-scale runtimes).
    """
    report = VerificationReport("hopf", p)
    monos = all_monomials(p)
    rng = random.Random(seed)
    if monomial_sample is not None and monomial_sample < len(monos):
        monos_checked = rng.sample(monos, monomial_sample)
    else:
        monos_checked = monos

    def coassoc():
        for mono in monos_checked:
            t = coproduct_monomial(p, mono)
            if _apply_delta_left(t) != _apply_delta_right(t):
                return False, f"coassociativity fails on {mono}"
        return True

    def counit_axiom():
        for mono in monos_checked:
            x = AlgebraElement.monomial(p, mono)
            t = coproduct_monomial(p, mono)
            if _counit_contract(t, "left") != x or _counit_contract(t, "right") != x:
                return False, f"counit axiom fails on {mono}"
        return True

    def antipode_axiom():
        for mono in monos_checked:
            x = AlgebraElement.monomial(p, mono)
            t = coproduct_monomial(p, mono)
            expected = AlgebraElement.one(p).scale(counit(x))
            if _antipode_contract(t, "left") != expected:
                return False, f"antipode axiom (left) fails on {mono}"
            if _antipode_contract(t, "right") != expected:
                return False, f"antipode axiom (right) fails on {mono}"
        return True

    def closed_form():
        for mono in monos_checked:
            if coproduct_closed_form(p, mono) != coproduct_monomial(p, mono):
                got = coproduct_closed_form(p, mono).to_json()
                want = coproduct_monomial(p, mono).to_json()
                return False, f"closed form differs on {mono}: {got} vs {want}"
        return True

    def multiplicative():
        if pair_sample is None:
            pairs = [(a, b) for a in monos for b in monos]
        else:
            pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(pair_sample)]
        for a, b in pairs:
            xa = AlgebraElement.monomial(p, a)
            xb = AlgebraElement.monomial(p, b)
            if coproduct(xa * xb) != coproduct_monomial(p, a) * coproduct_monomial(p, b):
                return False, f"Delta not multiplicative on pair {a}, {b}"
        return True

    report.timed("coassociativity", coassoc)
    report.timed("counit_axiom", counit_axiom)
    report.timed("antipode_axiom", antipode_axiom)
    report.timed("coproduct_closed_form", closed_form)
    report.timed("coproduct_multiplicative", multiplicative)
    return report
