"""Exact arithmetic in the cyclotomic field Q(q), q = exp(pi*i/p).

Elements are residues in Q[x]/(Phi_2p(x)) stored in the power basis
1, q, ..., q^(phi(2p)-1) with rational coefficients.  The representation
is canonical, so structural equality is field equality.  All values are
immutable and safe to share between threads.
"""

from __future__ import annotations

import cmath
import math
import threading

try:  # gmpy2.mpq is a drop-in speedup; plain Fraction works everywhere
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

__all__ = [
    "Rat",
    "CycNum",
    "q_int",
    "q_factorial",
    "q_binom",
    "cyclotomic_coeffs",
    "euler_phi",
]

_ZERO = Rat(0)
_ONE = Rat(1)


def euler_phi(n: int) -> int:
    """Euler totient by trial-division factorization (desk-scale n)."""
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    assert not any(num), "non-exact polynomial division"
    return out


def cyclotomic_coeffs(n: int) -> list[int]:
    """Ascending integer coefficients of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div(poly, cyclotomic_coeffs(d))
    return poly


class _Context:
    """Per-p data: Phi_2p and the reduction table for high powers of q."""

    def __init__(self, p: int):
        self.p = p
        phi = cyclotomic_coeffs(2 * p)
        self.degree = len(phi) - 1
        # q^deg = -sum(phi[j] q^j); extend far enough for both products of
        # reduced residues (2deg-2) and raw powers q^k, k < 2p
        top_exp = max(2 * self.degree - 2, 2 * p - 1)
        rows = []
        prev = [Rat(-c) for c in phi[:-1]]
        rows.append(tuple(prev))
        for _ in range(top_exp - self.degree):
            shifted = [_ZERO] + prev[:-1]
            top = prev[-1]
            if top:
                shifted = [shifted[j] + top * rows[0][j] for j in range(self.degree)]
            prev = shifted
            rows.append(tuple(prev))
        self.power_rows = rows  # power_rows[k] represents q^(degree+k)


_contexts: dict[int, _Context] = {}
_ctx_lock = threading.Lock()


def _context(p: int) -> _Context:
    if p < 2:
        raise ValueError(f"root-of-unity order parameter must be >= 2, got {p}")
    ctx = _contexts.get(p)
    if ctx is None:
        with _ctx_lock:
            ctx = _contexts.get(p)
            if ctx is None:
                ctx = _Context(p)
                _contexts[p] = ctx
    return ctx


class CycNum:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs: tuple):
        self.p = p
        self.coeffs = coeffs
        self._hash = None

    # -- construction -------------------------------------------------

    @staticmethod
    def make(p: int, poly) -> "CycNum":
        """Canonical residue of a polynomial in q (ascending coefficients)."""
        ctx = _context(p)
        work = [Rat(c) for c in poly]
        deg = ctx.degree
        while len(work) > deg:
            top = work.pop()
            if top:
                row = ctx.power_rows[len(work) - deg]
                for j in range(deg):
                    if row[j]:
                        work[j] += top * row[j]
        work.extend([_ZERO] * (deg - len(work)))
        return CycNum(p, tuple(work))

    @staticmethod
    def zero(p: int) -> "CycNum":
        return CycNum(p, (_ZERO,) * _context(p).degree)

    @staticmethod
    def one(p: int) -> "CycNum":
        return CycNum.from_rational(p, _ONE)

    @staticmethod
    def from_rational(p: int, value) -> "CycNum":
        deg = _context(p).degree
        return CycNum(p, (Rat(value),) + (_ZERO,) * (deg - 1))

    @staticmethod
    def q_power(p: int, k: int) -> "CycNum":
        """q^k for any integer k (q has order 2p)."""
        k %= 2 * p
        return CycNum.make(p, [_ZERO] * k + [_ONE])

    # -- predicates ---------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            key = tuple((int(c.numerator), int(c.denominator)) for c in self.coeffs)
            self._hash = hash((self.p, key))
        return self._hash

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "CycNum"):
        if self.p != other.p:
            raise ValueError(f"mixed root orders: {self.p} vs {other.p}")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycNum":
        return CycNum(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = len(a)
        prod = [_ZERO] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycNum.make(self.p, prod)

    def scale(self, value) -> "CycNum":
        """Multiply by a plain rational scalar."""
        r = Rat(value)
        return CycNum(self.p, tuple(c * r for c in self.coeffs))

    def inverse(self) -> "CycNum":
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        modulus = [Rat(c) for c in cyclotomic_coeffs(2 * self.p)]
        r0, r1 = modulus, _trim(list(self.coeffs))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
        inv_lead = _ONE / r1[0]
        return CycNum.make(self.p, [c * inv_lead for c in s1])

    def __truediv__(self, other: "CycNum") -> "CycNum":
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- conversion ---------------------------------------------------

    def to_complex(self) -> complex:
        """Float evaluation at q = exp(pi*i/p)."""
        q = cmath.exp(1j * math.pi / self.p)
        return sum(float(c) * q**k for k, c in enumerate(self.coeffs) if c)

    def to_strings(self) -> list[str]:
        """Coefficient strings in the power basis ("a/b" reduced, or "a")."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(p: int, strings: list[str]) -> "CycNum":
        return CycNum.make(p, [Rat(s) for s in strings])

    def __repr__(self):
        return f"CycNum(p={self.p}, [{', '.join(self.to_strings())}])"


def _trim(poly: list) -> list:
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    if len(num) < len(den):
        return [], _trim(num)
    quot = [_ZERO] * (len(num) - len(den) + 1)
    inv_lead = _ONE / den[-1]
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return _trim(quot), _trim(num)


# -- q-symbols ---------------------------------------------------------

_qint_cache: dict[tuple[int, int], CycNum] = {}
_qfact_cache: dict[tuple[int, int], CycNum] = {}


def q_int(p: int, n: int) -> CycNum:
    """The q-integer [n] = (q^n - q^-n)/(q - q^-1); periodic with period 2p."""
    key = (p, n % (2 * p))
    cached = _qint_cache.get(key)
    if cached is None:
        m = key[1]
        # [m] = q^(m-1) + q^(m-3) + ... + q^(1-m)
        acc = CycNum.zero(p)
        for k in range(m):
            acc = acc + CycNum.q_power(p, m - 1 - 2 * k)
        _qint_cache[key] = cached = acc
    return cached


def q_factorial(p: int, n: int) -> CycNum:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"q-factorial of negative {n}")
    key = (p, n)
    cached = _qfact_cache.get(key)
    if cached is None:
        acc = CycNum.one(p)
        for k in range(1, n + 1):
            acc = acc * q_int(p, k)
        _qfact_cache[key] = cached = acc
    return cached


def q_binom(p: int, m: int, n: int) -> CycNum:
    """Bracketed binomial [m]!/([n]![m-n]!), valid for 0 <= n <= m <= p-1.

    The range cap keeps [p] = 0 out of the denominator.
    """
    if not (0 <= n <= m <= p - 1):
        raise ValueError(f"q-binomial out of range: m={m}, n={n}, p={p}")
    return q_factorial(p, m) * (q_factorial(p, n) * q_factorial(p, m - n)).inverse()
