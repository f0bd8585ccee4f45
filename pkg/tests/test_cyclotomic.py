import pytest
from hypothesis import given, settings, strategies as st

from uqsl2.cyclotomic import CycNum, Rat, q_binom, q_factorial, q_int


@st.composite
def cyc_numbers(draw, p):
    degree = len(CycNum.zero(p).coeffs)
    numerators = draw(
        st.lists(st.integers(-20, 20), min_size=degree, max_size=degree)
    )
    denominators = draw(
        st.lists(st.integers(1, 8), min_size=degree, max_size=degree)
    )
    return CycNum.make(p, [Rat(a, b) for a, b in zip(numerators, denominators)])


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_canonical_powers(p):
    q = CycNum.q_power(p, 1)
    assert q ** (2 * p) == CycNum.one(p)
    assert q**p != CycNum.one(p)
    assert q**p == -CycNum.one(p)
    for k in range(-2 * p, 2 * p):
        assert CycNum.q_power(p, k) == q ** (k % (2 * p))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_field_axioms(p):
    @settings(max_examples=40, deadline=None)
    @given(cyc_numbers(p), cyc_numbers(p), cyc_numbers(p))
    def run(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + CycNum.zero(p) == a
        assert a * CycNum.one(p) == a
        assert a - a == CycNum.zero(p)
        if a:
            assert a * a.inverse() == CycNum.one(p)

    run()


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_string_round_trip(p):
    @settings(max_examples=25, deadline=None)
    @given(cyc_numbers(p))
    def run(a):
        assert CycNum.from_strings(p, a.to_strings()) == a

    run()


@pytest.mark.parametrize("p", [2, 3, 4, 5, 6])
def test_q_integer_identities(p):
    assert q_int(p, 0) == CycNum.zero(p)
    assert q_int(p, 1) == CycNum.one(p)
    assert not q_int(p, p)
    for n in range(2 * p):
        assert q_int(p, p - n) == q_int(p, n)
        assert q_int(p, n + 2 * p) == q_int(p, n)
        assert q_int(p, -n) == -q_int(p, n)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_q_factorial_and_binom(p):
    acc = CycNum.one(p)
    for n in range(1, p):
        acc = acc * q_int(p, n)
        assert q_factorial(p, n) == acc
    for m in range(p):
        assert q_binom(p, m, 0) == CycNum.one(p)
        assert q_binom(p, m, m) == CycNum.one(p)
        for n in range(1, m):
            # Pascal-type rule for Gaussian binomials
            q = CycNum.q_power(p, 1)
            lhs = q_binom(p, m, n)
            rhs = q ** n * q_binom(p, m - 1, n) + q ** (n - m) * q_binom(p, m - 1, n - 1)
            assert lhs == rhs


def test_q_binom_range_checked():
    with pytest.raises(ValueError):
        q_binom(3, 2, 3)
    with pytest.raises(ValueError):
        q_binom(3, 3, 1)


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_to_complex_matches_root(p):
    import cmath

    q = cmath.exp(1j * cmath.pi / p)
    got = CycNum.q_power(p, 1).to_complex()
    assert abs(got - q) < 1e-12
    for s in range(1, p):
        import math

        want = math.sin(s * math.pi / p) / math.sin(math.pi / p)
        assert abs(q_int(p, s).to_complex() - want) < 1e-12
