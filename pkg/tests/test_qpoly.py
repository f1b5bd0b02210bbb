import pytest
from hypothesis import given, strategies as st

from ppart import QPolynomial, RemainderError, q_factorial, q_int

polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(
    lambda cs: QPolynomial(tuple(cs))
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestBasics:
    def test_q_int(self):
        assert q_int(3).coeffs == (1, 1, 1)
        assert q_int(0).is_zero()
        assert q_int(1) == 1

    def test_q_factorial(self):
        assert q_factorial(0) == 1
        assert q_factorial(1) == 1
        assert q_factorial(3).coeffs == (1, 2, 2, 1)

    def test_trimming(self):
        assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert QPolynomial((0, 0)).coeffs == (0,)

    def test_evaluation(self):
        assert q_factorial(4)(1) == 24
        assert q_int(5)(2) == 31

    def test_substitute_power(self):
        assert q_int(2).substitute_power(7).coeffs == (1,) + (0,) * 6 + (1,)


class TestDivision:
    def test_exact(self):
        a = q_int(6)
        b = q_int(3)
        q = a.exact_div(b)
        assert q * b == a

    def test_remainder_raises(self):
        with pytest.raises(RemainderError):
            q_int(5).exact_div(q_int(2))

    def test_degree_mismatch(self):
        with pytest.raises(RemainderError):
            q_int(2).exact_div(q_int(4))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            q_int(2).exact_div(QPolynomial.zero())

    @given(polys, nonzero_polys)
    def test_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a


class TestArithmetic:
    @given(polys, polys)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polys, polys, polys)
    def test_associativity_and_distribution(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys)
    def test_additive_inverse(self, a):
        assert a - a == QPolynomial.zero()
