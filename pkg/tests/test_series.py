"""Ring arithmetic for UPoly and truncated Series."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kingmesh.series import (
    NonUnitConstantTermError,
    Series,
    UPoly,
    format_upoly,
    parse_upoly,
)


def upolys(max_degree=4, max_coeff=50):
    return st.builds(
        UPoly,
        st.lists(
            st.integers(min_value=-max_coeff, max_value=max_coeff),
            max_size=max_degree + 1,
        ),
    )


def series(order=12, **kwargs):
    return st.builds(
        lambda cs: Series(order, cs),
        st.lists(upolys(**kwargs), max_size=order + 1),
    )


def unit_series(order=20):
    """Series with constant term +-1, the divisible ones."""
    return st.builds(
        lambda sign, cs: Series(order, [UPoly.const(sign)] + cs),
        st.sampled_from((1, -1)),
        st.lists(upolys(), max_size=order),
    )


class TestUPoly:
    def test_canonical_form_trims_trailing_zeros(self):
        assert UPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UPoly((0, 0)).is_zero
        assert UPoly().degree == -1

    def test_arithmetic(self):
        p = UPoly((1, 2))  # 1 + 2u
        q = UPoly((0, 0, 3))  # 3u^2
        assert p + q == UPoly((1, 2, 3))
        assert p - p == UPoly()
        assert p * q == UPoly((0, 0, 3, 6))
        assert -p == UPoly((-1, -2))
        assert p * 0 == UPoly()
        assert 2 * p == UPoly((2, 4))
        assert p + 1 == UPoly((2, 2))

    def test_dense_times_dense(self):
        p = UPoly((1, 1))
        assert p * p == UPoly((1, 2, 1))
        assert p * UPoly((1, -1)) == UPoly((1, 0, -1))

    def test_shift_and_evaluate(self):
        p = UPoly((1, 2))
        assert p.shift(2) == UPoly((0, 0, 1, 2))
        assert p.shift(2).shift(-2) == p
        with pytest.raises(ValueError):
            p.shift(-1)
        assert p.evaluate(10) == 21
        assert UPoly().evaluate(7) == 0

    @given(upolys(), upolys(), upolys())
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(upolys(max_degree=6, max_coeff=999))
    def test_string_round_trip(self, p):
        assert parse_upoly(format_upoly(p)) == p

    @pytest.mark.parametrize(
        "text", ["0", "1", "u", "-u", "2u^3", "12+2u^4", "500+136u+10u^2", "1-2u+u^3"]
    )
    def test_format_is_canonical(self, text):
        assert format_upoly(parse_upoly(text)) == text

    def test_parse_rejects_garbage(self):
        for bad in ("", "u^", "++", "2x"):
            with pytest.raises(ValueError):
                parse_upoly(bad)


class TestSeries:
    def test_truncation_identities(self):
        one = Series.one(5)
        t = Series.t(5)
        assert (one + t) + (-t) == one
        assert (one + t) * (one - t) == one - t * t
        assert (one + t) * t == t + t * t

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Series.one(3) + Series.one(4)
        with pytest.raises(ValueError):
            Series.one(3) * Series.one(4)

    def test_geometric_division(self):
        one = Series.one(6)
        t = Series.t(6)
        geo = one / (one + t)
        assert [c.evaluate(0) for c in geo.coeffs] == [1, -1, 1, -1, 1, -1, 1]

    def test_division_needs_unit_constant(self):
        order = 4
        u_plus_t = Series(order, [UPoly((0, 1)), UPoly((1,))])
        with pytest.raises(NonUnitConstantTermError) as err:
            Series.one(order) / u_plus_t
        assert err.value.coefficient == UPoly((0, 1))
        with pytest.raises(NonUnitConstantTermError):
            Series.one(order) / (Series.one(order) * 2)

    def test_division_by_negative_unit(self):
        one = Series.one(5)
        t = Series.t(5)
        q = (one + t) / (-one + t)
        assert q * (-one + t) == one + t

    @given(series(order=12, max_degree=3, max_coeff=20), series(order=12, max_degree=3, max_coeff=20), series(order=12, max_degree=3, max_coeff=20))
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(series(order=20), unit_series(order=20))
    @settings(max_examples=60, deadline=None)
    def test_division_inverts_multiplication(self, a, b):
        assert (a / b) * b == a
        assert (a * b) / b == a

    def test_subst_ut(self):
        s = Series.from_ints(2, (1, 1, 1))
        assert s.subst_ut(1) == Series(
            2, [UPoly((1,)), UPoly((0, 1)), UPoly((0, 0, 1))]
        )
        assert s.subst_ut(0) == s

    def test_subst_is_ring_homomorphism(self):
        one = Series.one(8)
        t = Series.t(8)
        x = (one + t) / (one - t - t * t)
        y = one + t * t * 3
        assert (x * y).subst_ut(2) == x.subst_ut(2) * y.subst_ut(2)

    def test_eval_u(self):
        s = Series(1, [UPoly((1,)), UPoly((2, 1))])  # 1 + (2+u) t
        assert s.eval_u(0) == Series.from_ints(1, (1, 2))
        assert s.eval_u(1) == Series.from_ints(1, (1, 3))
        assert s.eval_u(-2) == Series.from_ints(1, (1, 0))

    def test_t_shifts(self):
        s = Series.from_ints(4, (1, 2, 3))
        assert s.mul_t(2) == Series.from_ints(4, (0, 0, 1, 2, 3))
        assert s.mul_t(2).div_t(2) == Series.from_ints(2, (1, 2, 3))
        with pytest.raises(ValueError):
            s.div_t(1)

    def test_div_u(self):
        s = Series(2, [UPoly(), UPoly((0, 3)), UPoly((0, 1, 2))])
        assert s.div_u() == Series(2, [UPoly(), UPoly((3,)), UPoly((1, 2))])
        with pytest.raises(ValueError):
            Series.one(2).div_u()

    def test_scale_u(self):
        s = Series.from_ints(2, (1, 2))
        assert s.scale_u(3).coeff(0) == UPoly((0, 0, 0, 1))

    def test_coeff_bounds(self):
        s = Series.one(3)
        with pytest.raises(IndexError):
            s.coeff(4)

    def test_term_beyond_order_is_zero(self):
        assert Series.term(2, tpow=5).is_zero()
        assert Series.t(0).is_zero()

    def test_str(self):
        s = Series(5, [UPoly((1,)), UPoly(), UPoly((0, 2))])
        assert str(s) == "1 + 2u*t^2"
