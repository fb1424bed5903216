from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantor_hankel.hankel import det_exact, hankel_matrix
from cantor_hankel.pade import (PadeApproximant, RationalInterval,
                                cantor_coefficients, cantor_number,
                                eta_identity_check, irrationality_estimates,
                                pade, verify_functional_equation,
                                verify_pade_error)

# Low-order approximants, solved by hand from the 2n coefficient
# equations (the order-2 system is 1 + 0*q1 + q2 = 0, 0 + q1 + 0 = 0).
KNOWN_APPROXIMANTS = {
    1: ((1,), (1,)),
    2: ((-1,), (-1, 0, 1)),
    3: ((1, 0, 1), (1,)),
    4: ((-1, 0, -2), (-1, 0, -1, 0, 1)),
}


def test_low_order_approximants():
    for order, (num, den) in KNOWN_APPROXIMANTS.items():
        approx = pade(order)
        assert approx.order == order
        assert (approx.numerator, approx.denominator) == (num, den)


def test_order_validation():
    with pytest.raises(ValueError):
        pade(0)
    with pytest.raises(ValueError):
        PadeApproximant(2, (1,), (0, 1))


def test_coefficients_prefix():
    assert cantor_coefficients(9) == [1, 0, 1, 0, 0, 0, 1, 0, 1]


def test_contact_order():
    # P/Q agrees with the series through degree 2*order - 1 and misses at
    # 2*order by exactly the ratio of consecutive column-0 determinants.
    for order in range(1, 9):
        report = verify_pade_error(order)
        assert report.ok, report
        top = det_exact(hankel_matrix("gamma", 0, order + 1))
        bottom = det_exact(hankel_matrix("gamma", 0, order))
        assert report.expected_leading == Fraction(top, bottom)


def test_error_leading_literals():
    assert verify_pade_error(1).leading == 1
    assert verify_pade_error(2).leading == -1
    assert verify_pade_error(4).leading == 2


def test_value_at():
    assert pade(3).value_at(Fraction(1, 2)) == Fraction(5, 4)
    assert pade(2).value_at(Fraction(1, 2)) == Fraction(4, 3)


def test_functional_equation():
    report = verify_functional_equation(1000)
    assert report.ok
    assert report.first_mismatch is None
    with pytest.raises(ValueError):
        verify_functional_equation(-1)


def test_interval_helpers():
    a = RationalInterval(Fraction(1), Fraction(2))
    b = RationalInterval(Fraction(3, 2), Fraction(7, 4))
    assert a.width == 1
    assert a.contains(Fraction(3, 2))
    assert a.encloses(b)
    assert a.overlaps(b)
    assert not b.encloses(a)
    with pytest.raises(ValueError):
        RationalInterval(Fraction(2), Fraction(1))


def test_cantor_number_literals():
    enc = cantor_number(2, 3)
    assert (enc.lo, enc.hi) == (Fraction(5, 4), Fraction(3, 2))
    assert cantor_number(2, 1).lo == 1
    assert cantor_number(2, 1).hi == 2
    assert cantor_number(10, 9).lo == Fraction(101000101, 10 ** 8)


@given(st.integers(min_value=2, max_value=12),
       st.integers(min_value=1, max_value=40))
@settings(max_examples=60)
def test_cantor_number_enclosures_are_nested(b, terms):
    outer = cantor_number(b, terms)
    inner = cantor_number(b, terms + 1)
    assert outer.encloses(inner)


def test_cantor_number_validation():
    with pytest.raises(ValueError):
        cantor_number(1, 5)
    with pytest.raises(ValueError):
        cantor_number(2, 0)


def test_irrationality_estimates_base2():
    rows = irrationality_estimates(2, 5)
    assert [r.order for r in rows] == [1, 2, 3, 4, 5]
    first = rows[0]
    assert first.degenerate and first.q == 1 and first.note == "integer value"
    assert (rows[1].p, rows[1].q) == (4, 3)
    assert (rows[2].p, rows[2].q) == (5, 4)
    assert (rows[3].p, rows[3].q) == (24, 19)
    for row in rows[1:]:
        assert not row.degenerate
        assert row.exponent_lo <= row.exponent_hi
        assert row.exponent_hi - row.exponent_lo < 0.01


def test_irrationality_known_windows():
    rows = irrationality_estimates(2, 3)
    assert rows[1].exponent_lo <= 2.50502 <= rows[1].exponent_hi
    assert rows[2].exponent_lo <= 2.838857 <= rows[2].exponent_hi


def test_irrationality_envelope():
    for b in (2, 3):
        for row in irrationality_estimates(b, 10):
            if row.degenerate:
                continue
            assert 1.5 <= row.exponent_lo <= row.exponent_hi <= 3.5


def test_eta_identity_intervals():
    for b in (2, 3):
        report = eta_identity_check(b, 30)
        assert report.ok
        assert report.lhs.overlaps(report.rhs)
        combined = report.lhs.width + report.rhs.width
        assert combined < Fraction(1, b) ** 28


def test_eta_value_base2():
    # 2.347680464395 sits strictly inside both depth-30 enclosures.
    pinned = Fraction(2347680464395, 10 ** 12)
    report = eta_identity_check(2, 30)
    assert report.lhs.contains(pinned)
    assert report.rhs.contains(pinned)


def test_eta_validation():
    with pytest.raises(ValueError):
        eta_identity_check(1, 30)
    with pytest.raises(ValueError):
        eta_identity_check(2, 2)
