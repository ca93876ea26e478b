import random
from fractions import Fraction

import pytest

from qtsym.ratfun import (
    SYMBOLIC,
    DivisionByZero,
    IntPoly2,
    NumericField,
    ParseError,
    PoleAtSpecialization,
    P_ONE,
    P_Q,
    P_T,
    RatFun,
    R_ONE,
    R_Q,
    R_T,
    R_ZERO,
    format_ratfun,
    parse_ratfun,
    poly_gcd,
    random_point,
)

ONE = P_ONE
Q = P_Q
T = P_T


def poly(s):
    r = parse_ratfun(s)
    assert r.den == ONE
    return r.num


def test_poly_mul_difference_of_squares():
    assert poly("1-t") * poly("1+t") == poly("1-t^2")


def test_poly_add_inverse_is_zero():
    z = Q + (-Q)
    assert not z
    assert z.terms == {}


def test_poly_mul_distributes():
    assert poly("1-q") * poly("1-t") == poly("1-q-t+q*t")


def test_ratfun_div_cancels():
    r = parse_ratfun("(1-t^2)/(1-t)")
    assert r == parse_ratfun("1+t")


def test_ratfun_add_common_denominator():
    r = parse_ratfun("(1-q)/(1-t)") + parse_ratfun("(q-q^2)/(1-t)")
    assert r == parse_ratfun("(1-q^2)/(1-t)")


def test_ratfun_mul_inverse_pair():
    r = parse_ratfun("(1-t)/(1-q*t)") * parse_ratfun("(1-q*t)/(1-t)")
    assert r.is_one()


def test_normalize_cancels_gcd():
    num = poly("1-t^2")
    den = poly("(1-t)*(1-q*t)")
    r = RatFun(num, den)
    assert r == parse_ratfun("(1+t)/(1-q*t)")


def test_normalize_sign():
    r = RatFun(IntPoly2.const(-1) * Q, IntPoly2.const(-1))
    assert r == R_Q
    assert r.den == ONE


def test_normalize_zero_numerator():
    r = RatFun(IntPoly2.const(0), poly("1-t"))
    assert r == R_ZERO
    assert r.den == ONE


def test_specialize_q_zero():
    r = parse_ratfun("(1+q)*(1-t)/(1-q*t)")
    assert r.specialize(q=0) == parse_ratfun("1-t")


def test_specialize_to_zero():
    r = parse_ratfun("(1+q)*(1-t)/(1-q*t)")
    assert r.specialize(t=1) == R_ZERO


def test_specialize_pole():
    r = parse_ratfun("(1-q)/(1-t)")
    with pytest.raises(PoleAtSpecialization):
        r.specialize(t=1)


def test_specialize_rational_point():
    r = parse_ratfun("(1-q)/(1-t)")
    v = r.specialize(q=Fraction(1, 2), t=Fraction(1, 3))
    assert v == RatFun.from_fraction(Fraction(3, 4))


def test_parse_basic():
    r = parse_ratfun("(1-t)/(1-q*t)")
    assert r.num == poly("1-t")
    assert r.den == poly("1-q*t")


def test_format_fixed_order():
    r = RatFun(poly("q^2-1"), ONE)
    assert format_ratfun(r) == "(-1+q^2)"


def test_parse_division_by_zero_literal():
    with pytest.raises((ParseError, DivisionByZero)):
        parse_ratfun("1/(0)")


def test_parse_error_position():
    with pytest.raises(ParseError):
        parse_ratfun("1 + #")
    with pytest.raises(ParseError):
        parse_ratfun("(1+q")


def test_power_and_unary_minus():
    assert parse_ratfun("-q^2") == -(R_Q * R_Q)
    assert parse_ratfun("q^-1") == R_ONE / R_Q
    assert parse_ratfun("2*q^2*t") == RatFun.from_int(2) * R_Q ** 2 * R_T


def _random_poly(rng, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = (rng.randint(0, max_deg), rng.randint(0, max_deg))
        terms[e] = terms.get(e, 0) + rng.randint(-5, 5)
    return IntPoly2.from_terms(terms)


def _random_ratfun(rng):
    num = _random_poly(rng)
    den = _random_poly(rng)
    while not den:
        den = _random_poly(rng)
    return RatFun(num, den)


def test_field_axioms_randomized():
    rng = random.Random(20260809)
    for _ in range(60):
        a, b, c = (_random_ratfun(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if a:
            assert a * (R_ONE / a) == R_ONE
        assert a + (-a) == R_ZERO


def test_normalize_idempotent():
    rng = random.Random(7)
    for _ in range(40):
        r = _random_ratfun(rng)
        again = RatFun(r.num, r.den)
        assert again.num == r.num and again.den == r.den


def test_format_parse_round_trip():
    rng = random.Random(99)
    for _ in range(60):
        r = _random_ratfun(rng)
        assert parse_ratfun(format_ratfun(r)) == r


def test_evaluation_homomorphism():
    rng = random.Random(4242)
    pts = [(Fraction(2, 3), Fraction(5, 7)), (Fraction(-3, 2), Fraction(4, 5))]
    for _ in range(40):
        a = _random_ratfun(rng)
        b = _random_ratfun(rng)
        for qv, tv in pts:
            try:
                av, bv = a.evaluate(qv, tv), b.evaluate(qv, tv)
                s = (a + b).evaluate(qv, tv)
                m = (a * b).evaluate(qv, tv)
            except PoleAtSpecialization:
                continue
            assert s == av + bv
            assert m == av * bv


def test_gcd_known_factor():
    a = poly("(1-t)*(1-q*t)")
    b = poly("(1-t)*(1+q)")
    assert poly_gcd(a, b) == poly("1-t")


def test_gcd_of_random_products():
    rng = random.Random(31415)
    for _ in range(25):
        g = _random_poly(rng)
        a = _random_poly(rng)
        b = _random_poly(rng)
        if not (g and a and b):
            continue
        h = poly_gcd(a * g, b * g)
        expected = poly_gcd(a, b) * g
        if expected.leading()[1] < 0:
            expected = -expected
        # h is a multiple of g times gcd(a, b); with random a, b the cofactor
        # gcd is almost always trivial, so check divisibility both ways
        from qtsym.ratfun import poly_divexact

        quotient = poly_divexact(h, poly_gcd(h, expected))
        assert quotient.is_const() or poly_gcd(h, expected) == expected


def test_remainder_sequence_fallback_agrees():
    # the fallback remainder sequence must reproduce the primary route's gcd
    from qtsym.ratfun import (
        IntPoly2 as IP,
        _b_content,
        _b_divground,
        _b_gcd_prs,
        _b_smul,
        _from_rec,
        _to_rec,
        _u_gcd,
    )

    rng = random.Random(27182)
    checked = 0
    for _ in range(30):
        g = _random_poly(rng)
        a = _random_poly(rng)
        b = _random_poly(rng)
        if not (g and a and b):
            continue
        x, y = a * g, b * g
        if x.max_deg_q() == 0 or y.max_deg_q() == 0:
            continue
        xr, yr = _to_rec(x.terms), _to_rec(y.terms)
        cf, cg = _b_content(xr), _b_content(yr)
        h = _b_gcd_prs(_b_divground(xr, cf), _b_divground(yr, cg))
        via_prs = IP(_from_rec(_b_smul(h, _u_gcd(cf, cg))))
        if via_prs.leading()[1] < 0:
            via_prs = -via_prs
        assert via_prs == poly_gcd(x, y)
        checked += 1
    assert checked >= 10


def test_numeric_field_point():
    rng = random.Random(1)
    f = random_point(rng)
    assert isinstance(f, NumericField)
    assert f.q != f.t
    assert f.from_int(3) == Fraction(3)
    assert SYMBOLIC.is_symbolic and not f.is_symbolic
