import pytest

from nilpoisson.exterior import MixedElement, form_gen, vec_gen
from nilpoisson.lambda_parser import LambdaExpr, LambdaParseError, expr_from_element, parse_lambda
from nilpoisson.scalars import GR_ONE, Rational, gauss


def test_basic_two_terms():
    e = parse_lambda("2 v1^v4 - v2^v3")
    assert e.terms == (
        (1, 4, gauss(2)),
        (2, 3, gauss(-1)),
    )


def test_coefficient_forms():
    assert parse_lambda("i v1^v2").terms == ((1, 2, gauss(0, 1)),)
    assert parse_lambda("-i v1^v2").terms == ((1, 2, gauss(0, -1)),)
    assert parse_lambda("3/4 v1^v2").terms == ((1, 2, gauss(Rational(3, 4))),)
    assert parse_lambda("5/2i v1^v2").terms == ((1, 2, gauss(0, Rational(5, 2))),)
    assert parse_lambda("(1/2+3i) v2^v5").terms == ((2, 5, gauss(Rational(1, 2), 3)),)
    assert parse_lambda("(1-1/3i) v1^v2").terms == ((1, 2, gauss(1, Rational(-1, 3))),)


def test_leading_minus_and_spacing():
    assert parse_lambda("-v1^v2") == parse_lambda("  -  v1 ^ v2  ")
    assert parse_lambda("- 2 v1^v2").terms == ((1, 2, gauss(-2)),)


def test_reversed_wedge_normalizes():
    assert parse_lambda("v2^v1").terms == ((1, 2, gauss(-1)),)
    assert parse_lambda("3 v4^v2").terms == ((2, 4, gauss(-3)),)


def test_duplicate_terms_merge():
    e = parse_lambda("1/2 v1^v3 + 1/2 v1^v3")
    assert e.terms == ((1, 3, GR_ONE),)
    z = parse_lambda("v1^v2 - v1^v2")
    assert z.terms == ()
    assert str(z) == "0"


def test_round_trip_strings():
    for src in ("2 v1^v4 - v2^v3", "v3^v4", "-v1^v2", "i v1^v2 + 2 v2^v3", "(1/2+3i) v1^v5"):
        e = parse_lambda(src)
        assert parse_lambda(str(e)) == e


def test_parse_errors_carry_position():
    cases = {
        "": "position 0",
        "v1": "position 2",
        "v1^": "position 3",
        "v1^v1": "position 5",
        "2": "position 1",
        "v1^v2 +": "position 7",
        "q1^v2": "position 0",
        "v1^v2 x": "position 6",
    }
    for bad, where in cases.items():
        with pytest.raises(LambdaParseError) as err:
            parse_lambda(bad)
        assert where in str(err.value), bad


def test_degenerate_wedge_rejected():
    with pytest.raises(LambdaParseError, match="degenerate wedge"):
        parse_lambda("v3^v3")


def test_bind_range_checks():
    e = parse_lambda("v1^v9")
    with pytest.raises(LambdaParseError, match=r"v9 out of range 1\.\.4"):
        e.bind(4)
    lo = parse_lambda("v0^v2")
    with pytest.raises(LambdaParseError, match=r"v0 out of range"):
        lo.bind(4)
    bound = parse_lambda("2 v1^v4 - v2^v3").bind(4)
    assert bound.terms == {
        (vec_gen(1), vec_gen(4)): gauss(2),
        (vec_gen(2), vec_gen(3)): gauss(-1),
    }


def test_max_index():
    assert parse_lambda("v2^v5 - v3^v4").max_index() == 5
    assert LambdaExpr([]).max_index() == 0


def test_expr_from_element_round_trip():
    e = parse_lambda("2 v1^v4 - v2^v3")
    el = e.bind(4)
    assert expr_from_element(el) == e
    assert str(expr_from_element(el)) == "2 v1^v4 - v2^v3"


def test_expr_from_element_rejects_non_bivector():
    from nilpoisson.errors import UsageError

    with pytest.raises(UsageError):
        expr_from_element(MixedElement.term((vec_gen(1), form_gen(1)), GR_ONE))
    with pytest.raises(UsageError):
        expr_from_element(MixedElement.term((vec_gen(1),), GR_ONE))


def test_equality_and_hash():
    a = parse_lambda("v1^v2 + v3^v4")
    b = parse_lambda("v3^v4 + v1^v2")
    assert a == b
    assert hash(a) == hash(b)
    assert a != parse_lambda("v1^v2")
