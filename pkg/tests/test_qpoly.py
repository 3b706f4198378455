import json

import pytest

from synchq.qpoly import (INT128_MAX, ONE, ZERO, ArithmeticOverflow, QPoly, ZQLaurent,
                          format_poly, qp_add, qp_mul, qp_truncate, zq_derivative,
                          zq_eval_z1, zq_mul)
from oracles import dense_add, dense_mul, strip

P = QPoly.from_coeffs


def test_add_cancellation():
    assert qp_add(P([1, -1]), P([0, 1])) == ONE


def test_add_identity():
    p = P([3, 0, -2, 5])
    assert qp_add(ZERO, p) == p


def test_add_matches_coefficient_oracle():
    a, b = [1, -1, -1, 1], [1, -1]
    assert qp_add(P(a), P(b)) == P([2, -2, -1, 1]) == P(dense_add(a, b))


def test_mul_difference_of_squares():
    assert qp_mul(P([1, -1]), P([1, 1])) == P([1, 0, -1])


def test_mul_identity():
    p = P([0, 4, 0, -7])
    assert qp_mul(p, ONE) == p


def test_mul_triple_product_against_convolution():
    f = [[1, -1], [1, 0, -1], [1, 0, 0, -1]]
    expected = dense_mul(dense_mul(f[0], f[1]), f[2])
    assert expected == [1, -1, -1, 0, 1, 1, -1]
    assert qp_mul(qp_mul(P(f[0]), P(f[1])), P(f[2])) == P(expected)


@pytest.mark.parametrize("poly, n, expected", [
    ([1, -1, -1, 1], 1, [1, -1]),
    ([1, 0, -1, 0, 0, 1], 3, [1, 0, -1]),
])
def test_truncate(poly, n, expected):
    assert qp_truncate(P(poly), n) == P(expected)


def test_truncate_at_degree_is_noop():
    p = P([1, 2, 0, 4])
    assert qp_truncate(p, p.degree()) == p


def test_canonical_form_drops_zeros():
    p = QPoly({0: 1, 3: 0, 5: 2})
    assert p.terms == {0: 1, 5: 2}
    assert P([1, 1]) - P([1, 1]) == ZERO
    assert ZERO.degree() is None


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        QPoly({-1: 1})


def test_overflow_detected():
    big = QPoly.constant(INT128_MAX)
    with pytest.raises(ArithmeticOverflow):
        big + ONE
    with pytest.raises(ArithmeticOverflow):
        big * QPoly.constant(2)
    with pytest.raises(ArithmeticOverflow):
        QPoly.constant(INT128_MAX + 1)
    assert (-big - ONE).coeff(0) == -(1 << 127)


def test_json_roundtrip_uses_strings():
    p = QPoly({0: 1, 7: -(10**30)})
    obj = p.to_json()
    assert obj == {"terms": [[0, "1"], [7, "-" + "1" + "0" * 30]]}
    assert QPoly.from_json(json.loads(json.dumps(obj))) == p


def test_format():
    assert format_poly(P([1, -2, 0, 2, -1])) == "1 - 2*q + 2*q^3 - q^4"
    assert format_poly(P([0, -1])) == "-q"
    assert format_poly(ZERO) == "0"


def L(d):
    return ZQLaurent({k: QPoly(v) for k, v in d.items()})


M11 = L({0: {0: 1, 1: 1}, -1: {0: -1}, 1: {1: -1}})  # 1 + q - 1/z - zq


def test_zq_mul_macmahon_1_1():
    one_minus_zq = L({0: {0: 1}, 1: {1: -1}})
    one_minus_zinv = L({0: {0: 1}, -1: {0: -1}})
    assert zq_mul(one_minus_zq, one_minus_zinv) == M11


def test_zq_identities():
    assert zq_mul(M11, L({0: {0: 1}})) == M11
    assert zq_mul(L({1: {0: 1}}), L({-1: {0: 1}})) == L({0: {0: 1}})


def test_zq_derivative():
    assert zq_derivative(L({2: {0: 1}})) == L({1: {0: 2}})
    assert zq_derivative(L({0: {0: 3, 2: 1}})).is_zero()
    assert zq_derivative(M11) == L({-2: {0: 1}, 0: {1: -1}})


def test_zq_eval_z1():
    assert zq_eval_z1(M11) == ZERO
    assert zq_eval_z1(ZQLaurent()) == ZERO
    assert zq_eval_z1(L({-2: {0: 1}, 0: {1: -1}})) == P([1, -1])


def test_zq_json_roundtrip():
    assert ZQLaurent.from_json(json.loads(json.dumps(M11.to_json()))) == M11
