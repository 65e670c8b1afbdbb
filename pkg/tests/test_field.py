from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternbch.errors import CapacityError, DomainError, UsageError
from ternbch.field import field_new, find_primitive_modulus, is_primitive, parse_modulus, prime_factors
from ternbch.poly import Poly3, poly_divmod


def slow_mul(ctx, x, y):
    """Schoolbook product of the digit polynomials reduced mod the modulus."""
    p = Poly3(ctx.digits(x)) * Poly3(ctx.digits(y))
    r = poly_divmod(p, ctx.modulus)[1]
    return sum(c * 3**i for i, c in enumerate(r.coeffs))


@pytest.mark.parametrize("m, coeffs", [
    (1, [1, 1]),
    (2, [2, 1, 1]),
    (3, [1, 2, 0, 1]),
    (4, [2, 1, 0, 0, 1]),
    (5, [1, 2, 0, 0, 0, 1]),
])
def test_default_modulus(m, coeffs):
    assert list(find_primitive_modulus(m).coeffs) == coeffs


def test_gf9_small_facts():
    ctx = field_new(2)
    assert ctx.exp_of(2) == 7
    assert ctx.trace(ctx.exp_of(1)) == 2
    assert ctx.primitive_check()
    assert ctx.alpha_order() == 8


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_mul_matches_schoolbook(m):
    ctx = field_new(m)
    for x in range(ctx.order):
        for y in range(0, ctx.order, max(1, ctx.order // 9)):
            assert ctx.mul(x, y) == slow_mul(ctx, x, y)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_trace_table_matches_frobenius_sum(m):
    ctx = field_new(m)
    for x in range(0, ctx.order, max(1, ctx.order // 200)):
        direct = 0
        y = x
        for _ in range(m):
            direct = ctx.add(direct, y)
            y = ctx.frobenius(y)
        assert direct < 3
        assert ctx.trace(x) == direct


@pytest.mark.parametrize("m", [2, 3, 4])
def test_trace_is_balanced(m):
    ctx = field_new(m)
    counts = [0, 0, 0]
    for x in range(ctx.order):
        counts[ctx.trace(x)] += 1
    assert counts == [3 ** (m - 1)] * 3


@given(st.integers(1, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms(m, data):
    ctx = field_new(m)
    x, y, z = (data.draw(st.integers(0, ctx.order - 1)) for _ in range(3))
    assert ctx.add(x, ctx.neg(x)) == 0
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    if x:
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.div(ctx.mul(x, y), x) == y
        assert ctx.pow(x, ctx.n) == 1
    assert ctx.trace(ctx.frobenius(x)) == ctx.trace(x)


def test_element_wrapper():
    ctx = field_new(3)
    a = ctx.alpha
    assert (a ** 26) == ctx.one
    assert a * a.inv() == ctx.one
    assert (a + a + a) == ctx.zero
    assert a.log() == 1
    with pytest.raises(UsageError):
        _ = a + field_new(2).alpha


def test_subfield_trace_and_quadratic_character():
    ctx = field_new(4)
    for x in range(ctx.order):
        y = ctx.subfield_trace(x, 2)
        assert ctx.in_subfield(y, 2)
        assert ctx.trace_from_subfield(y, 2) == ctx.trace(x)
    squares = {ctx.mul(x, x) for x in range(1, ctx.order)}
    assert all(ctx.is_square(x) == (x in squares) for x in range(1, ctx.order))
    with pytest.raises(UsageError):
        ctx.subfield_trace(1, 3)


def test_errors():
    with pytest.raises(CapacityError):
        field_new(17)
    with pytest.raises(DomainError):
        field_new(2, [1, 0, 1])  # x^2 + 1 is irreducible but not primitive
    with pytest.raises(DomainError):
        field_new(2, [1, 1])
    with pytest.raises(DomainError):
        field_new(2).log_of(0)
    with pytest.raises(DomainError):
        field_new(2).inv(0)


def test_modulus_override_changes_generator_not_field_size():
    alt = parse_modulus("2,2,1")
    assert is_primitive(alt)
    ctx = field_new(2, alt)
    assert ctx.primitive_check() and ctx.n == 8


def test_prime_factors():
    assert prime_factors(80) == [2, 5]
    assert prime_factors(728) == [2, 7, 13]
