from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternbch.errors import DomainError, UsageError
from ternbch.field import field_new
from ternbch.poly import (
    Poly3,
    coset_leaders_of,
    generator_from_defining_set,
    is_self_reciprocal,
    minimal_polynomial,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    reciprocal,
)

coeff_lists = st.lists(st.integers(0, 2), max_size=12)


@given(coeff_lists, coeff_lists)
@settings(max_examples=100, deadline=None)
def test_division_identity(a, b):
    A, B = Poly3(a), Poly3(b)
    if B.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(A, B)
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@given(coeff_lists, coeff_lists)
@settings(max_examples=100, deadline=None)
def test_gcd_lcm(a, b):
    A, B = Poly3(a), Poly3(b)
    if A.is_zero() or B.is_zero():
        return
    g = poly_gcd(A, B)
    assert g.is_monic()
    assert (A % g).is_zero() and (B % g).is_zero()
    assert poly_lcm(A, B).degree == A.degree + B.degree - g.degree


def test_str_and_eval():
    f = Poly3([2, 1, 1])
    assert str(f) == "x^2 + x + 2"
    assert f(1) == 1 and f(0) == 2
    assert Poly3().degree == -1


def test_reciprocal():
    assert reciprocal(Poly3([2, 1, 1])) == Poly3([1, 1, 2]).monic()
    assert is_self_reciprocal(Poly3([1, 1]))
    with pytest.raises(DomainError):
        reciprocal(Poly3([0, 1]))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_minimal_polynomial_vanishes_and_irreducible(m):
    ctx = field_new(m)
    for x in range(1, ctx.order):
        f = minimal_polynomial(x, ctx)
        acc = 0
        for c in reversed(f.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        assert acc == 0
        # no factor of degree <= deg/2 (brute force over monic polynomials)
        for d in range(1, f.degree // 2 + 1):
            for low in itertools.product(range(3), repeat=d):
                assert not (f % Poly3(list(low) + [1])).is_zero()


def test_generator_divides_x_n_minus_one():
    ctx = field_new(3)
    Z = {1, 3, 9, 13}
    g = generator_from_defining_set(Z, ctx)
    assert g.degree == 4
    assert poly_divmod(Poly3.x_n_minus_one(26), g)[1].is_zero()
    for s in Z:
        acc = 0
        a = ctx.exp_of(s)
        for c in reversed(g.coeffs):
            acc = ctx.add(ctx.mul(acc, a), c)
        assert acc == 0


def test_coset_leaders_requires_closed_set():
    assert coset_leaders_of({1, 3, 9}, 26) == [1]
    with pytest.raises(UsageError):
        coset_leaders_of({1, 3}, 26)
