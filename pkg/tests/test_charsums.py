from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ternbch.charsums import (
    EisensteinInt,
    TraceCounts,
    additive_char_sum,
    codeword_weight_direct,
    gauss_quadratic,
    gauss_quadratic_direct,
    kloosterman,
    kloosterman_bound,
    kloosterman_bound_scan,
    kloosterman_distribution,
    kloosterman_weight_bridge,
    omega_power,
    power_sum_identity_check,
)
from ternbch.errors import CapacityError, DomainError, UsageError
from ternbch.field import field_new

eis = st.builds(EisensteinInt, st.integers(-50, 50), st.integers(-50, 50))


@given(eis, eis, eis)
def test_eisenstein_ring(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * x.conjugate()).is_real()


def test_omega():
    w = omega_power(1)
    assert w * w * w == EisensteinInt(1)
    assert 1 + w + w * w == EisensteinInt(0)
    assert str(EisensteinInt(1, 2)) == "1+2ω"


@pytest.mark.parametrize("s, expected", [(1, EisensteinInt(1, 2)), (2, EisensteinInt(3)),
                                         (4, EisensteinInt(-9)), (6, EisensteinInt(27))])
def test_gauss_values(s, expected):
    assert gauss_quadratic(s) == expected
    assert gauss_quadratic_direct(field_new(s)) == expected


def test_gauss_norm():
    for s in range(1, 8):
        assert gauss_quadratic(s).norm() == 3**s


def naive_kloosterman(a, b, ctx):
    counts = [0, 0, 0]
    for x in range(1, ctx.order):
        counts[ctx.trace(ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.inv(x))))] += 1
    v = TraceCounts(*counts).value()
    assert v.is_real()
    return v.a


@pytest.mark.parametrize("m", [1, 2, 3])
def test_kloosterman_matches_naive(m):
    ctx = field_new(m)
    for a in range(ctx.order):
        for b in range(ctx.order):
            assert kloosterman(a, b, ctx) == naive_kloosterman(a, b, ctx)


def test_kloosterman_distribution_total():
    ctx = field_new(3)
    dist = kloosterman_distribution(ctx)
    assert sum(dist.values()) == 27 * 27 - 1
    assert sum(dist.values()) == sum(kloosterman_distribution(ctx, workers=2).values())
    assert dist == kloosterman_distribution(ctx, workers=2)


def test_kloosterman_special_values():
    ctx = field_new(3)
    assert kloosterman(1, 0, ctx) == -1
    assert kloosterman(0, 0, ctx) == 26


def test_bound_scan():
    assert kloosterman_bound(3) == 11
    assert kloosterman_bound_scan(3).passed
    r = kloosterman_bound_scan(1)
    assert (r.max_value, r.bound, r.argmax) == (2, 1, (1, 2))
    with pytest.raises(DomainError):
        kloosterman_bound_scan(2)
    with pytest.raises(CapacityError):
        kloosterman_bound_scan(7)


def test_bridge_small():
    ctx = field_new(3)
    assert kloosterman_weight_bridge(1, 1, ctx) == codeword_weight_direct(1, 1, ctx)
    with pytest.raises(DomainError):
        kloosterman_weight_bridge(0, 0, ctx)
    with pytest.raises(DomainError):
        kloosterman_weight_bridge(1, 1, field_new(2))


def test_additive_sum_and_power_identity_errors():
    ctx = field_new(2)
    assert additive_char_sum(lambda x: x, range(9), ctx) == EisensteinInt(0)
    with pytest.raises(DomainError):
        power_sum_identity_check(0, 1, 2, ctx)
    with pytest.raises(UsageError):
        power_sum_identity_check(1, 1, 3, field_new(3))
