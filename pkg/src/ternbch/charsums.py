"""Exact additive character sums over GF(3^m).

With chi(x) = w^{Tr(x)} and w a primitive cube root of unity, every sum
of character values is N0 + N1 w + N2 w^2 where Nt counts the terms
whose trace is t.  Values are kept in Z[w] as :class:`EisensteinInt`;
nothing here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

import numpy as np

from .errors import CapacityError, DomainError, UsageError
from .field import FieldContext, field_new
from .parallel import merged_histogram


@dataclass(frozen=True)
class EisensteinInt:
    """a + b w with w^2 = -1 - w."""

    a: int
    b: int = 0

    def __add__(self, other: EisensteinInt | int) -> EisensteinInt:
        o = _lift(other)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: EisensteinInt | int) -> EisensteinInt:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> EisensteinInt:
        return _lift(other) - self

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        o = _lift(other)
        return EisensteinInt(self.a * o.a - self.b * o.b,
                             self.a * o.b + self.b * o.a - self.b * o.b)

    __rmul__ = __mul__

    def conjugate(self) -> EisensteinInt:
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_real(self) -> bool:
        return self.b == 0

    def __int__(self) -> int:
        if self.b:
            raise ValueError(f"{self} is not a rational integer")
        return self.a

    def to_json(self) -> dict:
        return {"value": self.a} if self.b == 0 else {"value": self.a, "omega": self.b}

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = "ω" if abs(self.b) == 1 else f"{abs(self.b)}ω"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + w
        return f"{self.a}{'-' if self.b < 0 else '+'}{w}"


def _lift(x: EisensteinInt | int) -> EisensteinInt:
    return x if isinstance(x, EisensteinInt) else EisensteinInt(int(x), 0)


def omega_power(t: int) -> EisensteinInt:
    return (EisensteinInt(1), EisensteinInt(0, 1), EisensteinInt(-1, -1))[t % 3]


@dataclass(frozen=True)
class TraceCounts:
    n0: int
    n1: int
    n2: int

    @classmethod
    def of(cls, traces: Iterable[int] | np.ndarray) -> TraceCounts:
        c = np.bincount(np.asarray(list(traces) if not isinstance(traces, np.ndarray) else traces,
                                   dtype=np.int64) % 3, minlength=3)
        return cls(int(c[0]), int(c[1]), int(c[2]))

    @property
    def total(self) -> int:
        return self.n0 + self.n1 + self.n2

    def value(self) -> EisensteinInt:
        return EisensteinInt(self.n0 - self.n2, self.n1 - self.n2)


def chi(ctx: FieldContext, x: int) -> EisensteinInt:
    return omega_power(ctx.trace(x))


def additive_char_sum(f: Callable[[int], int], domain: Iterable[int], ctx: FieldContext) -> EisensteinInt:
    """sum_{x in domain} chi(f(x)); f maps packed elements to packed elements."""
    return TraceCounts.of(ctx.trace(f(x)) for x in domain).value()


def gauss_quadratic(s: int) -> EisensteinInt:
    """G(eta, chi) over GF(3^s), eta the quadratic character.

    (-1)^{s-1} i^s 3^{s/2}.  For odd s this is +-3^{(s-1)/2} i sqrt(3),
    and i sqrt(3) = 1 + 2w, so the value is still exact in Z[w].
    """
    if s < 1:
        raise DomainError("s must be positive")
    if s % 2 == 0:
        sign = (-1) ** (s - 1) * (-1) ** (s // 2)
        return EisensteinInt(sign * 3 ** (s // 2))
    sign = (-1) ** ((s - 1) // 2)
    return EisensteinInt(1, 2) * (sign * 3 ** ((s - 1) // 2))


def gauss_quadratic_direct(ctx: FieldContext) -> EisensteinInt:
    """sum_{x != 0} eta(x) chi(x) by direct tabulation."""
    tr = ctx.trace_of_power
    return TraceCounts.of(tr[0::2]).value() - TraceCounts.of(tr[1::2]).value()


def power_sum_identity_check(a: int, b: int, exponent: int, ctx: FieldContext) -> bool:
    """sum_{x in GF(q)} chi(a x^e + b) == chi(b) eta(a) G(eta, chi) when gcd(e, q-1) = 2."""
    if a == 0:
        raise DomainError("a must be nonzero")
    if gcd(exponent, ctx.n) != 2:
        raise UsageError("only the quadratic case gcd(e, q - 1) = 2 is supported")
    lhs = additive_char_sum(lambda x: ctx.add(ctx.mul(a, ctx.pow(x, exponent)), b),
                            range(ctx.order), ctx)
    rhs = chi(ctx, b) * ctx.quadratic_character(a) * gauss_quadratic(ctx.m)
    return lhs == rhs


def _trace_vectors(ctx: FieldContext, x: int, shift: int) -> np.ndarray:
    """Tr(x * alpha^(shift * j)) for j = 0..n-1."""
    n = ctx.n
    if x == 0:
        return np.zeros(n, np.int8)
    return ctx.trace_of_power[(ctx.log_of(x) + shift * np.arange(n)) % n]


def kloosterman_sum(a: int, b: int, ctx: FieldContext) -> EisensteinInt:
    t = (_trace_vectors(ctx, a, 1) + _trace_vectors(ctx, b, -1)) % 3
    return TraceCounts.of(t).value()


def kloosterman(a: int, b: int, ctx: FieldContext) -> int:
    """K_m(a, b) = sum_{x != 0} chi(a x + b / x), a rational integer."""
    k = kloosterman_sum(a, b, ctx)
    if not k.is_real():
        raise AssertionError(f"Kloosterman sum K({a}, {b}) = {k} is not real")
    return k.a


def kloosterman_weight_bridge(a: int, b: int, ctx: FieldContext) -> int:
    """Hamming weight of the codeword (Tr(a x + b/x))_x predicted from K(a, b)."""
    if ctx.m % 2 == 0:
        raise DomainError("the weight bridge is stated for odd m")
    if a == 0 and b == 0:
        raise DomainError("(a, b) must be nonzero")
    num = 2 * ctx.n - 2 * kloosterman(a, b, ctx)
    if num % 3:
        raise AssertionError(f"2n - 2K is not divisible by 3 at ({a}, {b})")
    return num // 3


def codeword_weight_direct(a: int, b: int, ctx: FieldContext) -> int:
    """Weight of (Tr(a x + b x^-1))_{x != 0} with scalar field arithmetic."""
    return sum(
        1 for x in range(1, ctx.order)
        if ctx.trace(ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.inv(x))))
    )


def kloosterman_bound(m: int) -> int:
    return (3**m + 2 * 3 ** (m - 1) - 1) // 4


def _kloosterman_hist(start: int, stop: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Histogram of K + n over rows left[start:stop] x right."""
    n = right.shape[1]
    hist = np.zeros(2 * n + 1, np.int64)
    for u in left[start:stop]:
        s = (right + u) % 3
        n1 = np.count_nonzero(s == 1, axis=1)
        n2 = np.count_nonzero(s == 2, axis=1)
        if not np.array_equal(n1, n2):
            raise AssertionError("non-real Kloosterman sum encountered")
        k = n - n1 - 2 * n2
        hist += np.bincount(k + n, minlength=2 * n + 1)
    return hist


def kloosterman_table(ctx: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    n = ctx.n
    j = np.arange(n)
    la = np.asarray(ctx.log[1:])
    left = np.zeros((ctx.order, n), np.int8)
    right = np.zeros((ctx.order, n), np.int8)
    left[1:] = ctx.trace_of_power[(la[:, None] + j) % n]
    right[1:] = ctx.trace_of_power[(la[:, None] - j) % n]
    return left, right


def kloosterman_distribution(ctx: FieldContext, workers: int = 1) -> dict[int, int]:
    """value -> number of pairs (a, b) != (0, 0) with K(a, b) = value."""
    left, right = kloosterman_table(ctx)
    hist = merged_histogram(_kloosterman_hist, ctx.order, (left, right), workers)
    hist[2 * ctx.n] -= 1  # the (0, 0) pair contributes K = n
    return {int(v) - ctx.n: int(c) for v, c in enumerate(hist) if c}


@dataclass(frozen=True)
class KloostermanScan:
    m: int
    max_value: int
    bound: int
    passed: bool
    gap: int
    argmax: tuple[int, int]

    def to_dict(self) -> dict:
        return {"m": self.m, "max": self.max_value, "bound": self.bound, "passed": self.passed,
                "gap": self.gap, "argmax": list(self.argmax)}


MAX_SCAN_DEGREE = 5


def kloosterman_bound_scan(m: int, force: bool = False, workers: int = 1,
                           ctx: FieldContext | None = None) -> KloostermanScan:
    """Largest K_m(a, b) over (a, b) != (0, 0) against (3^m + 2*3^(m-1) - 1)/4."""
    if m % 2 == 0:
        raise DomainError("the Kloosterman bound is stated for odd m")
    if m > MAX_SCAN_DEGREE and not force:
        raise CapacityError(f"scan over 3^{2 * m} pairs needs --force above m = {MAX_SCAN_DEGREE}")
    ctx = ctx or field_new(m)
    dist = kloosterman_distribution(ctx, workers)
    top = max(dist)
    bound = kloosterman_bound(m)
    return KloostermanScan(m, top, bound, top <= bound, bound - top, _argmax(ctx, top))


def _argmax(ctx: FieldContext, value: int) -> tuple[int, int]:
    """Lexicographically first (a, b) != (0, 0) with K(a, b) = value."""
    left, right = kloosterman_table(ctx)
    n = ctx.n
    for a in range(ctx.order):
        s = (right + left[a]) % 3
        k = n - np.count_nonzero(s == 1, axis=1) - 2 * np.count_nonzero(s == 2, axis=1)
        if a == 0:
            k[0] = value - 1
        hits = np.flatnonzero(k == value)
        if hits.size:
            return a, int(hits[0])
    raise AssertionError("maximum not found")  # pragma: no cover
