"""Arithmetic in GF(3^m) through log/antilog tables.

An element sum c_i alpha^i (polynomial basis, alpha a root of the
modulus) is packed as the integer sum c_i 3^i, so the prime field
F_3 = {0, 1, 2} packs to itself.  Multiplication, inversion and powers
go through the tables; addition is digitwise mod 3.

The modulus is, unless overridden, the first primitive monic degree-m
polynomial when candidates are scanned in ascending order of the
integer sum c_i 3^i of their non-leading coefficients.  Weight
distributions and coset structure do not depend on this choice, but
generator-polynomial coefficients do.
"""

from __future__ import annotations

import functools
from typing import Sequence

import numpy as np

from .errors import CapacityError, DomainError, UsageError
from .poly import Poly3, poly_powmod

MAX_DEGREE = 16


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive(f: Poly3) -> bool:
    """True iff f is monic and x has multiplicative order 3^deg(f) - 1 modulo f."""
    m = f.degree
    if m < 1 or not f.is_monic() or f.constant() == 0:
        return False
    n = 3**m - 1
    x = Poly3([0, 1])
    one = Poly3([1])
    if poly_powmod(x, n, f) != one:
        return False
    return all(poly_powmod(x, n // p, f) != one for p in prime_factors(n))


def find_primitive_modulus(m: int) -> Poly3:
    for code in range(3**m):
        low = [(code // 3**i) % 3 for i in range(m)]
        f = Poly3(low + [1])
        if is_primitive(f):
            return f
    raise AssertionError(f"no primitive polynomial of degree {m}")  # pragma: no cover


def _antilog_table(m: int, low: Sequence[int]) -> np.ndarray:
    """Packed values of alpha^k for k = 0..n-1.

    Digit vectors are row vectors; multiplication by alpha is the
    companion matrix C.  A block of B consecutive powers is advanced by
    C^B at a time.
    """
    n = 3**m - 1
    C = np.zeros((m, m), np.int64)
    for i in range(m - 1):
        C[i, i + 1] = 1
    C[m - 1, :] = [(-c) % 3 for c in low]
    B = min(n, 3 ** ((m + 1) // 2))
    first = np.zeros((B, m), np.int64)
    v = np.zeros(m, np.int64)
    v[0] = 1
    for k in range(B):
        first[k] = v
        v = (v @ C) % 3
    step = np.eye(m, dtype=np.int64)
    sq, e = C.copy(), B
    while e:
        if e & 1:
            step = (step @ sq) % 3
        sq = (sq @ sq) % 3
        e >>= 1
    pow3 = 3 ** np.arange(m, dtype=np.int64)
    exp = np.empty(n, np.int64)
    M = np.eye(m, dtype=np.int64)
    for start in range(0, n, B):
        cnt = min(B, n - start)
        exp[start:start + cnt] = ((first[:cnt] @ M) % 3) @ pow3
        M = (M @ step) % 3
    return exp


class FieldContext:
    """GF(3^m) with tables built once; immutable afterwards."""

    def __init__(self, m: int, modulus: Poly3) -> None:
        self.m = m
        self.n = 3**m - 1
        self.order = 3**m
        self.modulus = modulus
        self._pow3 = [3**i for i in range(m)]
        exp = _antilog_table(m, modulus.coeffs[:m])
        log = np.full(self.order, -1, np.int64)
        log[exp] = np.arange(self.n)
        self.exp = exp
        self.log = log
        self._exp = exp.tolist()
        self._log = log.tolist()
        # trace is F_3-linear: Tr(sum c_i alpha^i) = sum c_i Tr(alpha^i)
        basis = [self._trace_direct(self._exp[i % self.n]) for i in range(m)]
        table = np.zeros(1, np.int8)
        for t in basis:
            table = np.concatenate([table, (table + t) % 3, (table + 2 * t) % 3]).astype(np.int8)
        self.trace_table = table
        self.trace_of_power = table[exp]
        for arr in (self.exp, self.log, self.trace_table, self.trace_of_power):
            arr.setflags(write=False)

    def __repr__(self) -> str:
        return f"FieldContext(m={self.m}, modulus={list(self.modulus.coeffs)})"

    # -- element helpers -------------------------------------------------
    def element(self, value: int) -> Element:
        if not 0 <= value < self.order:
            raise DomainError(f"{value} does not encode an element of GF(3^{self.m})")
        return Element(self, value)

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, 1)

    @property
    def alpha(self) -> Element:
        return Element(self, self._exp[1 % self.n])

    def digits(self, x: int) -> list[int]:
        return [(x // p) % 3 for p in self._pow3]

    def exp_of(self, e: int) -> int:
        return self._exp[e % self.n]

    def log_of(self, x: int) -> int:
        if x == 0:
            raise DomainError("log of zero")
        return self._log[x]

    # -- scalar arithmetic on packed ints ---------------------------------
    def add(self, x: int, y: int) -> int:
        r = 0
        p = 1
        while x or y:
            r += (x % 3 + y % 3) % 3 * p
            x //= 3
            y //= 3
            p *= 3
        return r

    def neg(self, x: int) -> int:
        r = 0
        p = 1
        while x:
            r += (-(x % 3)) % 3 * p
            x //= 3
            p *= 3
        return r

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % self.n]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DomainError("zero has no inverse")
        return self._exp[-self._log[x] % self.n]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise DomainError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[x] * e % self.n]

    def frobenius(self, x: int, k: int = 1) -> int:
        """x^(3^k)."""
        if x == 0:
            return 0
        return self._exp[self._log[x] * pow(3, k, self.n) % self.n]

    def _trace_direct(self, x: int) -> int:
        acc = 0
        for i in range(self.m):
            acc = self.add(acc, self.frobenius(x, i))
        assert acc < 3, "absolute trace must lie in F_3"
        return acc

    def trace(self, x: int) -> int:
        return int(self.trace_table[x])

    def subfield_trace(self, x: int, d: int) -> int:
        """Tr_{3^m/3^d}(x) = sum_{i < m/d} x^(3^(d i))."""
        if d < 1 or self.m % d:
            raise UsageError(f"{d} does not divide m={self.m}")
        acc = 0
        for i in range(self.m // d):
            acc = self.add(acc, self.frobenius(x, d * i))
        return acc

    def in_subfield(self, y: int, d: int) -> bool:
        return self.frobenius(y, d) == y

    def trace_from_subfield(self, y: int, d: int) -> int:
        """Tr_{3^d/3}(y) for y in the subfield GF(3^d)."""
        if d < 1 or self.m % d:
            raise UsageError(f"{d} does not divide m={self.m}")
        if not self.in_subfield(y, d):
            raise DomainError(f"{y} is not in GF(3^{d})")
        acc = 0
        for i in range(d):
            acc = self.add(acc, self.frobenius(y, i))
        return acc

    def is_square(self, x: int) -> bool:
        if x == 0:
            raise DomainError("squareness is only defined for nonzero elements")
        return self._log[x] % 2 == 0

    def quadratic_character(self, x: int) -> int:
        return 1 if self.is_square(x) else -1

    def primitive_check(self) -> bool:
        """alpha^n = 1 and no smaller positive power is 1."""
        if self.mul(self._exp[self.n - 1], self._exp[1 % self.n]) != 1:
            return False
        return int(np.unique(self.exp).size) == self.n and int(self.exp[0]) == 1

    def alpha_order(self) -> int:
        hits = np.flatnonzero(self.exp[1:] == 1)
        return int(hits[0]) + 1 if hits.size else self.n


class Element:
    """A packed GF(3^m) value bound to its context."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int) -> None:
        self.ctx = ctx
        self.value = int(value)

    def _other(self, other: object) -> int:
        if not isinstance(other, Element):
            raise UsageError(f"expected a field element, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise UsageError("operands belong to different field contexts")
        return other.value

    def __add__(self, other: Element) -> Element:
        return Element(self.ctx, self.ctx.add(self.value, self._other(other)))

    def __sub__(self, other: Element) -> Element:
        return Element(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other: Element) -> Element:
        return Element(self.ctx, self.ctx.mul(self.value, self._other(other)))

    def __truediv__(self, other: Element) -> Element:
        return Element(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self) -> Element:
        return Element(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int) -> Element:
        return Element(self.ctx, self.ctx.pow(self.value, e))

    def inv(self) -> Element:
        return Element(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def subfield_trace(self, d: int) -> Element:
        return Element(self.ctx, self.ctx.subfield_trace(self.value, d))

    def is_square(self) -> bool:
        return self.ctx.is_square(self.value)

    def log(self) -> int:
        return self.ctx.log_of(self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.ctx is other.ctx and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.value))

    def __repr__(self) -> str:
        return f"Element({self.value}, m={self.ctx.m})"


def parse_modulus(text: str) -> Poly3:
    """Parse ascending comma-separated coefficients, e.g. '2,1,1' for x^2+x+2."""
    try:
        return Poly3(int(t) for t in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad modulus coefficients {text!r}") from exc


@functools.lru_cache(maxsize=32)
def _field_new(m: int, modulus: tuple[int, ...] | None) -> FieldContext:
    if modulus is None:
        f = find_primitive_modulus(m)
    else:
        f = Poly3(modulus)
        if f.degree != m:
            raise DomainError(f"modulus {f} does not have degree {m}")
        if not is_primitive(f):
            raise DomainError(f"modulus {f} is not a primitive polynomial over F_3")
    return FieldContext(m, f)


def field_new(m: int, modulus: Poly3 | Sequence[int] | None = None) -> FieldContext:
    if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
        raise CapacityError(f"extension degree must satisfy 1 <= m <= {MAX_DEGREE}, got {m}")
    if modulus is not None and not isinstance(modulus, Poly3):
        modulus = Poly3(modulus)
    return _field_new(m, None if modulus is None else modulus.coeffs)
