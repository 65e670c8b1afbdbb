"""Dense polynomials over GF(3).

A polynomial a_0 + a_1 x + ... + a_t x^t is stored as the tuple
(a_0, ..., a_t) of integers in {0, 1, 2} with a_t != 0; the zero
polynomial is the empty tuple.  JSON serialization uses the same
ascending coefficient list.

Besides ring arithmetic this module builds minimal polynomials and
cyclic-code generator polynomials from a field context (see
:mod:`ternbch.field`); only the context's scalar methods are used, so
there is no import cycle.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, UsageError

# a^{-1} in F_3 is a itself for a in {1, 2}
_INV3 = (0, 1, 2)


class Poly3:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(v) % 3 for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Poly3:
        return cls([0] * degree + [coeff])

    @classmethod
    def x_n_minus_one(cls, n: int) -> Poly3:
        return cls([2] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def monic(self) -> Poly3:
        if not self.coeffs:
            return self
        s = _INV3[self.coeffs[-1]]
        return Poly3(c * s for c in self.coeffs)

    def __call__(self, x: int) -> int:
        """Evaluate at an element of F_3."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 3
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly3):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly3) -> Poly3:
        return poly_add(self, other)

    def __sub__(self, other: Poly3) -> Poly3:
        return poly_add(self, -other)

    def __neg__(self) -> Poly3:
        return Poly3(-c for c in self.coeffs)

    def __mul__(self, other: Poly3) -> Poly3:
        return poly_mul(self, other)

    def __divmod__(self, other: Poly3) -> tuple[Poly3, Poly3]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly3) -> Poly3:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly3) -> Poly3:
        return poly_divmod(self, other)[1]

    def __repr__(self) -> str:
        return f"Poly3({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def poly_add(a: Poly3, b: Poly3) -> Poly3:
    la, lb = len(a.coeffs), len(b.coeffs)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] = (out[i] + c) % 3
    return Poly3(out)


def poly_mul(a: Poly3, b: Poly3) -> Poly3:
    if not a.coeffs or not b.coeffs:
        return Poly3()
    if len(a.coeffs) * len(b.coeffs) <= 64:
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return Poly3(out)
    prod = np.convolve(np.asarray(a.coeffs, np.int64), np.asarray(b.coeffs, np.int64))
    return Poly3((prod % 3).tolist())


def poly_divmod(a: Poly3, b: Poly3) -> tuple[Poly3, Poly3]:
    """Return (q, r) with a = q*b + r and deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.degree
    if a.degree < db:
        return Poly3(), a
    r = list(a.coeffs)
    bc = b.coeffs
    inv = _INV3[bc[-1]]
    q = [0] * (a.degree - db + 1)
    # only the nonzero terms of the divisor take part in the update
    support = [(j, c) for j, c in enumerate(bc[:-1]) if c]
    for i in range(a.degree - db, -1, -1):
        c = r[i + db] * inv % 3
        if c:
            q[i] = c
            r[i + db] = 0
            for j, bj in support:
                r[i + j] = (r[i + j] - c * bj) % 3
    return Poly3(q), Poly3(r[:db])


def poly_gcd(a: Poly3, b: Poly3) -> Poly3:
    """Monic greatest common divisor; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(a: Poly3, b: Poly3) -> Poly3:
    if a.is_zero() or b.is_zero():
        return Poly3()
    return poly_divmod(poly_mul(a, b), poly_gcd(a, b))[0].monic()


def poly_powmod(base: Poly3, e: int, mod: Poly3) -> Poly3:
    result = Poly3([1]) % mod
    base = base % mod
    while e:
        if e & 1:
            result = poly_mul(result, base) % mod
        base = poly_mul(base, base) % mod
        e >>= 1
    return result


def reciprocal(f: Poly3) -> Poly3:
    """a_0^{-1} x^t f(1/x): the polynomial whose roots are the inverses of f's.

    For monic f the result is monic and the map is an involution.
    """
    if f.constant() == 0:
        raise DomainError("reciprocal needs a nonzero constant term")
    s = _INV3[f.constant()]
    return Poly3(c * s for c in reversed(f.coeffs))


def is_self_reciprocal(g: Poly3) -> bool:
    return reciprocal(g) == g


def _coset_of(s: int, n: int) -> list[int]:
    out = [s]
    x = s * 3 % n
    while x != s:
        out.append(x)
        x = x * 3 % n
    return out


def minimal_polynomial(x, ctx=None) -> Poly3:
    """Minimal polynomial over F_3 of a field element.

    ``x`` is an :class:`~ternbch.field.Element` or a packed integer
    together with its context.  The product of (X - x^{3^i}) over the
    conjugates is expanded in GF(3^m)[X]; every coefficient must land in
    the prime field, which is asserted.
    """
    if ctx is None:
        ctx, x = x.ctx, x.value
    if x == 0:
        return Poly3([0, 1])
    conj = [ctx.exp_of(e) for e in _coset_of(ctx.log_of(x), ctx.n)]
    coeffs = [1]
    for r in conj:
        # multiply by (X - r)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = ctx.add(nxt[i + 1], c)
            nxt[i] = ctx.sub(nxt[i], ctx.mul(c, r))
        coeffs = nxt
    if any(c > 2 for c in coeffs):
        raise AssertionError(f"minimal polynomial of {x} left the prime field: {coeffs}")
    return Poly3(coeffs)


def canonical_residues(Z: Iterable[int], n: int) -> set[int]:
    return {int(z) % n for z in Z}


def coset_leaders_of(Z: set[int], n: int) -> list[int]:
    """Split a residue set into cyclotomic cosets; raise if it is not closed."""
    seen: set[int] = set()
    leaders = []
    for z in sorted(Z):
        if z in seen:
            continue
        orbit = _coset_of(z, n)
        missing = [k for k in orbit if k not in Z]
        if missing:
            raise UsageError(
                f"defining set is not closed under multiplication by 3 mod {n}: "
                f"{z} is present but {missing[0]} is not"
            )
        seen.update(orbit)
        leaders.append(min(orbit))
    return leaders


def _product(polys: Sequence[Poly3]) -> Poly3:
    polys = list(polys)
    if not polys:
        return Poly3([1])
    while len(polys) > 1:
        nxt = [poly_mul(polys[i], polys[i + 1]) for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def generator_from_defining_set(Z: Iterable[int], ctx) -> Poly3:
    """prod_{i in Z} (x - alpha^i) for a coset-closed residue set Z."""
    n = ctx.n
    Z = canonical_residues(Z, n)
    leaders = coset_leaders_of(Z, n)
    if 2 * len(Z) <= n:
        return _product([minimal_polynomial(ctx.exp_of(s), ctx) for s in leaders])
    # large Z: divide x^n - 1 by the (small) product over the complement
    rest = set(range(n)) - Z
    h = _product([minimal_polynomial(ctx.exp_of(s), ctx) for s in coset_leaders_of(rest, n)])
    g, r = poly_divmod(Poly3.x_n_minus_one(n), h)
    assert r.is_zero()
    return g
