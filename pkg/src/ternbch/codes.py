"""Ternary primitive cyclic codes: the seven BCH / LCD BCH families and their weights.

A code is described by its defining set Z (a union of 3-cyclotomic
cosets mod n = 3^m - 1); its generator is prod_{i in Z} (x - alpha^i).
Weight distributions can be obtained three ways:

* ``weight_distribution_exhaustive`` -- every message times the generator;
* ``weight_distribution_trace`` -- the trace description of the family;
* ``closed_form_distribution`` -- the published formulas.

Ranges such as "C_s for -d < s <= D" index each coset by its signed
absolute leader (see :class:`~ternbch.cosets.AclTable`), not by every
integer in the range; reading the range literally swallows the coset
that the family is meant to leave out.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import cosets as cs
from .errors import CapacityError, DomainError, UsageError, VerificationError
from .field import FieldContext, field_new
from .parallel import merged_histogram
from .poly import (
    Poly3,
    canonical_residues,
    generator_from_defining_set,
    is_self_reciprocal,
    poly_divmod,
    poly_lcm,
    reciprocal,
)

DEFAULT_MAX_DIM = 16
# bound on the materialized half-span table (entries)
_SPAN_LIMIT = 1 << 25

WeightDistribution = dict[int, int]


@dataclass(frozen=True)
class CyclicCode:
    n: int
    defining_set: frozenset[int]
    generator: Poly3
    parity_check: Poly3
    designed_distance: int | None = field(default=None, compare=False)
    family: str | None = field(default=None, compare=False)
    m: int | None = field(default=None, compare=False)

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    k = dimension


def max_dimension(budget: int | None = None) -> int:
    """Enumeration budget: explicit value, then $BCH3_MAX_DIM, then 16."""
    if budget is not None:
        return budget
    env = os.environ.get("BCH3_MAX_DIM")
    return int(env) if env else DEFAULT_MAX_DIM


def negation_closed(Z: Iterable[int], n: int) -> bool:
    Z = set(Z)
    return all((-z) % n in Z for z in Z)


def code_from_defining_set(Z: Iterable[int], ctx: FieldContext, *, designed_distance=None,
                           family=None) -> CyclicCode:
    Zc = frozenset(canonical_residues(Z, ctx.n))
    g = generator_from_defining_set(Zc, ctx)
    h, r = poly_divmod(Poly3.x_n_minus_one(ctx.n), g)
    assert r.is_zero()
    return CyclicCode(ctx.n, Zc, g, h, designed_distance, family, ctx.m)


def closure_of(reps: Iterable[int], n: int) -> frozenset[int]:
    """Union of the cosets of the given representatives."""
    out: set[int] = set()
    for r in reps:
        out.update(cs.orbit(int(r), n))
    return frozenset(out)


# -- families -------------------------------------------------------------

def _d(m: int, rank: int) -> int:
    return cs.delta_formula(m, rank)


def _signed_range(t: cs.AclTable, lo: int, hi: int, include_hi: bool) -> np.ndarray:
    s = t.signed_acl_of
    return (s > lo) & ((s <= hi) if include_hi else (s < hi))


def _plus_cosets(t: cs.AclTable, mask: np.ndarray, reps: Iterable[int]) -> np.ndarray:
    mask = mask.copy()
    for r in reps:
        mask |= t.leader_of == t.leader_of[r % t.n]
    return mask


def _z_a(t, m):
    return _signed_range(t, -_d(m, 2), _d(m, 1), True)


def _z_b(t, m):
    return _signed_range(t, -_d(m, 3), _d(m, 1), True)


def _z_c(t, m):
    return _signed_range(t, -_d(m, 3), _d(m, 1), False)


def _z_d(t, m):
    return t.acl_of < _d(m, 1)


def _z_e(t, m):
    return _plus_cosets(t, t.acl_of < _d(m, 2), [_d(m, 1)])


def _z_f(t, m):
    return t.acl_of < _d(m, 2)


def _z_g(t, m):
    return _plus_cosets(t, t.acl_of < _d(m, 3), [_d(m, 1), _d(m, 2)])


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    requirement: str
    admissible: Callable[[int], bool]
    mask: Callable[[cs.AclTable, int], np.ndarray]
    dimension: Callable[[int], int]
    designed_distance: Callable[[int], int]
    lcd_claimed: bool
    has_trace_form: bool
    has_closed_form: bool
    smallest_m: int

    def defining_set(self, m: int) -> frozenset[int]:
        t = cs.acl_table(3**m - 1)
        return t.residues_where(self.mask(t, m))


def _odd3(m):
    return m % 2 == 1 and m >= 3


def _two_mod_four(m):
    return m % 4 == 2 and m >= 6


FAMILIES: dict[str, FamilySpec] = {
    "A": FamilySpec("A", "m odd and m >= 3", _odd3, _z_a, lambda m: m,
                    lambda m: _d(m, 1) + _d(m, 2) + 1, False, True, True, 3),
    "B": FamilySpec("B", "m = 2 mod 4 and m >= 6", _two_mod_four, _z_b, lambda m: m,
                    lambda m: _d(m, 1) + _d(m, 3) + 1, False, True, True, 6),
    "C": FamilySpec("C", "m = 2 mod 4 and m >= 6", _two_mod_four, _z_c, lambda m: m + 1,
                    lambda m: _d(m, 1) + _d(m, 3), False, True, True, 6),
    "D": FamilySpec("D", "m >= 1", lambda m: m >= 1, _z_d, lambda m: 1,
                    lambda m: 2 * _d(m, 1), True, False, True, 1),
    "E": FamilySpec("E", "m odd and m >= 3", _odd3, _z_e, lambda m: 2 * m,
                    lambda m: 2 * _d(m, 2), True, True, False, 3),
    "F": FamilySpec("F", "m even and m >= 2", lambda m: m % 2 == 0 and m >= 2, _z_f,
                    lambda m: 3, lambda m: 2 * _d(m, 2), True, True, True, 2),
    "G": FamilySpec("G", "m = 2 mod 4 and m >= 6", _two_mod_four, _z_g, lambda m: 2 * m,
                    lambda m: 2 * _d(m, 3), True, True, False, 6),
}


def family_spec(tag: str) -> FamilySpec:
    try:
        return FAMILIES[tag.upper()]
    except KeyError:
        raise DomainError(f"unknown family {tag!r}; expected one of {''.join(FAMILIES)}") from None


def check_admissible(tag: str, m: int) -> FamilySpec:
    spec = family_spec(tag)
    if not spec.admissible(m):
        raise DomainError(f"family {spec.tag} requires {spec.requirement}; got m={m}")
    return spec


def construct_family(tag: str, m: int, ctx: FieldContext | None = None) -> CyclicCode:
    spec = check_admissible(tag, m)
    ctx = ctx or field_new(m)
    code = code_from_defining_set(spec.defining_set(m), ctx,
                                  designed_distance=spec.designed_distance(m), family=spec.tag)
    if code.dimension != spec.dimension(m):
        raise VerificationError(
            f"family {spec.tag} at m={m}: dimension {code.dimension}, expected {spec.dimension(m)}"
        )
    return code


# -- LCD / duality ------------------------------------------------------------

def is_lcd(code: CyclicCode) -> bool:
    return is_self_reciprocal(code.generator)


def dual(code: CyclicCode) -> CyclicCode:
    n = code.n
    g = reciprocal(code.parity_check)
    h, r = poly_divmod(Poly3.x_n_minus_one(n), g)
    assert r.is_zero()
    Z = frozenset((-i) % n for i in range(n) if i not in code.defining_set)
    return CyclicCode(n, Z, g, h, None, None, code.m)


def intersection_dimension(c1: CyclicCode, c2: CyclicCode) -> int:
    """dim(c1 & c2); the intersection is generated by lcm(g1, g2)."""
    if c1.n != c2.n:
        raise UsageError(f"length mismatch: {c1.n} vs {c2.n}")
    return c1.n - poly_lcm(c1.generator, c2.generator).degree


# -- enumeration kernels --------------------------------------------------------

def _span(rows: np.ndarray) -> np.ndarray:
    """All F_3 combinations of the rows, one per output row."""
    n = rows.shape[1]
    table = np.zeros((1, n), np.int8)
    for row in rows:
        table = np.concatenate([table, (table + row) % 3, (table + 2 * row) % 3])
    return table.astype(np.int8)


def _pair_weights(start: int, stop: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Histogram of weights of (left[i] + right[j]) mod 3 for start <= i < stop, all j."""
    n = right.shape[1]
    hist = np.zeros(n + 1, np.int64)
    buf = np.empty_like(right)
    for u in left[start:stop]:
        np.add(right, u, out=buf)
        zeros = np.count_nonzero(buf == 0, axis=1) + np.count_nonzero(buf == 3, axis=1)
        hist += np.bincount(n - zeros, minlength=n + 1)
    return hist


def _to_distribution(hist: np.ndarray) -> WeightDistribution:
    return {int(w): int(c) for w, c in enumerate(hist) if c}


def generator_rows(code: CyclicCode) -> np.ndarray:
    """k x n matrix whose row j holds the coefficients of x^j g(x)."""
    k, n = code.dimension, code.n
    G = np.zeros((k, n), np.int8)
    g = np.asarray(code.generator.coeffs, np.int8)
    for j in range(k):
        G[j, j:j + g.size] = g
    return G


def weight_distribution_exhaustive(code: CyclicCode, budget: int | None = None,
                                   workers: int = 1) -> WeightDistribution:
    """Tally the Hamming weights of all 3^k codewords m(x) g(x), deg m < k."""
    k, n = code.dimension, code.n
    limit = max_dimension(budget)
    if k > limit:
        raise CapacityError(
            f"dimension {k} exceeds the enumeration budget {limit}; "
            "raise the budget or use the trace enumerator"
        )
    if k == 0:
        return {0: 1}
    G = generator_rows(code)
    b = (k + 1) // 2
    while b > 1 and 3**b * n > _SPAN_LIMIT:
        b -= 1
    if 3 ** (k - b) * n > 4 * _SPAN_LIMIT:
        raise CapacityError(f"length {n} with dimension {k} is too large to enumerate")
    right = _span(G[:b])
    left = _span(G[b:])
    hist = merged_histogram(_pair_weights, left.shape[0], (left, right), workers)
    return _to_distribution(hist)


# -- trace descriptions ------------------------------------------------------------

def _trace_rows(ctx: FieldContext, exps: np.ndarray) -> np.ndarray:
    """Row a (packed element) holds Tr(a * alpha^exps[i]) for each coordinate i."""
    n = ctx.n
    rows = np.zeros((ctx.order, exps.size), np.int8)
    la = np.asarray(ctx.log[1:])
    rows[1:] = ctx.trace_of_power[(la[:, None] + exps[None, :]) % n]
    return rows


def _alternating_rows(n: int) -> np.ndarray:
    """Rows a * (-1)^i for a in F_3."""
    sign = np.where(np.arange(n) % 2 == 0, 1, 2)
    return np.stack([(a * sign) % 3 for a in range(3)]).astype(np.int8)


def _subfield9_rows(ctx: FieldContext) -> np.ndarray:
    """Rows Tr_{9/3}(b zeta^i) for b in GF(9), zeta = alpha^{(3^m-1)/4}."""
    n = ctx.n
    zeta_log = n // 4
    sub = [0] + [ctx.exp_of(n // 8 * t) for t in range(8)]
    period = np.array(
        [[ctx.trace_from_subfield(ctx.mul(b, ctx.exp_of(zeta_log * i)), 2) for i in range(4)]
         for b in sub],
        np.int8,
    )
    return np.tile(period, (1, n // 4))


def trace_form_tables(tag: str, m: int, ctx: FieldContext | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(left, right) with codewords (left[i] + right[j]) mod 3 over all pairs."""
    spec = check_admissible(tag, m)
    if not spec.has_trace_form:
        raise DomainError(f"family {spec.tag} has no trace description beyond scalar multiples")
    ctx = ctx or field_new(m)
    n = ctx.n
    idx = np.arange(n, dtype=np.int64)
    zero = np.zeros((1, n), np.int8)
    if spec.tag == "A":
        return zero, _trace_rows(ctx, _d(m, 2) * idx % n)
    if spec.tag == "B":
        return zero, _trace_rows(ctx, _d(m, 3) * idx % n)
    if spec.tag == "C":
        return _alternating_rows(n), _trace_rows(ctx, _d(m, 3) * idx % n)
    if spec.tag == "E":
        # coordinates x = alpha^j; Tr(a x) + Tr(b / x)
        return _trace_rows(ctx, idx), _trace_rows(ctx, (-idx) % n)
    if spec.tag == "F":
        return _alternating_rows(n), _subfield9_rows(ctx)
    # G: Tr(a x^2) + Tr(b x^-2)
    return _trace_rows(ctx, 2 * idx % n), _trace_rows(ctx, (-2 * idx) % n)


def trace_enumeration_cost(tag: str, m: int) -> int:
    """Number of (codeword, coordinate) evaluations the trace enumerator performs."""
    spec = family_spec(tag)
    q, n = 3**m, 3**m - 1
    return {"A": q, "B": q, "C": 3 * q, "E": q * q, "F": 27, "G": q * q}.get(spec.tag, 0) * n


def weight_distribution_trace(tag: str, m: int, ctx: FieldContext | None = None,
                              workers: int = 1) -> WeightDistribution:
    left, right = trace_form_tables(tag, m, ctx)
    if left.shape[0] > right.shape[0]:
        left, right = right, left
    hist = merged_histogram(_pair_weights, left.shape[0], (left, right), workers)
    return _to_distribution(hist)


def trace_codeword(tag: str, ctx: FieldContext, a: int, b: int = 0) -> list[int]:
    """One codeword of the trace description in cyclic coordinate order.

    For E and G the evaluation points are beta^i with beta = alpha^delta
    (delta the second resp. third largest absolute leader), which keeps
    the coordinates in the order of the cyclic code.  Built with scalar
    field arithmetic only.
    """
    m, n = ctx.m, ctx.n
    spec = check_admissible(tag, m)
    tr = ctx.trace
    if spec.tag in ("A", "B", "C"):
        beta = ctx.exp_of(_d(m, 2 if spec.tag == "A" else 3))
        word = [tr(ctx.mul(b if spec.tag == "C" else a, ctx.pow(beta, i))) for i in range(n)]
        if spec.tag == "C":
            word = [(w + a * (1 if i % 2 == 0 else 2)) % 3 for i, w in enumerate(word)]
        return word
    if spec.tag in ("E", "G"):
        beta = ctx.exp_of(_d(m, 2 if spec.tag == "E" else 3))
        return [
            tr(ctx.add(ctx.mul(a, ctx.pow(beta, i)), ctx.mul(b, ctx.pow(beta, -i))))
            for i in range(n)
        ]
    if spec.tag == "F":
        zeta = ctx.exp_of(n // 4)
        return [
            (a * (1 if i % 2 == 0 else 2) + ctx.trace_from_subfield(ctx.mul(b, ctx.pow(zeta, i)), 2)) % 3
            for i in range(n)
        ]
    raise DomainError(f"family {spec.tag} has no trace description")


def contains(code: CyclicCode, word: Iterable[int]) -> bool:
    """Membership test: g(x) divides the word polynomial."""
    return poly_divmod(Poly3(word), code.generator)[1].is_zero()


# -- closed forms --------------------------------------------------------------

def closed_form_distribution(tag: str, m: int) -> WeightDistribution:
    spec = check_admissible(tag, m)
    if not spec.has_closed_form:
        raise DomainError(
            f"family {spec.tag} has no closed-form weight distribution; "
            "it reduces to Kloosterman-type sums"
        )
    q = 3**m
    n = q - 1
    out: dict[int, int] = {0: 1}

    def put(w: int, c: int) -> None:
        out[w] = out.get(w, 0) + c

    if spec.tag == "A":
        put(2 * 3 ** (m - 1), n)
    elif spec.tag == "D":
        put(n, 2)
    elif spec.tag == "F":
        put(n // 2, 12)
        put(3 * n // 4, 8)
        put(n, 6)
    else:
        r = 3 ** (m // 2)
        put(2 * (q - r) // 3, n // 2)
        put(2 * (q + r) // 3, n // 2)
        if spec.tag == "C":
            put((2 * q + r) // 3 - 1, n)
            put((2 * q - r) // 3 - 1, n)
            put(n, 2)
    return dict(sorted(out.items()))


def minimum_distance(wd: WeightDistribution) -> int | None:
    positive = [w for w, c in wd.items() if w > 0 and c > 0]
    return min(positive) if positive else None


# -- BCH bound -------------------------------------------------------------------

def longest_consecutive_run(Z: Iterable[int], n: int) -> int:
    """Longest cyclic run of consecutive residues contained in Z."""
    Z = set(Z)
    if len(Z) >= n:
        return n
    if not Z:
        return 0
    start = next(i for i in range(n) if i not in Z)
    best = run = 0
    for step in range(1, n + 1):
        if (start + step) % n in Z:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


@dataclass(frozen=True)
class BchBoundReport:
    run: int
    bound: int
    min_distance: int | None
    passed: bool

    def to_dict(self) -> dict:
        return {"run": self.run, "bound": self.bound, "min_distance": self.min_distance,
                "passed": self.passed}


def verify_bch_bound(code: CyclicCode, wd: WeightDistribution) -> BchBoundReport:
    run = longest_consecutive_run(code.defining_set, code.n)
    d = minimum_distance(wd)
    return BchBoundReport(run, run + 1, d, d is None or d >= run + 1)
