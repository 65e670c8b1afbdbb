from __future__ import annotations

import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternbch import codes as cd
from ternbch.errors import CapacityError, DomainError, UsageError
from ternbch.field import field_new
from ternbch.poly import Poly3


def naive_distribution(code):
    """Encode every message polynomial u(x) as u(x) g(x) and count weights."""
    g = code.generator.coeffs
    out = Counter()
    for u in itertools.product(range(3), repeat=code.dimension):
        word = [0] * code.n
        for i, ui in enumerate(u):
            if ui:
                for j, gj in enumerate(g):
                    word[i + j] = (word[i + j] + ui * gj) % 3
        out[sum(1 for c in word if c)] += 1
    return dict(out)


SMALL = [("A", 3), ("D", 2), ("D", 3), ("D", 4), ("E", 3), ("F", 2), ("F", 4)]


@pytest.mark.parametrize("tag, m", SMALL)
def test_exhaustive_matches_naive(tag, m):
    code = cd.construct_family(tag, m)
    assert cd.weight_distribution_exhaustive(code) == naive_distribution(code)


@pytest.mark.parametrize("tag, m", [("A", 3), ("A", 5), ("B", 6), ("C", 6), ("E", 3), ("F", 2), ("F", 6)])
def test_trace_codewords_lie_in_code(tag, m):
    ctx = field_new(m)
    code = cd.construct_family(tag, m, ctx)
    for a, b in [(1, 0), (0, 1), (2, 5), (ctx.exp_of(7), ctx.exp_of(3))]:
        if tag == "F":
            b = ctx.exp_of(ctx.n // 8 * (b % 8))  # b must lie in GF(9)
        if tag in ("C", "F"):
            a %= 3
        word = cd.trace_codeword(tag, ctx, a, b)
        assert cd.contains(code, word)


@pytest.mark.parametrize("tag, m, k", [("A", 3, 3), ("A", 5, 5), ("B", 6, 6), ("C", 6, 7),
                                       ("D", 1, 1), ("E", 3, 6), ("E", 5, 10), ("F", 2, 3),
                                       ("G", 6, 12)])
def test_dimensions(tag, m, k):
    code = cd.construct_family(tag, m)
    assert code.k == k
    Z = code.defining_set
    assert all(3 * s % code.n in Z for s in Z)


@pytest.mark.parametrize("tag, m", [("A", 3), ("B", 6), ("C", 6), ("D", 2), ("E", 3), ("F", 2), ("G", 6)])
def test_dual_and_hull(tag, m):
    code = cd.construct_family(tag, m)
    d = cd.dual(code)
    assert d.dimension == code.n - code.dimension
    # every codeword of C is orthogonal to the generator shifts of the dual
    g = np.array(code.generator.coeffs + (0,) * (code.n - code.generator.degree - 1))
    h = np.array(d.generator.coeffs + (0,) * (code.n - d.generator.degree - 1))
    for shift in range(0, code.n, max(1, code.n // 20)):
        assert int(g @ np.roll(h, shift)) % 3 == 0
    lcd = cd.is_lcd(code)
    assert lcd == (cd.intersection_dimension(code, d) == 0) == cd.negation_closed(code.defining_set, code.n)
    assert lcd == (tag in "DEFG")


def test_closed_forms():
    assert cd.closed_form_distribution("A", 5) == {0: 1, 162: 242}
    assert cd.closed_form_distribution("D", 3) == {0: 1, 26: 2}
    with pytest.raises(DomainError):
        cd.closed_form_distribution("E", 3)


def test_admissibility_errors():
    with pytest.raises(DomainError, match="m odd"):
        cd.construct_family("A", 4)
    with pytest.raises(DomainError, match="2 mod 4"):
        cd.construct_family("G", 2)
    with pytest.raises(DomainError):
        cd.family_spec("H")
    with pytest.raises(DomainError):
        cd.trace_form_tables("D", 3)


def test_budget(monkeypatch):
    code = cd.construct_family("E", 3)
    with pytest.raises(CapacityError):
        cd.weight_distribution_exhaustive(code, budget=5)
    monkeypatch.setenv("BCH3_MAX_DIM", "4")
    assert cd.max_dimension() == 4
    assert cd.max_dimension(9) == 9
    with pytest.raises(CapacityError):
        cd.weight_distribution_exhaustive(code)


def test_workers_do_not_change_result():
    code = cd.construct_family("E", 3)
    assert cd.weight_distribution_exhaustive(code, workers=3) == cd.weight_distribution_exhaustive(code)


def test_intersection_length_mismatch():
    with pytest.raises(UsageError):
        cd.intersection_dimension(cd.construct_family("D", 2), cd.construct_family("D", 3))


@given(st.sets(st.integers(0, 25), max_size=26))
@settings(max_examples=50, deadline=None)
def test_longest_run_bounds_minimum_distance(reps):
    ctx = field_new(3)
    Z = cd.closure_of(reps, 26)
    code = cd.code_from_defining_set(Z, ctx)
    if code.dimension > 9:
        return
    wd = cd.weight_distribution_exhaustive(code)
    assert sum(wd.values()) == 3**code.dimension
    assert cd.verify_bch_bound(code, wd).passed


def test_longest_run_is_cyclic():
    assert cd.longest_consecutive_run({0, 1, 25}, 26) == 3
    assert cd.longest_consecutive_run(set(range(26)), 26) == 26
    assert cd.longest_consecutive_run(set(), 26) == 0


def test_contains():
    code = cd.construct_family("D", 2)
    assert cd.contains(code, [1, 2] * 4)
    assert not cd.contains(code, [1] + [0] * 7)
    assert code.generator == Poly3.x_n_minus_one(8) // Poly3([1, 1])
