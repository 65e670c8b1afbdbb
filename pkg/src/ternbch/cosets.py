"""3-cyclotomic cosets modulo n = 3^m - 1 and absolute coset leaders.

The absolute coset leader of C_s is min{k, n - k : k in C_s}.  Besides
single-coset helpers this module tabulates every coset of Z_n at once
(vectorized orbit expansion), evaluates the closed forms for the three
largest absolute leaders, and ranks the leaders by brute force so the
two can be compared.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError

MAX_TABLE_DEGREE = 12


@dataclass(frozen=True)
class Coset:
    elements: tuple[int, ...]
    leader: int
    acl: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_dict(self, verbose: bool = False) -> dict:
        d = {"leader": self.leader, "acl": self.acl, "size": self.size}
        if verbose:
            d["elements"] = list(self.elements)
        return d


def degree_of(n: int) -> int:
    """m with n = 3^m - 1."""
    m, p = 0, 1
    while p - 1 < n:
        p *= 3
        m += 1
    if p - 1 != n:
        raise DomainError(f"{n} is not of the form 3^m - 1")
    return m


def orbit(s: int, n: int) -> list[int]:
    s %= n
    out = [s]
    x = s * 3 % n
    while x != s:
        out.append(x)
        x = x * 3 % n
    return out


def coset(s: int, n: int) -> Coset:
    elems = orbit(s, n)
    return Coset(tuple(sorted(elems)), min(elems), min(min(k, n - k) for k in elems))


def absolute_coset_leader(s: int, n: int) -> int:
    return min(min(k, n - k) for k in orbit(s, n))


def ternary_expansion(i: int, m: int) -> tuple[int, ...]:
    """(i_0, ..., i_{m-1}) with i = sum i_t 3^t."""
    if not 0 <= i < 3**m:
        raise DomainError(f"{i} has more than {m} ternary digits")
    return tuple((i // 3**t) % 3 for t in range(m))


class AclTable:
    """Every coset of Z_n with its leader, absolute leader and size.

    Per-residue arrays (indexed by residue): ``leader_of``, ``acl_of``,
    ``size_of`` and ``signed_acl_of``.  The signed absolute leader is
    +acl when acl itself lies in the coset and -acl otherwise, which is
    how cosets are indexed in ranges such as C_s for -d < s <= D.
    """

    def __init__(self, n: int) -> None:
        m = degree_of(n)
        self.n, self.m = n, m
        s = np.arange(n, dtype=np.int64)
        rows = [s]
        for _ in range(m):
            rows.append(rows[-1] * 3 % n)
        O = np.stack(rows)
        self.leader_of = O[:m].min(axis=0)
        self.acl_of = np.minimum(O[:m], n - O[:m]).min(axis=0)
        self.acl_of[0] = 0
        self.size_of = np.argmax(O[1:] == s, axis=0) + 1
        plus = self.leader_of[self.acl_of % n] == self.leader_of
        self.signed_acl_of = np.where(plus, self.acl_of, -self.acl_of)
        leaders = np.flatnonzero(self.leader_of == s)
        self.entries: dict[int, tuple[int, int]] = {
            int(L): (int(self.acl_of[L]), int(self.size_of[L])) for L in leaders
        }
        self.ranked: list[int] = sorted({a for a, _ in self.entries.values()}, reverse=True)

    def coset(self, leader: int) -> Coset:
        return coset(leader, self.n)

    def cosets_with_acl(self, value: int) -> list[Coset]:
        return [self.coset(L) for L, (a, _) in self.entries.items() if a == value]

    def residues_where(self, mask: np.ndarray) -> frozenset[int]:
        return frozenset(np.flatnonzero(mask).tolist())


@functools.lru_cache(maxsize=16)
def acl_table(n: int, force: bool = False) -> AclTable:
    if degree_of(n) > MAX_TABLE_DEGREE and not force:
        raise CapacityError(f"coset table limited to m <= {MAX_TABLE_DEGREE}")
    return AclTable(n)


def delta_formula(m: int, rank: int) -> int:
    """Closed forms for the largest, second and third largest absolute leaders."""
    if rank == 1:
        if m < 1:
            raise DomainError("m must be positive")
        return (3**m - 1) // 2
    if rank == 2:
        if m % 2:
            if m < 3:
                raise DomainError("second largest leader formula for odd m needs m >= 3")
            return (3 ** (m - 1) - 1) // 4 + 3 ** (m - 2)
        if m < 2:
            raise DomainError("second largest leader formula for even m needs m >= 2")
        return (3**m - 1) // 4
    if rank == 3:
        if m % 4 == 0 and m >= 4:
            return (3**m - 1) // 5
        if m % 4 == 2 and m >= 6:
            return ((3 ** (m - 6) - 1) // 5 + 3 ** (m - 6) + 2 * 3 ** (m - 5)
                    + 2 * 3 ** (m - 3) + 3 ** (m - 2))
        raise DomainError(
            f"no closed form for the third largest leader at m={m}: "
            "only m = 0 mod 4 (m >= 4) and m = 2 mod 4 (m >= 6) are covered"
        )
    raise DomainError(f"rank must be 1, 2 or 3, got {rank}")


def top_acl_oracle(n: int, count: int, force: bool = False) -> list[tuple[int, list[Coset]]]:
    """The ``count`` largest distinct absolute leaders, each with every coset attaining it.

    Full scan of Z_n; independent of :func:`delta_formula`.
    """
    table = acl_table(n, force)
    return [(v, table.cosets_with_acl(v)) for v in table.ranked[:count]]
