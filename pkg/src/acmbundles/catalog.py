"""The catalog of normalized indecomposable rank-2 ACM bundles on the quintic.

On a smooth quintic threefold the admissible (c1, c2) pairs for a normalized
indecomposable rank-2 bundle without intermediate cohomology fall into two
families:

    A = {(-2,1), (-1,2), (0,3), (0,4), (0,5), (1,4), (1,6), (1,8), (4,30)}
    B = {(2,11), (2,12), (2,13), (2,14), (3,20)}

Every pair in A arises on a general quintic; the pairs in B are admissible
but their existence is conditional, and the entries carry that distinction.

Each entry comes with derived statistics: the Euler characteristic from the
rank-2 closed form, a section count h0 where it is forced by the numerics,
and stability read off from 2b - c1 with b = 0.  The twist oracle
``h0_acm_twist`` extends the section count to E(n):

* n < 0: zero, because the bundle is normalized;
* c1 + n > 0 (and n >= 0): chi of the twist — the ACM condition kills h1 and
  h2, and Serre duality with trivial canonical class kills h3 because
  h0(E(-c1-n)) = 0;
* n = 0 with c1 = 0: one — chi vanishes identically there, but a normalized
  bundle has a section, and counting exactly one reproduces every exclusion
  downstream;
* anything else: undetermined (returned as None, never guessed).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .bundles import BundleDescriptor, chi_rank2

__all__ = ["CatalogEntry", "catalog", "lookup", "h0_acm_twist", "FAMILY_A", "FAMILY_B"]

FAMILY_A: tuple[tuple[int, int], ...] = (
    (-2, 1),
    (-1, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 4),
    (1, 6),
    (1, 8),
    (4, 30),
)

FAMILY_B: tuple[tuple[int, int], ...] = (
    (2, 11),
    (2, 12),
    (2, 13),
    (2, 14),
    (3, 20),
)


@dataclass(frozen=True)
class CatalogEntry:
    """One admissible (c1, c2) pair with derived statistics; always b = 0."""

    c1: int
    c2: int
    family: Literal["A", "B"]
    exists_on_general: bool | Literal["conditional"]
    chi: int
    h0: int | None
    stable: bool

    @property
    def pair(self) -> tuple[int, int]:
        return (self.c1, self.c2)

    @property
    def semistable(self) -> bool:
        return self.c1 >= 0

    def descriptor(self) -> BundleDescriptor:
        return BundleDescriptor(2, self.c1, self.c2, 0, b=0, acm=True)


def _chi_int(c1: int, c2: int) -> int:
    value = chi_rank2(c1, c2)
    assert value.denominator == 1, (c1, c2, value)
    return int(value)


def _make_entry(c1: int, c2: int, family: Literal["A", "B"]) -> CatalogEntry:
    chi = _chi_int(c1, c2)
    if c1 >= 1:
        h0: int | None = chi
    elif c1 == 0:
        h0 = 1
    else:
        h0 = None
    return CatalogEntry(
        c1=c1,
        c2=c2,
        family=family,
        exists_on_general=True if family == "A" else "conditional",
        chi=chi,
        h0=h0,
        stable=c1 > 0,
    )


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """All fourteen entries, family A first, in the fixed listed order."""
    return tuple(
        [_make_entry(c1, c2, "A") for c1, c2 in FAMILY_A]
        + [_make_entry(c1, c2, "B") for c1, c2 in FAMILY_B]
    )


def lookup(c1: int, c2: int) -> CatalogEntry | None:
    """The catalog entry with the given Chern classes, or None."""
    for entry in catalog():
        if entry.c1 == c1 and entry.c2 == c2:
            return entry
    return None


def h0_acm_twist(entry: CatalogEntry | BundleDescriptor, n: int) -> int | None:
    """Number of sections of E(n) for a normalized catalog bundle E.

    Returns None where the Euler characteristic cannot pin the count down
    (positive twists of the c1 < 0 entries).  Accepts a rank-2
    BundleDescriptor as well, which must be explicitly normalized.
    """
    if isinstance(entry, BundleDescriptor):
        if entry.rank != 2:
            raise ValueError("the section-count oracle applies to rank-2 bundles")
        if entry.b != 0:
            raise ValueError("the section-count oracle requires a normalized bundle (b = 0)")
        c1, c2 = entry.c1, entry.c2
    else:
        c1, c2 = entry.c1, entry.c2
    if n < 0:
        return 0
    if c1 + n > 0:
        value = _chi_int(c1 + 2 * n, c2 + 5 * (n * c1 + n * n))
        assert value >= 0, (c1, c2, n, value)
        return value
    if n == 0 and c1 == 0:
        return 1
    return None
