"""Bundle descriptors and their characteristic-class calculus.

A descriptor records the rank and integer Chern classes of a vector bundle on
a hypersurface threefold: c1 in H-units, c2 in ell-units (so c2 is the degree
of the second Chern class), c3 in pt-units.  Two optional pieces of metadata
travel with it: the normalization level b = max{n : h0(E(-n)) != 0}, and an
ACM flag asserting vanishing intermediate cohomology.  Both are cohomological
facts; the arithmetic here propagates them only along operations where the
result is forced (twists shift b, duals of rank <= 2 bundles shift it through
self-duality, direct sums take the maximum) and drops them otherwise rather
than guessing.

Conversion between Chern classes and the Chern character uses the Newton
identities truncated at codimension three; on this ring

    ch1 = c1,   ch2 = (r c1^2 - 2 c2)/2,   ch3 = (r c1^3 - 3 c1 c2 + 3 c3)/6.

Euler characteristics come from Hirzebruch-Riemann-Roch, chi = integral of
ch(E).td(X), and for rank-2 bundles on the quintic there is the closed form
chi = 5/6 c1^3 - 1/2 c1 c2 + 25/6 c1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .chowring import ChowClass, Hypersurface, integrate

__all__ = [
    "BundleDescriptor",
    "ChernCharacter",
    "NotBundleClassError",
    "NormalizationUnknownError",
    "to_ch",
    "from_ch",
    "dual",
    "twist",
    "tensor",
    "direct_sum",
    "chi_hrr",
    "chi_rank2",
    "is_semistable",
    "is_stable",
]


class NotBundleClassError(ValueError):
    """A synthetic Chern character has no integral bundle descriptor."""


class NormalizationUnknownError(ValueError):
    """An operation needed the normalization level b, which is not set."""


@dataclass(frozen=True)
class BundleDescriptor:
    """Rank plus integer Chern classes (c1, c2, c3), with optional b and ACM flag."""

    rank: int
    c1: int
    c2: int = 0
    c3: int = 0
    b: int | None = None
    acm: bool = False

    def __post_init__(self) -> None:
        for name in ("rank", "c1", "c2", "c3"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.rank == 1 and (self.c2 != 0 or self.c3 != 0):
            raise ValueError("a rank-1 bundle has c2 = c3 = 0")
        if self.rank == 2 and self.c3 != 0:
            raise ValueError("a rank-2 bundle has c3 = 0")
        if self.b is not None and (not isinstance(self.b, int) or isinstance(self.b, bool)):
            raise ValueError(f"b must be an integer or None, got {self.b!r}")

    @property
    def normalized(self) -> bool:
        return self.b == 0

    def chern_tuple(self) -> tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)

    def total_chern(self) -> ChowClass:
        """Total Chern class 1 + c1 H + c2 ell + c3 pt."""
        return ChowClass(1, self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class ChernCharacter:
    """Chern character components (ch0, ch1, ch2, ch3) in basis units."""

    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self) -> None:
        for name in ("ch0", "ch1", "ch2", "ch3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def to_chow(self) -> ChowClass:
        return ChowClass(self.ch0, self.ch1, self.ch2, self.ch3)

    @staticmethod
    def from_chow(x: ChowClass) -> "ChernCharacter":
        return ChernCharacter(x.a0, x.a1, x.a2, x.a3)

    def mul(self, other: "ChernCharacter", X: Hypersurface) -> "ChernCharacter":
        return ChernCharacter.from_chow(X.mul(self.to_chow(), other.to_chow()))


def to_ch(E: BundleDescriptor, X: Hypersurface) -> ChernCharacter:
    """Chern character of a descriptor (Newton identities, truncated)."""
    r, c1, c2, c3 = X.r, E.c1, E.c2, E.c3
    return ChernCharacter(
        Fraction(E.rank),
        Fraction(c1),
        Fraction(r * c1 * c1 - 2 * c2, 2),
        Fraction(r * c1**3 - 3 * c1 * c2 + 3 * c3, 6),
    )


def _exact_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise NotBundleClassError(f"{what} is not an integer: {q}")
    return int(q)


def from_ch(c: ChernCharacter, X: Hypersurface) -> BundleDescriptor:
    """Invert the Newton identities; reject non-integral synthetic characters."""
    if c.ch0.denominator != 1 or c.ch0 <= 0:
        raise NotBundleClassError(f"rank must be a positive integer, got {c.ch0}")
    rank = int(c.ch0)
    c1 = _exact_int(c.ch1, "c1")
    c2 = _exact_int(Fraction(X.r * c1 * c1, 2) - c.ch2, "c2")
    c3 = _exact_int(2 * c.ch3 - Fraction(X.r * c1**3, 3) + c1 * c2, "c3")
    try:
        return BundleDescriptor(rank, c1, c2, c3)
    except ValueError as exc:
        raise NotBundleClassError(str(exc)) from exc


def dual(E: BundleDescriptor) -> BundleDescriptor:
    """Dual bundle: ch_i flips sign for odd i, so (c1, c2, c3) -> (-c1, c2, -c3).

    For rank 1 and rank 2 the dual is a twist of the bundle itself
    (E* = E(-2c1) resp. E* = E(-c1)), which shifts a known b accordingly.
    """
    if E.b is None:
        b = None
    elif E.rank == 1:
        b = E.b - 2 * E.c1
    elif E.rank == 2:
        b = E.b - E.c1
    else:
        b = None
    return BundleDescriptor(E.rank, -E.c1, E.c2, -E.c3, b=b, acm=E.acm)


def twist(E: BundleDescriptor, n: int, X: Hypersurface) -> BundleDescriptor:
    """E(n) = E tensor O_X(n); shifts b by n and preserves the ACM property."""
    if n == 0:
        return E
    ch = to_ch(E, X).mul(ChernCharacter.from_chow(X.exp_h(n)), X)
    bare = from_ch(ch, X)
    return replace(bare, b=None if E.b is None else E.b + n, acm=E.acm)


def tensor(E: BundleDescriptor, F: BundleDescriptor, X: Hypersurface) -> BundleDescriptor:
    """Tensor product via multiplied Chern characters; ranks multiply."""
    if F.rank == 1:
        return twist(E, F.c1, X)
    if E.rank == 1:
        return twist(F, E.c1, X)
    return from_ch(to_ch(E, X).mul(to_ch(F, X), X), X)


def direct_sum(E: BundleDescriptor, F: BundleDescriptor, X: Hypersurface) -> BundleDescriptor:
    """Direct sum: ranks add and total Chern classes multiply (Whitney)."""
    r = X.r
    if E.b is None or F.b is None:
        b = None
    else:
        b = max(E.b, F.b)
    return BundleDescriptor(
        E.rank + F.rank,
        E.c1 + F.c1,
        E.c2 + F.c2 + r * E.c1 * F.c1,
        E.c3 + F.c3 + E.c1 * F.c2 + E.c2 * F.c1,
        b=b,
        acm=E.acm and F.acm,
    )


def chi_hrr(E: BundleDescriptor, X: Hypersurface) -> Fraction:
    """Euler characteristic by Hirzebruch-Riemann-Roch: integral of ch(E).td(X).

    The value is an exact rational; it is an integer whenever the descriptor
    satisfies the parity constraint of an honest bundle class (in particular
    for every bundle appearing in the catalog and analysis modules).
    """
    return integrate(X.mul(to_ch(E, X).to_chow(), X.todd()))


def chi_rank2(c1: int, c2: int) -> Fraction:
    """Closed-form chi for a rank-2 bundle on the quintic threefold (r = 5)."""
    return Fraction(5 * c1**3, 6) - Fraction(c1 * c2, 2) + Fraction(25 * c1, 6)


def _slope_margin(E: BundleDescriptor) -> int:
    if E.b is None:
        raise NormalizationUnknownError(
            "normalization level b is not set; cannot test stability"
        )
    return 2 * E.b - E.c1


def is_semistable(E: BundleDescriptor) -> bool:
    """Section-based semistability for rank 2: 2b - c1 <= 0."""
    return _slope_margin(E) <= 0


def is_stable(E: BundleDescriptor) -> bool:
    """Section-based stability for rank 2: 2b - c1 < 0."""
    return _slope_margin(E) < 0
