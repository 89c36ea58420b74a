"""Extension table and splitting-exclusion analysis for rank-4 bundles.

Rank-4 bundles without intermediate cohomology arise on the quintic threefold
as extensions

    0 -> F(m) -> G -> E -> 0,    m <= 0,

of catalog bundles E by twisted catalog bundles F(m).  Whenever
chi(F(m) tensor E*) < 0 the extension space Ext^1(E, F(m)) is nonempty: its
dimension is h1(F(m) tensor E*), and once h3 vanishes the Euler
characteristic bounds it from below by -chi.  Seven (F, E, m) triples make
this work:

    (1) F=(4,30)  E=(1,8)  m=0      (5) F=(1,8)  E=(0,3)  m=0
    (2) F=(4,30)  E=(0,3)  m=-1     (6) F=(1,8)  E=(0,4)  m=0
    (3) F=(4,30)  E=(0,4)  m=-1     (7) F=(1,8)  E=(0,5)  m=0
    (4) F=(4,30)  E=(0,5)  m=-1

All chi values are computed through the Riemann-Roch pipeline, never stored.

The splitting engine then certifies that a nontrivial extension G cannot be a
direct sum of two rank-2 catalog bundles.  Candidate pairs {G1, G2} are
normalized catalog entries whose c1 values add up to c1(G); each one is
disposed of by the first applicable filter:

* ``chern-mismatch``  — the Whitney sum of (c1, c2) misses (c1(G), c2(G));
* ``trivial-split``   — the pair is exactly {F(m), E}, which a nontrivial
  extension class rules out;
* ``h0-mismatch``     — section counts differ: an extension of ACM bundles
  has h0(G) = h0(F(m)) + h0(E), while a sum has h0(G1) + h0(G2);
* ``undecided``       — no numeric filter applies (never happens in the
  seven table cases).

A case report keeps the Whitney survivors as its verdict list; pairs rejected
on Chern classes are carried separately for auditing, each flagged with
whether its c1 values avoid {c1(F(m)), c1(E)} entirely (pairs that do not are
independently excluded by a slope-stability argument, so the Chern rejection
is informative exactly for the c1-disjoint ones).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .bundles import BundleDescriptor, chi_hrr, chi_rank2, direct_sum, dual, tensor, twist
from .catalog import CatalogEntry, catalog, h0_acm_twist, lookup
from .chowring import Hypersurface

__all__ = [
    "QUINTIC",
    "ExtensionCase",
    "SplitVerdict",
    "CaseReport",
    "VanishingConditions",
    "UnsupportedDegreeError",
    "BoundNotJustifiedError",
    "FILTER_CHERN_MISMATCH",
    "FILTER_TRIVIAL_SPLIT",
    "FILTER_H0_MISMATCH",
    "FILTER_UNDECIDED",
    "CONCLUSION_INDECOMPOSABLE",
    "CONCLUSION_INCONCLUSIVE",
    "build_case",
    "extension_cases",
    "vanishing_conditions",
    "ext1_lower_bound",
    "enumerate_split_candidates",
    "analyze_case",
    "analyze_extension",
]

QUINTIC = Hypersurface(5)

FILTER_CHERN_MISMATCH = "chern-mismatch"
FILTER_TRIVIAL_SPLIT = "trivial-split"
FILTER_H0_MISMATCH = "h0-mismatch"
FILTER_UNDECIDED = "undecided"

CONCLUSION_INDECOMPOSABLE = "indecomposable-by-numeric-filters"
CONCLUSION_INCONCLUSIVE = "inconclusive"

NOTE_H0_CONVENTION = (
    "h0 counts for c1 = 0 entries use the normalized-bundle convention h0 = 1; "
    "every exclusion recorded here also holds under the alternative convention h0 = 0."
)

_TABLE_ROWS: tuple[tuple[tuple[int, int], tuple[int, int], int], ...] = (
    ((4, 30), (1, 8), 0),
    ((4, 30), (0, 3), -1),
    ((4, 30), (0, 4), -1),
    ((4, 30), (0, 5), -1),
    ((1, 8), (0, 3), 0),
    ((1, 8), (0, 4), 0),
    ((1, 8), (0, 5), 0),
)


class UnsupportedDegreeError(ValueError):
    """The catalog-backed analysis only exists on the quintic (r = 5)."""


class BoundNotJustifiedError(ValueError):
    """The Ext^1 lower bound needs the h3-vanishing hypothesis."""


@dataclass(frozen=True)
class VanishingConditions:
    """Arithmetic vanishing hypotheses for the extension space of (F, E, m).

    ``h3_zero``: c1(F) + m > 0, equivalently h0(F*(-m)) = 0 by normalization,
    which forces h3(F(m) tensor E*) = 0.
    ``ideal_vanishing``: c1(E) - c1(F) - m < 0, equivalently
    h0(F*(c1(E) - m)) = 0 by normalization.
    """

    h3_zero: bool
    ideal_vanishing: bool


@dataclass(frozen=True)
class ExtensionCase:
    """One (F, E, m) extension datum with its derived invariants."""

    index: int | None
    F: CatalogEntry
    E: CatalogEntry
    m: int
    chi_tensor: int
    d_lower: int
    F_twisted: BundleDescriptor
    G: BundleDescriptor

    @property
    def g_chern(self) -> tuple[int, int, int]:
        return self.G.chern_tuple()


@dataclass(frozen=True)
class SplitVerdict:
    """One candidate decomposition {G1, G2} and the filter that disposed of it."""

    pair: tuple[CatalogEntry, CatalogEntry]
    sum_chern: tuple[int, int, int]
    filter: str
    details: dict

    @property
    def pair_key(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.pair[0].pair, self.pair[1].pair)


@dataclass(frozen=True)
class CaseReport:
    """Full analysis of one extension case.

    ``verdicts`` holds the Whitney (c1, c2) survivors; ``rejected`` holds the
    chern-mismatch verdicts for the remaining c1-compatible pairs.  The
    conclusion is ``indecomposable-by-numeric-filters`` exactly when the
    rank-1-summand hypothesis holds and no surviving verdict is undecided.
    """

    case: ExtensionCase
    rank1_hypothesis_ok: bool
    verdicts: tuple[SplitVerdict, ...]
    rejected: tuple[SplitVerdict, ...]
    conclusion: str
    notes: tuple[str, ...] = ()


def _int_of(q: Fraction) -> int:
    assert q.denominator == 1, q
    return int(q)


def build_case(
    F: CatalogEntry,
    E: CatalogEntry,
    m: int,
    X: Hypersurface = QUINTIC,
    index: int | None = None,
) -> ExtensionCase:
    """Assemble the extension datum for 0 -> F(m) -> G -> E -> 0."""
    if m > 0:
        raise ValueError(f"extension twist m must be non-positive, got {m}")
    Fm = twist(F.descriptor(), m, X)
    chi_t = _int_of(chi_hrr(tensor(Fm, dual(E.descriptor()), X), X))
    G = direct_sum(Fm, E.descriptor(), X)
    return ExtensionCase(
        index=index,
        F=F,
        E=E,
        m=m,
        chi_tensor=chi_t,
        d_lower=max(0, -chi_t),
        F_twisted=Fm,
        G=G,
    )


def _entry(pair: tuple[int, int]) -> CatalogEntry:
    entry = lookup(*pair)
    assert entry is not None, pair
    return entry


@lru_cache(maxsize=None)
def extension_cases(X: Hypersurface = QUINTIC) -> tuple[ExtensionCase, ...]:
    """The seven extension cases, with chi computed through Riemann-Roch."""
    if X.r != 5:
        raise UnsupportedDegreeError(
            f"the extension table requires degree 5, got {X.r}"
        )
    return tuple(
        build_case(_entry(f), _entry(e), m, X, index=i)
        for i, (f, e, m) in enumerate(_TABLE_ROWS, start=1)
    )


def vanishing_conditions(F: CatalogEntry, E: CatalogEntry, m: int) -> VanishingConditions:
    """Evaluate both vanishing hypotheses for normalized F and E."""
    return VanishingConditions(
        h3_zero=F.c1 + m > 0,
        ideal_vanishing=E.c1 - F.c1 - m < 0,
    )


def ext1_lower_bound(case: ExtensionCase) -> int:
    """Lower bound max(0, -chi) for dim Ext^1(E, F(m)).

    Valid only under the h3-vanishing hypothesis: then
    h1 = h0 + h2 - chi >= -chi.
    """
    if not vanishing_conditions(case.F, case.E, case.m).h3_zero:
        raise BoundNotJustifiedError(
            "bound not justified: h3-vanishing hypothesis c1(F) + m > 0 fails"
        )
    return max(0, -case.chi_tensor)


def _h0_report(entry: CatalogEntry, n: int) -> tuple[int | None, bool]:
    # Second component: whether the c1 = 0 section-count convention was used.
    value = h0_acm_twist(entry, n)
    return value, entry.c1 == 0 and n == 0


def _classify(
    case: ExtensionCase,
    entries: tuple[CatalogEntry, ...],
    X: Hypersurface,
) -> tuple[list[SplitVerdict], list[SplitVerdict], bool]:
    """Split candidate pairs into Whitney survivors and Chern rejections.

    Returns (survivors, rejected, used_h0_convention); both verdict lists are
    sorted by the (c1, c2) pairs of their members, so the outcome does not
    depend on the order of ``entries``.
    """
    G = case.G
    Fm = case.F_twisted
    target_pairs = sorted([(Fm.c1, Fm.c2), (case.E.c1, case.E.c2)])
    target_c1s = {Fm.c1, case.E.c1}
    chi_target = _int_of(chi_hrr(G, X))

    survivors: list[SplitVerdict] = []
    rejected: list[SplitVerdict] = []
    used_convention = False

    pool = sorted(entries, key=lambda entry: entry.pair)
    for P, Q in combinations_with_replacement(pool, 2):
        if P.c1 + Q.c1 != G.c1:
            continue
        c2_sum = P.c2 + Q.c2 + X.r * P.c1 * Q.c1
        c3_sum = P.c1 * Q.c2 + P.c2 * Q.c1
        sum_chern = (P.c1 + Q.c1, c2_sum, c3_sum)
        chi_sum = _int_of(chi_rank2(P.c1, P.c2) + chi_rank2(Q.c1, Q.c2))
        base_details = {
            "c2_sum": c2_sum,
            "c2_target": G.c2,
            "c3_sum": c3_sum,
            "c3_target": G.c3,
            "chi_sum": chi_sum,
            "chi_target": chi_target,
        }
        if c2_sum != G.c2:
            rejected.append(
                SplitVerdict(
                    pair=(P, Q),
                    sum_chern=sum_chern,
                    filter=FILTER_CHERN_MISMATCH,
                    details=base_details
                    | {"c1_disjoint": not ({P.c1, Q.c1} & target_c1s)},
                )
            )
            continue
        if sorted([P.pair, Q.pair]) == target_pairs:
            survivors.append(
                SplitVerdict(
                    pair=(P, Q),
                    sum_chern=sum_chern,
                    filter=FILTER_TRIVIAL_SPLIT,
                    details=base_details,
                )
            )
            continue
        h0_Fm, conv_f = _h0_report(case.F, case.m)
        h0_E, conv_e = _h0_report(case.E, 0)
        h0_P, conv_p = _h0_report(P, 0)
        h0_Q, conv_q = _h0_report(Q, 0)
        used_convention = used_convention or conv_f or conv_e or conv_p or conv_q
        h0_details = base_details | {
            "h0_F_m": h0_Fm,
            "h0_E": h0_E,
            "h0_pair": [h0_P, h0_Q],
        }
        if None in (h0_Fm, h0_E, h0_P, h0_Q):
            verdict = SplitVerdict(
                pair=(P, Q),
                sum_chern=sum_chern,
                filter=FILTER_UNDECIDED,
                details=h0_details | {"reason": "h0 undetermined"},
            )
        else:
            lhs = h0_Fm + h0_E
            rhs = h0_P + h0_Q
            h0_details |= {"h0_lhs": lhs, "h0_rhs": rhs}
            if lhs != rhs:
                verdict = SplitVerdict(
                    pair=(P, Q),
                    sum_chern=sum_chern,
                    filter=FILTER_H0_MISMATCH,
                    details=h0_details,
                )
            else:
                verdict = SplitVerdict(
                    pair=(P, Q),
                    sum_chern=sum_chern,
                    filter=FILTER_UNDECIDED,
                    details=h0_details | {"reason": "all numeric filters agree"},
                )
        survivors.append(verdict)

    survivors.sort(key=lambda v: v.pair_key)
    rejected.sort(key=lambda v: v.pair_key)
    return survivors, rejected, used_convention


def enumerate_split_candidates(
    case: ExtensionCase,
    include_rejected: bool = False,
    entries: tuple[CatalogEntry, ...] | None = None,
    X: Hypersurface = QUINTIC,
) -> list[SplitVerdict]:
    """Verdicts for all candidate decompositions G = G1 + G2.

    By default only the pairs passing the Whitney (c1, c2) comparison are
    returned; ``include_rejected`` appends the chern-mismatch verdicts for
    the other c1-compatible pairs.
    """
    survivors, rejected, _ = _classify(case, entries or catalog(), X)
    return survivors + rejected if include_rejected else survivors


def _report(case: ExtensionCase, X: Hypersurface) -> CaseReport:
    survivors, rejected, used_convention = _classify(case, catalog(), X)
    rank1_ok = vanishing_conditions(case.F, case.E, case.m).h3_zero
    undecided = any(v.filter == FILTER_UNDECIDED for v in survivors)
    return CaseReport(
        case=case,
        rank1_hypothesis_ok=rank1_ok,
        verdicts=tuple(survivors),
        rejected=tuple(rejected),
        conclusion=(
            CONCLUSION_INDECOMPOSABLE
            if rank1_ok and not undecided
            else CONCLUSION_INCONCLUSIVE
        ),
        notes=(NOTE_H0_CONVENTION,) if used_convention else (),
    )


def analyze_case(index: int, X: Hypersurface = QUINTIC) -> CaseReport:
    """Analyze one of the seven table cases (1-based index)."""
    cases = extension_cases(X)
    if not 1 <= index <= len(cases):
        raise ValueError(f"case index must be in 1..{len(cases)}, got {index}")
    return _report(cases[index - 1], X)


def analyze_extension(
    F: CatalogEntry,
    E: CatalogEntry,
    m: int,
    X: Hypersurface = QUINTIC,
) -> CaseReport:
    """Analyze an arbitrary (F, E, m) extension of catalog bundles.

    Unlike the seven table cases this may legitimately come back
    inconclusive, e.g. when a surviving candidate needs a section count the
    numerics cannot determine.
    """
    if X.r != 5:
        raise UnsupportedDegreeError(
            f"the catalog-backed analysis requires degree 5, got {X.r}"
        )
    return _report(build_case(F, E, m, X), X)
