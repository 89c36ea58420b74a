from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acmbundles import (
    BundleDescriptor,
    ChernCharacter,
    Hypersurface,
    NormalizationUnknownError,
    NotBundleClassError,
    chi_hrr,
    chi_rank2,
    direct_sum,
    dual,
    from_ch,
    is_semistable,
    is_stable,
    tensor,
    to_ch,
    twist,
)

from strategies import descriptors, hypersurfaces, rank2_descriptors

X5 = Hypersurface(5)

O = BundleDescriptor(1, 0)


def rk2(c1, c2, b=None):
    return BundleDescriptor(2, c1, c2, 0, b=b)


def line(n):
    return BundleDescriptor(1, n)


def binom4(m: int) -> int:
    # C(m, 4) as a polynomial: the product of four consecutive integers is
    # divisible by 24 and non-negative.
    return m * (m - 1) * (m - 2) * (m - 3) // 24


def chi_line_oracle(n: int, r: int) -> int:
    # From 0 -> O_P4(n-r) -> O_P4(n) -> O_X(n) -> 0.
    return binom4(n + 4) - binom4(n + 4 - r)


def test_descriptor_invariants():
    with pytest.raises(ValueError):
        BundleDescriptor(0, 1)
    with pytest.raises(ValueError):
        BundleDescriptor(1, 1, 2)
    with pytest.raises(ValueError):
        BundleDescriptor(2, 1, 8, 7)
    BundleDescriptor(3, 1, 8, 7)  # c3 is free from rank 3 on


def test_to_ch_values():
    assert to_ch(rk2(0, 0), X5) == ChernCharacter(2, 0, 0, 0)
    assert to_ch(rk2(4, 30), X5) == ChernCharacter(2, 4, 10, Fraction(-20, 3))
    assert to_ch(rk2(1, 8), X5) == ChernCharacter(2, 1, Fraction(-11, 2), Fraction(-19, 6))


def test_from_ch_round_trip():
    assert from_ch(ChernCharacter(2, 0, 0, 0), X5) == rk2(0, 0)
    assert from_ch(to_ch(rk2(4, 30), X5), X5) == rk2(4, 30)


def test_tensor_character_is_integral():
    product = tensor(rk2(4, 30), dual(rk2(1, 8)), X5)
    assert product == BundleDescriptor(4, 6, 101, 168)


def test_from_ch_rejects_synthetic_characters():
    with pytest.raises(NotBundleClassError):
        from_ch(ChernCharacter(1, 0, Fraction(1, 3), 0), X5)
    with pytest.raises(NotBundleClassError):
        from_ch(ChernCharacter(Fraction(3, 2), 0, 0, 0), X5)
    with pytest.raises(NotBundleClassError):
        from_ch(ChernCharacter(-1, 0, 0, 0), X5)
    with pytest.raises(NotBundleClassError):
        # Integral, but a rank-1 class cannot carry c2 != 0.
        from_ch(ChernCharacter(1, 0, -3, 0), X5)


def test_dual_rank2_rule():
    assert dual(rk2(1, 8)) == rk2(-1, 8)
    assert dual(rk2(0, 3)) == rk2(0, 3)


def test_dual_shifts_b_through_self_duality():
    assert dual(rk2(4, 30, b=0)) == rk2(-4, 30, b=-4)
    assert dual(line(3)) == line(-3)


@given(descriptors())
def test_dual_is_an_involution(E):
    assert dual(dual(E)) == E


@given(rank2_descriptors(with_b=True))
def test_dual_involution_keeps_b(E):
    assert dual(dual(E)) == E


def test_twist_values():
    F = rk2(4, 30, b=0)
    assert twist(F, -1, X5) == rk2(2, 15, b=-1)
    assert twist(F, 0, X5) == F
    assert twist(rk2(1, 8), 1, X5) == rk2(3, 18)


@given(descriptors(), st.integers(-5, 5), st.integers(-5, 5), hypersurfaces())
def test_twist_composes(E, n, m, X):
    assert twist(twist(E, n, X), m, X) == twist(E, n + m, X)


@given(descriptors(), st.integers(-5, 5), hypersurfaces())
def test_dual_of_twist(E, n, X):
    assert dual(twist(E, n, X)) == twist(dual(E), -n, X)


def test_tensor_with_structure_sheaf_is_identity():
    E = rk2(1, 8, b=0)
    assert tensor(E, O, X5) == E
    assert tensor(O, E, X5) == E


@given(descriptors(), descriptors(), hypersurfaces())
def test_tensor_commutes(E, F, X):
    assert tensor(E, F, X) == tensor(F, E, X)


def test_extension_tensor_euler_characteristics():
    case1 = tensor(rk2(4, 30), dual(rk2(1, 8)), X5)
    assert case1.rank == 4
    assert chi_hrr(case1, X5) == -14
    case7 = tensor(rk2(1, 8), dual(rk2(0, 5)), X5)
    assert case7.rank == 4
    assert chi_hrr(case7, X5) == -3


def test_case_two_tensor_through_the_full_pipeline():
    g = tensor(twist(rk2(4, 30), -1, X5), dual(rk2(0, 3)), X5)
    assert chi_hrr(g, X5) == -6


def test_direct_sum_whitney_values():
    s = direct_sum(rk2(4, 30, b=0), rk2(1, 8, b=0), X5)
    assert (s.rank, s.c1, s.c2, s.c3) == (4, 5, 58, 62)
    assert s.b == 0
    s2 = direct_sum(rk2(2, 15), rk2(0, 3), X5)
    assert (s2.c1, s2.c2, s2.c3) == (2, 18, 6)
    trivial = direct_sum(O, O, X5)
    assert (trivial.rank, trivial.c1, trivial.c2, trivial.c3) == (2, 0, 0, 0)


@given(descriptors(), descriptors(), hypersurfaces())
def test_direct_sum_matches_chow_product_of_total_chern_classes(E, F, X):
    s = direct_sum(E, F, X)
    w = X.mul(E.total_chern(), F.total_chern())
    assert (s.c1, s.c2, s.c3) == (w.a1, w.a2, w.a3)


@given(descriptors(), descriptors(), hypersurfaces())
def test_chi_is_additive_on_sums(E, F, X):
    assert chi_hrr(direct_sum(E, F, X), X) == chi_hrr(E, X) + chi_hrr(F, X)


@given(descriptors(), descriptors(), hypersurfaces())
def test_ch_is_multiplicative_on_tensors(E, F, X):
    lhs = to_ch(tensor(E, F, X), X).to_chow()
    rhs = X.mul(to_ch(E, X).to_chow(), to_ch(F, X).to_chow())
    assert lhs == rhs


@given(descriptors(), hypersurfaces())
def test_ch_round_trip(E, X):
    assert from_ch(to_ch(E, X), X) == E


@given(descriptors(), hypersurfaces())
def test_serre_duality_for_chi(E, X):
    assert chi_hrr(twist(dual(E), X.r - 5, X), X) == -chi_hrr(E, X)


def test_chi_of_structure_sheaf_on_the_quintic():
    assert chi_hrr(O, X5) == 0


def test_chi_line_bundles_against_ideal_sheaf_oracle():
    for r in range(1, 7):
        X = Hypersurface(r)
        for n in range(-10, 11):
            assert chi_hrr(line(n), X) == chi_line_oracle(n, r), (n, r)


def test_chi_rank2_closed_form_values():
    for c2 in range(-5, 20):
        assert chi_rank2(0, c2) == 0
    assert chi_rank2(4, 30) == 10
    assert chi_rank2(2, 14) == 1
    assert chi_rank2(3, 20) == 5


@given(st.integers(-20, 20), st.integers(-200, 200))
def test_chi_rank2_agrees_with_riemann_roch(c1, c2):
    assert chi_rank2(c1, c2) == chi_hrr(rk2(c1, c2), X5)


def test_stability_predicates():
    assert is_stable(rk2(1, 8, b=0))
    assert is_semistable(rk2(0, 3, b=0)) and not is_stable(rk2(0, 3, b=0))
    assert is_stable(rk2(2, 15, b=-1))
    assert not is_semistable(rk2(-2, 1, b=0))


def test_stability_needs_normalization_level():
    with pytest.raises(NormalizationUnknownError):
        is_semistable(rk2(1, 8))
    with pytest.raises(NormalizationUnknownError):
        is_stable(rk2(1, 8))
