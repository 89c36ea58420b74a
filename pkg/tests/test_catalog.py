import pytest

from acmbundles import BundleDescriptor, catalog, chi_rank2, h0_acm_twist, lookup
from acmbundles.catalog import FAMILY_A, FAMILY_B


def test_catalog_has_fourteen_fixed_entries():
    entries = catalog()
    assert len(entries) == 14
    assert [e.pair for e in entries] == list(FAMILY_A) + list(FAMILY_B)
    assert sum(1 for e in entries if e.family == "A") == 9
    assert sum(1 for e in entries if e.family == "B") == 5


def test_existence_metadata():
    for e in catalog():
        if e.family == "A":
            assert e.exists_on_general is True
        else:
            assert e.exists_on_general == "conditional"


def test_chi_statistics():
    chis = {e.pair: e.chi for e in catalog()}
    assert chis[(4, 30)] == 10
    assert chis[(3, 20)] == 5
    assert chis[(-2, 1)] == -14
    assert chis[(-1, 2)] == -4
    assert all(chis[(0, c2)] == 0 for c2 in (3, 4, 5))
    positive_c1 = [e.chi for e in catalog() if e.c1 >= 1]
    assert positive_c1 == [3, 2, 1, 10, 4, 3, 2, 1, 5]
    assert all(chi >= 1 for chi in positive_c1)


def test_h0_statistics():
    for e in catalog():
        assert e.h0 == h0_acm_twist(e, 0)
        if e.c1 >= 1:
            assert e.h0 == e.chi
        elif e.c1 == 0:
            assert e.h0 == 1
        else:
            assert e.h0 is None


def test_stability_partition():
    unstable = [e.pair for e in catalog() if not e.semistable]
    assert unstable == [(-2, 1), (-1, 2)]
    for e in catalog():
        assert e.stable == (e.c1 >= 1)
        if e.c1 == 0:
            assert e.semistable and not e.stable


def test_descriptor_is_normalized_acm():
    d = lookup(4, 30).descriptor()
    assert d == BundleDescriptor(2, 4, 30, 0, b=0, acm=True)
    assert d.normalized


def test_lookup():
    assert lookup(4, 30) is not None and lookup(4, 30).family == "A"
    assert lookup(2, 15) is None  # a twist like F(-1), not a catalog bundle
    assert lookup(3, 19) is None


def test_h0_twist_oracle_values():
    assert h0_acm_twist(lookup(4, 30), -1) == 0
    assert h0_acm_twist(lookup(2, 14), 0) == 1
    assert h0_acm_twist(lookup(0, 4), 0) == 1
    assert h0_acm_twist(lookup(2, 13), 0) == 2
    assert h0_acm_twist(lookup(0, 5), 0) == 1
    # the pairs behind the section-count exclusions
    assert h0_acm_twist(lookup(2, 14), 0) + h0_acm_twist(lookup(0, 4), 0) == 2
    assert h0_acm_twist(lookup(2, 13), 0) + h0_acm_twist(lookup(0, 5), 0) == 3


def test_h0_twist_oracle_positive_twists_use_chi():
    assert h0_acm_twist(lookup(0, 5), 1) == chi_rank2(2, 10) == 5
    assert h0_acm_twist(lookup(-2, 1), 3) == chi_rank2(4, 16) == 38


def test_h0_twist_oracle_undetermined_cases():
    assert h0_acm_twist(lookup(-2, 1), 0) is None
    assert h0_acm_twist(lookup(-2, 1), 2) is None  # c1 + n = 0 is not enough
    assert h0_acm_twist(lookup(-1, 2), 0) is None
    assert h0_acm_twist(lookup(-1, 2), 1) is None


def test_h0_twist_oracle_accepts_normalized_descriptors_only():
    assert h0_acm_twist(BundleDescriptor(2, 4, 30, 0, b=0), -1) == 0
    with pytest.raises(ValueError):
        h0_acm_twist(BundleDescriptor(2, 4, 30, 0), 0)  # b unset
    with pytest.raises(ValueError):
        h0_acm_twist(BundleDescriptor(2, 2, 15, 0, b=-1), 0)  # not normalized
    with pytest.raises(ValueError):
        h0_acm_twist(BundleDescriptor(1, 1, 0, 0, b=0), 0)  # wrong rank
