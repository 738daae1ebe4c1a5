import pytest

from socular import (
    DomainError,
    collapse,
    collapse_oracle,
    dominates,
    expand,
    is_orbit_partition,
    is_special,
    parse_partition,
    transpose,
)
from socular.partitions import ORBIT_FAMILIES, as_partition, format_partition, partitions_of

from helpers import all_partitions


def test_transpose_examples():
    assert transpose((6,)) == (1, 1, 1, 1, 1, 1)
    assert transpose((7, 5, 5, 3, 3)) == (5, 5, 5, 3, 3, 1, 1)
    # column multiset of the Z-diagram of type (3;1,7)
    assert transpose((5, 3, 3, 3, 3, 3, 2)) == (7, 7, 6, 1, 1)


def test_transpose_involution():
    for p in all_partitions(20):
        assert transpose(transpose(p)) == p


def test_dominates():
    assert dominates((4, 2), (4, 2))
    assert dominates((4, 2), (3, 3))
    assert not dominates((3, 3), (4, 2))


def test_dominates_needs_equal_totals():
    with pytest.raises(DomainError):
        dominates((3, 1), (3,))


def test_as_partition_validation():
    assert as_partition([3, 1]) == (3, 1)
    with pytest.raises(DomainError):
        as_partition((1, 2))
    with pytest.raises(DomainError):
        as_partition((2, 0))


def test_parse_format():
    assert parse_partition("7,5,5,3,3") == (7, 5, 5, 3, 3)
    assert parse_partition("") == ()
    assert format_partition((7, 5, 5, 3, 3)) == "7,5,5,3,3"
    with pytest.raises(DomainError):
        parse_partition("3,5")
    with pytest.raises(DomainError):
        parse_partition("a,b")


def test_is_orbit_partition():
    assert is_orbit_partition((4, 4, 1), "B")
    assert not is_orbit_partition((3, 1), "C")
    assert is_orbit_partition((5, 3, 3, 3, 3, 3, 1, 1), "D")
    assert not is_orbit_partition((3, 1), "B")  # even total
    assert is_orbit_partition((), "C") and is_orbit_partition((), "D")


def test_is_special():
    assert is_special((7, 4, 4, 3, 3, 1, 1, 1, 1), "B")
    assert is_special((5, 3, 3, 3, 3, 3, 1, 1), "D")
    assert not is_special((4, 4, 3, 3, 3), "B")
    with pytest.raises(DomainError):
        is_special((3, 1), "C")


def test_collapse_examples():
    assert collapse((7, 5, 5, 3, 3), "B") == (7, 5, 5, 3, 3)
    assert collapse((5, 3, 3, 3, 3, 3, 2), "D") == (5, 3, 3, 3, 3, 3, 1, 1)
    assert collapse((4, 4, 2), "D") == (4, 4, 1, 1)
    assert collapse((5, 3), "C") == (4, 4)


def test_collapse_parity_error():
    with pytest.raises(DomainError):
        collapse((4, 2), "B")
    with pytest.raises(DomainError):
        collapse((3,), "C")


def test_collapse_properties():
    for p in all_partitions(12):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            c = collapse(p, family)
            assert sum(c) == sum(p)
            assert is_orbit_partition(c, family)
            assert dominates(p, c)
            assert collapse(c, family) == c
            assert (c == p) == is_orbit_partition(p, family)


def test_collapse_matches_oracle_smoke():
    for p in all_partitions(10):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            assert collapse(p, family) == collapse_oracle(p, family)


def test_expand_examples():
    assert expand((2, 1, 1), "C") == (2, 2)
    # golden value frozen from the brute-force search over special partitions of 17
    assert expand((4, 4, 3, 3, 3), "B") == (5, 3, 3, 3, 3)


def test_expand_fixed_on_special():
    for p in all_partitions(12):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            if is_orbit_partition(p, family) and is_special(p, family):
                assert expand(p, family) == p


def test_expand_is_smallest_special_above():
    for p in all_partitions(14):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            if not is_orbit_partition(p, family):
                continue
            e = expand(p, family)
            assert is_special(e, family)
            assert dominates(e, p)
            for q in partitions_of(sum(p)):
                if q == e or not is_orbit_partition(q, family) or not is_special(q, family):
                    continue
                # no special partition strictly between p and its expansion
                if dominates(q, p) and dominates(e, q):
                    assert q == e


def test_expand_matches_transpose_collapse_duality():
    # independent route: conjugate, collapse in the dual family, conjugate back
    for p in all_partitions(14):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            if not is_orbit_partition(p, family):
                continue
            dual = "B" if family == "B" else "C"
            assert expand(p, family) == transpose(collapse(transpose(p), dual))


def test_special_iff_expand_fixed_point():
    for p in all_partitions(12):
        for family in ORBIT_FAMILIES:
            if sum(p) % 2 != (1 if family == "B" else 0):
                continue
            if not is_orbit_partition(p, family):
                continue
            assert is_special(p, family) == (expand(p, family) == p)
