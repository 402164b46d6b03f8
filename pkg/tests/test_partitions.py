"""Partition enumeration, centralizer orders, and symmetric-group characters."""

from math import factorial

from modulichar.partitions import (
    character,
    class_size,
    conjugate,
    cycle_type_of,
    divisors,
    fixed_points,
    hook_lengths,
    irr_dimension,
    mobius,
    partitions_of,
    perm_from_cycle_type,
    sign_of_class,
    z_of,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(partitions_of(n)) == count


def test_partition_order_reverse_lex():
    parts = partitions_of(5)
    assert parts[0] == (5,)
    assert parts[-1] == (1, 1, 1, 1, 1)
    assert list(parts) == sorted(parts, reverse=True)


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(class_size(rho) for rho in partitions_of(n)) == factorial(n)
        for rho in partitions_of(n):
            assert class_size(rho) * z_of(rho) == factorial(n)


def test_z_of_examples():
    assert z_of((1, 1, 1)) == 6
    assert z_of((2, 1)) == 2
    assert z_of((3,)) == 3
    assert z_of((2, 2)) == 8


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)
    assert conjugate(()) == ()


def test_mobius_and_divisors():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_character_small_table():
    # the S_3 character table
    assert character((3,), (1, 1, 1)) == 1
    assert character((3,), (2, 1)) == 1
    assert character((3,), (3,)) == 1
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (2, 1)) == 0
    assert character((2, 1), (3,)) == -1
    assert character((1, 1, 1), (2, 1)) == -1
    # the famous chi^{(2,2)} values
    assert character((2, 2), (1, 1, 1, 1)) == 2
    assert character((2, 2), (2, 1, 1)) == 0
    assert character((2, 2), (2, 2)) == 2
    assert character((2, 2), (3, 1)) == -1
    assert character((2, 2), (4,)) == 0


def test_character_orthogonality():
    for n in range(1, 7):
        lams = partitions_of(n)
        for lam in lams:
            for mu in lams:
                inner = sum(
                    character(lam, rho) * character(mu, rho) * class_size(rho)
                    for rho in lams
                )
                assert inner == (factorial(n) if lam == mu else 0)


def test_hook_dimension_matches_identity_character():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert irr_dimension(lam) == character(lam, (1,) * n)
    assert hook_lengths((2, 2)) == [[3, 2], [2, 1]]


def test_sign_and_fixed_points():
    assert sign_of_class((2, 1)) == -1
    assert sign_of_class((3, 1)) == 1
    assert fixed_points((3, 1, 1)) == 2


def test_dimension_squares_sum():
    for n in range(1, 8):
        assert sum(irr_dimension(l) ** 2 for l in partitions_of(n)) == factorial(n)


def test_perm_cycle_type_round_trip():
    labels = list(range(10, 17))
    for rho in partitions_of(7):
        perm = perm_from_cycle_type(rho, labels)
        assert sorted(perm) == sorted(perm.values()) == labels
        assert cycle_type_of(perm) == rho
