"""The genus-zero product formula for the moduli of distinct points."""

from fractions import Fraction

import pytest

from modulichar.getzler import genus0_characteristic, r_exponent
from modulichar.ring import TPoly, poincare_from, to_schur_basis


def test_r_exponent_values():
    assert r_exponent(1) == TPoly({-1: Fraction(1)})
    assert r_exponent(2) == TPoly({-2: Fraction(1, 2), -1: Fraction(-1, 2)})
    assert r_exponent(6) == TPoly(
        {
            -6: Fraction(1, 6),
            -3: Fraction(-1, 6),
            -2: Fraction(-1, 6),
            -1: Fraction(1, 6),
        }
    )


def test_small_components_in_schur_basis():
    series = genus0_characteristic(5)

    def schur_of(n):
        return {
            lam1: tp
            for (lam1, _), tp in to_schur_basis(series.component(n)).items()
        }

    assert schur_of(3) == {(3,): TPoly.one()}
    assert schur_of(4) == {(4,): TPoly.one(), (2, 2): TPoly.term(-1, 1)}
    assert schur_of(5) == {
        (5,): TPoly.one(),
        (3, 2): TPoly.term(-1, 1),
        (3, 1, 1): TPoly.term(1, 2),
    }


def test_vanishing_window():
    series = genus0_characteristic(8)
    for n in range(3, 9):
        for e in series.component(n).t_exponents():
            assert 0 <= e <= n - 3


def test_poincare_of_open_configurations():
    # the open moduli of n distinct points has Poincare prod_{k=2}^{n-2} (1 - kt)
    series = genus0_characteristic(8)
    for n in range(3, 9):
        expected = TPoly.one()
        for k in range(2, n - 1):
            expected = expected * (TPoly.one() - TPoly.term(k, 1))
        # the Poincare specialization uses (-t)^i ch(H^i), so signs alternate
        assert poincare_from(series.component(n), n, 0) == expected


def test_rejects_tiny_bound():
    with pytest.raises(ValueError):
        genus0_characteristic(2)
