"""Acceptance criteria: one test and one terminal summary line per criterion.

Criterion 1 is an intentional, documented red: the published table of
interior (open-moduli) characteristics was printed from the untwisted
slot-product expansion, which is not the character of the cohomology on
conjugacy classes whose colliding-point permutation has cycles of length
greater than one (the cyclic permutation of odd cohomology classes
carries a Koszul sign, so an l-cycle acts through the l-th power of the
diagonal action).  The compactified table, palindromicity, Schur
positivity, and the independent stable-tree oracle all certify the
twisted character, which is what interior_component computes; the
untwisted expansion is still available and is checked verbatim against
the published rows in test_interior.py.
"""

import random
from fractions import Fraction

import pytest

from conftest import record_criterion
from modulichar import InteriorTable, compactified_characteristic
from modulichar.getzler import genus0_characteristic
from modulichar.legendre import (
    legendre_residual,
    partial_legendre,
    weight_substitution,
)
from modulichar.partitions import partitions_of
from modulichar.plethysm import plethysm1
from modulichar.ring import (
    TPoly,
    elementary,
    from_schur_dict,
    poincare_from,
    to_schur_basis,
)
from modulichar.trees import equivariant_treesum, eulerian_number, poincare_oracle
from test_interior import TABLE1
from test_legendre import TABLE2, POINCARE2
from test_plethysm import _random_series

BOUND = 8


@pytest.fixture(scope="module")
def interior8():
    return InteriorTable(BOUND)


@pytest.fixture(scope="module")
def table8(interior8):
    # cross_check and validate are on: the build itself asserts the
    # transform round trip, the residual, Schur-positivity, integrality,
    # and palindromicity of every component
    return compactified_characteristic(BOUND, interior=interior8)


@pytest.fixture(scope="module")
def table9():
    return compactified_characteristic(9, cross_check=False, validate=False)


def test_criterion_1_interior_golden_table(interior8):
    diffs = {}
    for (m, n), expected in TABLE1.items():
        got = to_schur_basis(interior8.component(m, n))
        if got != expected:
            keys = set(got) | set(expected)
            diffs[(m, n)] = {
                k: (got.get(k, TPoly.zero()), expected.get(k, TPoly.zero()))
                for k in keys
                if got.get(k, TPoly.zero()) != expected.get(k, TPoly.zero())
            }
    ok = not diffs
    record_criterion(
        1,
        "interior components match the published interior table verbatim",
        ok,
    )
    assert ok, (
        "known red: the published interior rows use the untwisted "
        "slot-product expansion, which differs from the cohomology's "
        f"character on long colliding-point cycles; diffs: {diffs}"
    )


def test_criterion_2_compactified_golden_table(table8):
    ok = True
    for (m, n), expected in TABLE2.items():
        ok = ok and to_schur_basis(table8.component(m, n)) == expected
        ok = ok and table8.poincare(m, n) == POINCARE2[(m, n)]
    # the arbiter for the corrected (2, 4) row
    ok = ok and table8.poincare(2, 4) == TPoly({0: 1, 2: 11, 4: 11, 6: 1})
    record_criterion(
        2, "compactified components and Poincare column match the published table", ok
    )
    assert ok


def test_criterion_3_interior_poincare_formula(interior8):
    ok = True
    for m in range(3, BOUND + 1):
        for n in range(0, BOUND - m + 1):
            expected = (TPoly.one() - TPoly.term(m - 1, 1)) ** n
            for k in range(2, m - 1):
                expected = expected * (TPoly.one() - TPoly.term(k, 1))
            ok = ok and poincare_from(interior8.component(m, n), m, n) == expected
    record_criterion(
        3, "interior Poincare equals (1-(m-1)t)^n prod_k (1-kt) for m+n <= 8", ok
    )
    assert ok


def test_criterion_4_losev_manin_eulerian(table9):
    ok = True
    for n in range(2, 8):
        poly = table9.poincare(2, n)
        ok = ok and poly == TPoly(
            {2 * k: Fraction(eulerian_number(n, k)) for k in range(n)}
        )
        ok = ok and poly.evaluate(1) == sum(
            eulerian_number(n, k) for k in range(n)
        )
    record_criterion(
        4, "Losev-Manin Poincare coefficients are Eulerian numbers for n <= 7", ok
    )
    assert ok


def test_criterion_5_classical_specialization(table8):
    classical = {
        4: TPoly({0: 1, 2: 1}),
        5: TPoly({0: 1, 2: 5, 4: 1}),
        6: TPoly({0: 1, 2: 16, 4: 16, 6: 1}),
    }
    ok = True
    for m, literal in classical.items():
        oracle = poincare_oracle(m, 0)
        ok = ok and oracle == literal  # the oracle rederives the classical values
        ok = ok and table8.poincare(m, 0) == oracle
    record_criterion(
        5, "n = 0 components reproduce the classical compactified moduli", ok
    )
    assert ok


def test_criterion_6_nonequivariant_oracle(table8):
    ok = True
    for m in range(2, BOUND + 1):
        for n in range(0, BOUND - m + 1):
            if m + n < 3:
                continue
            ok = ok and table8.poincare(m, n) == poincare_oracle(m, n)
    record_criterion(
        6, "pipeline Poincare equals the stable-tree point-count oracle, m+n <= 8", ok
    )
    assert ok


def test_criterion_7_equivariant_oracle():
    interior = InteriorTable(5)
    table = compactified_characteristic(
        5, interior=interior, cross_check=False, validate=False
    )
    W = {
        (a, b): weight_substitution(interior.component(a, b))
        for a in range(2, 6)
        for b in range(0, 6 - a)
        if a + b >= 3
    }
    ok = True
    for m in range(2, 6):
        for n in range(0, 6 - m):
            if m + n < 3:
                continue
            treesum = equivariant_treesum(W, m, n, interior.trunc)
            ok = ok and treesum == table.component(m, n)
    record_criterion(
        7, "pipeline components equal the equivariant tree-sum oracle, m+n <= 5", ok
    )
    assert ok


def test_criterion_8_property_suites(interior8, table8):
    ok = True

    # transform involution and residual at truncation weight 8
    F = weight_substitution(interior8.series(BOUND))
    f = elementary(2, interior8.trunc, factor=1) - F
    g = partial_legendre(f)
    ok = ok and partial_legendre(g) == f
    ok = ok and legendre_residual(f, g).is_zero()

    # Schur-nonnegativity, integrality, palindromicity of every component
    for m in range(2, BOUND + 1):
        for n in range(0, BOUND - m + 1):
            if m + n < 3:
                continue
            d = m + n - 3
            for key, tp in to_schur_basis(table8.component(m, n)).items():
                for e, c in tp.items():
                    ok = ok and e % 2 == 0 and c.denominator == 1 and c >= 0
                    ok = ok and tp[2 * d - e] == c

    # genus-zero product cancellation window
    series = genus0_characteristic(BOUND)
    for n in range(3, BOUND + 1):
        for e in series.component(n).t_exponents():
            ok = ok and 0 <= e <= n - 3

    # Schur <-> power-sum round trips
    for d in range(0, 6):
        for lam in partitions_of(d):
            key = (lam, ())
            f_s = from_schur_dict({key: TPoly.one()}, interior8.trunc)
            ok = ok and to_schur_basis(f_s) == {key: TPoly.one()}

    # composition associativity on randomized samples
    rng = random.Random(20240817)
    from modulichar.ring import Truncation

    trunc = Truncation(4, 3, 0, 6, ntot=4)
    for _ in range(100):
        fa = _random_series(rng, trunc, nonconstant_first=False)
        ga = _random_series(rng, trunc, nonconstant_first=True)
        ha = _random_series(rng, trunc, nonconstant_first=True)
        ok = ok and plethysm1(plethysm1(fa, ga), ha) == plethysm1(
            fa, plethysm1(ga, ha)
        )

    record_criterion(
        8,
        "involution, residual, positivity, palindromicity, vanishing window, "
        "round trips, associativity",
        ok,
    )
    assert ok
