"""Stable-tree enumeration, point-count oracles, and the equivariant tree sum."""

import pytest

from modulichar.legendre import weight_substitution
from modulichar.ring import TPoly, from_schur_dict, poincare_from, to_schur_basis
from modulichar.trees import (
    StableTree,
    census_report,
    enumerate_stable_trees,
    epoly_interior,
    equivariant_treesum,
    eulerian_number,
    poincare_oracle,
    strata_census,
)


def test_tree_counts():
    assert len(enumerate_stable_trees(3, 0)) == 1
    assert len(enumerate_stable_trees(4, 0)) == 4
    assert len(enumerate_stable_trees(2, 2)) == 3
    assert strata_census(4, 0) == [1, 3]
    assert strata_census(2, 2) == [1, 2]
    assert strata_census(3, 2) == [1, 9, 12]


def test_trees_are_unique_and_stable():
    trees = enumerate_stable_trees(4, 1)
    assert len(set(trees)) == len(trees)
    for tree in trees:
        for a, b in tree.vertex_signatures():
            assert a >= 2 and a + b >= 3
        # leaf sets partition the labels
        verts, edges = tree.flat_graph()
        labels = [x for v in verts for x in v]
        assert sorted(labels) == list(range(1, 6))
        assert len(edges) == len(verts) - 1


def test_epoly_examples():
    q = TPoly.term(1, 1)
    assert epoly_interior(3, 0) == TPoly.one()
    assert epoly_interior(2, 2) == q - 1
    assert epoly_interior(4, 1) == (q - 2) * (q - 3)
    assert epoly_interior(4, 0) == q - 2
    with pytest.raises(ValueError):
        epoly_interior(1, 5)


def test_poincare_oracle_examples():
    t2 = TPoly.term(1, 2)
    assert poincare_oracle(2, 2) == TPoly.one() + t2
    assert poincare_oracle(2, 3) == TPoly({0: 1, 2: 4, 4: 1})
    assert poincare_oracle(5, 0) == TPoly({0: 1, 2: 5, 4: 1})


def test_poincare_oracle_palindromic():
    for m in range(2, 7):
        for n in range(0, 7 - m):
            if m + n < 3:
                continue
            poly = poincare_oracle(m, n)
            d = 2 * (m + n - 3)
            assert all(poly[e] == poly[d - e] for e in range(0, d + 1, 2)), (m, n)


def test_losev_manin_eulerian_h_vector():
    for n in range(2, 6):
        poly = poincare_oracle(2, n)
        for k in range(n):
            assert poly[2 * k] == eulerian_number(n, k)


def test_eulerian_numbers():
    assert [eulerian_number(4, k) for k in range(4)] == [1, 11, 11, 1]
    assert sum(eulerian_number(5, k) for k in range(5)) == 120


def test_census_report_schema():
    report = census_report(4, 1)
    assert report == {
        "m": 4,
        "n": 1,
        "strata_by_codim": [1, 10, 15],
        "poincare": [1, 5, 1],
    }


def _weighted_table(interior, bound):
    return {
        (a, b): weight_substitution(interior.component(a, b))
        for a in range(2, bound + 1)
        for b in range(0, bound - a + 1)
        if a + b >= 3
    }


def test_treesum_hand_checked_2_2(interior6):
    W = _weighted_table(interior6, 4)
    got = equivariant_treesum(W, 2, 2, interior6.trunc)
    # one-vertex tree gives t^2 s_2 s_2 - s_{1,1} s_{1,1}; the two 2-vertex
    # trees give s_2 s_2 + s_{1,1} s_{1,1}
    assert to_schur_basis(got) == {
        ((2,), (2,)): TPoly({0: 1, 2: 1}),
    }


def test_treesum_single_tree_at_weight_three(interior6):
    W = _weighted_table(interior6, 4)
    for m, n in [(3, 0), (2, 1)]:
        got = equivariant_treesum(W, m, n, interior6.trunc)
        assert got == W[(m, n)], (m, n)


def test_treesum_zero_input(interior6):
    from modulichar.ring import zero

    W = {
        (a, b): zero(interior6.trunc)
        for a in range(2, 5)
        for b in range(0, 5 - a)
        if a + b >= 3
    }
    assert equivariant_treesum(W, 2, 2, interior6.trunc).is_zero()


def test_treesum_missing_component_errors(interior6):
    W = _weighted_table(interior6, 4)
    del W[(2, 2)]
    with pytest.raises(ValueError):
        equivariant_treesum(W, 2, 2, interior6.trunc)


def test_treesum_specializes_to_point_count_oracle(interior6):
    W = _weighted_table(interior6, 5)
    for m in range(2, 6):
        for n in range(0, 6 - m):
            if m + n < 3:
                continue
            ch = equivariant_treesum(W, m, n, interior6.trunc)
            assert poincare_from(ch, m, n) == poincare_oracle(m, n), (m, n)
