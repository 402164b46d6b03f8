"""Partial Legendre transform and the compactified-moduli pipeline.

The transform of f is the unique g with

    g o (df/dp_1^{(1)}) + f = p_1^{(1)} df/dp_1^{(1)},

an involution on the admissible domain (rank image a x^2 + higher order,
a != 0).  The compactified characteristics are obtained from the open
ones by a weight substitution followed by the transform:

    h_2^{(1)} + ch_t(compactified) = transform(e_2^{(1)} - F),

where F re-grades each open component by weight and cohomological parity.
"""

from fractions import Fraction
from math import factorial

from .interior import InteriorTable
from .partitions import partitions_of
from .plethysm import plethysm1, plethystic_inverse1
from .ring import (
    SymSeries,
    TPoly,
    complete,
    elementary,
    poincare_from,
    powersum,
    rk_hom,
    to_schur_basis,
    zero,
)


def weight_substitution(G):
    """Re-grade by weight: t^{-6} G with t -> 1/t^2 and p_n^{(i)} -> t^{2n} p_n^{(i)}.

    A term c t^i p_lam^{(1)} p_mu^{(2)} of total degree d = |lam| + |mu|
    becomes c t^{2(d-3)-2i} (same monomial).  Negative resulting exponents
    signal an invalid input component.
    """
    out = {}
    for (l1, l2), tp in G.terms.items():
        d = sum(l1) + sum(l2)
        coeffs = {}
        for i, c in tp.items():
            e = 2 * (d - 3) - 2 * i
            if e < 0:
                raise ValueError(
                    f"weight substitution gives negative t-exponent at {(l1, l2)}"
                )
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        new = TPoly(coeffs).truncate(G.trunc.tlo, G.trunc.thi)
        if new:
            out[(l1, l2)] = new
    return SymSeries._raw(G.trunc, out)


def check_admissible(f):
    """Verify f lies in the transform's domain via the rank homomorphism.

    rk(f) must be a x^2 + (x-degree >= 2, total degree >= 3 terms), a != 0.
    """
    rank = rk_hom(f)
    if not rank.get((2, 0)):
        raise ValueError("rank image must have a nonzero x^2 coefficient")
    for (a, b) in rank:
        if (a, b) == (2, 0):
            continue
        if a < 2 or a + b < 3:
            raise ValueError(f"inadmissible rank term x^{a} y^{b}")


def legendre_residual(f, g):
    """g o h + f - p_1 h for h = df/dp_1^{(1)}; zero iff g is the transform."""
    h = f.derivative_p1(factor=1)
    p1 = powersum((1,), f.trunc)
    return plethysm1(g, h) + f - p1 * h


def partial_legendre(f, method="direct"):
    """The partial Legendre transform of f, exact within the truncation.

    method "direct": fixed-point iteration on g = g + (p_1 h - f) - g o h,
    which stabilizes one total degree per pass.  method "inverse": composes
    p_1 h - f with the plethystic inverse of h.  The two routes have
    independent failure modes and are cross-checked in the pipeline.
    """
    check_admissible(f)
    trunc = f.trunc
    h = f.derivative_p1(factor=1)
    p1 = powersum((1,), trunc)
    rhs = p1 * h - f

    if method == "inverse":
        return plethysm1(rhs, plethystic_inverse1(h))
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")

    g = zero(trunc)
    for _ in range(trunc.ntot + 2):
        new = g + rhs - plethysm1(g, h)
        if new == g:
            return g
        g = new
    raise RuntimeError("partial Legendre transform did not converge")


class CompactifiedTable:
    """Components ch_t of the compactified moduli, indexed by (m, n).

    Each component is a polynomial in t^2 with Schur-nonnegative integer
    coefficients, palindromic about t^{m+n-3}.
    """

    def __init__(self, components, bound, trunc):
        self.components = components
        self.bound = bound
        self.trunc = trunc

    def component(self, m, n):
        if m + n > self.bound:
            raise ValueError(f"(m={m}, n={n}) beyond computed bound {self.bound}")
        if m < 2 or m + n < 3:
            return zero(self.trunc)
        return self.components[(m, n)]

    def poincare(self, m, n):
        return poincare_from(self.component(m, n), m, n)


def _validate_component(comp, m, n):
    d = m + n - 3
    schur_coeffs = to_schur_basis(comp)
    by_exp = {}
    for key, tp in schur_coeffs.items():
        for e, c in tp.items():
            if e < 0 or e % 2 != 0:
                raise AssertionError(
                    f"component ({m},{n}) has t-exponent {e}; expected even >= 0"
                )
            if c.denominator != 1 or c < 0:
                raise AssertionError(
                    f"component ({m},{n}) has non-(nonnegative integer) "
                    f"Schur coefficient {c} at {key}, t^{e}"
                )
            by_exp.setdefault(e, {})[key] = c
    for e, vec in by_exp.items():
        mirror = 2 * d - e
        if by_exp.get(mirror, {}) != vec:
            raise AssertionError(f"component ({m},{n}) not palindromic at t^{e}")


def compactified_characteristic(
    N, interior=None, cross_check=True, validate=True
):
    """ch_t of all compactified components with m + n <= N.

    Runs the weight substitution on the open series, applies the partial
    Legendre transform to e_2^{(1)} - F, and subtracts h_2^{(1)}.  When
    cross_check is set the direct graded solve is compared against the
    plethystic-inverse route (the direct solve is authoritative) and the
    defining-equation residual is asserted to vanish.
    """
    interior = interior or InteriorTable(N)
    trunc = interior.trunc
    G = interior.series(N)
    F = weight_substitution(G)
    f = elementary(2, trunc, factor=1) - F

    g = partial_legendre(f, method="direct")
    if cross_check:
        g_inv = partial_legendre(f, method="inverse")
        if g != g_inv:
            raise AssertionError("direct and inverse Legendre routes disagree")
        if not legendre_residual(f, g).is_zero():
            raise AssertionError("Legendre defining-equation residual is nonzero")

    H = g - complete(2, trunc, factor=1)
    components = {}
    for m in range(2, N + 1):
        for n in range(0, N - m + 1):
            if m + n < 3:
                continue
            comp = H.component(m, n)
            if validate:
                _validate_component(comp, m, n)
            components[(m, n)] = comp
    return CompactifiedTable(components, N, trunc)
