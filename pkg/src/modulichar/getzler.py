"""Equivariant characteristic of the open genus-zero moduli of curves.

The S_n-equivariant Poincare polynomials of the spaces of n distinct
points on P^1 modulo PGL(2) are assembled from the product formula

    kappa( (1 + t p_1)/(1 - t^2) * prod_n (1 + t^n p_n)^{R_n(t)} ),

where R_n(t) = (1/n) sum_{d | n} mu(n/d) t^{-d} and kappa kills the
components of degree at most 2.  The cancellation making this expression
polynomial is verified, not assumed: every degree-n component must have
its t exponents confined to [0, n-3].
"""

from fractions import Fraction

from .partitions import divisors, mobius
from .ring import (
    SymSeries,
    TPoly,
    Truncation,
    one,
    powersum,
    series_pow,
    zero,
)


def r_exponent(n):
    """The Laurent polynomial R_n(t) = (1/n) sum_{d | n} mu(n/d) / t^d."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = {}
    for d in divisors(n):
        c = Fraction(mobius(n // d), n)
        if c:
            coeffs[-d] = coeffs.get(-d, Fraction(0)) + c
    return TPoly(coeffs)


def kappa(f):
    """Zero out the components of p-degree 0, 1 and 2; identity on the rest."""
    out = {
        k: v for k, v in f.terms.items() if sum(k[0]) + sum(k[1]) >= 3
    }
    return SymSeries._raw(f.trunc, out)


class Genus0Series:
    """Per-arity components of the genus-zero open-moduli characteristic.

    table[n] is the degree-n symmetric function (first tensor factor),
    a polynomial in t with exponents in [0, n-3].
    """

    def __init__(self, table, bound):
        self.table = table
        self.bound = bound

    def component(self, n):
        if n > self.bound:
            raise ValueError(f"component {n} beyond computed bound {self.bound}")
        return self.table.get(n)


def genus0_characteristic(N, _tlo=None, _thi=None):
    """Expand the product formula exactly to p-degree N.

    The infinite product is cut at n = N since the n-th factor contributes
    p-degree >= n; 1/(1 - t^2) is a truncated geometric series.  The
    t-window starts at [-N, 2N] and is widened automatically if the
    vanishing check fails.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    tlo = -N if _tlo is None else _tlo
    thi = 2 * N if _thi is None else _thi
    trunc = Truncation(N, 0, tlo, thi, ntot=N)

    product = one(trunc)
    for n in range(1, N + 1):
        base = one(trunc) + powersum((n,), trunc) * TPoly.term(1, n)
        product = product * series_pow(base, r_exponent(n))

    # (1 + t p_1) / (1 - t^2)
    geom = SymSeries(
        trunc, {((), ()): TPoly({2 * k: Fraction(1) for k in range(thi // 2 + 1)})}
    )
    linear = one(trunc) + powersum((1,), trunc) * TPoly.term(1, 1)
    full = kappa(product * linear * geom)

    table = {}
    ok = True
    for n in range(3, N + 1):
        comp = full.component(n, 0)
        for e in comp.t_exponents():
            if e < 0 or e > n - 3:
                ok = False
        table[n] = comp
    if not ok:
        # cancellation failed within the window: widen and retry
        return genus0_characteristic(N, _tlo=tlo - N, _thi=thi + N)
    return Genus0Series(table, N)
