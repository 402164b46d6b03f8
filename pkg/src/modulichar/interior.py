"""Equivariant characteristics of the open moduli of weighted pointed curves.

The (m, n) open component with m >= 3 is a product: the moduli of m
distinct points times the n-fold product of an m-punctured line, with the
second symmetric group permuting the factors of the power.  Its graded
character at a class pair (sigma, tau) is therefore a product over the
cycles of tau,

    chi_t(sigma) * prod_{l-cycles of tau} (1 - t^l chi_V(sigma^l)),

where chi_t is the graded character of the m-point factor and V is the
standard (m-1)-dimensional representation carried by H^1 of the punctured
line.  The Frobenius twist sigma -> sigma^l comes from the Koszul sign of
cyclically permuting l odd classes: an l-cycle acting on the l-th tensor
power of a graded space contributes the supertrace of the l-th power of
the diagonal action, with t -> t^l.

untwisted_interior_component computes the same expansion with
chi_V(sigma)^l in place of chi_V(sigma^l); equivalently the D-operator
sum

    sum_{l=0}^{n} (-t)^l (D^l m_m)^{(1)} * (e_l h_{n-l})^{(2)},

with D = p_1 d/dp_1 - 1.  The two agree on classes whose second part is
an identity permutation (in particular non-equivariantly and for n <= 1)
but differ on longer cycles, where the untwisted sum is not the character
of the cohomology; it is retained as a reference expansion.

The m = 2 components are the torus quotients (Losev-Manin interiors) and
use the wedge powers of the standard representation directly.
"""

from fractions import Fraction
from functools import lru_cache

from .getzler import genus0_characteristic
from .partitions import multiplicities, partitions_of, z_of
from .ring import (
    SymSeries,
    TPoly,
    Truncation,
    complete,
    elementary,
    schur,
    zero,
)


def wedge_perm_char(n, l, trunc):
    """ch of the l-th exterior power of the n-letter permutation representation.

    Equals e_l * h_{n-l} in the second tensor factor; for 0 < l < n this is
    s_{(n-l,1^l)} + s_{(n-l+1,1^{l-1})}, and the boundary cases l = 0, l = n
    give h_n and e_n.
    """
    if not 0 <= l <= n:
        raise ValueError("need 0 <= l <= n")
    return elementary(l, trunc, factor=2) * complete(n - l, trunc, factor=2)


def _hook(n, k):
    """The hook partition (n-k, 1^k)."""
    if k == 0:
        return (n,)
    return (n - k,) + (1,) * k


def standard_char_power(rho, l):
    """chi_V(sigma^l) for sigma of cycle type rho, V the standard representation.

    The power of an a-cycle splits into gcd(a, l) cycles, so the fixed-point
    count of sigma^l is the total length of the parts of rho dividing l.
    """
    fixed = sum(d * mult for d, mult in multiplicities(rho).items() if l % d == 0)
    return fixed - 1


class InteriorTable:
    """Components ch_t of the open moduli, indexed by (m, n)."""

    def __init__(self, bound, trunc=None):
        if bound < 3:
            raise ValueError("bound must be at least 3")
        self.bound = bound
        self.trunc = trunc or Truncation(bound, bound, 0, 2 * bound, ntot=bound)
        self._genus0 = genus0_characteristic(bound)

    def genus0_component(self, m):
        """The degree-m genus-zero component, rebuilt in the working truncation."""
        comp = self._genus0.component(m)
        return SymSeries(self.trunc, dict(comp.terms))

    @lru_cache(maxsize=None)
    def component(self, m, n):
        """ch_t of the (m, n) open component; zero when m < 2 or m + n < 3."""
        if m + n > self.bound:
            raise ValueError(f"(m={m}, n={n}) beyond computed bound {self.bound}")
        if m < 2 or m + n < 3:
            return zero(self.trunc)
        if m == 2:
            return self.losev_manin_component(n)
        return self.interior_component(m, n)

    def interior_component(self, m, n):
        """The m >= 3 component via the cycle-product character formula."""
        if m < 3 or m + n < 3:
            raise ValueError("interior_component requires m >= 3 and m + n >= 3")
        base = self.genus0_component(m)
        terms = {}
        for rho1 in partitions_of(m):
            chi = base.coefficient(rho1) * z_of(rho1)
            if not chi:
                continue
            for rho2 in partitions_of(n):
                val = chi
                for l in rho2:
                    val = val * (
                        TPoly.one() - TPoly.term(standard_char_power(rho1, l), l)
                    )
                val = val * Fraction(1, z_of(rho1) * z_of(rho2))
                if val:
                    terms[(rho1, rho2)] = val
        return SymSeries(self.trunc, terms)

    def untwisted_interior_component(self, m, n):
        """The D-operator expansion, without the cycle Frobenius twist."""
        if m < 3 or m + n < 3:
            raise ValueError("need m >= 3 and m + n >= 3")
        total = zero(self.trunc)
        d_power = self.genus0_component(m)
        for l in range(0, n + 1):
            piece = d_power * wedge_perm_char(n, l, self.trunc)
            total = total + piece.map_coeffs(
                lambda tp, l=l: tp * TPoly.term((-1) ** l, l)
            )
            d_power = d_power.d_op(factor=1)
        return total

    def losev_manin_component(self, n):
        """The m = 2 component: wedge powers of the torus quotient H^1.

        H^k is the k-th wedge of sign tensor standard, i.e. the sign power
        of the first factor times the hook s_{(n-k,1^k)} in the second.
        """
        if n < 1:
            raise ValueError("losev_manin_component requires n >= 1")
        total = zero(self.trunc)
        for k in range(0, n):
            lam1 = (2,) if k % 2 == 0 else (1, 1)
            piece = schur(lam1, self.trunc, factor=1) * schur(
                _hook(n, k), self.trunc, factor=2
            )
            total = total + piece.map_coeffs(
                lambda tp, k=k: tp * TPoly.term((-1) ** k, k)
            )
        return total

    def series(self, N=None):
        """Sum of all components with m + n <= N (the full generating function)."""
        N = self.bound if N is None else N
        if N > self.bound:
            raise ValueError("series bound exceeds table bound")
        total = zero(self.trunc)
        for m in range(2, N + 1):
            for n in range(0, N - m + 1):
                total = total + self.component(m, n)
        return total

    def untwisted_series(self, N=None):
        """Sum of the untwisted m >= 3 components together with the m = 2 ones."""
        N = self.bound if N is None else N
        if N > self.bound:
            raise ValueError("series bound exceeds table bound")
        total = zero(self.trunc)
        for m in range(2, N + 1):
            for n in range(0, N - m + 1):
                if m + n < 3:
                    continue
                if m == 2:
                    total = total + self.losev_manin_component(n)
                else:
                    total = total + self.untwisted_interior_component(m, n)
        return total

    def series_aggregate(self, N=None):
        """The untwisted sum via the rearranged aggregate double-sum formula.

        Kept as an independent transcription and compared against
        untwisted_series() in tests; the per-component routes are
        authoritative.
        """
        N = self.bound if N is None else N
        trunc = self.trunc
        # genus-zero part summed over arity, within first-factor degree N
        m_series = zero(trunc)
        for a in range(3, N + 1):
            m_series = m_series + self.genus0_component(a)
        s2 = schur((2,), trunc, factor=1)
        total = m_series
        sn_sum = zero(trunc)
        for n in range(1, N + 1):
            sn_sum = sn_sum + schur((n,), trunc, factor=2)
        total = total + (m_series + s2) * sn_sum
        for k in range(1, N + 1):
            d_m = m_series
            d_ms2 = m_series + s2
            for _ in range(k):
                d_m = d_m.d_op(factor=1)
                d_ms2 = d_ms2.d_op(factor=1)
            hooks_a = zero(trunc)
            for n in range(k, N + 1):
                hooks_a = hooks_a + schur(_hook(n, k - 1), trunc, factor=2)
            hooks_b = zero(trunc)
            for n in range(k + 1, N + 1):
                hooks_b = hooks_b + schur(_hook(n, k), trunc, factor=2)
            piece = d_m * hooks_a + d_ms2 * hooks_b
            total = total + piece.map_coeffs(
                lambda tp, k=k: tp * TPoly.term((-1) ** k, k)
            )
        return total
