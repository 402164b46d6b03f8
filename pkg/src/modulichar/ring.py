"""Truncated graded rings Lambda[[t]] and (Lambda (x) Lambda)[[t]].

Everything is exact: coefficients are Laurent polynomials in a formal
variable t with Fraction coefficients (TPoly), and symmetric functions are
sparse maps from pairs of partitions to TPoly in the power-sum monomial
basis.  A univariate symmetric function is simply a series whose second
(or first) partition is empty everywhere.

A single Truncation context bounds the degree in each tensor factor, the
total degree, and the retained window of t exponents; every operation
discards terms outside it and never widens it.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    character,
    partitions_of,
    sign_of_class,
    sort_key,
    z_of,
)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact scalar, got {type(c).__name__}")


class TPoly:
    """Laurent polynomial in t with exact rational coefficients.

    Stored as a sparse dict exponent -> Fraction with no zero values.
    Instances are treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    clean[e] = c
        self.coeffs = clean

    @classmethod
    def term(cls, c, e=0):
        return cls({e: _as_fraction(c)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: Fraction(1)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.term(other)
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, e):
        return self.coeffs.get(e, Fraction(0))

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.term(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = TPoly.__new__(TPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = TPoly.__new__(TPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.term(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return TPoly.zero()
            res = TPoly.__new__(TPoly)
            res.coeffs = {e: a * c for e, a in self.coeffs.items()}
            return res
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = TPoly.__new__(TPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported on TPoly")
        result = TPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_power(self, k):
        """t -> t^k."""
        res = TPoly.__new__(TPoly)
        res.coeffs = {e * k: c for e, c in self.coeffs.items()}
        return res

    def truncate(self, lo, hi):
        res = TPoly.__new__(TPoly)
        res.coeffs = {e: c for e, c in self.coeffs.items() if lo <= e <= hi}
        return res

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def evaluate(self, x):
        """Evaluate at an exact rational x (x != 0 if Laurent)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * x ** e
        return total

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*t")
            else:
                bits.append(f"{c}*t^{e}")
        return " + ".join(bits)


@dataclass(frozen=True)
class Truncation:
    """Degree bounds threaded through every ring operation.

    n1, n2 bound the degree in the first/second tensor factor, ntot bounds
    the total degree (defaults to n1 + n2), and [tlo, thi] is the retained
    window of t exponents.
    """

    n1: int
    n2: int
    tlo: int
    thi: int
    ntot: int = None

    def __post_init__(self):
        if self.ntot is None:
            object.__setattr__(self, "ntot", self.n1 + self.n2)

    def meet(self, other):
        return Truncation(
            min(self.n1, other.n1),
            min(self.n2, other.n2),
            max(self.tlo, other.tlo),
            min(self.thi, other.thi),
            min(self.ntot, other.ntot),
        )

    def keeps(self, lam1, lam2):
        d1, d2 = sum(lam1), sum(lam2)
        return d1 <= self.n1 and d2 <= self.n2 and d1 + d2 <= self.ntot


class SymSeries:
    """Sparse element of (Lambda (x) Lambda)[t, 1/t] in the power-sum basis.

    terms maps (lam1, lam2) -> TPoly, the coefficient of
    p_{lam1}^{(1)} p_{lam2}^{(2)}.  No zero coefficients are stored and no
    key violates the truncation.
    """

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc, terms=None):
        self.trunc = trunc
        clean = {}
        if terms:
            for key, tp in terms.items():
                if not isinstance(tp, TPoly):
                    tp = TPoly.term(tp)
                tp = tp.truncate(trunc.tlo, trunc.thi)
                if tp and trunc.keeps(*key):
                    clean[key] = tp
        self.terms = clean

    @classmethod
    def _raw(cls, trunc, terms):
        """Internal: terms already normalized and within truncation."""
        obj = cls.__new__(cls)
        obj.trunc = trunc
        obj.terms = terms
        return obj

    # ---- basic structure -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SymSeries) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("SymSeries is not hashable")

    def sorted_terms(self):
        """Terms in the canonical order (size, reverse-lex) on both keys."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])),
        )

    def coefficient(self, lam1, lam2=()):
        return self.terms.get((tuple(lam1), tuple(lam2)), TPoly.zero())

    def component(self, m, n):
        """Homogeneous part of first-factor degree m and second-factor degree n."""
        out = {
            k: v
            for k, v in self.terms.items()
            if sum(k[0]) == m and sum(k[1]) == n
        }
        return SymSeries._raw(self.trunc, out)

    def bidegrees(self):
        return sorted({(sum(k[0]), sum(k[1])) for k in self.terms})

    def t_slice(self, i):
        """Coefficient of t^i, a SymSeries with constant TPoly entries."""
        out = {}
        for k, tp in self.terms.items():
            c = tp[i]
            if c:
                out[k] = TPoly.term(c)
        return SymSeries._raw(self.trunc, out)

    def t_exponents(self):
        exps = set()
        for tp in self.terms.values():
            exps.update(tp.coeffs)
        return sorted(exps)

    def map_coeffs(self, fn):
        """Apply fn: TPoly -> TPoly to every coefficient, then renormalize."""
        out = {}
        for k, tp in self.terms.items():
            new = fn(tp).truncate(self.trunc.tlo, self.trunc.thi)
            if new:
                out[k] = new
        return SymSeries._raw(self.trunc, out)

    # ---- ring operations -------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, SymSeries):
            return other
        if isinstance(other, (int, Fraction)):
            other = TPoly.term(other)
        if isinstance(other, TPoly):
            return SymSeries(self.trunc, {((), ()): other})
        raise TypeError(f"cannot combine SymSeries with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerced(other)
        trunc = self.trunc.meet(other.trunc)
        out = {}
        for src in (self.terms, other.terms):
            for k, tp in src.items():
                cur = out.get(k)
                out[k] = tp if cur is None else cur + tp
        clean = {}
        for k, tp in out.items():
            tp = tp.truncate(trunc.tlo, trunc.thi)
            if tp and trunc.keeps(*k):
                clean[k] = tp
        return SymSeries._raw(trunc, clean)

    __radd__ = __add__

    def __neg__(self):
        return SymSeries._raw(self.trunc, {k: -tp for k, tp in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerced(other))

    def __rsub__(self, other):
        return (-self) + self._coerced(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return SymSeries._raw(self.trunc, {})
            return SymSeries._raw(
                self.trunc, {k: tp * c for k, tp in self.terms.items()}
            )
        if isinstance(other, TPoly):
            return self.map_coeffs(lambda tp: tp * other)
        other = self._coerced(other)
        trunc = self.trunc.meet(other.trunc)
        out = {}
        for (a1, a2), ta in self.terms.items():
            da1, da2 = sum(a1), sum(a2)
            for (b1, b2), tb in other.terms.items():
                d1, d2 = da1 + sum(b1), da2 + sum(b2)
                if d1 > trunc.n1 or d2 > trunc.n2 or d1 + d2 > trunc.ntot:
                    continue
                key = (merge_parts(a1, b1), merge_parts(a2, b2))
                prod = ta * tb
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        clean = {}
        for k, tp in out.items():
            tp = tp.truncate(trunc.tlo, trunc.thi)
            if tp:
                clean[k] = tp
        return SymSeries._raw(trunc, clean)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---- operators -------------------------------------------------------

    def d_op(self, factor=1):
        """p_1 d/dp_1 - 1 in the chosen tensor factor.

        A power-sum monomial with p_1-multiplicity a maps to (a-1) times
        itself; this is the character of tensoring with the standard
        representation.
        """
        out = {}
        for k, tp in self.terms.items():
            a = sum(1 for p in k[factor - 1] if p == 1)
            if a == 1:
                continue
            out[k] = tp * (a - 1)
        return SymSeries._raw(self.trunc, out)

    def derivative_p1(self, factor=1):
        """Formal partial derivative with respect to p_1 in the chosen factor."""
        out = {}
        for k, tp in self.terms.items():
            lam = k[factor - 1]
            a = sum(1 for p in lam if p == 1)
            if a == 0:
                continue
            reduced = lam[:-1]  # partitions are sorted decreasing, 1s at the end
            newkey = (reduced, k[1]) if factor == 1 else (k[0], reduced)
            cur = out.get(newkey)
            contrib = tp * a
            out[newkey] = contrib if cur is None else cur + contrib
        return SymSeries._raw(self.trunc, out)

    def __repr__(self):
        if not self.terms:
            return "SymSeries(0)"
        bits = []
        for (l1, l2), tp in self.sorted_terms()[:12]:
            bits.append(f"({tp})*p{list(l1)}|p{list(l2)}")
        more = "" if len(self.terms) <= 12 else f" ... ({len(self.terms)} terms)"
        return " + ".join(bits) + more


def merge_parts(a, b):
    """Concatenate two partitions and resort decreasing."""
    return tuple(sorted(a + b, reverse=True))


# ---- constructors --------------------------------------------------------


def zero(trunc):
    return SymSeries._raw(trunc, {})


def one(trunc):
    return SymSeries(trunc, {((), ()): TPoly.one()})


def powersum(lam, trunc, factor=1):
    """The power-sum monomial p_lam in the chosen tensor factor."""
    lam = tuple(sorted(lam, reverse=True))
    key = (lam, ()) if factor == 1 else ((), lam)
    return SymSeries(trunc, {key: TPoly.one()})


@lru_cache(maxsize=None)
def _schur_expansion(lam):
    """s_lam = sum_{rho |- n} chi^lam(rho) p_rho / z_rho, as a dict."""
    n = sum(lam)
    return {
        rho: Fraction(character(lam, rho), z_of(rho)) for rho in partitions_of(n)
    }


def schur(lam, trunc, factor=1):
    """Schur function s_lam in the power-sum basis, in the chosen factor."""
    lam = tuple(lam)
    if sum(lam) > (trunc.n1 if factor == 1 else trunc.n2):
        raise ValueError("schur degree exceeds truncation")
    terms = {}
    for rho, c in _schur_expansion(lam).items():
        if c:
            key = (rho, ()) if factor == 1 else ((), rho)
            terms[key] = TPoly.term(c)
    return SymSeries._raw(trunc, terms)


def elementary(n, trunc, factor=1):
    """e_n = sum_rho sign(rho) p_rho / z_rho."""
    terms = {}
    for rho in partitions_of(n):
        key = (rho, ()) if factor == 1 else ((), rho)
        terms[key] = TPoly.term(Fraction(sign_of_class(rho), z_of(rho)))
    return SymSeries(trunc, terms)


def complete(n, trunc, factor=1):
    """h_n = sum_rho p_rho / z_rho."""
    terms = {}
    for rho in partitions_of(n):
        key = (rho, ()) if factor == 1 else ((), rho)
        terms[key] = TPoly.term(Fraction(1, z_of(rho)))
    return SymSeries(trunc, terms)


def from_schur_dict(coeffs, trunc):
    """Series sum c_{(lam1,lam2)} s_{lam1}^{(1)} s_{lam2}^{(2)} from a dict."""
    total = zero(trunc)
    for (l1, l2), c in coeffs.items():
        term = one(trunc)
        if l1:
            term = term * schur(l1, trunc, factor=1)
        if l2:
            term = term * schur(l2, trunc, factor=2)
        if not isinstance(c, TPoly):
            c = TPoly.term(c)
        total = total + term.map_coeffs(lambda tp, c=c: tp * c)
    return total


# ---- basis conversion ----------------------------------------------------


def to_schur_basis(f):
    """Schur-basis coefficients of f, as a dict (lam1, lam2) -> TPoly.

    Uses p_rho = sum_lam chi^lam(rho) s_lam in each tensor factor.
    """
    out = {}
    for (rho1, rho2), tp in f.terms.items():
        for lam1 in partitions_of(sum(rho1)):
            c1 = character(lam1, rho1)
            if not c1:
                continue
            for lam2 in partitions_of(sum(rho2)):
                c2 = character(lam2, rho2)
                if not c2:
                    continue
                key = (lam1, lam2)
                contrib = tp * (c1 * c2)
                cur = out.get(key)
                out[key] = contrib if cur is None else cur + contrib
    return {k: v for k, v in out.items() if v}


# ---- rank specialization -------------------------------------------------


def rk_hom(f):
    """The rank homomorphism rk: p_1^{(1)} -> x, p_1^{(2)} -> y, p_n -> 0 (n>1).

    Returns a dict (a, b) -> TPoly, the coefficient of x^a y^b.
    """
    out = {}
    for (l1, l2), tp in f.terms.items():
        if any(p > 1 for p in l1) or any(p > 1 for p in l2):
            continue
        key = (len(l1), len(l2))
        cur = out.get(key)
        out[key] = tp if cur is None else cur + tp
    return {k: v for k, v in out.items() if v}


def poincare_from(f, m, n):
    """Signed Poincare polynomial sum_i (-t)^i dim of the (m, n) component.

    Equals m! n! times the coefficient of x^m y^n under rk.
    """
    coeff = rk_hom(f).get((m, n), TPoly.zero())
    return coeff * (factorial(m) * factorial(n))


# ---- series exp / log / pow ----------------------------------------------


def _check_no_constant(x):
    if ((), ()) in x.terms:
        raise ValueError("series has a constant term")


def series_exp(x):
    """exp(x) for a series x with no constant term, exact and truncated."""
    _check_no_constant(x)
    result = one(x.trunc)
    term = one(x.trunc)
    for k in range(1, x.trunc.ntot + 1):
        term = term * x * Fraction(1, k)
        if term.is_zero():
            break
        result = result + term
    return result


def series_log1p(x):
    """log(1 + x) for a series x with no constant term."""
    _check_no_constant(x)
    result = zero(x.trunc)
    power = one(x.trunc)
    for k in range(1, x.trunc.ntot + 1):
        power = power * x
        if power.is_zero():
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def series_pow(base, exponent):
    """base^exponent = exp(exponent * log(base)) for base = 1 + positive terms.

    The exponent may be an exact scalar or a TPoly (Laurent exponents allowed).
    """
    const = base.terms.get(((), ()))
    if const != TPoly.one():
        raise ValueError("series_pow requires constant term exactly 1")
    x = base - one(base.trunc)
    if not isinstance(exponent, TPoly):
        exponent = TPoly.term(exponent)
    return series_exp(series_log1p(x).map_coeffs(lambda tp: tp * exponent))
