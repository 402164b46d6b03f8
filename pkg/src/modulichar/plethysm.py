"""The variant plethysm on (Lambda (x) Lambda)[[t]] and its inversion.

The product substitutes only through first-factor power sums:

    p_n^{(1)} o p_k^{(i)} = p_{nk}^{(i)},   p_n^{(2)} o p_k^{(i)} = p_n^{(2)},

and t occurring in the right argument is raised to the n-th power when
substituted into p_n^{(1)}, while t in the left argument is inert.  This
substitution is the computational heart of the partial Legendre transform.
"""

from fractions import Fraction

from .ring import SymSeries, TPoly, merge_parts, one, powersum, zero


def frobenius_twist(g, n):
    """Substitute p_k^{(i)} -> p_{nk}^{(i)} and t -> t^n in g.

    This is p_n^{(1)} composed with g.  Terms pushed past the truncation
    are dropped.
    """
    if n == 1:
        return g
    trunc = g.trunc
    out = {}
    for (l1, l2), tp in g.terms.items():
        key = (
            tuple(p * n for p in l1),
            tuple(p * n for p in l2),
        )
        if not trunc.keeps(*key):
            continue
        new = tp.substitute_power(n).truncate(trunc.tlo, trunc.thi)
        if not new:
            continue
        cur = out.get(key)
        out[key] = new if cur is None else cur + new
    return SymSeries._raw(trunc, out)


def _min_total_degree(g):
    return min((sum(l1) + sum(l2) for (l1, l2) in g.terms), default=None)


def plethysm1(f, g):
    """f composed with g through first-factor power sums only.

    Every p_n^{(1)} in a monomial of f is replaced by frobenius_twist(g, n);
    second-factor power sums and explicit t factors of f are untouched.
    g must have no constant term, so the substitution terminates within the
    truncation.
    """
    if ((), ()) in g.terms:
        raise ValueError("plethysm right argument must have no constant term")
    trunc = f.trunc.meet(g.trunc)

    twist_cache = {}

    def twisted(n):
        if n not in twist_cache:
            twist_cache[n] = frobenius_twist(g, n)
        return twist_cache[n]

    pow_cache = {}

    def twisted_power(n, j):
        # twist(g, n)^j by repeated squaring, cached across monomials
        if j == 1:
            return twisted(n)
        key = (n, j)
        if key not in pow_cache:
            half = twisted_power(n, j // 2)
            sq = half * half
            pow_cache[key] = sq * twisted(n) if j % 2 else sq
        return pow_cache[key]

    subst_cache = {}

    def substituted(lam):
        # product over parts of lam of twist(g, part)
        if lam not in subst_cache:
            result = one(trunc)
            mult = {}
            for p in lam:
                mult[p] = mult.get(p, 0) + 1
            for p, j in sorted(mult.items()):
                result = result * twisted_power(p, j)
            subst_cache[lam] = result
        return subst_cache[lam]

    total = {}
    for (l1, l2), tp in f.terms.items():
        if l1:
            series = substituted(l1)
            for (m1, m2), tg in series.terms.items():
                key = (m1, merge_parts(m2, l2))
                if not trunc.keeps(*key):
                    continue
                contrib = (tp * tg).truncate(trunc.tlo, trunc.thi)
                if not contrib:
                    continue
                cur = total.get(key)
                total[key] = contrib if cur is None else cur + contrib
        else:
            # no first-factor power sums: monomial passes through unchanged
            key = (l1, l2)
            cur = total.get(key)
            total[key] = tp if cur is None else cur + tp
    clean = {k: v for k, v in total.items() if v}
    return SymSeries._raw(trunc, clean)


def plethystic_inverse1(h):
    """The two-sided inverse of h under the variant plethysm.

    Requires h = p_1^{(1)} + H with every monomial of H of total degree
    at least 2.  Solves u = p_1^{(1)} - H o u by fixed point iteration,
    which stabilizes one total degree per pass.
    """
    trunc = h.trunc
    p1 = powersum((1,), trunc)
    H = h - p1
    if h.coefficient((1,)) != TPoly.one() or ((), ()) in H.terms:
        raise ValueError("inverse requires h = p1 + higher order terms")
    mindeg = _min_total_degree(H)
    if mindeg is not None and mindeg < 2:
        raise ValueError("correction terms of h must have total degree >= 2")

    u = p1
    max_passes = trunc.n1 + trunc.n2 + 2
    for _ in range(max_passes):
        new = p1 - plethysm1(H, u)
        if new == u:
            return u
        u = new
    raise RuntimeError("plethystic inverse did not converge within the truncation")
