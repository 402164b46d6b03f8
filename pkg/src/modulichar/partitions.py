"""Integer partitions and symmetric group characters.

A partition is a tuple of weakly decreasing positive integers; the empty
tuple is the unique partition of 0.  Partitions index both conjugacy
classes and irreducible representations of symmetric groups, and they key
every sparse map in this package, so they are kept as plain immutable
tuples.

Characters are computed by the Murnaghan-Nakayama recursion with an
unbounded memo table (the same values recur in every basis conversion).
"""

from functools import lru_cache, reduce
from math import factorial


def is_partition(lam):
    """True if lam is a weakly decreasing tuple of positive integers."""
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(p > 0 for p in lam)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, each exactly once, in reverse lexicographic order.

    partitions_of(3) == ((3,), (2, 1), (1, 1, 1)); partitions_of(0) == ((),).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_gen_partitions(n, n))


@lru_cache(maxsize=None)
def _gen_partitions(n, maxpart):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _gen_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def sort_key(lam):
    """Canonical ordering key: by size, then reverse lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


def multiplicities(lam):
    """Multiplicity m_i of each part i, as a dict part -> count."""
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def z_of(lam):
    """Order of the centralizer of a permutation of cycle type lam.

    z_lam = prod_i i^{m_i} m_i! where m_i is the multiplicity of the part i.
    """
    z = 1
    for part, mult in multiplicities(lam).items():
        z *= part ** mult * factorial(mult)
    return z


def class_size(lam):
    """Number of permutations of cycle type lam in S_{|lam|}."""
    return factorial(sum(lam)) // z_of(lam)


def fixed_points(lam):
    """Number of fixed points (parts equal to 1) of the cycle type lam."""
    return sum(1 for p in lam if p == 1)


def sign_of_class(lam):
    """Sign of any permutation with cycle type lam: (-1)^{|lam| - len(lam)}."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def conjugate(lam):
    """Conjugate (transpose) partition."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def mobius(n):
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _border_strip_removals(lam, r):
    """Yield (mu, height) for every border strip of size r removable from lam.

    Works on the beta-set b_k = lam_k + (l-1-k): removing an r-strip is
    subtracting r from one beta number without colliding with another; the
    height is the number of beta numbers jumped over.
    """
    l = len(lam)
    beta = [lam[i] + (l - 1 - i) for i in range(l)]
    bset = set(beta)
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        newbeta = sorted((x for j, x in enumerate(beta) if j != i), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        height = newbeta.index(nb) - i
        mu = tuple(x - (l - 1 - k) for k, x in enumerate(newbeta))
        yield tuple(p for p in mu if p > 0), height


@lru_cache(maxsize=None)
def character(lam, rho):
    """Irreducible character chi^lam evaluated on the class rho (|lam| == |rho|).

    Murnaghan-Nakayama recursion; memoized for the whole run.  The memo is
    an lru_cache, so concurrent callers always see identical values.
    """
    if sum(lam) != sum(rho):
        raise ValueError("character requires |lam| == |rho|")
    if not lam:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for mu, height in _border_strip_removals(lam, r):
        total += (-1) ** height * character(mu, rest)
    return total


def hook_lengths(lam):
    """Hook lengths of the Young diagram of lam, row by row."""
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


@lru_cache(maxsize=None)
def irr_dimension(lam):
    """Dimension of the irreducible V_lam, by the hook length formula."""
    if not lam:
        return 1
    num = factorial(sum(lam))
    den = reduce(lambda a, b: a * b, (h for row in hook_lengths(lam) for h in row))
    return num // den


def perm_from_cycle_type(lam, labels):
    """A representative permutation of cycle type lam on the given labels.

    Returns a dict label -> image; cycles are filled with consecutive labels.
    """
    if sum(lam) != len(labels):
        raise ValueError("cycle type does not match label count")
    perm = {}
    pos = 0
    for part in lam:
        cyc = labels[pos:pos + part]
        for a, b in zip(cyc, cyc[1:]):
            perm[a] = b
        perm[cyc[-1]] = cyc[0]
        pos += part
    return perm


def cycle_type_of(perm):
    """Cycle type (a partition) of a permutation given as a dict."""
    seen = set()
    parts = []
    for start in perm:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))
