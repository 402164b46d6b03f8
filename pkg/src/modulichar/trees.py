"""Stable dual trees: enumeration, strata census, and tree-sum oracles.

Trees are leaf-labeled and 2-colored: labels 1..m are colour 1 (the
distinct-point markings), labels m+1..m+n are colour 2, and edge flags are
colour 1 (nodes count as type-1 special points).  Stability at a vertex
demands at least 3 flags of which at least 2 have colour 1.

Leaf labels rigidify the trees, so a tree is encoded canonically as a
nested structure rooted at the vertex carrying leaf 1, children sorted by
their smallest leaf; equality is structural and enumeration needs no
graph-isomorphism machinery.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    cycle_type_of,
    partitions_of,
    perm_from_cycle_type,
    z_of,
)
from .ring import SymSeries, TPoly


class StableTree:
    """A stable dual tree in canonical rooted form.

    node = (own_leaves frozenset, children tuple of nodes); the root is the
    vertex incident to leaf 1.
    """

    __slots__ = ("root", "m", "n")

    def __init__(self, root, m, n):
        self.root = root
        self.m = m
        self.n = n

    def __eq__(self, other):
        return isinstance(other, StableTree) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def num_edges(self):
        def count(node):
            return len(node[1]) + sum(count(c) for c in node[1])

        return count(self.root)

    def vertex_signatures(self):
        """Per vertex (a, b): colour-1 flag count (leaves + edges) and
        colour-2 leaf count."""
        m = self.m
        out = []

        def walk(node, has_parent):
            leaves, children = node
            a = sum(1 for x in leaves if x <= m) + len(children) + (
                1 if has_parent else 0
            )
            b = sum(1 for x in leaves if x > m)
            out.append((a, b))
            for c in children:
                walk(c, True)

        walk(self.root, False)
        return out

    def flat_graph(self):
        """Vertices as own-leaf frozensets plus an edge list of index pairs."""
        verts = []
        edges = []

        def walk(node, parent_idx):
            idx = len(verts)
            verts.append(node[0])
            if parent_idx is not None:
                edges.append((parent_idx, idx))
            for c in node[1]:
                walk(c, idx)

        walk(self.root, None)
        return verts, edges


def _partitions_into_blocks(items):
    """All partitions of a set into unordered blocks of size >= 2.

    The smallest remaining element anchors its block, so each partition
    appears exactly once.
    """
    items = sorted(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    # choose the (nonempty) remainder of first's block
    for mask in range(1, 1 << len(rest)):
        block = frozenset(
            [first] + [rest[i] for i in range(len(rest)) if mask >> i & 1]
        )
        remaining = [x for x in rest if x not in block]
        for others in _partitions_into_blocks(remaining):
            yield (block,) + others


def _subsets(items):
    items = sorted(items)
    for mask in range(1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def _type1_count(leaves, m):
    return sum(1 for x in leaves if x <= m)


def _enum_nodes(leafset, m, has_parent):
    """All stable rooted subtrees on leafset; the root gets a parent flag
    when has_parent is set, and must carry leaf 1 when it is not."""
    extra = 1 if has_parent else 0
    pool = sorted(leafset - {1}) if not has_parent else sorted(leafset)
    for direct in _subsets(pool):
        own = direct | {1} if not has_parent else direct
        remaining = leafset - own
        for blocks in _partitions_into_blocks(remaining):
            k = len(blocks)
            if len(own) + k + extra < 3:
                continue
            if _type1_count(own, m) + k + extra < 2:
                continue
            for children in _children_choices(blocks, m):
                yield (frozenset(own), children)


def _children_choices(blocks, m):
    if not blocks:
        yield ()
        return
    first, rest = blocks[0], blocks[1:]
    for sub in _enum_nodes(first, m, True):
        for others in _children_choices(rest, m):
            children = tuple(
                sorted((sub,) + others, key=lambda nd: _min_leaf(nd))
            )
            yield children


def _min_leaf(node):
    vals = list(node[0]) + [_min_leaf(c) for c in node[1]]
    return min(vals)


def enumerate_stable_trees(m, n):
    """Every leaf-labeled stable tree for (m, n), exactly once, in a
    deterministic order."""
    if m < 2 or m + n < 3:
        raise ValueError("need m >= 2 and m + n >= 3")
    leafset = frozenset(range(1, m + n + 1))
    trees = [StableTree(root, m, n) for root in _enum_nodes(leafset, m, False)]
    trees.sort(key=lambda t: repr(_sorted_form(t.root)))
    return trees


def _sorted_form(node):
    return (tuple(sorted(node[0])), tuple(_sorted_form(c) for c in node[1]))


def epoly_interior(a, b):
    """Point count over F_q of the (a, b) open component, as a TPoly in q.

    a >= 3: prod_{k=2}^{a-2} (q - k) * (q + 1 - a)^b;
    a == 2: the torus quotient, (q - 1)^{b-1}.
    """
    if a < 2 or a + b < 3:
        raise ValueError("need a >= 2 and a + b >= 3")
    q = TPoly.term(1, 1)
    if a == 2:
        return (q - 1) ** (b - 1)
    result = TPoly.one()
    for k in range(2, a - 1):
        result = result * (q - k)
    return result * (q + (1 - a)) ** b


def strata_census(m, n):
    """Counts of strata by codimension (= number of edges)."""
    counts = {}
    for tree in enumerate_stable_trees(m, n):
        e = tree.num_edges()
        counts[e] = counts.get(e, 0) + 1
    return [counts.get(c, 0) for c in range(0, max(counts) + 1)]


def poincare_oracle(m, n):
    """Poincare polynomial of the compactification via stratum point counts.

    Sums prod_v epoly_interior over all stable trees and sets q = t^2;
    valid because the cohomology is even and algebraic.
    """
    total = TPoly.zero()
    for tree in enumerate_stable_trees(m, n):
        prod = TPoly.one()
        for a, b in tree.vertex_signatures():
            prod = prod * epoly_interior(a, b)
        total = total + prod
    return total.substitute_power(2)


def census_report(m, n):
    """Machine-readable stratum census with the Poincare polynomial."""
    poly = poincare_oracle(m, n)
    top = poly.max_exp() or 0
    return {
        "m": m,
        "n": n,
        "strata_by_codim": strata_census(m, n),
        "poincare": [int(poly[2 * i]) for i in range(top // 2 + 1)],
    }


# ---- equivariant tree sum ------------------------------------------------


def _far_leafsets(verts, edges):
    """For each directed edge (i -> j): the leaf labels on the j side."""
    adj = {i: [] for i in range(len(verts))}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    far = {}

    def collect(i, banned):
        acc = set(verts[i])
        for k in adj[i]:
            if k != banned:
                acc |= collect(k, i)
        return acc

    for i, j in edges:
        far[(i, j)] = frozenset(collect(j, i))
        far[(j, i)] = frozenset(collect(i, j))
    return adj, far


def _fingerprints(verts, edges):
    adj, far = _far_leafsets(verts, edges)
    fps = []
    for i in range(len(verts)):
        sides = frozenset(far[(i, j)] for j in adj[i])
        fps.append((verts[i], sides))
    return fps, adj, far


def _apply(perm, labels):
    return frozenset(perm[x] for x in labels)


def equivariant_treesum(W, m, n, trunc):
    """ch of the tree-sum module built from the component table W.

    W maps (a, b) to the characteristic of the vertex module with its
    t-grading carrying the Z/2 parity sign.  For each conjugacy-class pair
    a representative permutation acts on the labeled trees; fixed trees
    contribute the product over vertex-cycles of the super-trace of the
    composite flag permutation, which amounts to reading off the class
    coefficient of W at the base vertex with t raised to the cycle length.
    """
    labels1 = list(range(1, m + 1))
    labels2 = list(range(m + 1, m + n + 1))
    trees = []
    for tree in enumerate_stable_trees(m, n):
        verts, edges = tree.flat_graph()
        fps, adj, far = _fingerprints(verts, edges)
        trees.append((tree, verts, edges, fps, adj, far))

    terms = {}
    for rho1 in partitions_of(m):
        for rho2 in partitions_of(n):
            perm = perm_from_cycle_type(rho1, labels1)
            perm.update(perm_from_cycle_type(rho2, labels2))
            total = TPoly.zero()
            for tree, verts, edges, fps, adj, far in trees:
                contrib = _fixed_tree_trace(
                    W, m, perm, verts, fps, adj, far
                )
                if contrib is not None:
                    total = total + contrib
            if total:
                total = total * Fraction(1, z_of(rho1) * z_of(rho2))
                terms[(rho1, rho2)] = total
    return SymSeries(trunc, terms)


def _fixed_tree_trace(W, m, perm, verts, fps, adj, far):
    """Trace contribution of one labeled tree, or None when not fixed."""
    fp_index = {fp: i for i, fp in enumerate(fps)}
    phi = {}
    for i, (own, sides) in enumerate(fps):
        image = (_apply(perm, own), frozenset(_apply(perm, s) for s in sides))
        j = fp_index.get(image)
        if j is None:
            return None
        phi[i] = j

    seen = set()
    result = TPoly.one()
    for start in range(len(verts)):
        if start in seen:
            continue
        cycle = [start]
        x = phi[start]
        while x != start:
            cycle.append(x)
            x = phi[x]
        seen.update(cycle)
        k = len(cycle)

        # composite flag permutation at the base vertex: perm^k
        def pk(x, k=k):
            for _ in range(k):
                x = perm[x]
            return x

        v = start
        flag_perm = {}
        for leaf in verts[v]:
            flag_perm[("leaf", leaf)] = ("leaf", pk(leaf))
        for u in adj[v]:
            side = far[(v, u)]
            flag_perm[("edge", side)] = ("edge", frozenset(pk(x) for x in side))
        type1 = {
            key: img
            for key, img in flag_perm.items()
            if key[0] == "edge" or key[1] <= m
        }
        type2 = {
            key: img for key, img in flag_perm.items()
            if key[0] == "leaf" and key[1] > m
        }
        alpha = cycle_type_of(type1)
        beta = cycle_type_of(type2)
        a, b = sum(alpha), sum(beta)
        if (a, b) not in W:
            raise ValueError(f"tree sum needs the ({a}, {b}) component of W")
        coeff = W[(a, b)].coefficient(alpha, beta)
        trace = coeff * (z_of(alpha) * z_of(beta))
        result = result * trace.substitute_power(k)
        if not result:
            return result
    return result


@lru_cache(maxsize=None)
def eulerian_number(n, k):
    """Eulerian number A(n, k): permutations of n letters with k descents."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (k + 1) * eulerian_number(n - 1, k) + (n - k) * eulerian_number(
        n - 1, k - 1
    )
