"""Exact equivariant Poincare polynomials of weighted pointed curve moduli.

Computes, in exact rational arithmetic, the S_m x S_n-equivariant
characteristics of the open and compactified moduli of genus-zero curves
with m distinct and n colliding marked points, together with independent
stable-tree oracles for verification.
"""

__version__ = "0.1.0"

from .getzler import genus0_characteristic, kappa, r_exponent
from .interior import InteriorTable, wedge_perm_char
from .legendre import (
    CompactifiedTable,
    compactified_characteristic,
    partial_legendre,
    weight_substitution,
)
from .partitions import (
    character,
    irr_dimension,
    mobius,
    partitions_of,
    z_of,
)
from .plethysm import frobenius_twist, plethysm1, plethystic_inverse1
from .ring import (
    SymSeries,
    TPoly,
    Truncation,
    complete,
    elementary,
    poincare_from,
    powersum,
    rk_hom,
    schur,
    series_pow,
    to_schur_basis,
)
from .trees import (
    StableTree,
    census_report,
    enumerate_stable_trees,
    epoly_interior,
    equivariant_treesum,
    eulerian_number,
    poincare_oracle,
)
