"""Exact stratification of totally nonzero matrices.

Computes sign vectors of maximal minors over exact rationals, enumerates
the strata they cut out of the space of totally nonzero 2 x n matrices,
counts relabeling orbits (= isomorphism classes of generic and antipodal
point arrangements), and searches for strata in the open m >= 3 regime.
"""

from .kernels import BACKEND
from .linalg import RationalMatrix, is_totally_nonzero, maximal_minor, parse_matrix
from .pluecker import (
    SignVector,
    Stratum,
    SubsetIndexer,
    arrangement_isomorphic,
    canonicalize,
    sign_vector,
    three_term_feasible,
)
from .signedperm import SignedPerm, compose, coset_reps, kn_generator

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "RationalMatrix",
    "SignVector",
    "SignedPerm",
    "Stratum",
    "SubsetIndexer",
    "arrangement_isomorphic",
    "canonicalize",
    "compose",
    "coset_reps",
    "is_totally_nonzero",
    "kn_generator",
    "maximal_minor",
    "parse_matrix",
    "sign_vector",
    "three_term_feasible",
    "__version__",
]
