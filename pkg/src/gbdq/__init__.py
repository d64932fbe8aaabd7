"""Chains in the Grassmannian-Bruhat order, their dual equivalence graphs, and
the Schubert-vs-Schur coefficients they compute."""

from .chains import Chain, DescentSet, canonical_flat_chains, enumerate_canonical_chains, enumerate_interval_chains, validate_chain
from .involutions import RuleTag, phi
from .perm import Permutation, Transposition, gb_leq

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "DescentSet",
    "Permutation",
    "RuleTag",
    "Transposition",
    "canonical_flat_chains",
    "enumerate_canonical_chains",
    "enumerate_interval_chains",
    "gb_leq",
    "phi",
    "validate_chain",
]
