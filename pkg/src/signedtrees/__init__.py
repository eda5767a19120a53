"""Signed trees realizing a prescribed set of signed degrees.

Decide realizability, compute minimum diameter and (where solved) minimum
order, build witness trees, and check all of it against exhaustive
enumeration of small signed trees.
"""
from .diameter import DiamResult, NotAchievable, build_min_diameter, build_with_diameter, diam_formula
from .order import NotCovered, OrderResult, build_min_order, sigma_formula, sigma_upper_bound
from .serialize import FormatError, from_dot, from_json, to_dot, to_json
from .validity import is_valid, realize_any

# Last, so the function ``diameter`` shadows the submodule of that name.
from .core import (
    NEG,
    POS,
    CaterpillarSpec,
    DegreeSet,
    InvalidDegreeSet,
    Sign,
    SignedTree,
    TreeError,
    attach_leaves,
    build_caterpillar,
    build_star,
    canonical_key,
    degree_set,
    diameter,
    limiting_pendants,
    negate_signs,
    signed_degree,
    transfer,
)

__all__ = [
    "NEG", "POS", "CaterpillarSpec", "DegreeSet", "InvalidDegreeSet", "Sign", "SignedTree",
    "TreeError", "attach_leaves", "build_caterpillar", "build_star", "canonical_key",
    "degree_set", "diameter", "limiting_pendants", "negate_signs", "signed_degree", "transfer",
    "DiamResult", "NotAchievable", "build_min_diameter", "build_with_diameter", "diam_formula",
    "NotCovered", "OrderResult", "build_min_order", "sigma_formula", "sigma_upper_bound",
    "FormatError", "from_dot", "from_json", "to_dot", "to_json", "is_valid", "realize_any",
]
