"""Exact computations with Jordan algebras, matched pairs and complements."""

from ._jalg import (
    Algebra,
    MatchedPair,
    ParseError,
    catalog_names,
    deformation_check,
    enumerate_deformations,
    factorization_index,
    hom_check,
    iso,
    r_deform,
    run_cli,
)

__all__ = [
    "Algebra",
    "MatchedPair",
    "ParseError",
    "catalog_names",
    "deformation_check",
    "enumerate_deformations",
    "factorization_index",
    "hom_check",
    "iso",
    "r_deform",
    "run_cli",
]
