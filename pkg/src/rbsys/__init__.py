"""Rota-Baxter systems on finite groups and monoids, and on Lie algebras over Q."""

from .rbs import RbsInstance, verify_rbs
from .search import Catalog, enumerate_naive, enumerate_pruned
from .tables import MulTable, cyclic, klein, symmetric, validate_table

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "MulTable",
    "RbsInstance",
    "cyclic",
    "enumerate_naive",
    "enumerate_pruned",
    "klein",
    "symmetric",
    "validate_table",
    "verify_rbs",
]
