"""Palindromic richness of finite and infinite words."""
from .errors import ConsistencyError
from .palindex import PalindromeIndex
from .periodic import periodic_defect, periodic_verdict
from .richness import defect, is_rich, oddities, richness_report, weak_richness
from .words import Morphism, parse_spec

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "Morphism",
    "PalindromeIndex",
    "defect",
    "is_rich",
    "oddities",
    "parse_spec",
    "periodic_defect",
    "periodic_verdict",
    "richness_report",
    "weak_richness",
    "__version__",
]
