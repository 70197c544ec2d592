"""Set-coloring Ramsey numbers.

An (r, s)-coloring gives every edge of K_n a set of s elements from
{1..r}; element i's class is the subgraph of edges whose set contains i.
R_{r,s}(G_1, ..., G_r) is the least n such that every such coloring of K_n
has a copy of G_i inside class i for some i.

Submodules: :mod:`~setramsey.graph`, :mod:`~setramsey.coloring`,
:mod:`~setramsey.decompose`, :mod:`~setramsey.detect`,
:mod:`~setramsey.construct`, :mod:`~setramsey.bounds`,
:mod:`~setramsey.search`, :mod:`~setramsey.cli`.
"""

from .bounds import aggregate_bounds, ex_upper_bound, lll_lower, monotone_propagate, random_lower, turan_path
from .coloring import Certificate, ColorSet, MalformedError, SetColoring
from .construct import path_lower_certificate, repair_search, star_lower_certificate, uniform_coloring
from .decompose import (
    ParityError,
    check_decomposition,
    hamilton_decomposition,
    maximal_matching_decomposition,
    one_factorization,
)
from .detect import contains_target, find_monochromatic, verify_certificate
from .graph import CapacityError, Graph, TargetSpec, parse_target, parse_targets
from .search import decide, ramsey_number

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Certificate",
    "ColorSet",
    "Graph",
    "MalformedError",
    "ParityError",
    "SetColoring",
    "TargetSpec",
    "aggregate_bounds",
    "check_decomposition",
    "contains_target",
    "decide",
    "ex_upper_bound",
    "find_monochromatic",
    "hamilton_decomposition",
    "lll_lower",
    "maximal_matching_decomposition",
    "monotone_propagate",
    "one_factorization",
    "parse_target",
    "parse_targets",
    "path_lower_certificate",
    "random_lower",
    "ramsey_number",
    "repair_search",
    "star_lower_certificate",
    "turan_path",
    "uniform_coloring",
    "verify_certificate",
]
