"""Minimal presentations and Betti tables of 0-dimensional persistent
homology of poset-filtered graphs.

Grades cross the boundary as exact values: a tuple of canonical decimal
strings for R^n posets, a plain element index for finite posets.

    >>> import fgbetti
    >>> g = fgbetti.parse_graph("poset rn 2\\nv u 0 0\\nv v 0 0\\ne a u v 0 1\\ne b u v 1 0\\n")
    >>> fgbetti.betti_r2(g)["beta2"]
    [('1', '1')]
"""

from ._core import (
    DescriptorError,
    FilteredGraph,
    IOError,
    MulticriticalGraph,
    ParseError,
    PosetError,
    ResourceError,
    betti_r2,
    koszul_all,
    load_graph,
    load_multicritical,
    minimal_presentation,
    one_criticalize,
    parse_graph,
    parse_multicritical,
    random_graph,
    validate,
    validate_multicritical,
    verify,
    vertex_minimize,
    witness_grade,
    write_graph,
    write_multicritical,
)

__all__ = [
    "DescriptorError",
    "FilteredGraph",
    "IOError",
    "MulticriticalGraph",
    "ParseError",
    "PosetError",
    "ResourceError",
    "betti_r2",
    "koszul_all",
    "load_graph",
    "load_multicritical",
    "minimal_presentation",
    "one_criticalize",
    "parse_graph",
    "parse_multicritical",
    "random_graph",
    "validate",
    "validate_multicritical",
    "verify",
    "vertex_minimize",
    "witness_grade",
    "write_graph",
    "write_multicritical",
]

__version__ = "0.1.0"
