"""Finite bitopological-space laboratory.

Exact, decidable implementations of the closure-type operators, set
families, property predicates and relative-normality notions on finite
bitopological spaces, an exhaustive enumeration engine, and a theorem
harness that model-checks every implemented statement on all small
instances.
"""

from .bispace import (BiSpace, bi_subspace, family, frontier_ij, make_bispace,
                      p_closed, p_open, relation, relation_witness)
from .topology import (Topology, closure, derived_set, interior, min_nbhd,
                       subspace, validate_topology)

__all__ = [
    "BiSpace", "Topology", "bi_subspace", "closure", "derived_set",
    "family", "frontier_ij", "interior", "make_bispace", "min_nbhd",
    "p_closed", "p_open", "relation", "relation_witness", "subspace",
    "validate_topology",
]
