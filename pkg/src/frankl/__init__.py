"""Union-closed families under chain conditions.

Finite families of sets, their inclusion order, abundant/optimal/covert
elements with explicit injection witnesses, the separating quotient,
finite topologies, dominated tents, and an exhaustive enumeration oracle.
"""

from .abundance import (
    InjectionWitness,
    abundant_elements,
    best_witness,
    is_abundant,
    is_covert,
    is_optimal,
    optimal_elements,
)
from .core import (
    ElementId,
    NeighborhoodMap,
    SetFamily,
    Verdict,
    is_separating,
    is_union_closed,
    load_family,
    neighborhoods,
    parse_family,
    serialize_family,
    union_closure,
)
from .errors import (
    DomainError,
    FamilyError,
    InternalCheckError,
    NotAbundantError,
    PreconditionError,
    SizeOverflowError,
)
from .kernels import BACKEND
from .poset import cover_dag, dimension, maximal_members, minimal_members

__version__ = "0.1.0"
