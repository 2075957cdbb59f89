"""Free n-Lie algebras: basic commutators, the collecting process,
counting formulas, and an exact graded-dimension oracle."""

from .basis import (
    BasicCommutator,
    EnumerationCapExceeded,
    EnumerationMode,
    count_by_enumeration,
    enumerate_basic,
    is_basic,
)
from .counting import (
    LieExpansion,
    NonbasicBreakdown,
    count_via_lie,
    count_weight2,
    ladder,
    ladder_recursive,
    lcs_quotient_dim,
    lie_expansion,
    moebius,
    necklace_bound,
    nonbasic_breakdown,
    weight3_closed_form,
    weight4_closed_form,
    weightw_closed_form,
    witt,
)
from .oracle import (
    InstanceCeilingExceeded,
    graded_dimension,
    graded_monomials,
    membership,
    relation_rows,
)
from .rewrite import RewriteTrace, collect, collect_lc, expand_jacobi
from .terms import (
    SignedTerm,
    Term,
    canonicalize,
    compare,
    format_term,
    lc_format,
    length,
    parse,
    weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
