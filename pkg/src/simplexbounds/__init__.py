"""Sharp bounds on graded Betti numbers and on empty simplices of simplicial polytopes."""

from .betti import (
    BettiTable,
    HilbertFunction,
    betti_bound,
    betti_entry,
    betti_table_bound,
    cm_betti_bound,
    cm_betti_table,
    gorenstein_wlp_bound,
    gorenstein_wlp_table,
    lex_betti_single_degree,
    linear_resolution_betti,
)
from .binomial import (
    BinomialExpansion,
    binom,
    binomial_expansion,
    macaulay_lower,
    macaulay_shift,
    macaulay_upper,
)
from .empty_simplices import (
    EmptySimplexBoundReport,
    bound_report,
    cumulative_bound,
    dimension_free_bound,
    empty_dimension_bound,
    generator_degree_bound,
    gk_bound,
    gk_dimension_free_bound,
    total_bound,
    vanishing_range,
    vertex_count_bound,
)
from .errors import (
    BoundViolation,
    PreconditionError,
    SimplexBoundsError,
    SizeLimitError,
    ValidationError,
)
from .kernels import BACKEND
from .vectors import (
    FVector,
    GVector,
    HVector,
    f_to_h,
    g_to_h,
    h_to_f,
    h_to_g,
    is_o_sequence,
    is_si_sequence,
)

__version__ = "0.1.0"
