"""Exact Littlewood-Richardson constants computed three ways.

* Schubert calculus: Pieri and Giambelli in the Schur basis and in ``H*(G(m,n))``.
* Representation theory: Young symmetrizers, Schur matrices and characters.
* Invariant forms: curvature and Schubert forms in a finite exterior algebra.

A torus lambda-ring module computes Chern classes through gamma-operations.
"""

__version__ = "0.1.0"

from .config import DEFAULT_BUDGETS, Budgets, load_budgets
from .errors import BudgetExceeded, InvariantViolation, OracleError
from .partitions import (
    CanonicalTableau,
    Partition,
    canonical_tableau,
    complement,
    conjugate,
    fits_rectangle,
    format_partition,
    parse_partition,
    partitions_in_rectangle,
    standard_tableau_count,
)
from .schur_ring import (
    EPolynomial,
    SchurCombination,
    expand_in_schur_basis,
    giambelli,
    lr_coefficient,
    pieri,
    schur_multiply,
    schur_to_monomials,
)
from .grassmann_cohomology import (
    CohomologyClass,
    GrassmannianShape,
    betti_number,
    rho,
    schubert_product,
    sp_product,
    top_pairing,
    truncate,
)
from .linalg import RationalMatrix
from .schur_functor import (
    exterior_matrix,
    lr_oracle,
    schur_matrix,
    schur_trace,
    symmetrizer_norm,
    young_symmetrizer,
)
from .lambda_gamma import (
    augmentation,
    chern_class,
    chern_to_schubert,
    gamma_op,
    gr_image,
    lambda_op,
    standard_character,
    symplectic_character,
)
from .curvature_forms import (
    GrassmannElement,
    chern_form,
    curvature_matrix,
    is_zero_form,
    schubert_form,
    top_coefficient,
    wedge_decompose,
)
