"""Structure analysis of boolean clause-sets: deficiency, surplus, autarkies,
minimal unsatisfiability and the non-Mersenne min-var-degree bound."""

from .bounds import (
    CertificationVerdict,
    certify,
    check_mu_bound,
    check_mu_bound_strict,
    construct_high_degree_mlean,
    cor_charsurp1_checks,
    is_mlcr,
    lean_bound_check,
    mlcr_conditions,
)
from .cnf import (
    TOP,
    DegreeTable,
    MultiClauseSet,
    VariableNames,
    apply,
    canonical_text,
    degrees,
    full_clause_set,
    is_hitting,
    m_construction,
    parse_dimacs,
    read_dimacs,
    restrict,
    serialize_dimacs,
)
from .errors import DimacsError, GuardExceeded, NotMinimallyUnsatisfiable, TheoryViolation
from .matching import (
    SurplusCertificate,
    find_matching_autarky,
    is_matching_lean,
    matching_lean_kernel,
    surplus,
)
from .mu import SatVerdict, is_autarky, is_lean, is_mu, is_satisfiable, is_smu, lean_kernel, saturate
from .nonmersenne import (
    AuxIndices,
    NonMersenneTable,
    aux_indices,
    fld,
    jump_set,
    nm1,
    nm1_recursive,
    nm_closed,
    nm_recursive,
)

__version__ = "0.1.0"
