"""wreathbase: exact base sizes of imprimitive linear groups GL_d(q) wr L,
Gaussian binomial subspace counts, distinguishing numbers, and certified
base-size/order inequalities, with brute-force oracles for every closed form.
"""

from .errors import (
    BudgetExceededError,
    GroupTooLargeError,
    PrecisionExhaustedError,
    SearchInconclusiveError,
    TheoremViolationError,
)
from .gf import FieldElem, FiniteField, field_of_order, is_prime, make_field, prime_power
from .linalg import (
    MatGF,
    SubspaceCanon,
    VectorTables,
    a_factor,
    column_space_canon,
    enumerate_GL,
    gl_order,
    rref,
    sl_order,
)
from .qbinom import check_qbinom_bounds, count_subspaces_oracle, gaussian_binomial
from .permgroup import (
    PermGroup,
    alternating_group,
    builtin_group,
    compose,
    cyclic_group,
    dihedral_group,
    format_cycles,
    group_from_generators,
    load_group_file,
    parse_cycles,
    parse_group_text,
    predicates,
    symmetric_group,
    trivial_group,
    wreath_imprimitive,
)
from .distinguishing import (
    Coloring,
    chan_wreath_distnum,
    coloring_is_distinguishing,
    distinguishing_number_exact,
    distinguishing_search,
    primitive_catalog,
    primitive_catalog_check,
)
from .orbits import (
    count_multibase_orbits,
    count_spanning_orbits_canonical,
    count_spanning_orbits_partition,
    gl_point_action,
)
from .basesize import (
    Corollary12Result,
    WreathSpec,
    bailey_cameron_check,
    base_size_brute_force,
    base_size_closed_form,
    base_size_log_form,
    corollary12_bound,
)
from .pyber import (
    LogRatio,
    PyberCertificate,
    certify,
    family_constant,
    kk_factorial_check,
    minimal_pyber_C,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "GroupTooLargeError",
    "PrecisionExhaustedError",
    "SearchInconclusiveError",
    "TheoremViolationError",
    "FieldElem",
    "FiniteField",
    "field_of_order",
    "is_prime",
    "make_field",
    "prime_power",
    "MatGF",
    "SubspaceCanon",
    "VectorTables",
    "a_factor",
    "column_space_canon",
    "enumerate_GL",
    "gl_order",
    "rref",
    "sl_order",
    "check_qbinom_bounds",
    "count_subspaces_oracle",
    "gaussian_binomial",
    "PermGroup",
    "alternating_group",
    "builtin_group",
    "compose",
    "cyclic_group",
    "dihedral_group",
    "format_cycles",
    "group_from_generators",
    "load_group_file",
    "parse_cycles",
    "parse_group_text",
    "predicates",
    "symmetric_group",
    "trivial_group",
    "wreath_imprimitive",
    "Coloring",
    "chan_wreath_distnum",
    "coloring_is_distinguishing",
    "distinguishing_number_exact",
    "distinguishing_search",
    "primitive_catalog",
    "primitive_catalog_check",
    "count_multibase_orbits",
    "count_spanning_orbits_canonical",
    "count_spanning_orbits_partition",
    "gl_point_action",
    "Corollary12Result",
    "WreathSpec",
    "bailey_cameron_check",
    "base_size_brute_force",
    "base_size_closed_form",
    "base_size_log_form",
    "corollary12_bound",
    "LogRatio",
    "PyberCertificate",
    "certify",
    "family_constant",
    "kk_factorial_check",
    "minimal_pyber_C",
]
