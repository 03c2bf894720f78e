"""Finite MV-algebras, Wajsberg algebras and Boolean algebras on Cayley tables."""
from mvkit.algebra import (
    AlgebraError,
    AxiomReport,
    FiniteMVAlgebra,
    OrderStructure,
    WajsbergAlgebra,
    check_order_equivalences,
    derive_order,
    find_isomorphism,
    from_wajsberg,
    is_mv_isomorphism,
    odot,
    ominus,
    secondary_ops,
    to_wajsberg,
    verify_mv_axioms,
    verify_wajsberg_axioms,
)
from mvkit.chains import chain_indices, make_chain, make_chain_wajsberg
from mvkit.codes import (
    BinaryBlockCode,
    CodeMatrix,
    attach_code,
    base_boolean,
    build_boolean,
    check_matrix_recursion,
    code_matrix,
    code_to_boolean,
    double_boolean,
    min_distance,
)
from mvkit.fibonacci import (
    FibonacciTrace,
    NonStationaryError,
    closed_form_term,
    fib_trace,
    is_two_stationary_everywhere,
    lambda_map,
    lambda_table,
    pisano_period,
)
from mvkit.fileformat import (
    ParseError,
    format_algebra,
    format_wajsberg,
    load_algebra,
    parse_algebra,
    parse_any,
    parse_wajsberg,
)
from mvkit.kernels import BACKEND
from mvkit.structure import (
    Decomposition,
    decompose,
    enumerate_mv_algebras,
    principal_ideal,
    product,
    proper_idempotent_count,
)

__version__ = "0.1.0"
