"""Exact symbolic computation in tensor products of cyclic algebras.

The algebra is A = (a_1, b_1) x ... x (a_n, b_n) of degree p^n over the
field K = Q(rho)(a_1, b_1, ..., a_n, b_n) with rho a primitive p-th root
of unity and the a_k, b_k independent indeterminates.  The package checks
the Kummer-element and Kummer-space conditions exactly, classifies
monomial spaces at p = 3 through their commutation graphs, constructs
maximal monomial Kummer spaces, and rewrites monomial-free bases into
monomial ones.
"""

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    commutation_exponent,
    conjugation_exponent,
    cyclic_norm,
    is_kummer_element,
    monomial_str,
    mul_monomials,
    star_product,
)
from .constructions import (
    BudgetExceededError,
    MaximalSpaceParams,
    build_maximal_space,
    enumerate_monomial_kummer_spaces,
    sample_extension_failures,
    standard_basis,
    verify_monomial_maximality,
)
from .graphs import (
    AxiomReport,
    CommutationGraph,
    build_graph,
    check_axioms,
    classify,
    export_dot,
    is_rho_commuting,
    max_transitive_chain,
)
from .parsing import ParseError, parse_scalar, render_scalar
from .scalars import Cyclotomic, Laurent, alpha, beta
from .spaces import (
    FreeLift,
    KummerVerdict,
    MonomializationError,
    SpaceBasis,
    clear_denominators,
    in_span,
    is_kummer_space,
    is_kummer_space_triples,
    leading_monomial,
    lift_to_polynomial,
    monomialize,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "AxiomReport",
    "BudgetExceededError",
    "CommutationGraph",
    "Cyclotomic",
    "FreeLift",
    "KummerVerdict",
    "Laurent",
    "MaximalSpaceParams",
    "MonomializationError",
    "ParseError",
    "SpaceBasis",
    "alpha",
    "beta",
    "build_graph",
    "build_maximal_space",
    "check_axioms",
    "classify",
    "clear_denominators",
    "commutation_exponent",
    "conjugation_exponent",
    "cyclic_norm",
    "enumerate_monomial_kummer_spaces",
    "export_dot",
    "in_span",
    "is_kummer_element",
    "is_kummer_space",
    "is_kummer_space_triples",
    "is_rho_commuting",
    "leading_monomial",
    "lift_to_polynomial",
    "max_transitive_chain",
    "monomial_str",
    "monomialize",
    "mul_monomials",
    "parse_scalar",
    "render_scalar",
    "sample_extension_failures",
    "standard_basis",
    "star_product",
    "verify_monomial_maximality",
]
