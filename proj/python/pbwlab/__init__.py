"""Exact symbolic engine for sp(2n) and Jacobi enveloping algebras.

PBW normal forms, character-induced highest-weight modules,
raising-operator recovery scans, Harish-Chandra projections, and the heat
operator / determinant operator identities, all over exact rational
function coefficients.
"""

from ._core import (
    InducedModule,
    LieAlgebra,
    ModuleVector,
    PbwContext,
    PbwlabError,
    Scalar,
    UeaElement,
    __version__,
    ad_action,
    bol_extension_check,
    center_projection_check,
    cofactor_relation_check,
    delta_eigencheck,
    gelfand_invariant,
    is_central,
    is_holomorphic,
    known_suites,
    laplace_pair,
    raising_determinant,
    recovery_scan,
    run_config,
    symmetrize,
    weight_check,
)

__all__ = [
    "InducedModule",
    "LieAlgebra",
    "ModuleVector",
    "PbwContext",
    "PbwlabError",
    "Scalar",
    "UeaElement",
    "__version__",
    "ad_action",
    "bol_extension_check",
    "center_projection_check",
    "cofactor_relation_check",
    "delta_eigencheck",
    "gelfand_invariant",
    "is_central",
    "is_holomorphic",
    "known_suites",
    "laplace_pair",
    "raising_determinant",
    "recovery_scan",
    "run_config",
    "symmetrize",
    "weight_check",
]
