"""Decomposition of modules with multiplicative bases under n-linear products."""

from .connections import (
    BACKWARD,
    FORWARD,
    ComponentPartition,
    Connection,
    Step,
    components,
    components_oracle,
    find_connection,
    forward_edges,
    mu,
    phi,
    reverse_connection,
    verify_connection,
)
from .core import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    MODULE_TAG,
    SPACE_TAG,
    KModuleStructure,
    NAryAlgebra,
    Scalar,
    SigmaEntry,
    Violation,
    enumeration_budget,
    evaluate,
    from_sigma_entries,
    module_slot,
    placement_module_multiset,
    placement_space_multiset,
    placement_space_size,
    space_slot,
    support,
    validate,
)
from .decomposition import (
    SubmoduleComponent,
    decompose,
    restrict,
    verify_orthogonality,
    verify_submodule,
)
from .errors import (
    ArityMismatch,
    BudgetError,
    CollisionError,
    DimensionError,
    DocumentError,
    InvalidWitness,
    ModBasisError,
    NotASubmodule,
    ParseError,
    SchemaError,
    SymmetrizeConflict,
    TheoremViolation,
    ValidationError,
)
from .generators import (
    COEFFICIENT_POOL,
    GenSpec,
    modular_family,
    random_structure,
    symmetrize,
    trivial_structure,
)
from .io import dumps_document, export_dot, read_document, write_document
from .minimality import (
    MinimalityReport,
    check_minimality_equivalence,
    directed_closure,
    is_minimal,
    is_mu_multiplicative,
)
from .semidirect import (
    CombinedComponent,
    CombinedStructure,
    ModuleOverAlgebra,
    PairingReport,
    build_semidirect,
    decompose_combined,
    pairing,
    verify_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BACKWARD",
    "BUDGET_ENV",
    "BudgetError",
    "COEFFICIENT_POOL",
    "CollisionError",
    "CombinedComponent",
    "CombinedStructure",
    "ComponentPartition",
    "Connection",
    "DEFAULT_BUDGET",
    "DimensionError",
    "DocumentError",
    "FORWARD",
    "GenSpec",
    "InvalidWitness",
    "KModuleStructure",
    "MODULE_TAG",
    "MinimalityReport",
    "ModBasisError",
    "ModuleOverAlgebra",
    "NAryAlgebra",
    "NotASubmodule",
    "PairingReport",
    "ParseError",
    "SPACE_TAG",
    "Scalar",
    "SchemaError",
    "SigmaEntry",
    "Step",
    "SubmoduleComponent",
    "SymmetrizeConflict",
    "TheoremViolation",
    "ValidationError",
    "Violation",
    "build_semidirect",
    "check_minimality_equivalence",
    "components",
    "components_oracle",
    "decompose",
    "decompose_combined",
    "directed_closure",
    "dumps_document",
    "enumeration_budget",
    "evaluate",
    "export_dot",
    "find_connection",
    "forward_edges",
    "from_sigma_entries",
    "is_minimal",
    "is_mu_multiplicative",
    "modular_family",
    "module_slot",
    "mu",
    "pairing",
    "phi",
    "placement_module_multiset",
    "placement_space_multiset",
    "placement_space_size",
    "random_structure",
    "read_document",
    "restrict",
    "reverse_connection",
    "space_slot",
    "support",
    "symmetrize",
    "trivial_structure",
    "validate",
    "verify_connection",
    "verify_ideal",
    "verify_orthogonality",
    "verify_submodule",
    "write_document",
]
