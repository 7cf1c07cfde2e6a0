"""Exact homological invariants of bound quiver algebras.

Computes syzygies, minimal projective resolutions, Ext dimension
tables, Koszul-style cones and complexity-reduction towers over
circular selfinjective Nakayama algebras, and analyzes vanishing gaps
and vanishing symmetry of Ext on concrete instances.
"""

from .algebra import (
    BoundQuiverAlgebra,
    PathWord,
    Quiver,
    ZeroProduct,
    circular_quiver,
    nakayama_algebra,
)
from .homology import (
    ExtTable,
    PeriodicityWitness,
    Resolution,
    betti_ext_dims,
    detect_period,
    ext_dim,
    ext_dims,
    ext_table,
    minimal_resolution,
    omega_map,
    stable_hom_dim,
    syzygy,
)
from .koszul import (
    ComplexityEstimate,
    KoszulStep,
    ReductionTower,
    build_periodicity_tower,
    complexity_estimate,
    koszul_object,
    minimum_window,
)
from .linalg import GF, is_prime
from .modules import (
    IsomorphismUndecided,
    ModuleMap,
    ProjectiveCover,
    QuiverModule,
    RANDOM_SEED,
    UnsupportedOperation,
    cokernel,
    decompose_serial,
    direct_sum,
    find_isomorphism,
    hom_basis,
    is_isomorphic,
    is_projective,
    kernel,
    projective,
    projective_cover,
    simple,
    top_dims,
    uniserial,
    zero_module,
)
from .specifiers import SpecifierError, parse_module_spec
from .vanishing import (
    FalsificationError,
    GapReport,
    SweepError,
    SymmetryReport,
    auslander_scan,
    gap_check,
    gap_suite_cell,
    les_shift_holds,
    nakayama_report,
    run_sweep,
    sample_uniserial_pairs,
    symmetry_scan,
)

__all__ = [
    "BoundQuiverAlgebra",
    "ComplexityEstimate",
    "ExtTable",
    "FalsificationError",
    "GF",
    "GapReport",
    "IsomorphismUndecided",
    "KoszulStep",
    "ModuleMap",
    "PathWord",
    "PeriodicityWitness",
    "ProjectiveCover",
    "Quiver",
    "QuiverModule",
    "RANDOM_SEED",
    "ReductionTower",
    "Resolution",
    "SpecifierError",
    "SweepError",
    "SymmetryReport",
    "UnsupportedOperation",
    "ZeroProduct",
    "auslander_scan",
    "betti_ext_dims",
    "build_periodicity_tower",
    "circular_quiver",
    "cokernel",
    "complexity_estimate",
    "decompose_serial",
    "detect_period",
    "direct_sum",
    "ext_dim",
    "ext_dims",
    "ext_table",
    "find_isomorphism",
    "gap_check",
    "gap_suite_cell",
    "hom_basis",
    "is_isomorphic",
    "is_prime",
    "is_projective",
    "kernel",
    "koszul_object",
    "les_shift_holds",
    "minimal_resolution",
    "minimum_window",
    "nakayama_algebra",
    "nakayama_report",
    "omega_map",
    "parse_module_spec",
    "projective",
    "projective_cover",
    "run_sweep",
    "sample_uniserial_pairs",
    "simple",
    "stable_hom_dim",
    "symmetry_scan",
    "syzygy",
    "top_dims",
    "uniserial",
    "zero_module",
]
