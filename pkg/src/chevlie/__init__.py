"""Exact-arithmetic Chevalley Lie algebras over the integers.

The package builds root systems for all simple types, realizes the
corresponding Lie algebras in a Chevalley basis with integer structure
constants, computes Killing-form invariants exactly, and models the Lie
lattices of maximal parahoric subgroups together with their discriminants
and unipotent-radical layer decompositions.
"""

from .chevalley import (
    AlgebraVerification,
    ChevalleyAlgebra,
    construct,
    load_structure_constants,
    save_structure_constants,
    verify_algebra,
)
from .errors import (
    ChevlieError,
    InternalConsistencyError,
    InvalidLieTypeError,
    NodeError,
    NotARootError,
    PrimeConditionError,
    UnsupportedOperationError,
)
from .intform import (
    FactoredInteger,
    IntegerForm,
    determinant,
    elementary_divisors,
)
from .parahoric import (
    ExtendedDiagram,
    Layer,
    LayerReport,
    ParahoricLattice,
    ParahoricReport,
    bracket_closure_violation,
    build_report,
    dim_unipotent,
    extended_diagram,
    iwahori_lattice,
    j_alpha_lattice,
    layers,
    matching_parahorics,
    parahoric_discriminant,
    parahoric_divisors,
    parahoric_lattice,
    reduced_label,
    reduced_subsystem,
    scaled_gram,
)
from .replabel import LayerLabel, factor_labels, weyl_orbits
from .rootsys import LieType, Root, RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "AlgebraVerification",
    "ChevalleyAlgebra",
    "ChevlieError",
    "ExtendedDiagram",
    "FactoredInteger",
    "IntegerForm",
    "InternalConsistencyError",
    "InvalidLieTypeError",
    "Layer",
    "LayerLabel",
    "LayerReport",
    "LieType",
    "NodeError",
    "NotARootError",
    "ParahoricLattice",
    "ParahoricReport",
    "PrimeConditionError",
    "Root",
    "RootSystem",
    "UnsupportedOperationError",
    "bracket_closure_violation",
    "build",
    "build_report",
    "construct",
    "determinant",
    "dim_unipotent",
    "elementary_divisors",
    "extended_diagram",
    "factor_labels",
    "iwahori_lattice",
    "j_alpha_lattice",
    "layers",
    "load_structure_constants",
    "matching_parahorics",
    "parahoric_discriminant",
    "parahoric_divisors",
    "parahoric_lattice",
    "reduced_label",
    "reduced_subsystem",
    "save_structure_constants",
    "scaled_gram",
    "verify_algebra",
    "weyl_orbits",
]
