"""Exact combinatorics of type-A canonical basis parametrizations.

Wiring diagrams for reduced words of the longest permutation, crossing
paths and their sign vectors, four families of crystal structures on
integer vectors, cone and polytope inequality systems, and the
piecewise-linear transition maps connecting all of them.  Everything is
computed in exact integer arithmetic.
"""

from .rootcore import (
    BadLength,
    BadLetter,
    BraidMove,
    InapplicableMove,
    NotReduced,
    ReducedWord,
    RootOrder,
    all_reduced_words,
    braid_neighbors,
    longest_word,
    root_order,
    star_weight,
    star_word,
    validate_reduced_word,
    weyl_dim,
)
from .wiring import OrientedWiring, WiringDiagram, build_wiring, orient
from .crossings import (
    Crossing,
    CrossingVectors,
    IncomparableKinds,
    NoUniqueExtremum,
    crossing_leq,
    crossing_vectors,
    enumerate_crossings,
    kashiwara_crossings,
)
from .plmaps import (
    NotAStringDatum,
    PeelingIncomplete,
    f_linear,
    f_transpose,
    g_affine,
    opp,
    oracle_epsilon,
    oracle_step,
    phi_transition,
    psi_transition,
    string_datum,
    string_inverse,
)
from .crystals import (
    CrystalGraph,
    FAMILIES,
    enumerate_binfty,
    enumerate_crystal,
    epsilon_closed,
    epsilon_complement,
    step_closed,
    weight_of,
)
from .polytopes import (
    BoxUncertified,
    DimensionMismatch,
    InequalitySystem,
    contains,
    inequality_system,
    lattice_points,
)
from .harness import (
    IsoResult,
    NoUniqueRoot,
    SuiteParams,
    SuiteReport,
    UnknownSuite,
    check_graph_iso,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BadLength",
    "BadLetter",
    "BoxUncertified",
    "BraidMove",
    "Crossing",
    "CrossingVectors",
    "CrystalGraph",
    "DimensionMismatch",
    "FAMILIES",
    "InapplicableMove",
    "IncomparableKinds",
    "InequalitySystem",
    "IsoResult",
    "NoUniqueExtremum",
    "NoUniqueRoot",
    "NotAStringDatum",
    "NotReduced",
    "OrientedWiring",
    "PeelingIncomplete",
    "ReducedWord",
    "RootOrder",
    "SuiteParams",
    "SuiteReport",
    "UnknownSuite",
    "WiringDiagram",
    "all_reduced_words",
    "braid_neighbors",
    "build_wiring",
    "check_graph_iso",
    "contains",
    "crossing_leq",
    "crossing_vectors",
    "enumerate_binfty",
    "enumerate_crossings",
    "enumerate_crystal",
    "epsilon_closed",
    "epsilon_complement",
    "f_linear",
    "f_transpose",
    "g_affine",
    "inequality_system",
    "kashiwara_crossings",
    "lattice_points",
    "longest_word",
    "opp",
    "oracle_epsilon",
    "oracle_step",
    "orient",
    "phi_transition",
    "psi_transition",
    "root_order",
    "run_suite",
    "star_weight",
    "star_word",
    "step_closed",
    "string_datum",
    "string_inverse",
    "validate_reduced_word",
    "weight_of",
    "weyl_dim",
]
