"""CR invariants of minimal orbits in complex flag manifolds, computed from
cross-marked Satake diagrams by root-system combinatorics."""

from .rootcore import (
    DynkinGraph,
    MalformedGraph,
    RootSystem,
    build_root_system,
    longest_involution,
    reflect,
    root_closure,
    support,
)
from .satake import (
    Conjugation,
    InvalidArrows,
    NotASatakeDiagram,
    OutOfRange,
    SatakeDiagram,
    UnknownForm,
    ValidationError,
    build_conjugation,
    catalog_forms,
    catalog_lookup,
    classify_root,
    direct_sum,
    epsilon_of,
    make_diagram,
    sigma_components,
)
from .parabolic import (
    CrossedDiagram,
    OrbitAnalysis,
    ParabolicRootData,
    analyze,
    cr_type,
    is_effective,
    is_fundamental,
    is_ideal_nondegenerate,
    is_strictly_nondegenerate,
    is_weakly_nondegenerate,
    parabolic_roots,
)
from .fibration import (
    FibrationReport,
    NotFundamental,
    PsiNotSubset,
    ReductionReport,
    fiber_over,
    fundamental_reduction,
    reduction_diagram,
    weak_reduction,
)
from .oracles import AmbiguousLargest, SweepReport, oracle_fundamental, oracle_weak_largest, sweep_consistency
from .dsl import ParseError, parse_spec
from .render import render_diagram

__version__ = "0.1.0"
