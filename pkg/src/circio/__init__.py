"""circio: isomorphism tooling for circulant graphs.

Connection-set arithmetic, multiplier (Type-1) orbits, the block-shift
(Type-2) transform, an independent canonical-labeling oracle, family
enumeration at order 54, exhaustive small-order scans, construction
generators, and golden-row verification.
"""

from .classify import (
    NON_ISOMORPHIC,
    TYPE1,
    TYPE2,
    UNKNOWN,
    Classification,
    TupleRecord,
    classify_pair,
    classify_tuple,
)
from .core import (
    CirculantGraph,
    ConnectionSet,
    EdgeImage,
    adjacency_spectrum,
    first_spectral_gap,
    full_difference_set,
    is_circulant,
    reflexive_reduce,
    spectra_equal,
)
from .enumeration import (
    DEFAULT_SCAN_BUDGET,
    FamilySpec,
    ProbeEntry,
    ProbeReport,
    ScanReport,
    enumerate_family,
    family,
    full_scan,
    generate_a17c,
    generate_c1,
    probe_open_problems,
    worker_count,
)
from .errors import (
    BudgetExceeded,
    CircioError,
    DegeneratePair,
    Intractable,
    InvalidIndex,
    InvalidParams,
    NotAUnit,
    NotBijective,
    NotMultipleOfM,
    OrderMismatch,
    ZeroJump,
)
from .goldens import GoldenReport, GoldenRow, load_golden_rows, verify_goldens
from .multipliers import (
    AdamOrbit,
    UnitGroup,
    adam_orbit,
    is_adam_equivalent,
    multiply_set,
    units,
)
from .oracle import (
    DEFAULT_BUDGET,
    CanonicalForm,
    IsoVerdict,
    canonical_edges_of,
    canonical_form,
    isomorphic,
    verify_permutation,
)
from .theta import (
    ThetaParams,
    ThetaWitness,
    theta_image,
    theta_params_valid,
    theta_scan,
    theta_vertex_map,
    theta_witness,
    union_shift,
    valid_block_moduli,
)

__version__ = "0.1.0"

__all__ = [
    "AdamOrbit",
    "BudgetExceeded",
    "CanonicalForm",
    "CircioError",
    "CirculantGraph",
    "Classification",
    "ConnectionSet",
    "DEFAULT_BUDGET",
    "DEFAULT_SCAN_BUDGET",
    "DegeneratePair",
    "EdgeImage",
    "FamilySpec",
    "GoldenReport",
    "GoldenRow",
    "Intractable",
    "InvalidIndex",
    "InvalidParams",
    "IsoVerdict",
    "NON_ISOMORPHIC",
    "NotAUnit",
    "NotBijective",
    "NotMultipleOfM",
    "OrderMismatch",
    "ProbeEntry",
    "ProbeReport",
    "ScanReport",
    "ThetaParams",
    "ThetaWitness",
    "TupleRecord",
    "TYPE1",
    "TYPE2",
    "UNKNOWN",
    "UnitGroup",
    "ZeroJump",
    "adam_orbit",
    "adjacency_spectrum",
    "canonical_edges_of",
    "canonical_form",
    "classify_pair",
    "classify_tuple",
    "enumerate_family",
    "family",
    "first_spectral_gap",
    "full_difference_set",
    "full_scan",
    "generate_a17c",
    "generate_c1",
    "is_adam_equivalent",
    "is_circulant",
    "isomorphic",
    "load_golden_rows",
    "multiply_set",
    "probe_open_problems",
    "reflexive_reduce",
    "spectra_equal",
    "theta_image",
    "theta_params_valid",
    "theta_scan",
    "theta_vertex_map",
    "theta_witness",
    "union_shift",
    "units",
    "valid_block_moduli",
    "verify_goldens",
    "verify_permutation",
    "worker_count",
]
