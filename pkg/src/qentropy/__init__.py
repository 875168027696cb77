"""Quantum state ensembles, mixed+pure decompositions, and entropy measures."""

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    DomainViolation,
    NoRootFound,
    NotAProbabilityVector,
    NotHermitian,
    NotPositiveSemidefinite,
    NoValidSplit,
    NumericalError,
    SplitMismatch,
    TooManyRoots,
    TraceNotOne,
    ValidationError,
    WeightSumInvalid,
)
from .linalg import (
    DensityOperator,
    PureState,
    SpectralDecomposition,
    eig2_closed_form,
    eig_hermitian,
    kron,
    make_density,
    mix,
    outer_product,
    partial_trace,
)
from .ensembles import (
    Ensemble,
    EnsembleComponent,
    MixedPureSplit,
    QubitEnsembleSpec,
    assemble,
    assemble_general,
    enumerate_splits,
    pure_weight_bounds,
    split_family,
    symmetric_split,
)
from .entropy import (
    EntropyReport,
    HolevoReport,
    OrderingScanResult,
    ScanRecord,
    composite,
    composite_closed_form,
    holevo_quantity,
    informational,
    ordering_scan,
    pure_entropy,
    report,
    shannon,
    von_neumann,
)
from .game import (
    GameConfig,
    ThresholdSolution,
    entropy_gain,
    receiver_state,
    sender_state,
    sweep_game,
    threshold_roots,
)
from .inputs import InputDocument, load_document, parse_document

__version__ = "0.1.0"

__all__ = [
    "ConvergenceFailure",
    "DensityOperator",
    "DimensionMismatch",
    "DomainViolation",
    "Ensemble",
    "EnsembleComponent",
    "EntropyReport",
    "GameConfig",
    "HolevoReport",
    "InputDocument",
    "MixedPureSplit",
    "NoRootFound",
    "NotAProbabilityVector",
    "NotHermitian",
    "NotPositiveSemidefinite",
    "NoValidSplit",
    "NumericalError",
    "OrderingScanResult",
    "PureState",
    "QubitEnsembleSpec",
    "ScanRecord",
    "SpectralDecomposition",
    "SplitMismatch",
    "ThresholdSolution",
    "TooManyRoots",
    "TraceNotOne",
    "ValidationError",
    "WeightSumInvalid",
    "assemble",
    "assemble_general",
    "composite",
    "composite_closed_form",
    "eig2_closed_form",
    "eig_hermitian",
    "entropy_gain",
    "enumerate_splits",
    "holevo_quantity",
    "informational",
    "kron",
    "load_document",
    "make_density",
    "mix",
    "ordering_scan",
    "outer_product",
    "parse_document",
    "partial_trace",
    "pure_entropy",
    "pure_weight_bounds",
    "receiver_state",
    "report",
    "sender_state",
    "shannon",
    "split_family",
    "sweep_game",
    "symmetric_split",
    "threshold_roots",
    "von_neumann",
]
