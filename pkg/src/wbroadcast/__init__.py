"""Exact simulator for W-type state broadcasting via local cloning.

Three parties share a W-type three-qubit state and each runs it through
a two-parameter cloning isometry with a machine register. Measuring the
machines splits the output into eight post-selected branches; this
package enumerates them exactly, reduces them to the interesting
marginals, and tests separability with the partial-transpose and
determinant criteria. All arithmetic is plain double precision over an
exact bit-indexed state vector, so equal inputs give bit-equal outputs.
"""

from wbroadcast.backend import active_backend, available_backends, use_backend
from wbroadcast.cloning import (
    CANONICAL_LABEL_ORDER,
    DATA_LABEL_ORDER,
    OUTCOME_ORDER,
    CloningMachine,
    MachineFlag,
    Outcome,
    PostSelectedBranch,
    branch_reduced,
    clone_qubit,
    enumerate_outcomes,
    isometry,
    run_protocol,
)
from wbroadcast.errors import (
    ConfigError,
    ConvergenceError,
    DimensionError,
    HermiticityError,
    InvariantError,
    LabelError,
    NormalizationError,
    WBroadcastError,
)
from wbroadcast.linalg import (
    CMatrix,
    add,
    dagger,
    determinant,
    frobenius_distance,
    hermitian_eigenvalues,
    hermiticity_defect,
    kron,
    matmul,
    scale,
    trace,
)
from wbroadcast.separability import (
    Bipartition,
    PeresHorodeckiResult,
    PptResult,
    WStructureResult,
    bipartite_cuts,
    label_alignments,
    partial_transpose,
    peres_horodecki,
    ppt,
    w_structure,
)
from wbroadcast.states import (
    DEFAULT_W_LABELS,
    LabeledDensityMatrix,
    LabeledPureState,
    QubitLabel,
    WParams,
    density_of,
    fidelity_pure,
    index_of,
    partial_trace,
    relabel,
    w_state,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_LABEL_ORDER",
    "CMatrix",
    "Bipartition",
    "CloningMachine",
    "ConfigError",
    "ConvergenceError",
    "DATA_LABEL_ORDER",
    "DEFAULT_W_LABELS",
    "DimensionError",
    "HermiticityError",
    "InvariantError",
    "LabelError",
    "LabeledDensityMatrix",
    "LabeledPureState",
    "MachineFlag",
    "NormalizationError",
    "OUTCOME_ORDER",
    "Outcome",
    "PeresHorodeckiResult",
    "PostSelectedBranch",
    "PptResult",
    "QubitLabel",
    "WBroadcastError",
    "WParams",
    "WStructureResult",
    "active_backend",
    "add",
    "available_backends",
    "bipartite_cuts",
    "branch_reduced",
    "clone_qubit",
    "dagger",
    "density_of",
    "determinant",
    "enumerate_outcomes",
    "fidelity_pure",
    "frobenius_distance",
    "hermitian_eigenvalues",
    "hermiticity_defect",
    "index_of",
    "isometry",
    "kron",
    "label_alignments",
    "matmul",
    "partial_trace",
    "partial_transpose",
    "peres_horodecki",
    "ppt",
    "relabel",
    "run_protocol",
    "scale",
    "trace",
    "use_backend",
    "w_state",
    "w_structure",
    "__version__",
]
