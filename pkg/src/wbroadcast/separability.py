"""Entanglement verdicts: partial transpose, PPT spectrum, and the
determinant form of the two-qubit separability criterion.

Verdict operations (ppt, peres_horodecki, w_structure) normalize their
input by its weight first, so subnormalized branch operators get the
same verdicts as their normalized states. partial_transpose alone acts
on the matrix as stored, preserving its trace exactly.
"""

import itertools
from array import array
from dataclasses import dataclass

from wbroadcast import backend
from wbroadcast import linalg
from wbroadcast.errors import DimensionError, InvariantError, LabelError
from wbroadcast.linalg import CMatrix
from wbroadcast.states import label_names

VERDICT_TOL = 1e-9

# Single-excitation basis kets in the order the 3x3 restriction uses:
# |100>, |010>, |001>.
_SINGLE_EXCITATION_INDICES = (4, 2, 1)


@dataclass(frozen=True)
class Bipartition:
    """A two-block split of a state's labels."""

    left: frozenset
    right: frozenset

    def __init__(self, left, right):
        object.__setattr__(self, "left", frozenset(left))
        object.__setattr__(self, "right", frozenset(right))
        if not self.left or not self.right:
            raise InvariantError("both sides of a bipartition must be nonempty")
        if self.left & self.right:
            raise InvariantError("bipartition sides must be disjoint")


@dataclass(frozen=True)
class PptResult:
    """Spectrum summary of a partial transpose.

    conclusive is True only for a qubit-qubit cut, where a negative
    eigenvalue is necessary and sufficient for inseparability; for
    larger systems the verdict detects NPT entanglement only.
    """

    min_eigenvalue: float
    negativity: float
    inseparable: bool
    conclusive: bool


@dataclass(frozen=True)
class PeresHorodeckiResult:
    """Determinant form of the two-qubit criterion."""

    w3: float
    w4: float
    inseparable: bool


@dataclass(frozen=True)
class WStructureResult:
    """How much of a 3-qubit state lives in the single-excitation
    subspace and whether it is a single pure vector there.

    restriction is the 3x3 block in basis order |100>, |010>, |001>;
    coherences are |rho_{001,010}|, |rho_{001,100}|, |rho_{010,100}| of
    the normalized state.
    """

    subspace_weight: float
    restriction: CMatrix
    eigenvalues: tuple
    rank1_w_type: bool
    coherences: tuple


def _subset_mask(labels, subset):
    unknown = subset - set(labels)
    if unknown:
        raise LabelError(
            "unknown labels: %s"
            % (label_names(sorted(unknown, key=lambda l: l.value)),)
        )
    n = len(labels)
    mask = 0
    for i, l in enumerate(labels):
        if l in subset:
            mask |= 1 << (n - 1 - i)
    return mask


def _ptranspose_matrix(matrix, labels, subset):
    mask = _subset_mask(labels, subset)
    dim = matrix.rows
    out = array("d", bytes(16 * dim * dim))
    backend.kernels().ptranspose(matrix._buf, dim, mask, out)
    return CMatrix._wrap(dim, dim, out)


def partial_transpose(rho, transposed):
    """Transpose the indices of one subsystem; trace is unchanged."""
    return _ptranspose_matrix(rho.matrix, rho.labels, set(transposed))


def ppt(rho, cut, tol=VERDICT_TOL):
    """Eigenvalue test of the partial transpose over cut.right."""
    if cut.left | cut.right != set(rho.labels):
        raise InvariantError(
            "bipartition %s | %s does not cover the labels %s"
            % (
                label_names(sorted(cut.left, key=lambda l: l.value)),
                label_names(sorted(cut.right, key=lambda l: l.value)),
                label_names(rho.labels),
            )
        )
    pt = _ptranspose_matrix(rho.normalized_matrix(), rho.labels, cut.right)
    eigs = linalg.hermitian_eigenvalues(pt)
    neg = 0.0
    for e in eigs:
        if e < -tol:
            neg += -e
    return PptResult(
        min_eigenvalue=eigs[0],
        negativity=neg,
        inseparable=eigs[0] < -tol,
        conclusive=len(cut.left) == 1 and len(cut.right) == 1,
    )


def _printed_pt_entry(nm, m, mu, n, nu):
    # Entry at row (m, mu), column (n, nu) of the printed determinant
    # arrays: the (second-qubit-transposed) element rho_{m nu, n mu}.
    return nm.at(2 * m + nu, 2 * n + mu)


def peres_horodecki(rho, tol=VERDICT_TOL):
    """Determinant form of the two-qubit separability criterion.

    w4 is the determinant of the full partially transposed matrix,
    built entry by entry in the published layout; w3 is its leading
    3x3 principal minor. The state is inseparable iff either is
    negative beyond tol.
    """
    if rho.n_qubits != 2:
        raise DimensionError(
            "peres_horodecki needs a two-qubit state, got %d qubits"
            % (rho.n_qubits,)
        )
    nm = rho.normalized_matrix()
    pairs = ((0, 0), (0, 1), (1, 0), (1, 1))
    full = [
        [_printed_pt_entry(nm, m, mu, n, nu) for (n, nu) in pairs]
        for (m, mu) in pairs
    ]
    w4 = linalg.determinant(CMatrix.from_rows(full)).real
    minor = [row[:3] for row in full[:3]]
    w3 = linalg.determinant(CMatrix.from_rows(minor)).real
    return PeresHorodeckiResult(
        w3=w3, w4=w4, inseparable=(w3 < -tol) or (w4 < -tol)
    )


def w_structure(rho, tol=VERDICT_TOL):
    """Single-excitation structure report for a 3-qubit state."""
    if rho.n_qubits != 3:
        raise DimensionError(
            "w_structure needs a three-qubit state, got %d qubits" % (rho.n_qubits,)
        )
    nm = rho.normalized_matrix()
    idx = _SINGLE_EXCITATION_INDICES
    weight = nm.at(idx[0], idx[0]).real + nm.at(idx[1], idx[1]).real + nm.at(
        idx[2], idx[2]
    ).real
    restriction = CMatrix.from_rows(
        [[nm.at(r, c) for c in idx] for r in idx]
    )
    eigs = tuple(linalg.hermitian_eigenvalues(restriction))
    rank1 = (eigs[1] < tol * eigs[2]) and (weight >= 1.0 - tol)
    coherences = (
        abs(nm.at(1, 2)),
        abs(nm.at(1, 4)),
        abs(nm.at(2, 4)),
    )
    return WStructureResult(
        subspace_weight=weight,
        restriction=restriction,
        eigenvalues=eigs,
        rank1_w_type=rank1,
        coherences=coherences,
    )


def bipartite_cuts(rho, tol=VERDICT_TOL):
    """PPT results for the three one-versus-two cuts of a 3-qubit state.

    Cut order is fixed: first label alone, second label alone, third
    label alone, each against the remaining pair.
    """
    if rho.n_qubits != 3:
        raise DimensionError(
            "bipartite_cuts needs a three-qubit state, got %d qubits"
            % (rho.n_qubits,)
        )
    l = rho.labels
    cuts = (
        Bipartition({l[0]}, {l[1], l[2]}),
        Bipartition({l[1]}, {l[0], l[2]}),
        Bipartition({l[2]}, {l[0], l[1]}),
    )
    return tuple(ppt(rho, c, tol) for c in cuts)


def label_alignments(labels):
    """All orderings of a label set, in a fixed deterministic order."""
    return tuple(
        itertools.permutations(sorted(labels, key=lambda x: x.value))
    )
