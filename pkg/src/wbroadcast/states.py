"""Labeled multi-qubit pure states and density matrices.

Indexing is big-endian: the leftmost label is the most significant bit
of the basis index, so a ket bit string read left to right is the
binary index. ``index_of`` is the single place that convention lives.

Subnormalized objects are first-class: ``weight`` is the squared norm
of a pure state or the trace of a density matrix, and encodes the
probability prefactor of a post-selected branch. Constructors reject
rather than renormalize, so a mismatched weight is never masked.
"""

import enum
import math
import numbers
from array import array
from dataclasses import dataclass

from wbroadcast import backend
from wbroadcast import linalg
from wbroadcast.errors import (
    InvariantError,
    LabelError,
    NormalizationError,
)
from wbroadcast.linalg import CMatrix

# Squared norm (or trace) must match the declared weight this closely.
NORM_TOL = 1e-12
TRACE_TOL = 1e-10
WPARAMS_NORM_TOL = 1e-9
FIDELITY_NORM_TOL = 1e-9
WEIGHT_SLOP = 1e-12


class QubitLabel(enum.Enum):
    Data1 = "Data1"
    Data2 = "Data2"
    Data3 = "Data3"
    Data4 = "Data4"
    Data5 = "Data5"
    Data6 = "Data6"
    MachineA = "MachineA"
    MachineB = "MachineB"
    MachineC = "MachineC"


def _check_labels(labels):
    labels = tuple(labels)
    if not labels:
        raise LabelError("at least one label is required")
    for l in labels:
        if not isinstance(l, QubitLabel):
            raise LabelError("not a qubit label: %r" % (l,))
    if len(set(labels)) != len(labels):
        raise LabelError("labels must be distinct, got %s" % (label_names(labels),))
    return labels


def label_names(labels):
    return ",".join(l.value for l in labels)


def index_of(labels, bits):
    """Basis index for a {label: bit} assignment covering all labels."""
    if set(bits) != set(labels):
        raise LabelError("bit assignment must cover exactly the state labels")
    n = len(labels)
    idx = 0
    for i, l in enumerate(labels):
        b = bits[l]
        if b not in (0, 1):
            raise InvariantError("bit for %s must be 0 or 1, got %r" % (l.value, b))
        idx |= b << (n - 1 - i)
    return idx


def _check_weight(weight):
    w = float(weight)
    if not math.isfinite(w) or w <= 0.0 or w > 1.0 + WEIGHT_SLOP:
        raise NormalizationError("weight must lie in (0, 1], got %r" % (weight,))
    return w


class LabeledPureState:
    """Complex amplitude vector over an ordered tuple of named qubits."""

    __slots__ = ("_labels", "_buf", "_weight")

    def __init__(self, labels, amplitudes, weight=1.0):
        labels = _check_labels(labels)
        amps = [complex(v) for v in amplitudes]
        dim = 1 << len(labels)
        if len(amps) != dim:
            raise InvariantError(
                "expected %d amplitudes for %d qubits, got %d"
                % (dim, len(labels), len(amps))
            )
        buf = array("d", bytes(16 * dim))
        for i, z in enumerate(amps):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise InvariantError("non-finite amplitude at index %d" % (i,))
            buf[2 * i] = z.real
            buf[2 * i + 1] = z.imag
        self._init_checked(labels, buf, weight)

    @classmethod
    def _from_buf(cls, labels, buf, weight):
        s = cls.__new__(cls)
        s._init_checked(tuple(labels), buf, weight)
        return s

    def _init_checked(self, labels, buf, weight):
        w = _check_weight(weight)
        n2 = backend.kernels().vec_norm2(buf, len(buf) // 2)
        if abs(n2 - w) > NORM_TOL:
            raise NormalizationError(
                "squared norm %.17g does not match weight %.17g; "
                "normalize the amplitudes or pass the matching weight" % (n2, w)
            )
        self._labels = labels
        self._buf = buf
        self._weight = w

    @property
    def labels(self):
        return self._labels

    @property
    def weight(self):
        return self._weight

    @property
    def n_qubits(self):
        return len(self._labels)

    @property
    def dim(self):
        return 1 << len(self._labels)

    def amplitude(self, i):
        if not 0 <= i < self.dim:
            raise InvariantError("amplitude index %d out of range" % (i,))
        return complex(self._buf[2 * i], self._buf[2 * i + 1])

    @property
    def amplitudes(self):
        return tuple(
            complex(self._buf[2 * i], self._buf[2 * i + 1]) for i in range(self.dim)
        )

    def __repr__(self):
        return "LabeledPureState(%s, weight=%.6g)" % (
            label_names(self._labels),
            self._weight,
        )


class LabeledDensityMatrix:
    """Hermitian matrix over named qubits whose trace is its weight.

    Hermiticity and the trace/weight match are enforced at
    construction; positive semidefiniteness is checked on demand with
    ``validate_psd`` because it costs a full eigensolve.
    """

    __slots__ = ("_labels", "_matrix", "_weight")

    def __init__(self, labels, matrix, weight):
        labels = _check_labels(labels)
        dim = 1 << len(labels)
        if matrix.rows != dim or matrix.cols != dim:
            raise InvariantError(
                "expected a %dx%d matrix for %d qubits, got %dx%d"
                % (dim, dim, len(labels), matrix.rows, matrix.cols)
            )
        w = _check_weight(weight)
        defect, i, j = linalg.hermiticity_defect(matrix)
        if defect > linalg.HERMITICITY_TOL:
            raise linalg.HermiticityError(defect, i, j, linalg.HERMITICITY_TOL)
        tr = linalg.trace(matrix)
        if abs(tr.real - w) > TRACE_TOL:
            raise NormalizationError(
                "trace %.17g does not match weight %.17g" % (tr.real, w)
            )
        self._labels = labels
        self._matrix = matrix
        self._weight = w

    @property
    def labels(self):
        return self._labels

    @property
    def matrix(self):
        return self._matrix

    @property
    def weight(self):
        return self._weight

    @property
    def n_qubits(self):
        return len(self._labels)

    def normalized_matrix(self):
        return linalg.scale(self._matrix, 1.0 / self._weight)

    def validate_psd(self, tol=1e-9):
        eigs = linalg.hermitian_eigenvalues(self._matrix)
        if eigs[0] < -tol:
            raise InvariantError(
                "matrix is not PSD: min eigenvalue %.3e below -%.1e" % (eigs[0], tol)
            )
        return eigs

    def __repr__(self):
        return "LabeledDensityMatrix(%s, weight=%.6g)" % (
            label_names(self._labels),
            self._weight,
        )


@dataclass(frozen=True)
class WParams:
    """Real coefficients of a single-excitation three-qubit state."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not isinstance(v, numbers.Real):
                raise InvariantError("%s must be real, got %r" % (name, v))
            object.__setattr__(self, name, float(v))
            if not math.isfinite(getattr(self, name)):
                raise InvariantError("%s must be finite" % (name,))
        n2 = self.alpha**2 + self.beta**2 + self.gamma**2
        if abs(n2 - 1.0) > WPARAMS_NORM_TOL:
            raise NormalizationError(
                "coefficients must satisfy alpha^2+beta^2+gamma^2 = 1 "
                "within %g; got %.17g; normalize them first" % (WPARAMS_NORM_TOL, n2)
            )


DEFAULT_W_LABELS = (QubitLabel.Data1, QubitLabel.Data2, QubitLabel.Data3)


def w_state(p, labels=DEFAULT_W_LABELS):
    """Single-excitation state alpha|001> + beta|010> + gamma|100>.

    The default labels are the three input qubits; any three distinct
    labels may be supplied to build the same amplitude pattern there.
    """
    labels = _check_labels(labels)
    if len(labels) != 3:
        raise LabelError("w_state needs exactly three labels")
    l1, l2, l3 = labels
    amps = [0.0] * 8
    amps[index_of(labels, {l1: 0, l2: 0, l3: 1})] = p.alpha
    amps[index_of(labels, {l1: 0, l2: 1, l3: 0})] = p.beta
    amps[index_of(labels, {l1: 1, l2: 0, l3: 0})] = p.gamma
    n2 = p.alpha**2 + p.beta**2 + p.gamma**2
    if abs(n2 - 1.0) > NORM_TOL:
        raise NormalizationError(
            "squared norm %.17g is not 1 within %g; normalize the "
            "coefficients exactly before constructing the state" % (n2, NORM_TOL)
        )
    return LabeledPureState(labels, amps, weight=1.0)


def density_of(s):
    """Outer product of a pure state; weight (trace) is preserved."""
    out = array("d", bytes(16 * s.dim * s.dim))
    backend.kernels().outer_conj(s._buf, s.dim, out)
    return LabeledDensityMatrix(s.labels, CMatrix._wrap(s.dim, s.dim, out), s.weight)


def _scatter_table(n, positions):
    """Full-space indices of all bit patterns over the given positions.

    positions are label indices in the state's label order; bit j of a
    pattern (big-endian over the positions list) lands at full-index
    bit (n - 1 - positions[j]).
    """
    k = len(positions)
    shifts = [n - 1 - p for p in positions]
    table = []
    for pat in range(1 << k):
        f = 0
        for j in range(k):
            f |= ((pat >> (k - 1 - j)) & 1) << shifts[j]
        table.append(f)
    return table


def partial_trace(rho, keep):
    """Reduce a density matrix to the kept labels (order preserved)."""
    keepset = set(keep)
    if not keepset:
        raise LabelError("keep must be nonempty")
    unknown = keepset - set(rho.labels)
    if unknown:
        raise LabelError(
            "unknown labels in keep: %s" % (label_names(sorted(unknown, key=lambda l: l.value)),)
        )
    labels = rho.labels
    n = len(labels)
    kept = [i for i, l in enumerate(labels) if l in keepset]
    dropped = [i for i, l in enumerate(labels) if l not in keepset]
    kd = 1 << len(kept)
    dd = 1 << len(dropped)
    kt = _scatter_table(n, kept)
    dt = _scatter_table(n, dropped)
    idx = array("q", bytes(8 * kd * dd))
    for i in range(kd):
        base = kt[i]
        for d in range(dd):
            idx[i * dd + d] = base | dt[d]
    out = array("d", bytes(16 * kd * kd))
    backend.kernels().ptrace(rho.matrix._buf, 1 << n, idx, kd, dd, out)
    reduced = CMatrix._wrap(kd, kd, out)
    w = linalg.trace(reduced).real
    return LabeledDensityMatrix(tuple(labels[i] for i in kept), reduced, w)


def _perm_index_map(old_labels, new_labels):
    n = len(old_labels)
    src_pos = [old_labels.index(l) for l in new_labels]
    table = []
    for i in range(1 << n):
        out = 0
        for j in range(n):
            out |= ((i >> (n - 1 - src_pos[j])) & 1) << (n - 1 - j)
        table.append(out)
    return table


def relabel(obj, permutation):
    """Reorder a state's or density matrix's labels; pure data movement."""
    new_labels = tuple(permutation)
    old_labels = obj.labels
    if len(new_labels) != len(old_labels) or set(new_labels) != set(old_labels):
        raise LabelError(
            "permutation must be a bijection on the existing labels; "
            "got %s for %s" % (label_names(new_labels), label_names(old_labels))
        )
    pi = _perm_index_map(old_labels, new_labels)
    if isinstance(obj, LabeledPureState):
        dim = obj.dim
        buf = array("d", bytes(16 * dim))
        src = obj._buf
        for i in range(dim):
            o = 2 * pi[i]
            buf[o] = src[2 * i]
            buf[o + 1] = src[2 * i + 1]
        return LabeledPureState._from_buf(new_labels, buf, obj.weight)
    if isinstance(obj, LabeledDensityMatrix):
        dim = 1 << obj.n_qubits
        buf = array("d", bytes(16 * dim * dim))
        src = obj.matrix._buf
        for i in range(dim):
            for j in range(dim):
                o = 2 * (pi[i] * dim + pi[j])
                p = 2 * (i * dim + j)
                buf[o] = src[p]
                buf[o + 1] = src[p + 1]
        return LabeledDensityMatrix(
            new_labels, CMatrix._wrap(dim, dim, buf), obj.weight
        )
    raise InvariantError("relabel expects a labeled state or density matrix")


def fidelity_pure(rho, s):
    """Overlap <s| rho/weight |s> of a normalized pure state with rho."""
    if set(rho.labels) != set(s.labels):
        raise LabelError(
            "label sets differ: %s vs %s"
            % (label_names(rho.labels), label_names(s.labels))
        )
    if abs(s.weight - 1.0) > FIDELITY_NORM_TOL:
        raise NormalizationError(
            "fidelity_pure needs a normalized state, got weight %.17g" % (s.weight,)
        )
    if s.labels != rho.labels:
        s = relabel(s, rho.labels)
    v = CMatrix._wrap(s.dim, 1, array("d", s._buf))
    t = linalg.matmul(rho.matrix, v)
    f = linalg.matmul(linalg.dagger(v), t)
    return f.at(0, 0).real / rho.weight
