"""The local cloning isometry and the post-selection protocol.

Each party feeds one data qubit through a two-parameter isometry that
attaches a copy qubit and a two-level machine register, then measures
the machine in its flag basis. Machine registers are ordinary qubits
with Up -> |0> and Down -> |1>, which makes measurement a basis
projection and keeps the branch decomposition exactly resolvable.
"""

import enum
import math
import numbers
from array import array
from dataclasses import dataclass

from wbroadcast import backend
from wbroadcast import linalg
from wbroadcast.errors import InvariantError, LabelError
from wbroadcast.linalg import CMatrix
from wbroadcast.states import (
    LabeledDensityMatrix,
    LabeledPureState,
    QubitLabel,
    density_of,
    partial_trace,
    w_state,
)

# Machines with x^2 + y^2 at or below this cannot be normalized.
MACHINE_NORM_FLOOR = 1e-18
# Branches below this probability are emitted with no state.
ZERO_PROBABILITY = 1e-15

MACHINE_LABELS = (QubitLabel.MachineA, QubitLabel.MachineB, QubitLabel.MachineC)

# Party-block order: each data qubit, its copy, then that party's machine.
CANONICAL_LABEL_ORDER = (
    QubitLabel.Data1,
    QubitLabel.Data4,
    QubitLabel.MachineA,
    QubitLabel.Data2,
    QubitLabel.Data5,
    QubitLabel.MachineB,
    QubitLabel.Data3,
    QubitLabel.Data6,
    QubitLabel.MachineC,
)

# Data qubits in the order left after dropping the machine labels.
DATA_LABEL_ORDER = tuple(
    l for l in CANONICAL_LABEL_ORDER if l not in MACHINE_LABELS
)


class MachineFlag(enum.Enum):
    Up = "U"
    Down = "D"


@dataclass(frozen=True)
class CloningMachine:
    """The (x, y) parameter pair of the cloning isometry."""

    x: float
    y: float

    def __post_init__(self):
        for name in ("x", "y"):
            v = getattr(self, name)
            if not isinstance(v, numbers.Real):
                raise InvariantError("%s must be real, got %r" % (name, v))
            object.__setattr__(self, name, float(v))
            if not math.isfinite(getattr(self, name)):
                raise InvariantError("%s must be finite" % (name,))
        if self.x**2 + self.y**2 <= MACHINE_NORM_FLOOR:
            raise InvariantError(
                "x^2 + y^2 = %.3e is too small to normalize (must exceed %g)"
                % (self.x**2 + self.y**2, MACHINE_NORM_FLOOR)
            )

    @property
    def norm(self):
        return math.sqrt(self.x**2 + self.y**2)


@dataclass(frozen=True)
class Outcome:
    """One machine-flag triple in party order (Alice, Bob, Carol)."""

    a: MachineFlag
    b: MachineFlag
    c: MachineFlag

    def __post_init__(self):
        for f in (self.a, self.b, self.c):
            if not isinstance(f, MachineFlag):
                raise InvariantError("not a machine flag: %r" % (f,))

    @property
    def code(self):
        return self.a.value + self.b.value + self.c.value

    @classmethod
    def from_code(cls, code):
        if not isinstance(code, str) or len(code) != 3 or any(
            ch not in ("U", "D") for ch in code
        ):
            raise InvariantError(
                "outcome code must be three letters over {U, D}, got %r" % (code,)
            )
        return cls(MachineFlag(code[0]), MachineFlag(code[1]), MachineFlag(code[2]))

    @property
    def down_count(self):
        return sum(1 for f in (self.a, self.b, self.c) if f is MachineFlag.Down)


def _serial_outcomes():
    codes = ("UUU", "UUD", "UDD", "UDU", "DUU", "DUD", "DDU", "DDD")
    return tuple(Outcome.from_code(c) for c in codes)


# The documented serial order of the eight outcomes; all outputs that
# enumerate branches use this order.
OUTCOME_ORDER = _serial_outcomes()


@dataclass(frozen=True)
class PostSelectedBranch:
    """One measurement branch: outcome, probability, surviving state.

    state is None when the branch probability falls below
    ZERO_PROBABILITY; such branches cannot be normalized.
    """

    outcome: Outcome
    probability: float
    state: object

    @property
    def is_zero(self):
        return self.state is None


def isometry(m):
    """8x2 matrix of the cloning operation.

    Row index is big-endian over (original, copy, machine) with
    Up -> 0: the input-|0> column maps to (x|00 Up> + y|10 Down>)/norm
    and the input-|1> column to (x|11 Up> + y|01 Down>)/norm. The Down
    component flips the original qubit and copies faithfully into the
    copy slot.
    """
    xc = m.x / m.norm
    yc = m.y / m.norm
    v = CMatrix.zeros(8, 2)
    v._buf[2 * (0 * 2 + 0)] = xc  # |000> from |0>
    v._buf[2 * (5 * 2 + 0)] = yc  # |101> from |0>
    v._buf[2 * (6 * 2 + 1)] = xc  # |110> from |1>
    v._buf[2 * (3 * 2 + 1)] = yc  # |011> from |1>
    return v


def clone_qubit(s, target, copy, machine, m):
    """Apply the cloning isometry to one qubit of a labeled state.

    The copy and machine labels are inserted immediately after the
    target, so repeated cloning builds party blocks (original, copy,
    machine). Norm is preserved.
    """
    if target not in s.labels:
        raise LabelError("target %s is not in the state" % (target.value,))
    for l, role in ((copy, "copy"), (machine, "machine")):
        if l in s.labels:
            raise LabelError("%s label %s collides with the state" % (role, l.value))
    if copy is machine:
        raise LabelError("copy and machine labels must differ")
    xc = m.x / m.norm
    yc = m.y / m.norm
    labels = s.labels
    n = len(labels)
    t = labels.index(target)
    new_labels = labels[: t + 1] + (copy, machine) + labels[t + 1 :]
    low = n - 1 - t  # number of bits to the right of the target
    low_mask = (1 << low) - 1
    src = s._buf
    out = array("d", bytes(16 * (1 << (n + 2))))
    for i in range(1 << n):
        ar = src[2 * i]
        ai = src[2 * i + 1]
        if ar == 0.0 and ai == 0.0:
            continue
        prefix = i >> low  # bits of labels[0..t], target included
        suffix = i & low_mask
        b = prefix & 1
        head = prefix >> 1
        # Up: (b, b, 0) in the (original, copy, machine) slots.
        up = ((((((head << 1 | b) << 1) | b) << 1) | 0) << low) | suffix
        out[2 * up] = ar * xc
        out[2 * up + 1] = ai * xc
        # Down: (1-b, b, 1).
        dn = ((((((head << 1 | (1 - b)) << 1) | b) << 1) | 1) << low) | suffix
        out[2 * dn] = ar * yc
        out[2 * dn + 1] = ai * yc
    return LabeledPureState._from_buf(new_labels, out, s.weight)


def run_protocol(p, m):
    """Clone each input qubit locally; returns the 9-qubit state.

    Output labels follow CANONICAL_LABEL_ORDER.
    """
    s = w_state(p)
    s = clone_qubit(s, QubitLabel.Data1, QubitLabel.Data4, QubitLabel.MachineA, m)
    s = clone_qubit(s, QubitLabel.Data2, QubitLabel.Data5, QubitLabel.MachineB, m)
    s = clone_qubit(s, QubitLabel.Data3, QubitLabel.Data6, QubitLabel.MachineC, m)
    return s


def enumerate_outcomes(s9):
    """Project onto each machine-flag triple, in the serial order.

    Returns eight branches whose probabilities sum to the state's
    weight; each surviving state is normalized with the machine labels
    removed.
    """
    labels = s9.labels
    missing = [l for l in MACHINE_LABELS if l not in labels]
    if missing:
        raise LabelError(
            "state is missing machine labels: %s"
            % (",".join(l.value for l in missing),)
        )
    n = len(labels)
    machine_pos = [labels.index(l) for l in MACHINE_LABELS]
    machine_shift = [n - 1 - p for p in machine_pos]
    data_pos = [i for i, l in enumerate(labels) if l not in MACHINE_LABELS]
    data_labels = tuple(labels[i] for i in data_pos)
    data_shift = [n - 1 - p for p in data_pos]
    nd = len(data_pos)
    dim_d = 1 << nd
    scatter = []
    for d in range(dim_d):
        f = 0
        for j in range(nd):
            f |= ((d >> (nd - 1 - j)) & 1) << data_shift[j]
        scatter.append(f)
    src = s9._buf
    branches = []
    for outcome in OUTCOME_ORDER:
        mmask = 0
        for flag, shift in zip((outcome.a, outcome.b, outcome.c), machine_shift):
            if flag is MachineFlag.Down:
                mmask |= 1 << shift
        buf = array("d", bytes(16 * dim_d))
        for d in range(dim_d):
            f = scatter[d] | mmask
            buf[2 * d] = src[2 * f]
            buf[2 * d + 1] = src[2 * f + 1]
        prob = backend.kernels().vec_norm2(buf, dim_d)
        if prob < ZERO_PROBABILITY:
            branches.append(PostSelectedBranch(outcome, prob, None))
            continue
        inv = 1.0 / math.sqrt(prob)
        normed = array("d", bytes(16 * dim_d))
        backend.kernels().scale(buf, inv, 0.0, dim_d, normed)
        state = LabeledPureState._from_buf(data_labels, normed, 1.0)
        branches.append(PostSelectedBranch(outcome, prob, state))
    return branches


def branch_reduced(b, keep, weighted):
    """Partial trace of a branch's density matrix.

    With weighted=True the result is scaled by the branch probability,
    which is the form in which subnormalized operators are printed;
    with weighted=False it is a unit-trace state.
    """
    if b.state is None:
        raise InvariantError(
            "branch %s has probability %.3e and carries no state"
            % (b.outcome.code, b.probability)
        )
    reduced = partial_trace(density_of(b.state), keep)
    if not weighted:
        return reduced
    scaled = linalg.scale(reduced.matrix, b.probability)
    return LabeledDensityMatrix(
        reduced.labels, scaled, reduced.weight * b.probability
    )
