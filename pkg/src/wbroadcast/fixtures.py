"""Closed-form fixtures transcribed from the published protocol.

Each fixture is the printed formula evaluated literally, prefactor
included, so the verification oracle has an independent target to
compare against. Fixtures are raw (labels, data, weight) records, not
domain objects: several of them carry weight 0 at parameter edges
(x = 0 or y = 0), which the domain types deliberately reject.

The claim identifiers (EQ6, EQ7_RHO156, ...) are part of the report
wire format and match the upstream claim labels.
"""

from dataclasses import dataclass

from wbroadcast.linalg import CMatrix
from wbroadcast.states import QubitLabel, index_of
from wbroadcast.cloning import DATA_LABEL_ORDER

CLAIM_EQ6 = "EQ6"
CLAIM_EQ7_RHO156 = "EQ7_RHO156"
CLAIM_EQ7_RHO234 = "EQ7_RHO234"
CLAIM_EQ8_RHO14 = "EQ8_RHO14"
CLAIM_EQ8_RHO25 = "EQ8_RHO25"
CLAIM_EQ8_RHO36 = "EQ8_RHO36"
CLAIM_STEP4 = "STEP4_LOCAL_SEPARABLE"

# Provenance strings are data carried in fixture dumps.
SOURCES = {
    CLAIM_EQ6: (
        "equation (6): six-qubit ket surviving the all-Up outcome, "
        "prefactor x^3/(x^2+y^2)^(3/2)"
    ),
    CLAIM_EQ7_RHO156: (
        "equation (7): W-type projector on qubits 1,5,6, "
        "prefactor x^4 y^2/(x^2+y^2)^3"
    ),
    CLAIM_EQ7_RHO234: (
        "equation (7): W-type projector on qubits 2,3,4, "
        "prefactor x^4 y^2/(x^2+y^2)^3"
    ),
    CLAIM_EQ8_RHO14: (
        "equation (8): local pair operator on qubits 1,4, "
        "prefactor x^6/(x^2+y^2)^3"
    ),
    CLAIM_EQ8_RHO25: (
        "equation (8): local pair operator on qubits 2,5, "
        "prefactor x^6/(x^2+y^2)^3"
    ),
    CLAIM_EQ8_RHO36: (
        "equation (8): local pair operator on qubits 3,6, "
        "prefactor x^6/(x^2+y^2)^3"
    ),
    CLAIM_STEP4: (
        "step 4 claim: W4 = W3 = 0 for each local pair, independent of "
        "alpha, beta, gamma; local output states separable"
    ),
}

RHO156_LABELS = (QubitLabel.Data1, QubitLabel.Data5, QubitLabel.Data6)
RHO234_LABELS = (QubitLabel.Data2, QubitLabel.Data3, QubitLabel.Data4)
RHO14_LABELS = (QubitLabel.Data1, QubitLabel.Data4)
RHO25_LABELS = (QubitLabel.Data2, QubitLabel.Data5)
RHO36_LABELS = (QubitLabel.Data3, QubitLabel.Data6)


@dataclass(frozen=True)
class KetFixture:
    claim_id: str
    source: str
    labels: tuple
    amplitudes: tuple
    weight: float


@dataclass(frozen=True)
class OperatorFixture:
    claim_id: str
    source: str
    labels: tuple
    matrix: CMatrix
    weight: float


def all_up_ket(p, m):
    """The printed six-qubit ket for the all-Up outcome, subnormalized.

    Three terms survive: the input coefficients sit on basis kets where
    each excited qubit and its copy are both 1, with the faithful-copy
    prefactor x^3/(x^2+y^2)^(3/2).
    """
    n2 = m.x**2 + m.y**2
    pref = m.x**3 / n2**1.5
    labels = DATA_LABEL_ORDER
    amps = [0.0] * 64
    d1, d4, d2, d5, d3, d6 = labels
    amps[index_of(labels, {d1: 0, d4: 0, d2: 0, d5: 0, d3: 1, d6: 1})] = pref * p.alpha
    amps[index_of(labels, {d1: 0, d4: 0, d2: 1, d5: 1, d3: 0, d6: 0})] = pref * p.beta
    amps[index_of(labels, {d1: 1, d4: 1, d2: 0, d5: 0, d3: 0, d6: 0})] = pref * p.gamma
    return KetFixture(
        claim_id=CLAIM_EQ6,
        source=SOURCES[CLAIM_EQ6],
        labels=labels,
        amplitudes=tuple(amps),
        weight=pref * pref,
    )


def _w_projector(p, m, claim_id, labels):
    n2 = m.x**2 + m.y**2
    pref = m.x**4 * m.y**2 / n2**3
    v = [0.0] * 8
    v[1] = p.alpha
    v[2] = p.beta
    v[4] = p.gamma
    rows = [[pref * v[i] * v[j] for j in range(8)] for i in range(8)]
    return OperatorFixture(
        claim_id=claim_id,
        source=SOURCES[claim_id],
        labels=labels,
        matrix=CMatrix.from_rows(rows),
        weight=pref,
    )


def w_projector_156(p, m):
    """Printed three-qubit operator for qubits (1, 5, 6)."""
    return _w_projector(p, m, CLAIM_EQ7_RHO156, RHO156_LABELS)


def w_projector_234(p, m):
    """Printed three-qubit operator for qubits (2, 3, 4)."""
    return _w_projector(p, m, CLAIM_EQ7_RHO234, RHO234_LABELS)


def _local_pair(p, m, claim_id, labels, both_zero_sq, both_one_sq):
    n2 = m.x**2 + m.y**2
    pref = m.x**6 / n2**3
    mat = CMatrix.diag([pref * both_zero_sq, 0.0, 0.0, pref * both_one_sq])
    return OperatorFixture(
        claim_id=claim_id,
        source=SOURCES[claim_id],
        labels=labels,
        matrix=mat,
        weight=pref,
    )


def local_pair_14(p, m):
    """Printed pair operator on (1, 4): excitation weight on gamma."""
    return _local_pair(
        p, m, CLAIM_EQ8_RHO14, RHO14_LABELS,
        p.alpha**2 + p.beta**2, p.gamma**2,
    )


def local_pair_25(p, m):
    """Printed pair operator on (2, 5): excitation weight on beta."""
    return _local_pair(
        p, m, CLAIM_EQ8_RHO25, RHO25_LABELS,
        p.alpha**2 + p.gamma**2, p.beta**2,
    )


def local_pair_36(p, m):
    """Printed pair operator on (3, 6): excitation weight on alpha."""
    return _local_pair(
        p, m, CLAIM_EQ8_RHO36, RHO36_LABELS,
        p.beta**2 + p.gamma**2, p.alpha**2,
    )


def all_fixtures(p, m):
    """Every printed fixture, in claim order."""
    return (
        all_up_ket(p, m),
        w_projector_156(p, m),
        w_projector_234(p, m),
        local_pair_14(p, m),
        local_pair_25(p, m),
        local_pair_36(p, m),
    )
