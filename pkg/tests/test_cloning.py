"""Protocol engine: isometry, local cloning, branch enumeration."""

import itertools
import math

import numpy as np
import pytest

import wbroadcast as wb
from helpers import random_machine_tuple, random_wparams_tuple, state_vector, to_numpy

import oracle

SEED = 20260819
L = wb.QubitLabel


def test_isometry_columns():
    v = to_numpy(wb.isometry(wb.CloningMachine(1.0, 0.0)))
    want0 = np.zeros(8)
    want0[0] = 1.0  # |000>
    assert np.array_equal(v[:, 0], want0)

    v = to_numpy(wb.isometry(wb.CloningMachine(1.0, 1.0)))
    r2 = 1.0 / math.sqrt(2.0)
    want1 = np.zeros(8)
    want1[6] = r2  # |110>
    want1[3] = r2  # |011>
    assert np.max(np.abs(v[:, 1] - want1)) < 1e-15

    x, y = 0.8, 0.6
    v = to_numpy(wb.isometry(wb.CloningMachine(x, y)))
    assert abs(v[0, 0] - 0.8) < 1e-15 and abs(v[5, 0] - 0.6) < 1e-15
    assert abs(v[6, 1] - 0.8) < 1e-15 and abs(v[3, 1] - 0.6) < 1e-15
    assert np.count_nonzero(v) == 4


def test_isometry_is_isometric():
    rng = np.random.default_rng(SEED)
    pairs = [random_machine_tuple(rng) for _ in range(100)]
    pairs += [(1.0, 0.0), (0.0, 1.0), (1e-3, 1e-3), (-2.0, 5.0)]
    eye = np.eye(2)
    for x, y in pairs:
        v = to_numpy(wb.isometry(wb.CloningMachine(x, y)))
        gram = v.conj().T @ v
        assert np.max(np.abs(gram - eye)) <= 1e-14


def test_machine_validation():
    with pytest.raises(wb.InvariantError):
        wb.CloningMachine(0.0, 0.0)
    with pytest.raises(wb.InvariantError):
        wb.CloningMachine(float("inf"), 1.0)
    with pytest.raises(wb.InvariantError):
        wb.CloningMachine(1j, 1.0)


def test_outcome_codes():
    codes = [o.code for o in wb.OUTCOME_ORDER]
    assert codes == ["UUU", "UUD", "UDD", "UDU", "DUU", "DUD", "DDU", "DDD"]
    assert wb.Outcome.from_code("DUD").down_count == 2
    with pytest.raises(wb.InvariantError):
        wb.Outcome.from_code("UXU")
    with pytest.raises(wb.InvariantError):
        wb.Outcome.from_code("UU")


def test_clone_qubit_basis_limits():
    zero = wb.LabeledPureState((L.Data1,), [1, 0])
    out = wb.clone_qubit(zero, L.Data1, L.Data4, L.MachineA, wb.CloningMachine(1.0, 0.0))
    assert out.labels == (L.Data1, L.Data4, L.MachineA)
    assert out.amplitudes == (1, 0, 0, 0, 0, 0, 0, 0)  # |00 up>

    one = wb.LabeledPureState((L.Data1,), [0, 1])
    out = wb.clone_qubit(one, L.Data1, L.Data4, L.MachineA, wb.CloningMachine(0.0, 1.0))
    want = [0.0] * 8
    want[0b011] = 1.0  # |01 down>
    assert out.amplitudes == tuple(want)


def test_clone_qubit_label_collisions():
    s = wb.LabeledPureState((L.Data1, L.Data2), [1, 0, 0, 0])
    m = wb.CloningMachine(1.0, 1.0)
    with pytest.raises(wb.LabelError):
        wb.clone_qubit(s, L.Data3, L.Data4, L.MachineA, m)
    with pytest.raises(wb.LabelError):
        wb.clone_qubit(s, L.Data1, L.Data2, L.MachineA, m)
    with pytest.raises(wb.LabelError):
        wb.clone_qubit(s, L.Data1, L.Data4, L.Data4, m)


def test_clone_qubit_preserves_norm():
    rng = np.random.default_rng(SEED + 1)
    for _ in range(10):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        s = wb.LabeledPureState((L.Data1, L.Data2), [complex(z) for z in v])
        x, y = random_machine_tuple(rng)
        out = wb.clone_qubit(s, L.Data2, L.Data5, L.MachineB, wb.CloningMachine(x, y))
        assert abs(np.linalg.norm(state_vector(out)) - 1.0) < 1e-12


def expand_by_hand(a, b, g, x, y):
    """Direct 24-term expansion: three input terms times eight flag
    patterns, amplitudes read straight off the isometry definition."""
    n = math.sqrt(x * x + y * y)
    out = np.zeros(512)
    for coeff, bits in ((a, (0, 0, 1)), (b, (0, 1, 0)), (g, (1, 0, 0))):
        for flags in itertools.product((0, 1), repeat=3):
            amp = coeff
            idx = 0
            for bit, flag in zip(bits, flags):
                amp *= (y if flag else x) / n
                original = bit ^ flag  # Down flips the kept qubit
                idx = (((idx << 1 | original) << 1) | bit) << 1 | flag
            out[idx] += amp
    return out


def test_run_protocol_matches_hand_expansion():
    rng = np.random.default_rng(SEED + 2)
    for _ in range(10):
        a, b, g = random_wparams_tuple(rng)
        x, y = random_machine_tuple(rng)
        s9 = wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
        assert s9.labels == wb.CANONICAL_LABEL_ORDER
        got = state_vector(s9)
        assert np.max(np.abs(got - expand_by_hand(a, b, g, x, y))) < 1e-14
        assert np.max(np.abs(got - oracle.nine_qubit_state(a, b, g, x, y))) < 1e-14


def test_run_protocol_perfect_copies_at_y_zero():
    r3 = 1.0 / math.sqrt(3.0)
    s9 = wb.run_protocol(wb.WParams(r3, r3, r3), wb.CloningMachine(2.5, 0.0))
    v = state_vector(s9)
    assert abs(v[0b000000110] - r3) < 1e-15  # alpha term, copies of |001>
    assert abs(v[0b000110000] - r3) < 1e-15  # beta term, copies of |010>
    assert abs(v[0b110000000] - r3) < 1e-15  # gamma term, copies of |100>
    assert np.count_nonzero(np.abs(v) > 1e-15) == 3


def test_run_protocol_all_up_amplitude():
    a, b, g, x, y = 0.6, 0.48, 0.64, 1.25, 0.75
    s9 = wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
    bits = {
        L.Data1: 0, L.Data4: 0, L.MachineA: 0,
        L.Data2: 0, L.Data5: 0, L.MachineB: 0,
        L.Data3: 1, L.Data6: 1, L.MachineC: 0,
    }
    idx = wb.index_of(s9.labels, bits)
    pref = x ** 3 / (x * x + y * y) ** 1.5
    assert abs(s9.amplitude(idx) - a * pref) < 1e-15


def test_product_input_stays_product():
    s9 = wb.run_protocol(wb.WParams(1.0, 0.0, 0.0), wb.CloningMachine(1.0, 0.7))
    v = state_vector(s9).reshape(8, 8, 8)
    # rank-1 across every party bipartition = product of per-party factors
    for axis_flat in ((0, 1), (0, 2), (1, 2)):
        m = np.moveaxis(v, [a for a in range(3) if a not in axis_flat][0], 2)
        m = m.reshape(64, 8)
        s = np.linalg.svd(m, compute_uv=False)
        assert s[1] < 1e-14


def test_enumerate_outcomes_serial_and_uniform():
    r3 = 1.0 / math.sqrt(3.0)
    s9 = wb.run_protocol(wb.WParams(r3, r3, r3), wb.CloningMachine(1.0, 1.0))
    branches = wb.enumerate_outcomes(s9)
    assert [b.outcome.code for b in branches] == [o.code for o in wb.OUTCOME_ORDER]
    for b in branches:
        assert abs(b.probability - 0.125) < 1e-14
    uuu = branches[0]
    assert uuu.state.labels == wb.DATA_LABEL_ORDER
    v = state_vector(uuu.state)
    assert abs(v[0b000011] - r3) < 1e-12
    assert abs(v[0b001100] - r3) < 1e-12
    assert abs(v[0b110000] - r3) < 1e-12
    assert np.count_nonzero(np.abs(v) > 1e-14) == 3


def test_enumerate_outcomes_y_zero():
    s9 = wb.run_protocol(wb.WParams(0.6, 0.48, 0.64), wb.CloningMachine(3.0, 0.0))
    branches = wb.enumerate_outcomes(s9)
    assert abs(branches[0].probability - 1.0) < 1e-14
    assert not branches[0].is_zero
    for b in branches[1:]:
        assert b.probability == 0.0
        assert b.is_zero and b.state is None


def test_enumerate_outcomes_requires_machines():
    r3 = 1.0 / math.sqrt(3.0)
    with pytest.raises(wb.LabelError):
        wb.enumerate_outcomes(wb.w_state(wb.WParams(r3, r3, r3)))


def test_probability_closed_form():
    rng = np.random.default_rng(SEED + 3)
    for _ in range(10):
        a, b, g = random_wparams_tuple(rng)
        x, y = random_machine_tuple(rng)
        branches = wb.enumerate_outcomes(
            wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
        )
        total = 0.0
        for br in branches:
            k = br.outcome.down_count
            want = oracle.branch_probability_closed_form(x, y, k)
            assert abs(br.probability - want) < 1e-12
            total += br.probability
        assert abs(total - 1.0) < 1e-12


def test_branch_states_match_oracle():
    a, b, g, x, y = 0.6, 0.48, 0.64, 1.0, 0.5
    branches = wb.enumerate_outcomes(
        wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
    )
    for br in branches:
        prob, vec = oracle.branch(a, b, g, x, y, br.outcome.code)
        assert abs(br.probability - prob) < 1e-14
        got = state_vector(br.state) * math.sqrt(br.probability)
        assert np.max(np.abs(got - vec)) < 1e-14


def test_clone_order_independence():
    a, b, g = 0.6, 0.48, 0.64
    x, y = 1.0, 0.5
    m = wb.CloningMachine(x, y)
    parties = {
        L.Data1: (L.Data4, L.MachineA),
        L.Data2: (L.Data5, L.MachineB),
        L.Data3: (L.Data6, L.MachineC),
    }
    reference = None
    for order in itertools.permutations(parties):
        s = wb.w_state(wb.WParams(a, b, g))
        for target in order:
            copy, machine = parties[target]
            s = wb.clone_qubit(s, target, copy, machine, m)
        s = wb.relabel(s, wb.CANONICAL_LABEL_ORDER)
        v = state_vector(s)
        if reference is None:
            reference = v
        else:
            assert np.max(np.abs(v - reference)) < 1e-13


def test_branch_reduced_local_pair():
    a, b, g, x, y = 0.6, 0.48, 0.64, 1.0, 0.5
    branches = wb.enumerate_outcomes(
        wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
    )
    r14 = wb.branch_reduced(branches[0], {L.Data1, L.Data4}, weighted=True)
    assert r14.labels == (L.Data1, L.Data4)
    pref = x ** 6 / (x * x + y * y) ** 3
    want = np.diag([pref * (a * a + b * b), 0.0, 0.0, pref * g * g])
    assert np.max(np.abs(to_numpy(r14.matrix) - want)) < 1e-14
    assert abs(r14.weight - branches[0].probability) < 1e-12


def test_branch_reduced_full_set_matches_density():
    a, b, g, x, y = 0.6, 0.48, 0.64, 1.0, 0.5
    branches = wb.enumerate_outcomes(
        wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
    )
    br = branches[3]
    full = wb.branch_reduced(br, set(wb.DATA_LABEL_ORDER), weighted=False)
    want = wb.density_of(br.state)
    assert wb.frobenius_distance(full.matrix, want.matrix) < 1e-13


def test_branch_reduced_zero_branch_rejected():
    branches = wb.enumerate_outcomes(
        wb.run_protocol(wb.WParams(0.6, 0.48, 0.64), wb.CloningMachine(1.0, 0.0))
    )
    dead = branches[7]
    assert dead.is_zero
    with pytest.raises(wb.InvariantError) as exc:
        wb.branch_reduced(dead, {L.Data1, L.Data4}, weighted=True)
    assert "DDD" in str(exc.value)


def test_non_selective_sum_matches_traced_state():
    rng = np.random.default_rng(SEED + 4)
    for _ in range(3):
        a, b, g = random_wparams_tuple(rng)
        x, y = random_machine_tuple(rng)
        s9 = wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
        branches = wb.enumerate_outcomes(s9)
        total = wb.CMatrix.zeros(64, 64)
        for br in branches:
            if br.is_zero:
                continue
            total = wb.add(
                total, wb.branch_reduced(br, set(wb.DATA_LABEL_ORDER), True).matrix
            )
        traced = wb.partial_trace(wb.density_of(s9), set(wb.DATA_LABEL_ORDER))
        assert traced.labels == wb.DATA_LABEL_ORDER
        assert wb.frobenius_distance(total, traced.matrix) < 1e-12
