"""Backend parity: the compiled and pure kernels must agree bitwise."""

import json
import math

import numpy as np
import pytest

import wbroadcast as wb
from wbroadcast import reports
from helpers import random_machine_tuple, random_wparams_tuple, state_vector

SEED = 20260819
R3 = 1.0 / math.sqrt(3.0)
CONFIGS = (
    {"alpha": R3, "beta": R3, "gamma": R3, "x": 1.0, "y": 1.0},
    {"alpha": 0.6, "beta": 0.48, "gamma": 0.64, "x": 1.0, "y": 0.5},
)


@pytest.fixture()
def restore_backend():
    before = wb.active_backend()
    yield
    wb.use_backend(before)


def per_backend(fn):
    """Run fn() under every available backend, return {name: result}."""
    before = wb.active_backend()
    out = {}
    try:
        for name in wb.available_backends():
            wb.use_backend(name)
            out[name] = fn()
    finally:
        wb.use_backend(before)
    return out


def test_backend_registry():
    names = wb.available_backends()
    assert "pure" in names
    assert wb.active_backend() in names


def test_use_backend_rejects_unknown(restore_backend):
    with pytest.raises(ValueError) as exc:
        wb.use_backend("gpu")
    assert "pure" in str(exc.value)
    assert wb.active_backend() in wb.available_backends()


def test_compiled_backend_present():
    # the build is expected to ship the extension; fail loudly if the
    # fallback silently took over
    assert "compiled" in wb.available_backends()


def test_protocol_state_bit_identical():
    if len(wb.available_backends()) < 2:
        pytest.skip("single backend")
    rng = np.random.default_rng(SEED)
    for _ in range(5):
        a, b, g = random_wparams_tuple(rng)
        x, y = random_machine_tuple(rng)

        def build():
            s = wb.run_protocol(wb.WParams(a, b, g), wb.CloningMachine(x, y))
            return state_vector(s).tobytes()

        results = per_backend(build)
        assert len(set(results.values())) == 1


def test_eigenvalues_bit_identical():
    if len(wb.available_backends()) < 2:
        pytest.skip("single backend")
    rng = np.random.default_rng(SEED + 1)
    mat = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    mat = mat @ mat.conj().T
    rows = [[complex(z) for z in row] for row in mat]

    def eig():
        return tuple(wb.hermitian_eigenvalues(wb.CMatrix.from_rows(rows)))

    results = per_backend(eig)
    vals = list(results.values())
    assert all(v == vals[0] for v in vals)  # exact equality, same doubles


def test_determinant_bit_identical():
    if len(wb.available_backends()) < 2:
        pytest.skip("single backend")
    rng = np.random.default_rng(SEED + 2)
    mat = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    rows = [[complex(z) for z in row] for row in mat]

    def det():
        return wb.determinant(wb.CMatrix.from_rows(rows))

    results = per_backend(det)
    vals = list(results.values())
    assert all(v == vals[0] for v in vals)


def test_reports_byte_identical_across_backends():
    if len(wb.available_backends()) < 2:
        pytest.skip("single backend")
    for mapping in CONFIGS:
        cfg = reports.ProtocolConfig.from_mapping(dict(mapping))

        def documents():
            return (
                json.dumps(reports.cmd_run(cfg), indent=2, allow_nan=False),
                json.dumps(reports.cmd_verify(cfg), indent=2, allow_nan=False),
            )

        results = per_backend(documents)
        vals = list(results.values())
        assert all(v == vals[0] for v in vals)


def test_sweep_byte_identical_across_backends():
    if len(wb.available_backends()) < 2:
        pytest.skip("single backend")
    spec = reports.SweepSpec.from_mapping(
        {"alpha": [0.0, 0.5], "beta": [0.0, 0.5], "x": [0.0, 1.0], "y": [0.5, 1.0]}
    )

    def sweep():
        return reports.cmd_sweep(spec)[0]

    results = per_backend(sweep)
    vals = list(results.values())
    assert all(v == vals[0] for v in vals)
