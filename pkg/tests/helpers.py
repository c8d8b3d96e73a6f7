"""Converters and random generators shared by the test modules."""

import numpy as np

from wbroadcast import CMatrix, LabeledDensityMatrix


def to_numpy(cm):
    return np.array(
        [[cm.at(r, c) for c in range(cm.cols)] for r in range(cm.rows)]
    )


def from_numpy(arr):
    arr = np.atleast_2d(np.asarray(arr, dtype=complex))
    return CMatrix.from_rows([[complex(v) for v in row] for row in arr])


def state_vector(s):
    return np.array(s.amplitudes)


def ldm(labels, arr, weight=None):
    arr = np.asarray(arr, dtype=complex)
    if weight is None:
        weight = float(np.trace(arr).real)
    return LabeledDensityMatrix(labels, from_numpy(arr), weight)


def random_complex_matrix(rng, r, c):
    return rng.normal(size=(r, c)) + 1j * rng.normal(size=(r, c))


def random_hermitian(rng, n):
    a = random_complex_matrix(rng, n, n)
    return (a + a.conj().T) / 2.0


def random_pure_density(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_density(rng, dim):
    """Random pure state mixed with white noise at a random weight."""
    lam = float(rng.uniform(0.0, 1.0))
    return lam * random_pure_density(rng, dim) + (1.0 - lam) * np.eye(dim) / dim


def random_wparams_tuple(rng):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return float(v[0]), float(v[1]), float(v[2])


def random_machine_tuple(rng):
    while True:
        x, y = rng.normal(size=2)
        if x * x + y * y >= 1e-6:
            return float(x), float(y)
