"""Dense complex matrices sized for systems up to dimension 512.

Complex scalars are Python ``complex``. Storage is row-major
interleaved [re, im] doubles; that layout is private, so all other
modules address entries only through ``at`` and the constructors.
Every public constructor rejects non-finite entries.
"""

import math
from array import array

from wbroadcast import backend
from wbroadcast.errors import (
    ConvergenceError,
    DimensionError,
    HermiticityError,
    InvariantError,
)

# Largest dimension kron may produce; ordinary ops stay well below it.
MAX_DIM = 4096
DET_MAX_DIM = 8
EIG_MAX_DIM = 512

HERMITICITY_TOL = 1e-10
# Pivot modulus below this makes the determinant exactly zero.
DET_PIVOT_TOL = 1e-14
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def _zeros_buf(n_entries):
    return array("d", bytes(16 * n_entries))


class CMatrix:
    """Immutable dense complex matrix."""

    __slots__ = ("_rows", "_cols", "_buf")

    def __init__(self, rows, cols, _buf=None):
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        self._rows = rows
        self._cols = cols
        if _buf is None:
            _buf = _zeros_buf(rows * cols)
        self._buf = _buf

    @classmethod
    def _wrap(cls, rows, cols, buf):
        m = cls.__new__(cls)
        m._rows = rows
        m._cols = cols
        m._buf = buf
        return m

    @classmethod
    def from_rows(cls, rows):
        data = [list(r) for r in rows]
        nr = len(data)
        if nr == 0:
            raise DimensionError("matrix needs at least one row")
        nc = len(data[0])
        if nc == 0 or any(len(r) != nc for r in data):
            raise DimensionError("rows must be nonempty and of equal length")
        buf = _zeros_buf(nr * nc)
        k = 0
        for r in data:
            for v in r:
                z = complex(v)
                if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                    raise InvariantError(
                        "non-finite entry at (%d, %d)" % (k // (2 * nc), (k // 2) % nc)
                    )
                buf[k] = z.real
                buf[k + 1] = z.imag
                k += 2
        return cls._wrap(nr, nc, buf)

    @classmethod
    def zeros(cls, rows, cols):
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        return cls._wrap(rows, cols, _zeros_buf(rows * cols))

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m._buf[2 * (i * n + i)] = 1.0
        return m

    @classmethod
    def diag(cls, values):
        vals = [complex(v) for v in values]
        n = len(vals)
        if n == 0:
            raise DimensionError("diag needs at least one value")
        m = cls.zeros(n, n)
        for i, z in enumerate(vals):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise InvariantError("non-finite entry at (%d, %d)" % (i, i))
            m._buf[2 * (i * n + i)] = z.real
            m._buf[2 * (i * n + i) + 1] = z.imag
        return m

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    def at(self, r, c):
        if not (0 <= r < self._rows and 0 <= c < self._cols):
            raise DimensionError(
                "index (%d, %d) out of range for %dx%d matrix"
                % (r, c, self._rows, self._cols)
            )
        p = 2 * (r * self._cols + c)
        return complex(self._buf[p], self._buf[p + 1])

    def to_rows(self):
        return [[self.at(r, c) for c in range(self._cols)] for r in range(self._rows)]

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return (
            self._rows == other._rows
            and self._cols == other._cols
            and self._buf == other._buf
        )

    __hash__ = None

    def __repr__(self):
        return "CMatrix(%dx%d)" % (self._rows, self._cols)


def kron(a, b):
    rr = a.rows * b.rows
    rc = a.cols * b.cols
    if rr > MAX_DIM or rc > MAX_DIM:
        raise DimensionError(
            "kron result %dx%d exceeds maximum dimension %d" % (rr, rc, MAX_DIM)
        )
    out = _zeros_buf(rr * rc)
    backend.kernels().kron(a._buf, a.rows, a.cols, b._buf, b.rows, b.cols, out)
    return CMatrix._wrap(rr, rc, out)


def dagger(a):
    out = _zeros_buf(a.rows * a.cols)
    backend.kernels().dagger(a._buf, a.rows, a.cols, out)
    return CMatrix._wrap(a.cols, a.rows, out)


def matmul(a, b):
    if a.cols != b.rows:
        raise DimensionError(
            "cannot multiply %dx%d by %dx%d" % (a.rows, a.cols, b.rows, b.cols)
        )
    out = _zeros_buf(a.rows * b.cols)
    backend.kernels().matmul(a._buf, a.rows, a.cols, b._buf, b.cols, out)
    return CMatrix._wrap(a.rows, b.cols, out)


def add(a, b):
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionError(
            "cannot add %dx%d and %dx%d" % (a.rows, a.cols, b.rows, b.cols)
        )
    out = _zeros_buf(a.rows * a.cols)
    backend.kernels().add(a._buf, b._buf, a.rows * a.cols, out)
    return CMatrix._wrap(a.rows, a.cols, out)


def scale(a, s):
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvariantError("non-finite scale factor")
    out = _zeros_buf(a.rows * a.cols)
    backend.kernels().scale(a._buf, z.real, z.imag, a.rows * a.cols, out)
    return CMatrix._wrap(a.rows, a.cols, out)


def trace(a):
    if a.rows != a.cols:
        raise DimensionError("trace needs a square matrix, got %r" % (a,))
    tr, ti = backend.kernels().trace(a._buf, a.rows)
    return complex(tr, ti)


def determinant(a):
    if a.rows != a.cols:
        raise DimensionError("determinant needs a square matrix, got %r" % (a,))
    if a.rows > DET_MAX_DIM:
        raise DimensionError(
            "determinant supports dimension <= %d, got %d" % (DET_MAX_DIM, a.rows)
        )
    scratch = array("d", a._buf)
    dr, di = backend.kernels().lu_det(scratch, a.rows, DET_PIVOT_TOL * DET_PIVOT_TOL)
    return complex(dr, di)


def hermiticity_defect(a):
    """Max modulus of (a - dagger(a)) entries and where it occurs."""
    if a.rows != a.cols:
        raise DimensionError("hermiticity check needs a square matrix, got %r" % (a,))
    return backend.kernels().herm_defect(a._buf, a.rows)


def hermitian_eigenvalues(a, tol=HERMITICITY_TOL):
    if a.rows != a.cols:
        raise DimensionError("eigenvalues need a square matrix, got %r" % (a,))
    if a.rows > EIG_MAX_DIM:
        raise DimensionError(
            "eigensolver supports dimension <= %d, got %d" % (EIG_MAX_DIM, a.rows)
        )
    defect, i, j = backend.kernels().herm_defect(a._buf, a.rows)
    if defect > tol:
        raise HermiticityError(defect, i, j, tol)
    scratch = array("d", a._buf)
    eigs = array("d", bytes(8 * a.rows))
    sweeps, converged = backend.kernels().jacobi(
        scratch, a.rows, eigs, JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS
    )
    if not converged:
        raise ConvergenceError(
            "eigensolver did not converge in %d sweeps" % (sweeps,)
        )
    return sorted(eigs)


def frobenius_distance(a, b):
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionError(
            "cannot compare %dx%d and %dx%d" % (a.rows, a.cols, b.rows, b.cols)
        )
    return backend.kernels().frob_dist(a._buf, b._buf, a.rows * a.cols)
