"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python twin is used. Both expose the same functions and produce
bit-identical results, so the choice affects speed only. Switching is
an explicit test hook, not thread-safe against concurrent kernel calls.
"""

from wbroadcast import _kernels_py

_BACKENDS = {"pure": _kernels_py}

try:
    from wbroadcast import _kernels_c

    _BACKENDS["compiled"] = _kernels_c
except ImportError:  # pragma: no cover
    _kernels_c = None

_active = _BACKENDS.get("compiled", _kernels_py)


def available_backends():
    """Names of the importable backends, sorted."""
    return tuple(sorted(_BACKENDS))


def active_backend():
    """Name of the backend currently in use."""
    return _active.BACKEND_NAME


def use_backend(name):
    """Select a kernel backend by name; returns the active name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(
            "unknown backend %r; available: %s" % (name, ", ".join(sorted(_BACKENDS)))
        )
    _active = _BACKENDS[name]
    return _active.BACKEND_NAME


def kernels():
    """The active kernel module."""
    return _active
