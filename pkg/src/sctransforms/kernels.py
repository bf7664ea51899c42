"""Kernel backend selection.

The compiled extension is used when it has been built; otherwise the
pure-Python implementations are used. ``set_backend`` switches explicitly.
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

_active = _compiled if _compiled is not None else _kernels_py


def available_backends():
    return sorted(_BACKENDS)


def backend_name():
    return "compiled" if _active is _compiled and _compiled is not None else "python"


def set_backend(name):
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available_backends()}") from None


def get_backend(name=None):
    return _active if name is None else _BACKENDS[name]


def orbit_labels(n, gens):
    return _active.orbit_labels(n, gens)


def structure_counts(n, class_of, reps):
    return _active.structure_counts(n, class_of, reps)


def dst_s_matrix(n, s):
    return _active.dst_s_matrix(n, s)
