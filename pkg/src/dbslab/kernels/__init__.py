"""Hot-kernel backends: compiled extension with a pure-numpy fallback.

The compiled module is optional; when its import fails the numpy
implementation is selected and everything keeps working. Both backends
expose the same three functions (``poly_values``, ``mfs_values``,
``weighted_gram``) and are interchangeable; ``benchmarks/bench_kernels.py``
compares their throughput.
"""

from . import numpy_backend

try:
    from . import _core as cython_backend
except ImportError:  # extension not built
    cython_backend = None

_BACKENDS = {"numpy": numpy_backend}
if cython_backend is not None:
    _BACKENDS["cython"] = cython_backend

DEFAULT_BACKEND = "cython" if cython_backend is not None else "numpy"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name=None):
    """Resolve a backend module by name; ``None`` picks the default."""
    if name is None:
        name = DEFAULT_BACKEND
    if hasattr(name, "weighted_gram"):
        return name
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None
