"""Backend selection for the numerical kernels.

The compiled Cython module is used when it was built; otherwise the
numpy fallback is imported. Set ``KRIGMEAN_PURE_PYTHON=1`` to force the
fallback for a whole process; ``use_backend`` switches temporarily.
"""
import contextlib
import importlib
import os

BACKENDS = ("cython", "python")
_MODULES = {"cython": "krigmean._ckernels", "python": "krigmean._pykernels"}


def load_backend(name):
    """Import and return the kernel module for ``name``."""
    return importlib.import_module(_MODULES[name])


def available_backends():
    out = []
    for name in BACKENDS:
        try:
            load_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    if os.environ.get("KRIGMEAN_PURE_PYTHON", "") not in ("", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()

semivariogram = _impl.semivariogram
covariances = _impl.covariances
lu_factor = _impl.lu_factor
lu_solve = _impl.lu_solve


@contextlib.contextmanager
def use_backend(name):
    """Temporarily route the module-level kernels to backend ``name``."""
    global BACKEND, semivariogram, covariances, lu_factor, lu_solve
    saved = (BACKEND, semivariogram, covariances, lu_factor, lu_solve)
    mod = load_backend(name)
    BACKEND = name
    semivariogram, covariances = mod.semivariogram, mod.covariances
    lu_factor, lu_solve = mod.lu_factor, mod.lu_solve
    try:
        yield mod
    finally:
        BACKEND, semivariogram, covariances, lu_factor, lu_solve = saved
