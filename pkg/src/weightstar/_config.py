"""Runtime switches read from the environment.

WEIGHTSTAR_DISABLE_NUMBA=1   use the pure-numpy kernels (also honoured: NUMBA_DISABLE_JIT)
WEIGHTSTAR_GUARD=<int>       default enumeration guard (messages per exhaustive scan)
WEIGHTSTAR_THREADS=<int>     worker threads for partitioned scans
"""

import os

DEFAULT_GUARD = 1 << 26
COSET_GUARD = 1 << 22
SUBCODE_GUARD = 10**6


def _flag(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


def _numba_available():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = (
    not _flag("WEIGHTSTAR_DISABLE_NUMBA")
    and not _flag("NUMBA_DISABLE_JIT")
    and _numba_available()
)

_threads = None
_guard = None


def default_guard():
    if _guard is not None:
        return _guard
    env = os.environ.get("WEIGHTSTAR_GUARD")
    if env:
        return int(env)
    return DEFAULT_GUARD


def set_guard(value):
    global _guard
    _guard = None if value is None else int(value)


def threads():
    if _threads is not None:
        return _threads
    env = os.environ.get("WEIGHTSTAR_THREADS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


def set_threads(n):
    global _threads
    _threads = None if n is None else max(1, int(n))
