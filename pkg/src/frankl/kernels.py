"""Backend selection for the hot loops.

The compiled extension is used when it was built and the masks fit in a
machine word; everything else goes through ``_pykernels``.  Set
``FRANKL_PURE_PYTHON=1`` to force the fallback, and
``FRANKL_MAX_UNIVERSE=k`` to lower the universe size (default 64) up to
which the compiled path is taken.
"""

import os

from . import _pykernels as python_backend

WORD_BITS = 64

try:
    if os.environ.get("FRANKL_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("forced fallback")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

BACKEND = compiled_backend.BACKEND if compiled_backend is not None else python_backend.BACKEND


def fast_path_cap():
    raw = os.environ.get("FRANKL_MAX_UNIVERSE")
    if raw is None:
        return WORD_BITS
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"FRANKL_MAX_UNIVERSE must be an integer, got {raw!r}") from None
    return max(0, min(cap, WORD_BITS))


def _pick(universe_size):
    if compiled_backend is not None and universe_size <= fast_path_cap():
        return compiled_backend
    return python_backend


def union_violation(masks, universe_size):
    return _pick(universe_size).union_violation(masks)


def cover_pairs(masks, universe_size):
    return _pick(universe_size).cover_pairs(masks)


def heights(masks, universe_size):
    return _pick(universe_size).heights(masks)


def coheights(masks, universe_size):
    return _pick(universe_size).coheights(masks)


# family-mask kernels: n <= 6 keeps every family mask within 64 bits

def family_is_union_closed(fam):
    return (compiled_backend or python_backend).family_is_union_closed(fam)


def sweep_union_closed(n, lo, hi):
    return (compiled_backend or python_backend).sweep_union_closed(n, lo, hi)


def family_closure(fam):
    if fam.bit_length() > WORD_BITS:
        return python_backend.family_closure(fam)
    return (compiled_backend or python_backend).family_closure(fam)
