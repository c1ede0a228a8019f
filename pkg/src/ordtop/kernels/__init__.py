"""Hot bitmask kernels with a compiled core and a pure-Python fallback.

The compiled backend (built from ``_native.pyx``) is preferred whenever it
was built and the input fits in 64-bit masks; otherwise the pure-Python
reference implementation takes over.  Set ``ORDTOP_PURE_KERNELS=1`` to
force the fallback (used by the benchmark and the backend-agreement
tests).
"""

from __future__ import annotations

import os
from typing import Iterable

from ordtop.kernels import pure

if os.environ.get("ORDTOP_PURE_KERNELS"):
    _native = None
else:
    try:
        from ordtop.kernels import _native  # type: ignore[attr-defined]
    except ImportError:
        _native = None

# close_family keeps a byte per subset of the ground mask, so cap its
# native path; the other kernels only need masks to fit in a word.
_NATIVE_GROUND_LIMIT = 22
_NATIVE_WORD_LIMIT = 63


def using_native() -> bool:
    return _native is not None


def transitive_closure(rows: list[int]) -> list[int]:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.transitive_closure(rows)
    return pure.transitive_closure(rows)


def transitivity_violation(rows: list[int]) -> tuple[int, int, int] | None:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.transitivity_violation(rows)
    return pure.transitivity_violation(rows)


def close_family(members: Iterable[int], ground: int) -> list[int]:
    if _native is not None and ground.bit_length() <= _NATIVE_GROUND_LIMIT:
        return _native.close_family(list(members), ground)
    return pure.close_family(members, ground)


def up_sets(rows: list[int]) -> list[int]:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.up_sets(rows)
    return pure.up_sets(rows)


def directed_sups(rows: list[int]) -> list[tuple[int, int]]:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.directed_sups(rows)
    return pure.directed_sups(rows)


def scott_opens(rows: list[int]) -> list[int]:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.scott_opens(rows)
    return pure.scott_opens(rows)


def max_antichain(rows: list[int]) -> int:
    if _native is not None and len(rows) <= _NATIVE_WORD_LIMIT:
        return _native.max_antichain(rows)
    return pure.max_antichain(rows)
