"""Permutation-sum kernels with a numba path and a pure-numpy fallback.

Set ``HOOKIMM_DISABLE_NUMBA=1`` to force the numpy path.  Both paths are exact:
the numba kernel only runs when an a-priori bound shows every partial sum fits
in int64, otherwise the numpy path multiplies Python integers in object arrays.
"""

from __future__ import annotations

import os
import threading
from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from .partitions import partitions_of

_INT64_LIMIT = 2**62

try:
    if os.environ.get("HOOKIMM_DISABLE_NUMBA", "").strip() not in ("", "0"):
        raise ImportError("disabled by HOOKIMM_DISABLE_NUMBA")
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False

_backend = "numba" if NUMBA_AVAILABLE else "numpy"
_lock = threading.Lock()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba is not available")
    _backend = name


@lru_cache(maxsize=None)
def permutation_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of range(n) (lexicographic) and their cycle-type indices.

    The index refers to ``partitions_of(n)``.
    """
    with _lock:
        perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(factorial(n), n)
        rows = np.arange(perms.shape[0])[:, None]
        start = np.broadcast_to(np.arange(n), perms.shape)
        cur = perms.copy()
        length = np.zeros_like(perms)
        for k in range(1, n + 1):
            done = (cur == start) & (length == 0)
            length[done] = k
            cur = perms[rows, cur]
        # alpha[L] = number of L-cycles
        code = np.zeros(perms.shape[0], dtype=np.int64)
        for L in range(1, n + 1):
            alpha = (length == L).sum(axis=1) // L
            code = code * (n + 1) + alpha
        lookup = {}
        for idx, lam in enumerate(partitions_of(n)):
            c = 0
            for L in range(1, n + 1):
                c = c * (n + 1) + sum(1 for p in lam if p == L)
            lookup[c] = idx
        ctype = np.array([lookup[c] for c in code.tolist()], dtype=np.int64)
        perms.setflags(write=False)
        ctype.setflags(write=False)
        return perms, ctype


def _class_sums_numpy(a: np.ndarray, perms: np.ndarray, ctype: np.ndarray, nclasses: int) -> list[int]:
    n = a.shape[0]
    if n == 0:
        return [1]
    terms = a[np.arange(n)[None, :], perms]  # object or int64, shape (n!, n)
    products = terms[:, 0].copy()
    for i in range(1, n):
        products = products * terms[:, i]
    out = [0] * nclasses
    if products.dtype == object:
        for c, v in zip(ctype.tolist(), products.tolist()):
            if v:
                out[c] += v
    else:
        sums = np.zeros(nclasses, dtype=np.int64)
        np.add.at(sums, ctype, products)
        out = [int(v) for v in sums]
    return out


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _class_sums_kernel(a, perms, ctype, nclasses):  # pragma: no cover - compiled
        n = a.shape[0]
        sums = np.zeros(nclasses, dtype=np.int64)
        for p in range(perms.shape[0]):
            prod = np.int64(1)
            for i in range(n):
                v = a[i, perms[p, i]]
                if v == 0:
                    prod = 0
                    break
                prod *= v
            sums[ctype[p]] += prod
        return sums

    @njit(cache=True)
    def _ryser_kernel(a):  # pragma: no cover - compiled
        n = a.shape[0]
        rowsums = np.zeros(n, dtype=np.int64)
        total = np.int64(0)
        gray_prev = 0
        for k in range(1, 1 << n):
            gray = k ^ (k >> 1)
            diff = gray ^ gray_prev
            j = 0
            while (diff >> j) & 1 == 0:
                j += 1
            if gray & diff:
                for i in range(n):
                    rowsums[i] += a[i, j]
            else:
                for i in range(n):
                    rowsums[i] -= a[i, j]
            gray_prev = gray
            prod = np.int64(1)
            for i in range(n):
                prod *= rowsums[i]
            bits = 0
            g = gray
            while g:
                bits += g & 1
                g >>= 1
            if (n - bits) % 2 == 1:
                total -= prod
            else:
                total += prod
        return total


def _fits_int64(rows: list[list[int]]) -> bool:
    n = len(rows)
    bound = factorial(n)
    for r in rows:
        bound *= max((abs(v) for v in r), default=0)
    # Ryser partial products are bounded by (n * max)^n, class sums by n! * prod
    ryser = 1
    for r in rows:
        ryser *= n * max((abs(v) for v in r), default=0)
    return bound < _INT64_LIMIT and ryser < _INT64_LIMIT // (1 << n)


def class_sums_int(rows: list[list[int]]) -> list[int]:
    """For an integer matrix, the sum of permutation monomials per cycle type."""
    n = len(rows)
    perms, ctype = permutation_table(n)
    nclasses = len(partitions_of(n))
    if _backend == "numba" and _fits_int64(rows):
        a = np.array(rows, dtype=np.int64).reshape(n, n)
        return [int(v) for v in _class_sums_kernel(a, perms, ctype, nclasses)]
    if _fits_int64(rows):
        a = np.array(rows, dtype=np.int64).reshape(n, n)
    else:
        a = np.empty((n, n), dtype=object)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                a[i, j] = int(v)
    return _class_sums_numpy(a, perms, ctype, nclasses)


def _ryser_python(rows: list[list[int]]) -> int:
    n = len(rows)
    rowsums = [0] * n
    total = 0
    gray_prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        diff = gray ^ gray_prev
        j = diff.bit_length() - 1
        sign = 1 if gray & diff else -1
        for i in range(n):
            rowsums[i] += sign * rows[i][j]
        gray_prev = gray
        p = 1
        for s in rowsums:
            p *= s
        if (n - bin(gray).count("1")) % 2:
            total -= p
        else:
            total += p
    return total


def ryser_int(rows: list[list[int]]) -> int:
    """Permanent of an integer matrix by Ryser's formula over a Gray code."""
    n = len(rows)
    if n == 0:
        return 1
    if _backend == "numba" and _fits_int64(rows):
        return int(_ryser_kernel(np.array(rows, dtype=np.int64).reshape(n, n)))
    return _ryser_python(rows)
