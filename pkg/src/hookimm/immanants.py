"""Exact immanants of rational matrices.

A matrix is a tuple of tuples of ``Fraction`` (see :func:`to_exact`).  The
immanant of any trace is a dot product of the trace with the per-cycle-type
sums of permutation monomials, which are computed once per matrix by the
kernels in :mod:`hookimm._accel`.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, lcm, prod

from . import _accel
from .characters import TraceVector, hook_character, named_trace
from .errors import InvalidArgument, ResourceLimit
from .partitions import Partition, as_partition, partitions_of

ExactMatrix = tuple[tuple[Fraction, ...], ...]

IMMANANT_CAP = 9


def set_cap(n: int) -> None:
    """Change the largest dimension for which n! enumeration is allowed."""
    global IMMANANT_CAP
    IMMANANT_CAP = int(n)


def to_exact(rows: Sequence[Sequence]) -> ExactMatrix:
    """Convert nested sequences of ints/Fractions/strings ("3/4") to an ExactMatrix."""
    out = tuple(tuple(Fraction(v) for v in r) for r in rows)
    n = len(out)
    if any(len(r) != n for r in out):
        raise InvalidArgument("matrix must be square")
    return out


def identity(n: int) -> ExactMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)) for i in range(n)
    )


def _integer_rows(a: ExactMatrix) -> tuple[list[list[int]], int]:
    """Scale each row by the lcm of its denominators; returns (rows, product of scales)."""
    rows, scale = [], 1
    for r in a:
        d = lcm(*(v.denominator for v in r)) if r else 1
        rows.append([int(v * d) for v in r])
        scale *= d
    return rows, scale


def _check_cap(n: int) -> None:
    if n > IMMANANT_CAP:
        raise ResourceLimit(f"n={n} exceeds the permutation-enumeration cap {IMMANANT_CAP}")


@lru_cache(maxsize=512)
def _class_sums(a: ExactMatrix) -> tuple[Fraction, ...]:
    rows, scale = _integer_rows(a)
    return tuple(Fraction(v, scale) for v in _accel.class_sums_int(rows))


def class_sums(A) -> dict[Partition, Fraction]:
    """Sum of prod_i a_{i,w(i)} over w of each cycle type."""
    a = to_exact(A)
    _check_cap(len(a))
    return dict(zip(partitions_of(len(a)), _class_sums(a)))


def immanant(theta: TraceVector, A) -> Fraction:
    """sum_w theta(ctype(w)) prod_i a_{i,w(i)}."""
    a = to_exact(A)
    if theta.n != len(a):
        raise InvalidArgument(f"trace degree {theta.n} != matrix dimension {len(a)}")
    _check_cap(len(a))
    sums = _class_sums(a)
    return sum((theta.values[mu] * s for mu, s in zip(partitions_of(len(a)), sums) if s), Fraction(0))


def normalized_immanant(theta: TraceVector, A) -> Fraction:
    e = theta.at_identity()
    if e == 0:
        raise ZeroDivisionError("trace vanishes at the identity")
    return immanant(theta, A) / e


def _bareiss(rows: list[list[int]]) -> int:
    m = [r[:] for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def determinant(A) -> Fraction:
    """Determinant by fraction-free Bareiss elimination on row-scaled integers."""
    rows, scale = _integer_rows(to_exact(A))
    return Fraction(_bareiss(rows), scale)


def permanent(A) -> Fraction:
    """Permanent by Ryser inclusion-exclusion (Gray-code order)."""
    rows, scale = _integer_rows(to_exact(A))
    return Fraction(_accel.ryser_int(rows), scale)


def submatrix(a: ExactMatrix, rows_idx, cols_idx) -> ExactMatrix:
    return tuple(tuple(a[i][j] for j in cols_idx) for i in rows_idx)


def _lmw(lam, A, minor) -> Fraction:
    a = to_exact(A)
    lam = as_partition(lam)
    n = len(a)
    if lam.n != n:
        raise InvalidArgument(f"{lam} is not a partition of {n}")
    cache: dict[tuple[int, ...], Fraction] = {}

    def principal(idx: tuple[int, ...]) -> Fraction:
        v = cache.get(idx)
        if v is None:
            v = cache[idx] = minor(submatrix(a, idx, idx))
        return v

    def rec(remaining: tuple[int, ...], parts: tuple[int, ...]) -> Fraction:
        if not parts:
            return Fraction(1)
        total = Fraction(0)
        for block in combinations(remaining, parts[0]):
            v = principal(block)
            if v:
                rest = tuple(x for x in remaining if x not in block)
                total += v * rec(rest, parts[1:])
        return total

    return rec(tuple(range(n)), tuple(lam))


def lmw_sign(lam, A) -> Fraction:
    """Sum over ordered disjoint (I_1..I_l), |I_j| = lam_j, of prod det(A_{I_j,I_j})."""
    return _lmw(lam, A, determinant)


def lmw_trivial(lam, A) -> Fraction:
    """As :func:`lmw_sign` with permanents in place of determinants."""
    return _lmw(lam, A, permanent)


def hook_chain(A) -> list[Fraction]:
    """Normalized hook immanants [r_n, ..., r_1]; r_n = per(A), r_1 = det(A)."""
    a = to_exact(A)
    n = len(a)
    _check_cap(n)
    return [immanant(hook_character(n, k), a) / comb(n - 1, k - 1) for k in range(n, 0, -1)]


def minors(A, size: int | None = None):
    """Yield (rows, cols, det) for all square minors (optionally of one size)."""
    a = to_exact(A)
    n = len(a)
    sizes = [size] if size else range(1, n + 1)
    for k in sizes:
        for I in combinations(range(n), k):
            for J in combinations(range(n), k):
                yield I, J, determinant(submatrix(a, I, J))


def is_totally_nonnegative(A) -> bool:
    return all(d >= 0 for _, _, d in minors(A))


def first_negative_minor(A):
    for I, J, d in minors(A):
        if d < 0:
            return I, J, d
    return None


def immanant_by_name(family: str, lam, A) -> Fraction:
    return immanant(named_trace(family, lam), A)


def diagonal_product(A) -> Fraction:
    a = to_exact(A)
    return prod((a[i][i] for i in range(len(a))), start=Fraction(1))
