"""Class functions on S_n, symmetric functions in six bases, and the
Frobenius correspondence between them.

Everything is exact (``fractions.Fraction``).  Traces are stored as class
functions, i.e. one value per cycle type.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import InvalidArgument
from .partitions import (
    Partition,
    as_partition,
    hook,
    kostka,
    partition_index,
    partitions_of,
    transpose,
    z_value,
)

BASES = ("m", "e", "h", "p", "s", "f")

FAMILIES = {
    "irreducible": "irreducible",
    "chi": "irreducible",
    "induced_sign": "induced_sign",
    "epsilon": "induced_sign",
    "induced_trivial": "induced_trivial",
    "eta": "induced_trivial",
    "power_sum": "power_sum",
    "psi": "power_sum",
    "monomial": "monomial",
    "phi": "monomial",
    "forgotten": "forgotten",
    "gamma": "forgotten",
}


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TraceVector:
    """A class function on S_n: one exact value per cycle type."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping):
        if n < 1:
            raise InvalidArgument(f"degree must be positive, got {n}")
        self.n = n
        vals = {as_partition(k): _frac(v) for k, v in values.items()}
        for lam in vals:
            if lam.n != n:
                raise InvalidArgument(f"{lam} is not a partition of {n}")
        self.values = {lam: vals.get(lam, Fraction(0)) for lam in partitions_of(n)}

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Partition], object]) -> "TraceVector":
        return cls(n, {lam: fn(lam) for lam in partitions_of(n)})

    def __getitem__(self, mu) -> Fraction:
        return self.values[as_partition(mu)]

    def at_identity(self) -> Fraction:
        return self.values[Partition((1,) * self.n)]

    def _check(self, other: "TraceVector") -> None:
        if not isinstance(other, TraceVector) or other.n != self.n:
            raise InvalidArgument("traces of different degree")

    def __add__(self, other: "TraceVector") -> "TraceVector":
        self._check(other)
        return TraceVector(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: "TraceVector") -> "TraceVector":
        self._check(other)
        return TraceVector(self.n, {k: v - other.values[k] for k, v in self.values.items()})

    def __neg__(self) -> "TraceVector":
        return TraceVector(self.n, {k: -v for k, v in self.values.items()})

    def __mul__(self, c) -> "TraceVector":
        c = _frac(c)
        return TraceVector(self.n, {k: c * v for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, TraceVector) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(self.values.values())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.values.items())
        return f"TraceVector(n={self.n}, {{{inner}}})"

    def inner(self, other: "TraceVector") -> Fraction:
        """Class-function inner product ``sum theta(mu) tau(mu) / z_mu``."""
        self._check(other)
        return sum((v * other.values[k] / z_value(k) for k, v in self.values.items()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "basis": "trace",
            "n": self.n,
            "coeffs": [[list(k), str(v)] for k, v in self.values.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TraceVector":
        return cls(int(data["n"]), {tuple(k): Fraction(v) for k, v in data["coeffs"]})


class SymmetricFunction:
    """A homogeneous symmetric function of degree n in one named basis."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs: Mapping):
        if basis not in BASES:
            raise InvalidArgument(f"unknown basis {basis!r}")
        self.n = n
        self.basis = basis
        vals = {as_partition(k): _frac(v) for k, v in coeffs.items()}
        for lam in vals:
            if lam.n != n:
                raise InvalidArgument(f"{lam} is not a partition of {n}")
        self.coeffs = {lam: vals.get(lam, Fraction(0)) for lam in partitions_of(n)}

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymmetricFunction":
        lam = as_partition(lam)
        return cls(lam.n, basis, {lam: 1})

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs[as_partition(lam)]

    def __add__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        if other.basis != self.basis:
            other = to_basis(other, self.basis)
        return SymmetricFunction(self.n, self.basis, {k: v + other.coeffs[k] for k, v in self.coeffs.items()})

    def __mul__(self, c) -> "SymmetricFunction":
        c = _frac(c)
        return SymmetricFunction(self.n, self.basis, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __sub__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        return self + other * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricFunction) or other.n != self.n:
            return False
        if other.basis == self.basis:
            return self.coeffs == other.coeffs
        return to_power_basis(self).coeffs == to_power_basis(other).coeffs

    def __repr__(self) -> str:
        terms = " + ".join(f"{v}*{self.basis}_{k}" for k, v in self.coeffs.items() if v)
        return f"SymmetricFunction(n={self.n}, {terms or '0'})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "coeffs": [[list(k), str(v)] for k, v in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymmetricFunction":
        return cls(int(data["n"]), data["basis"], {tuple(k): Fraction(v) for k, v in data["coeffs"]})


# -- character table --------------------------------------------------------


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta:
            continue
        between = sum(1 for x in beta if c < x < b)
        total += (-1) ** between * _mn((beta - {b}) | {c}, rest)
    return total


def character_value(lam, mu) -> int:
    """chi^lam at cycle type mu by the Murnaghan-Nakayama rule (abacus form)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.n != mu.n:
        raise InvalidArgument("partitions of different sizes")
    ell = len(lam)
    beta = frozenset(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(mu))


_table_lock = threading.Lock()
_tables: dict[int, tuple[tuple[int, ...], ...]] = {}


def character_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows indexed by irreducible lambda, columns by cycle type mu."""
    table = _tables.get(n)
    if table is None:
        with _table_lock:
            table = _tables.get(n)
            if table is None:
                parts = partitions_of(n)
                table = tuple(tuple(character_value(lam, mu) for mu in parts) for lam in parts)
                _tables[n] = table
    return table


def irreducible_character(lam) -> TraceVector:
    lam = as_partition(lam)
    row = character_table(lam.n)[partition_index(lam.n)[lam]]
    return TraceVector(lam.n, dict(zip(partitions_of(lam.n), row)))


# -- Kostka matrix and its inverse --------------------------------------------


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    parts = partitions_of(n)
    return tuple(tuple(kostka(lam, mu) for mu in parts) for lam in parts)


@lru_cache(maxsize=None)
def inverse_kostka_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of the (upper unitriangular) Kostka matrix by back-substitution."""
    K = kostka_matrix(n)
    N = len(K)
    inv = [[0] * N for _ in range(N)]
    for col in range(N):
        # solve K x = e_col from the bottom
        x = [0] * N
        for i in range(N - 1, -1, -1):
            acc = 1 if i == col else 0
            for j in range(i + 1, N):
                acc -= K[i][j] * x[j]
            x[i] = acc  # K[i][i] == 1
        for i in range(N):
            inv[i][col] = x[i]
    return tuple(tuple(r) for r in inv)


# -- power-sum expansions of every basis -------------------------------------

PPoly = dict  # Partition -> Fraction, a polynomial in the p_i


def _pmul(a: PPoly, b: PPoly) -> PPoly:
    out: PPoly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = Partition(sorted(ka + kb, reverse=True))
            out[key] = out.get(key, Fraction(0)) + va * vb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _newton(kind: str, k: int) -> tuple:
    """e_k or h_k as a p-polynomial via Newton's identities."""
    if k == 0:
        return ((Partition(()), Fraction(1)),)
    acc: PPoly = {}
    for i in range(1, k + 1):
        sign = (-1) ** (i - 1) if kind == "e" else 1
        term = _pmul(dict(_newton(kind, k - i)), {Partition((i,)): Fraction(sign)})
        for key, v in term.items():
            acc[key] = acc.get(key, Fraction(0)) + v
    return tuple((key, v / k) for key, v in acc.items() if v)


def _multiplicative(kind: str, lam: Partition) -> PPoly:
    out: PPoly = {Partition(()): Fraction(1)}
    for part in lam:
        out = _pmul(out, dict(_newton(kind, part)))
    return out


@lru_cache(maxsize=None)
def _to_p_rows(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row lambda holds the p-coefficients of b_lambda, columns in partition order."""
    parts = partitions_of(n)
    idx = partition_index(n)
    N = len(parts)
    rows = []
    if basis == "p":
        rows = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    elif basis == "s":
        table = character_table(n)
        rows = [[Fraction(table[i][j], z_value(parts[j])) for j in range(N)] for i in range(N)]
    elif basis in ("e", "h"):
        for lam in parts:
            poly = _multiplicative(basis, lam)
            row = [Fraction(0)] * N
            for key, v in poly.items():
                row[idx[key]] += v
            rows.append(row)
    elif basis in ("m", "f"):
        s_rows = _to_p_rows("s", n)
        kinv = inverse_kostka_matrix(n)
        for i in range(N):
            row = [sum((kinv[i][j] * s_rows[j][c] for j in range(N)), Fraction(0)) for c in range(N)]
            if basis == "f":
                row = [(-1) ** (n - len(parts[c])) * row[c] for c in range(N)]
            rows.append(row)
    else:
        raise InvalidArgument(f"unknown basis {basis!r}")
    return tuple(tuple(r) for r in rows)


def _invert(rows: tuple[tuple[Fraction, ...], ...]) -> list[list[Fraction]]:
    N = len(rows)
    a = [list(r) + [Fraction(int(i == j)) for j in range(N)] for i, r in enumerate(rows)]
    for c in range(N):
        piv = next(r for r in range(c, N) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [v / pv for v in a[c]]
        for r in range(N):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[N:] for r in a]


@lru_cache(maxsize=None)
def _from_p_rows(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in _invert(_to_p_rows(basis, n)))


def to_power_basis(sf: SymmetricFunction) -> SymmetricFunction:
    if sf.basis == "p":
        return sf
    parts = partitions_of(sf.n)
    rows = _to_p_rows(sf.basis, sf.n)
    coeffs = [sf.coeffs[lam] for lam in parts]
    out = {}
    for c, nu in enumerate(parts):
        out[nu] = sum((coeffs[i] * rows[i][c] for i in range(len(parts)) if coeffs[i]), Fraction(0))
    return SymmetricFunction(sf.n, "p", out)


def to_basis(sf: SymmetricFunction, basis: str) -> SymmetricFunction:
    """Re-expand ``sf`` in another of the six bases."""
    if basis not in BASES:
        raise InvalidArgument(f"unknown basis {basis!r}")
    if sf.basis == basis:
        return sf
    p = to_power_basis(sf)
    if basis == "p":
        return p
    parts = partitions_of(sf.n)
    inv = _from_p_rows(basis, sf.n)  # rows: p_nu in terms of b
    pc = [p.coeffs[nu] for nu in parts]
    out = {}
    for j, lam in enumerate(parts):
        out[lam] = sum((pc[i] * inv[i][j] for i in range(len(parts)) if pc[i]), Fraction(0))
    return SymmetricFunction(sf.n, basis, out)


def omega(sf: SymmetricFunction) -> SymmetricFunction:
    """The involution with omega(e_k) = h_k, applied basis-wise."""
    n = sf.n
    if sf.basis == "p":
        return SymmetricFunction(n, "p", {k: (-1) ** (n - len(k)) * v for k, v in sf.coeffs.items()})
    if sf.basis == "s":
        return SymmetricFunction(n, "s", {transpose(k): v for k, v in sf.coeffs.items()})
    swap = {"e": "h", "h": "e", "m": "f", "f": "m"}
    return SymmetricFunction(n, swap[sf.basis], sf.coeffs)


def frobenius(theta: TraceVector) -> SymmetricFunction:
    return SymmetricFunction(theta.n, "p", {mu: v / z_value(mu) for mu, v in theta.values.items()})


def inverse_frobenius(sf: SymmetricFunction) -> TraceVector:
    p = to_power_basis(sf)
    return TraceVector(sf.n, {mu: v * z_value(mu) for mu, v in p.coeffs.items()})


# -- named trace bases -------------------------------------------------------


def _kostka_inverse_combination(lam: Partition, transposed: bool) -> TraceVector:
    n = lam.n
    parts = partitions_of(n)
    kinv = inverse_kostka_matrix(n)
    i = partition_index(n)[lam]
    total = {mu: Fraction(0) for mu in parts}
    for j, nu in enumerate(parts):
        c = kinv[i][j]
        if not c:
            continue
        chi = irreducible_character(transpose(nu) if transposed else nu)
        for mu in parts:
            total[mu] += c * chi.values[mu]
    return TraceVector(n, total)


@lru_cache(maxsize=None)
def _named_trace(family: str, lam: Partition) -> TraceVector:
    n = lam.n
    if family == "irreducible":
        return irreducible_character(lam)
    if family == "induced_sign":
        return inverse_frobenius(SymmetricFunction.basis_element("e", lam))
    if family == "induced_trivial":
        return inverse_frobenius(SymmetricFunction.basis_element("h", lam))
    if family == "power_sum":
        return TraceVector(n, {lam: z_value(lam)})
    if family == "monomial":
        return _kostka_inverse_combination(lam, transposed=False)
    if family == "forgotten":
        return _kostka_inverse_combination(lam, transposed=True)
    raise InvalidArgument(f"unknown trace family {family!r}")


def named_trace(family: str, lam) -> TraceVector:
    """chi, epsilon, eta, psi, phi or gamma indexed by ``lam``."""
    try:
        fam = FAMILIES[family]
    except KeyError:
        raise InvalidArgument(f"unknown trace family {family!r}") from None
    return _named_trace(fam, as_partition(lam))


def sign_character(n: int) -> TraceVector:
    return TraceVector.from_function(n, lambda mu: (-1) ** (n - len(mu)))


def trivial_character(n: int) -> TraceVector:
    return TraceVector.from_function(n, lambda mu: 1)


@lru_cache(maxsize=None)
def theta_level(n: int, ell: int) -> TraceVector:
    """Sum of the monomial traces phi^mu over mu with exactly ``ell`` parts."""
    if not 1 <= ell <= n:
        raise InvalidArgument(f"need 1 <= ell <= n, got ell={ell}, n={n}")
    total = TraceVector(n, {})
    for mu in partitions_of(n):
        if len(mu) == ell:
            total = total + named_trace("monomial", mu)
    return total


def hook_in_theta_basis(n: int, k: int) -> list[int]:
    """Coefficients c[l-1] with chi^{k1^{n-k}} = sum_l c[l-1] theta^l."""
    if not 1 <= k <= n:
        raise InvalidArgument(f"need 1 <= k <= n, got k={k}, n={n}")
    return [comb(ell - 1, n - k) if ell >= n - k + 1 else 0 for ell in range(1, n + 1)]


def hook_difference_coefficients(n: int, k: int) -> list[Fraction]:
    """theta-coefficients of chi_k/binom(n-1,k-1) - chi_{k-1}/binom(n-1,k-2).

    Closed form binom(l-1, n-k) (n-l) / ((k-1) binom(n-1, k-1)); zero for
    l <= n-k and 1/binom(n-1, k-1) at l = n-k+1.
    """
    if not 2 <= k <= n:
        raise InvalidArgument(f"need 2 <= k <= n, got k={k}, n={n}")
    return [Fraction(comb(ell - 1, n - k) * (n - ell), (k - 1) * comb(n - 1, k - 1)) for ell in range(1, n + 1)]


def hook_difference_printed(n: int, k: int) -> list[Fraction]:
    """The published piecewise form, whose top case (n-l)/(l-(n-k+1)) is off.

    Kept so the discrepancy stays testable; agrees with the true coefficients
    for l <= n-k+1 and at l = n.
    """
    if not 2 <= k <= n:
        raise InvalidArgument(f"need 2 <= k <= n, got k={k}, n={n}")
    out = []
    for ell in range(1, n + 1):
        if ell <= n - k:
            out.append(Fraction(0))
        elif ell == n - k + 1:
            out.append(Fraction(1, comb(n - 1, k - 1)))
        else:
            out.append(Fraction(n - ell, ell - (n - k + 1)))
    return out


def hook_difference_direct(n: int, k: int) -> list[Fraction]:
    if not 2 <= k <= n:
        raise InvalidArgument(f"need 2 <= k <= n, got k={k}, n={n}")
    return [
        Fraction(comb(ell - 1, n - k), comb(n - 1, k - 1)) - Fraction(comb(ell - 1, n - k + 1), comb(n - 1, k - 2))
        for ell in range(1, n + 1)
    ]


def hook_character(n: int, k: int) -> TraceVector:
    return irreducible_character(hook(n, k))


def parse_trace(spec: str) -> TraceVector:
    """Parse ``family:partition`` (e.g. ``chi:411``) or ``theta:n:ell``."""
    family, _, rest = spec.partition(":")
    if family == "theta":
        n, _, ell = rest.partition(":")
        return theta_level(int(n), int(ell))
    if family in ("sgn", "sign"):
        return sign_character(int(rest))
    if family in ("triv", "trivial"):
        return trivial_character(int(rest))
    return named_trace(family, as_partition(rest))


def trace_combination(terms: Iterable[tuple[object, TraceVector]]) -> TraceVector:
    terms = list(terms)
    out = TraceVector(terms[0][1].n, {})
    for c, t in terms:
        out = out + t * c
    return out
