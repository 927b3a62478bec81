"""Finite posets, unit interval orders and P-tableaux.

Poset elements, permutation entries and graph vertices are the integers
1..n.  Tableau rows are listed from the bottom (row 0 is the longest) and a
mark is a ``(row, column)`` pair of 0-based indices.
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .chromatic import Graph
from .errors import ClosureAddedWarning, InvalidArgument
from .partitions import Partition, as_partition, hook

Permutation = tuple[int, ...]


class Poset:
    """A strict partial order on 1..n, transitively closed on construction."""

    __slots__ = ("n", "_up", "_down", "closure_added")

    def __init__(self, n: int, relations: Iterable[tuple[int, int]] = ()):
        up = [0] * (n + 1)
        given = 0
        for i, j in relations:
            i, j = int(i), int(j)
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidArgument(f"relation {(i, j)} outside 1..{n}")
            if not up[i] >> j & 1:
                given += 1
            up[i] |= 1 << j
        for k in range(1, n + 1):
            for i in range(1, n + 1):
                if up[i] >> k & 1:
                    up[i] |= up[k]
        for i in range(1, n + 1):
            if up[i] >> i & 1:
                raise InvalidArgument(f"relations contain a cycle through {i}")
        down = [0] * (n + 1)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if up[i] >> j & 1:
                    down[j] |= 1 << i
        self.n = n
        self._up = tuple(up)
        self._down = tuple(down)
        self.closure_added = sum(bin(u).count("1") for u in up) > given

    def lt(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def gt(self, i: int, j: int) -> bool:
        return bool(self._up[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return bool((self._up[i] | self._down[i]) >> j & 1)

    def up_set(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if self._up[i] >> j & 1]

    def down_set(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if self._down[i] >> j & 1]

    @property
    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if self._up[i] >> j & 1]

    def relabel(self, new_label: Mapping[int, int] | Permutation) -> "Poset":
        """Rename element x to new_label[x] (a tuple is read 1-based)."""
        f = (lambda x: new_label[x - 1]) if isinstance(new_label, tuple) else (lambda x: new_label[x])
        return Poset(self.n, [(f(i), f(j)) for i, j in self.relations])

    def is_naturally_labeled(self) -> bool:
        return all(i < j for i, j in self.relations)

    def canonical_form(self) -> tuple[tuple[int, int], ...]:
        """Lexicographically least relation list over all relabelings."""
        rels = self.relations
        best = None
        for perm in permutations(range(1, self.n + 1)):
            key = tuple(sorted((perm[i - 1], perm[j - 1]) for i, j in rels))
            if best is None or key < best:
                best = key
        return best or ()

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self._up == other._up

    def __hash__(self):
        return hash((self.n, self._up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={self.relations})"

    def to_json(self) -> dict:
        return {"n": self.n, "relations": [list(r) for r in self.relations]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poset":
        return cls(int(data["n"]), [tuple(r) for r in data["relations"]])


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return Poset(n)


def _has_induced(P: Poset, test: Callable[[tuple[int, ...]], bool]) -> bool:
    return any(test(q) for q in combinations(range(1, P.n + 1), 4))


def _is_3_plus_1(P: Poset, q: tuple[int, ...]) -> bool:
    for d in q:
        rest = sorted((x for x in q if x != d), key=lambda x: len(P.down_set(x)))
        a, b, c = rest
        if P.lt(a, b) and P.lt(b, c) and not any(P.comparable(d, x) for x in rest):
            return True
    return False


def _is_2_plus_2(P: Poset, q: tuple[int, ...]) -> bool:
    pairs = [(x, y) for x, y in combinations(q, 2) if P.comparable(x, y)]
    if len(pairs) != 2:
        return False
    (a, b), (c, d) = pairs
    return len({a, b, c, d}) == 4


def is_31_free(P: Poset) -> bool:
    return not _has_induced(P, lambda q: _is_3_plus_1(P, q))


def is_unit_interval_order(P: Poset) -> bool:
    """No induced 3+1 and no induced 2+2 (scan of all 4-subsets)."""
    return not _has_induced(P, lambda q: _is_3_plus_1(P, q) or _is_2_plus_2(P, q))


def incomparability_graph(P: Poset) -> Graph:
    return Graph(P.n, [(i, j) for i, j in combinations(range(1, P.n + 1), 2) if not P.comparable(i, j)])


# -- permutations -------------------------------------------------------------


def cycle_type(w: Permutation) -> Partition:
    n = len(w)
    seen = [False] * (n + 1)
    lengths = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        L, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = w[x - 1]
            L += 1
        lengths.append(L)
    return Partition(sorted(lengths, reverse=True))


def avoids_312(w: Permutation) -> bool:
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[j] >= w[i]:
                continue
            # w[i] > w[j]; a 312 needs later w[k] with w[j] < w[k] < w[i]
            if any(w[j] < w[k] < w[i] for k in range(j + 1, n)):
                return False
    return True


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Rank-matrix criterion: #{k<=i : v_k>=j} <= #{k<=i : w_k>=j} for all i, j."""
    n = len(v)
    if len(w) != n:
        raise InvalidArgument("permutations of different length")
    for j in range(1, n + 1):
        cv = cw = 0
        for i in range(n):
            cv += v[i] >= j
            cw += w[i] >= j
            if cv > cw:
                return False
    return True


def bruhat_ideal(w: Permutation) -> list[Permutation]:
    n = len(w)
    if n > 8:
        raise InvalidArgument("Bruhat ideals are materialized only for n <= 8")
    return [v for v in permutations(range(1, n + 1)) if bruhat_leq(v, w)]


# -- Algorithm: unit interval order -> 312-avoiding permutation ----------------


def beta(P: Poset, y: int) -> int:
    """#{x <=_P y} - #{z >=_P y}."""
    return (len(P.down_set(y)) + 1) - (len(P.up_set(y)) + 1)


def default_tie_break(P: Poset, y: int) -> tuple:
    return (len(P.down_set(y)), y)


@dataclass(frozen=True)
class PtoC:
    labeling: Permutation  # labeling[x-1] is the new label of original element x
    poset: Poset  # relabeled poset
    betas: tuple[int, ...]  # beta of new labels 1..n
    w: Permutation
    ideal: tuple[Permutation, ...] | None


def step2_labeling(P: Poset, tie_break=default_tie_break) -> Permutation:
    order = sorted(range(1, P.n + 1), key=lambda y: (beta(P, y),) + tuple(tie_break(P, y)))
    new = [0] * P.n
    for pos, y in enumerate(order, start=1):
        new[y - 1] = pos
    return tuple(new)


def step3_permutation(P: Poset) -> Permutation:
    """w_j = max({i : i not >_P j} minus {w_1..w_{j-1}})."""
    used: set[int] = set()
    w = []
    for j in range(1, P.n + 1):
        avail = [i for i in range(1, P.n + 1) if not P.gt(i, j) and i not in used]
        if not avail:
            raise InvalidArgument("step 3 ran out of candidates")
        wj = max(avail)
        used.add(wj)
        w.append(wj)
    return tuple(w)


def algorithm_P_to_C(P: Poset, tie_break=default_tie_break, with_ideal: bool = True) -> PtoC:
    if not is_unit_interval_order(P):
        raise InvalidArgument("poset is not a unit interval order")
    labeling = step2_labeling(P, tie_break)
    Q = P.relabel(labeling)
    w = step3_permutation(Q)
    betas = tuple(beta(Q, y) for y in range(1, Q.n + 1))
    ideal = tuple(bruhat_ideal(w)) if with_ideal else None
    return PtoC(labeling, Q, betas, w, ideal)


def antiadjacency(P: Poset):
    """a_ij = 0 if i <_P j else 1; P must carry a beta-monotone labeling."""
    from .immanants import to_exact

    bs = [beta(P, y) for y in range(1, P.n + 1)]
    if any(bs[i] > bs[i + 1] for i in range(P.n - 1)):
        raise InvalidArgument("labeling is not beta-monotone")
    return to_exact([[0 if P.lt(i, j) else 1 for j in range(1, P.n + 1)] for i in range(1, P.n + 1)])


# -- poset enumeration --------------------------------------------------------


def _ideals(P: Poset) -> Iterator[int]:
    """Down-closed subsets of P as bitmasks."""
    for mask in range(1 << P.n):
        ok = True
        for i in range(P.n):
            if mask >> i & 1 and P._down[i + 1] >> 1 & ~mask:
                ok = False
                break
        if ok:
            yield mask


def naturally_labeled_posets(n: int) -> Iterator[Poset]:
    """Every poset on 1..n in which i <_P j implies i < j."""
    if n == 0:
        yield Poset(0)
        return
    for P in naturally_labeled_posets(n - 1):
        for mask in _ideals(P):
            rels = P.relations + [(i + 1, n) for i in range(n - 1) if mask >> i & 1]
            yield Poset(n, rels)


def enumerate_posets(n: int) -> list[Poset]:
    """One naturally labeled representative per isomorphism class."""
    seen: dict[tuple, Poset] = {}
    for P in naturally_labeled_posets(n):
        key = P.canonical_form()
        if key not in seen:
            seen[key] = P
    return list(seen.values())


def uio_from_bounds(bounds: Iterable[int]) -> Poset:
    """i <_P j iff j > bounds[i-1]; bounds weakly increasing with bounds[i-1] >= i."""
    b = list(bounds)
    n = len(b)
    return Poset(n, [(i, j) for i in range(1, n + 1) for j in range(b[i - 1] + 1, n + 1)])


def enumerate_uios(n: int) -> list[Poset]:
    """Unit interval orders on n elements up to isomorphism (Catalan many)."""
    out = []

    def rec(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            out.append(uio_from_bounds(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for b in range(lo, n + 1):
            rec(prefix + [b])

    rec([])
    return out


def random_poset(n: int, rng, density: float | None = None) -> Poset:
    """Naturally labeled random poset: each pair i<j related with probability ``density``."""
    p = rng.uniform(0.15, 0.6) if density is None else density
    rels = [(i, j) for i, j in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Poset(n, rels)


# -- P-tableaux ---------------------------------------------------------------


@dataclass(frozen=True)
class PTableau:
    rows: tuple[tuple[int, ...], ...]
    mark: tuple[int, int] | None = None

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows if len(r) > j]

    def marked_entry(self) -> int | None:
        return None if self.mark is None else self.rows[self.mark[0]][self.mark[1]]

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "mark": list(self.mark) if self.mark else None}


def descents(P: Poset, U: PTableau) -> int:
    return sum(1 for r in U.rows for j in range(len(r) - 1) if P.gt(r[j], r[j + 1]))


def records(P: Poset, U: PTableau) -> int:
    return sum(1 for r in U.rows for j in range(len(r)) if all(P.lt(r[k], r[j]) for k in range(j)))


def row_records(P: Poset, row: tuple[int, ...]) -> int:
    return sum(1 for j in range(len(row)) if all(P.lt(row[k], row[j]) for k in range(j)))


def is_row_semistrict(P: Poset, U: PTableau) -> bool:
    return descents(P, U) == 0


def is_column_strict(P: Poset, U: PTableau) -> bool:
    return all(P.lt(U.rows[i][j], U.rows[i + 1][j]) for i in range(len(U.rows) - 1) for j in range(len(U.rows[i + 1])))


def is_standard(P: Poset, U: PTableau) -> bool:
    return is_row_semistrict(P, U) and is_column_strict(P, U)


KINDS = ("column_strict", "row_semistrict", "standard", "any")


def iter_ptableaux(P: Poset, shape, kind: str = "standard") -> Iterator[PTableau]:
    shape = as_partition(shape)
    if kind not in KINDS:
        raise InvalidArgument(f"unknown tableau kind {kind!r}")
    if shape.n != P.n:
        raise InvalidArgument(f"shape {shape} does not have {P.n} boxes")
    cols = kind in ("column_strict", "standard")
    rows = kind in ("row_semistrict", "standard")
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    grid = [[0] * r for r in shape]
    n = P.n

    def fill(pos: int, used: int):
        if pos == len(cells):
            yield PTableau(tuple(tuple(r) for r in grid))
            return
        i, j = cells[pos]
        for x in range(1, n + 1):
            if used >> x & 1:
                continue
            if cols and i > 0 and not P.lt(grid[i - 1][j], x):
                continue
            if rows and j > 0 and P.gt(grid[i][j - 1], x):
                continue
            grid[i][j] = x
            yield from fill(pos + 1, used | 1 << x)
        grid[i][j] = 0

    yield from fill(0, 0)


def enumerate_ptableaux(P: Poset, shape, kind: str = "standard") -> list[PTableau]:
    return list(iter_ptableaux(P, shape, kind))


def chi_hook_eval(P: Poset, k: int) -> int:
    """Number of standard P-tableaux of shape k1^{n-k}."""
    return sum(1 for _ in iter_ptableaux(P, hook(P.n, k), "standard"))


def linear_extension_count(P: Poset) -> int:
    full = (1 << (P.n + 1)) - 2
    memo: dict[int, int] = {}

    def rec(placed: int) -> int:
        if placed == full:
            return 1
        if placed in memo:
            return memo[placed]
        total = 0
        for x in range(1, P.n + 1):
            if not placed >> x & 1 and (P._down[x] & ~placed) == 0:
                total += rec(placed | 1 << x)
        memo[placed] = total
        return total

    return rec(0)


# -- marked hook tableaux -----------------------------------------------------


def column_marked(P: Poset, k: int) -> list[PTableau]:
    """Standard tableaux of shape k1^{n-k} with a marked column-1 entry above (1,1)."""
    out = []
    for U in iter_ptableaux(P, hook(P.n, k), "standard"):
        for r in range(1, len(U.rows)):
            out.append(PTableau(U.rows, (r, 0)))
    return out


def row_marked(P: Poset, k: int) -> list[PTableau]:
    """Standard tableaux of shape k1^{n-k} with a marked row-1 entry right of (1,1)."""
    out = []
    for U in iter_ptableaux(P, hook(P.n, k), "standard"):
        for c in range(1, len(U.rows[0])):
            out.append(PTableau(U.rows, (0, c)))
    return out


def f_k_injection(P: Poset, U: PTableau) -> PTableau:
    """Move the marked column-1 entry into row 1, as far right as it stays a record."""
    shape = U.shape
    if U.mark is None or U.mark[1] != 0 or U.mark[0] < 1:
        raise InvalidArgument("mark must be in column 1 above position (1,1)")
    if not shape.is_hook() or len(shape) < 2 or not is_standard(P, U):
        raise InvalidArgument("input must be a standard hook tableau with a column entry")
    r = U.mark[0]
    m = U.rows[r][0]
    row0 = list(U.rows[0])
    p = 1
    for q in range(1, len(row0) + 1):
        if all(P.lt(x, m) for x in row0[:q]):
            p = q
    new_row0 = tuple(row0[:p] + [m] + row0[p:])
    rest = tuple(U.rows[i] for i in range(1, len(U.rows)) if i != r)
    return PTableau((new_row0,) + rest, (0, p))


def f_k_inverse(P: Poset, V: PTableau) -> PTableau:
    """Reinsert the marked row-1 entry into column 1 where the column increases."""
    if V.mark is None or V.mark[0] != 0 or V.mark[1] < 1:
        raise InvalidArgument("mark must be in row 1 right of position (1,1)")
    c = V.mark[1]
    m = V.rows[0][c]
    row0 = V.rows[0][:c] + V.rows[0][c + 1 :]
    col = [row0[0]] + [r[0] for r in V.rows[1:]]
    q = 1
    while q < len(col) and P.lt(col[q], m):
        q += 1
    new_col = col[:q] + [m] + col[q:]
    rows = (row0,) + tuple((x,) for x in new_col[1:])
    return PTableau(rows, (q, 0))


def _incomparable_to_earlier(P: Poset, U: PTableau, c: int) -> bool:
    x = U.rows[0][c]
    earlier = list(U.rows[0][:c]) + [r[0] for r in U.rows[1:]]
    return any(not P.comparable(x, y) for y in earlier)


def marked_difference_tableaux(P: Poset, k: int) -> list[PTableau]:
    """Row-marked standard hook tableaux whose marked entry is incomparable
    to some entry of an earlier column."""
    return [V for V in row_marked(P, k) if _incomparable_to_earlier(P, V, V.mark[1])]


def marked_difference_count(P: Poset, k: int) -> int:
    if not 2 <= k <= P.n:
        raise InvalidArgument(f"need 2 <= k <= n, got k={k}")
    return len(marked_difference_tableaux(P, k))


@dataclass
class LemmaCheck:
    k: int
    chi_k: int
    chi_k_minus_1: int
    difference: int
    marked_count: int
    injective: bool
    image_in_R: bool
    complement_matches: bool

    @property
    def ok(self) -> bool:
        return (
            self.difference == self.marked_count
            and self.difference >= 0
            and self.injective
            and self.image_in_R
            and self.complement_matches
        )


def check_lemma(P: Poset, k: int) -> LemmaCheck:
    """All parts of the hook inequality for one poset and one k."""
    n = P.n
    d_k = chi_hook_eval(P, k)
    d_km1 = chi_hook_eval(P, k - 1)
    diff = (k - 1) * d_k - (n - k + 1) * d_km1
    C = column_marked(P, k - 1)
    R = row_marked(P, k)
    images = [f_k_injection(P, U) for U in C]
    injective = len(set(images)) == len(images)
    R_set = set(R)
    image_in_R = all(V in R_set for V in images)
    complement = R_set - set(images)
    marked = set(marked_difference_tableaux(P, k))
    return LemmaCheck(k, d_k, d_km1, diff, len(marked), injective, image_in_R, complement == marked)


def family_relation_poset(n: int, related: Callable[[int, int], bool]) -> Poset:
    """Poset from a predicate on pairs i < j, warning if closure was needed."""
    P = Poset(n, [(i, j) for i, j in combinations(range(1, n + 1), 2) if related(i, j)])
    if P.closure_added:
        warnings.warn("relation was not transitive; closure applied", ClosureAddedWarning, stacklevel=2)
    return P


def sum_over_ideal(theta_values: Callable[[Partition], Fraction], w: Permutation) -> Fraction:
    return sum((Fraction(theta_values(cycle_type(v))) for v in bruhat_ideal(w)), Fraction(0))
