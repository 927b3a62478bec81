"""Integer partitions and the partition-level statistics used everywhere else.

Partitions are stored as :class:`Partition`, an immutable tuple subclass with
no trailing zeros.  Anything indexed by the partitions of ``n`` uses the order
returned by :func:`partitions_of` (reverse lexicographic).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from functools import lru_cache
from math import comb, factorial, prod

from .errors import InvalidArgument


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InvalidArgument(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArgument(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def is_hook(self) -> bool:
        return len(self) == 0 or all(p == 1 for p in self[1:])

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        if all(p < 10 for p in self):
            return "".join(str(p) for p in self)
        return ",".join(str(p) for p in self)


def as_partition(obj) -> Partition:
    """Coerce a tuple, list or string such as ``"411"``/``"4,1,1"``."""
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        text = obj.strip().strip("()[]")
        if "," in text or " " in text:
            parts = [int(t) for t in text.replace(" ", ",").split(",") if t]
        else:
            parts = [int(c) for c in text]
        return Partition(sorted(parts, reverse=True))
    return Partition(obj)


def hook(n: int, k: int) -> Partition:
    """The hook partition ``k 1^(n-k)``."""
    if not 1 <= k <= n:
        raise InvalidArgument(f"hook needs 1 <= k <= n, got k={k}, n={n}")
    return Partition((k,) + (1,) * (n - k))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, (n) first."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    return tuple(Partition(p) for p in _partitions(n, n))


def partition_index(n: int) -> dict[Partition, int]:
    return _index(n)


@lru_cache(maxsize=None)
def _index(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(partitions_of(n))}


def transpose(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def z_value(lam: Iterable[int]) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    lam = tuple(lam)
    return prod(lam) * prod(factorial(a) for a in Counter(lam).values())


def class_size(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    return factorial(sum(lam)) // z_value(lam)


def _check_same_size(lam, mu) -> None:
    if sum(lam) != sum(mu):
        raise InvalidArgument(f"partitions of different sizes: {tuple(lam)}, {tuple(mu)}")


def ssyt(shape: Iterable[int], content: Iterable[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of ``shape`` and ``content`` by cell backtracking.

    Cells are filled row by row (row 0 is the longest); rows weakly increase
    and columns strictly increase.  Yields tuples of rows.
    """
    shape = tuple(shape)
    content = list(content)
    _check_same_size(shape, content)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    grid = [[0] * r for r in shape]
    remaining = content[:]

    def fill(pos: int):
        if pos == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[i][j] = v
            yield from fill(pos + 1)
            remaining[v - 1] += 1
        grid[i][j] = 0

    yield from fill(0)


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    return sum(1 for _ in ssyt(lam, mu))


def kostka(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu`` (exhaustive count)."""
    lam, mu = tuple(lam), tuple(mu)
    _check_same_size(lam, mu)
    return _kostka(lam, mu)


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = tuple(lam)
    lt = transpose(lam)
    return [lam[i] - j + lt[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = tuple(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def majorizes(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    mu, lam = tuple(mu), tuple(lam)
    _check_same_size(mu, lam)
    m = max(len(mu), len(lam))
    a = list(mu) + [0] * (m - len(mu))
    b = list(lam) + [0] * (m - len(lam))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sb > sa:
            return False
    return True


def pate_successor(lam: Iterable[int]) -> Partition:
    """Move the rightmost column of the diagram to the first column."""
    lam = tuple(lam)
    if not lam or lam[0] == 1:
        raise InvalidArgument("a single-column partition has no Pate successor")
    k = sum(1 for p in lam if p == lam[0])
    parts = [p - 1 for p in lam[:k]] + list(lam[k:]) + [1] * k
    return Partition(sorted((p for p in parts if p > 0), reverse=True))


def hook_kostka(k: int, mu: Iterable[int]) -> int:
    """Closed form for ``K_{k1^{n-k}, mu}``."""
    mu = tuple(mu)
    return comb(len(mu) - 1, sum(mu) - k)
