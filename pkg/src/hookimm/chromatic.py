"""Graphs, chromatic symmetric functions, and trace evaluations theta(G)."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .characters import SymmetricFunction, TraceVector, frobenius, theta_level, to_basis
from .errors import InvalidArgument
from .partitions import Partition, as_partition, partitions_of


class Graph:
    """A simple graph on vertices 1..n."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        es = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise InvalidArgument(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidArgument(f"edge {(i, j)} outside 1..{n}")
            es.add((min(i, j), max(i, j)))
        self.n = n
        self.edges = frozenset(es)
        adj = [0] * (n + 1)
        for i, j in es:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._adj = tuple(adj)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self._adj[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if self._adj[i] >> j & 1]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(vertices)
        pos = {v: k + 1 for k, v in enumerate(vs)}
        return Graph(len(vs), [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Graph":
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def colorings_of_type(G: Graph, lam) -> int:
    """Proper colorings with exactly lam_i vertices of color i."""
    lam = as_partition(lam)
    if lam.n != G.n:
        raise InvalidArgument(f"{lam} is not a partition of {G.n}")
    return _colorings(G, tuple(lam))


@lru_cache(maxsize=4096)
def _colorings(G: Graph, lam: tuple[int, ...]) -> int:
    n = G.n
    remaining = list(lam)
    color = [0] * (n + 1)

    def rec(v: int) -> int:
        if v > n:
            return 1
        total = 0
        for c in range(len(remaining)):
            if remaining[c] == 0:
                continue
            if any(color[u] == c + 1 for u in range(1, v) if G.adjacent(u, v)):
                continue
            remaining[c] -= 1
            color[v] = c + 1
            total += rec(v + 1)
            color[v] = 0
            remaining[c] += 1
        return total

    return rec(1)


def chromatic_symmetric_function(G: Graph) -> SymmetricFunction:
    """X_G in the monomial basis."""
    return SymmetricFunction(G.n, "m", {lam: _colorings(G, tuple(lam)) for lam in partitions_of(G.n)})


def epsilon_expansion(theta: TraceVector) -> dict[Partition, Fraction]:
    """Coefficients a_lam with theta = sum a_lam epsilon^lam."""
    return to_basis(frobenius(theta), "e").coeffs


def trace_of_graph(theta: TraceVector, G: Graph) -> Fraction:
    """theta(G) = sum_lam a_lam c(G, lam) where theta = sum a_lam epsilon^lam."""
    if theta.n != G.n:
        raise InvalidArgument(f"trace degree {theta.n} != {G.n} vertices")
    return sum(
        (a * _colorings(G, tuple(lam)) for lam, a in epsilon_expansion(theta).items() if a),
        Fraction(0),
    )


def _is_acyclic(n: int, arcs: list[tuple[int, int]]) -> bool:
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == n


@lru_cache(maxsize=4096)
def source_profile(G: Graph) -> tuple[int, ...]:
    """counts[l-1] = number of acyclic orientations of G with exactly l sources."""
    edges = sorted(G.edges)
    counts = [0] * G.n
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(i, j) if b == 0 else (j, i) for (i, j), b in zip(edges, bits)]
        if not _is_acyclic(G.n, arcs):
            continue
        has_in = set(v for _, v in arcs)
        counts[G.n - len(has_in) - 1] += 1
    return tuple(counts)


def acyclic_orientations_with_sources(G: Graph, ell: int) -> int:
    if not 1 <= ell <= G.n:
        raise InvalidArgument(f"need 1 <= ell <= n, got {ell}")
    return source_profile(G)[ell - 1]


def acyclic_orientation_count(G: Graph) -> int:
    return sum(source_profile(G))


def theta_level_of_graph(G: Graph, ell: int) -> Fraction:
    return trace_of_graph(theta_level(G.n, ell), G)


def eta_by_orientations(G: Graph, lam) -> int:
    """Ordered sequences of acyclic orientations of induced subgraphs on
    disjoint vertex sets of sizes lam_1, lam_2, ..."""
    lam = as_partition(lam)

    def rec(remaining: tuple[int, ...], parts: tuple[int, ...]) -> int:
        if not parts:
            return 1
        total = 0
        for block in combinations(remaining, parts[0]):
            rest = tuple(v for v in remaining if v not in block)
            total += acyclic_orientation_count(G.induced(block)) * rec(rest, parts[1:])
        return total

    return rec(tuple(range(1, G.n + 1)), tuple(lam))
