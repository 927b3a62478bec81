"""Weighted planar networks, their path matrices, and path families.

Networks are general weighted DAGs with ``n`` sources and ``n`` sinks.  The
random generator and the Neville factorization build them as concatenations
of elementary chips on ``n`` horizontal levels, which are planar by
construction:

* ``up``    at row r: extra edge level r -> r+1,   matrix I + w E[r, r+1]
* ``down``  at row r: extra edge level r+1 -> r,   matrix I + w E[r+1, r]
* ``scale`` at row r: the level-r edge carries weight w
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod

import numpy as np

from .characters import TraceVector
from .chromatic import trace_of_graph
from .errors import InvalidArgument, NotFactorable, ResourceLimit
from .immanants import ExactMatrix, to_exact
from .posets import Poset, family_relation_poset, incomparability_graph, iter_ptableaux, row_records

FAMILY_CAP = 200_000

CHIP_KINDS = ("up", "down", "scale")


@dataclass(frozen=True)
class Chip:
    kind: str
    row: int
    weight: Fraction

    def to_json(self) -> dict:
        return {"kind": self.kind, "row": self.row, "weight": str(self.weight)}


@dataclass(frozen=True)
class Edge:
    tail: Hashable
    head: Hashable
    weight: Fraction
    label: str = ""


@dataclass
class PlanarNetwork:
    n: int
    sources: list
    sinks: list
    edges: list[Edge]
    chips: list[Chip] | None = None
    _out: dict = field(default_factory=dict, repr=False)
    _order: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if len(self.sources) != self.n or len(self.sinks) != self.n:
            raise InvalidArgument("need exactly n sources and n sinks")
        out: dict = {}
        indeg: Counter = Counter()
        verts = set(self.sources) | set(self.sinks)
        for k, e in enumerate(self.edges):
            out.setdefault(e.tail, []).append(k)
            indeg[e.head] += 1
            verts |= {e.tail, e.head}
        for s in self.sources:
            if indeg[s]:
                raise InvalidArgument(f"source {s!r} has an incoming edge")
        for t in self.sinks:
            if out.get(t):
                raise InvalidArgument(f"sink {t!r} has an outgoing edge")
        # Kahn's algorithm, deterministic by first appearance
        seen_order = list(dict.fromkeys(list(self.sources) + [v for e in self.edges for v in (e.tail, e.head)]))
        deg = {v: indeg[v] for v in seen_order}
        ready = [v for v in seen_order if deg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for k in out.get(v, []):
                h = self.edges[k].head
                deg[h] -= 1
                if deg[h] == 0:
                    ready.append(h)
        if len(order) != len(seen_order):
            raise InvalidArgument("network has a directed cycle")
        self._out = out
        self._order = order

    def out_edges(self, v) -> list[int]:
        return self._out.get(v, [])

    def to_json(self) -> dict:
        if self.chips is not None:
            return {"n": self.n, "chips": [c.to_json() for c in self.chips]}
        return {
            "n": self.n,
            "sources": [_vjson(v) for v in self.sources],
            "sinks": [_vjson(v) for v in self.sinks],
            "edges": [
                {"tail": _vjson(e.tail), "head": _vjson(e.head), "weight": str(e.weight), "label": e.label}
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PlanarNetwork":
        n = int(data["n"])
        if "chips" in data:
            return from_chips(n, [Chip(c["kind"], int(c["row"]), Fraction(c["weight"])) for c in data["chips"]])
        return cls(
            n,
            [_vload(v) for v in data["sources"]],
            [_vload(v) for v in data["sinks"]],
            [Edge(_vload(e["tail"]), _vload(e["head"]), Fraction(e["weight"]), e.get("label", "")) for e in data["edges"]],
        )


def _vjson(v):
    return list(v) if isinstance(v, tuple) else v


def _vload(v):
    return tuple(v) if isinstance(v, list) else v


def from_chips(n: int, chips: Sequence[Chip]) -> PlanarNetwork:
    """Concatenate elementary chips left to right on levels 1..n."""
    edges = []
    for c, chip in enumerate(chips):
        if chip.kind not in CHIP_KINDS:
            raise InvalidArgument(f"unknown chip kind {chip.kind!r}")
        w = Fraction(chip.weight)
        if w < 0:
            raise InvalidArgument("chip weights must be nonnegative")
        hi = n if chip.kind == "scale" else n - 1
        if not 1 <= chip.row <= hi:
            raise InvalidArgument(f"chip row {chip.row} out of range for n={n}")
        for level in range(1, n + 1):
            weight = w if chip.kind == "scale" and level == chip.row else Fraction(1)
            edges.append(Edge((c, level), (c + 1, level), weight))
        if chip.kind == "up" and w:
            edges.append(Edge((c, chip.row), (c + 1, chip.row + 1), w))
        elif chip.kind == "down" and w:
            edges.append(Edge((c, chip.row + 1), (c + 1, chip.row), w))
    d = len(chips)
    if d == 0:
        # bare wires: one edge per level so sources and sinks are distinct vertices
        edges = [Edge((0, level), (1, level), Fraction(1)) for level in range(1, n + 1)]
        d = 1
    return PlanarNetwork(
        n,
        [(0, level) for level in range(1, n + 1)],
        [(d, level) for level in range(1, n + 1)],
        edges,
        chips=list(chips),
    )


def chip_matrix(n: int, chip: Chip) -> ExactMatrix:
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    r = chip.row - 1
    if chip.kind == "scale":
        m[r][r] = Fraction(chip.weight)
    elif chip.kind == "up":
        m[r][r + 1] = Fraction(chip.weight)
    else:
        m[r + 1][r] = Fraction(chip.weight)
    return to_exact(m)


def path_matrix(F: PlanarNetwork) -> ExactMatrix:
    """a_ij = sum of path weights s_i -> t_j, by dynamic programming in topological order."""
    rows = []
    for s in F.sources:
        acc = {s: Fraction(1)}
        for v in F._order:
            val = acc.get(v)
            if not val:
                continue
            for k in F.out_edges(v):
                e = F.edges[k]
                acc[e.head] = acc.get(e.head, Fraction(0)) + val * e.weight
        rows.append([acc.get(t, Fraction(0)) for t in F.sinks])
    return to_exact(rows)


# -- paths and families -------------------------------------------------------


@dataclass(frozen=True)
class Path:
    edges: tuple[int, ...]
    vertices: frozenset


def paths_between(F: PlanarNetwork, s, t) -> list[Path]:
    out = []

    def dfs(v, edges, verts):
        if v == t:
            out.append(Path(tuple(edges), frozenset(verts)))
            return
        for k in F.out_edges(v):
            h = F.edges[k].head
            edges.append(k)
            verts.append(h)
            dfs(h, edges, verts)
            edges.pop()
            verts.pop()

    dfs(s, [], [s])
    return out


@dataclass(frozen=True)
class PathFamily:
    paths: tuple[Path, ...]

    def skeleton(self) -> tuple[tuple[int, int], ...]:
        counts = Counter(k for p in self.paths for k in p.edges)
        return tuple(sorted(counts.items()))

    def weight(self, F: PlanarNetwork) -> Fraction:
        return prod((F.edges[k].weight for p in self.paths for k in p.edges), start=Fraction(1))


def _diagonal_paths(F: PlanarNetwork) -> list[list[Path]]:
    return [paths_between(F, F.sources[i], F.sinks[i]) for i in range(F.n)]


def family_count(F: PlanarNetwork) -> int:
    return prod(len(p) for p in _diagonal_paths(F))


def iter_families(F: PlanarNetwork, cap: int | None = None):
    per = _diagonal_paths(F)
    total = prod(len(p) for p in per)
    limit = FAMILY_CAP if cap is None else cap
    if total > limit:
        raise ResourceLimit(f"{total} path families exceed the cap {limit}")
    for combo in product(*per):
        yield PathFamily(tuple(combo))


def families_by_skeleton(F: PlanarNetwork, cap: int | None = None) -> dict[tuple, list[PathFamily]]:
    groups: dict[tuple, list[PathFamily]] = {}
    for fam in iter_families(F, cap):
        groups.setdefault(fam.skeleton(), []).append(fam)
    return groups


def skeleton_weight(F: PlanarNetwork, skeleton: Iterable[tuple[int, int]]) -> Fraction:
    return prod((F.edges[k].weight ** m for k, m in skeleton), start=Fraction(1))


def skeleton_labels(F: PlanarNetwork, skeleton: Iterable[tuple[int, int]]) -> str:
    """Edge labels with multiplicity, sorted; unlabeled edges are skipped."""
    return "".join(sorted(F.edges[k].label * m for k, m in skeleton if F.edges[k].label))


def lindstrom_det(F: PlanarNetwork) -> Fraction:
    """Weighted count of vertex-disjoint families s_i -> t_i."""
    per = _diagonal_paths(F)
    total = Fraction(0)

    def rec(i: int, used: frozenset, w: Fraction):
        nonlocal total
        if i == F.n:
            total += w
            return
        for p in per[i]:
            if p.vertices & used:
                continue
            pw = prod((F.edges[k].weight for k in p.edges), start=Fraction(1))
            if pw:
                rec(i + 1, used | p.vertices, w * pw)

    rec(0, frozenset(), Fraction(1))
    return total


def family_poset(family: PathFamily) -> Poset:
    """pi_i < pi_j iff i < j and the two paths share no vertex."""
    paths = family.paths
    return family_relation_poset(len(paths), lambda i, j: not (paths[i - 1].vertices & paths[j - 1].vertices))


def weighted_posets(F: PlanarNetwork, cap: int | None = None) -> dict[Poset, Fraction]:
    """Total family weight attached to each family poset."""
    out: dict[Poset, Fraction] = {}
    for fam in iter_families(F, cap):
        w = fam.weight(F)
        P = family_poset(fam)
        out[P] = out.get(P, Fraction(0)) + w
    return out


def immanant_via_network(theta: TraceVector, F: PlanarNetwork, cap: int | None = None) -> Fraction:
    """sum over skeletons K of wgt(K) * sum over families of theta(inc(P(pi)))."""
    if theta.n != F.n:
        raise InvalidArgument("trace degree differs from network order")
    total = Fraction(0)
    for P, w in weighted_posets(F, cap).items():
        if w:
            total += w * trace_of_graph(theta, incomparability_graph(P))
    return total


def weighted_tableau_count(F: PlanarNetwork, shape, kind: str = "standard", records: int | None = None,
                           cap: int | None = None) -> Fraction:
    """sum of wgt(U) over F-tableaux of the given kind (optionally with a record count; one-row shapes)."""
    total = Fraction(0)
    for P, w in weighted_posets(F, cap).items():
        if not w:
            continue
        if records is None:
            c = sum(1 for _ in iter_ptableaux(P, shape, kind))
        else:
            c = sum(1 for U in iter_ptableaux(P, shape, kind) if sum(row_records(P, r) for r in U.rows) == records)
        total += w * c
    return total


# -- generators ---------------------------------------------------------------


def make_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """PCG64 stream for one (seed, trial) pair."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(trial)]))


def random_weight(rng: np.random.Generator, positive: bool = False) -> Fraction:
    k = int(rng.integers(1 if positive else 0, 10))
    d = int(rng.integers(1, 5))
    return Fraction(k, d)


def random_chips(n: int, depth: int, rng: np.random.Generator, positive: bool = False) -> list[Chip]:
    chips = []
    for _ in range(depth):
        u = rng.random()
        if n == 1 or u < 0.2:
            kind, row = "scale", int(rng.integers(1, n + 1))
        else:
            kind = "up" if u < 0.6 else "down"
            row = int(rng.integers(1, n))
        chips.append(Chip(kind, row, random_weight(rng, positive)))
    return chips


def random_tnn_network(n: int, depth: int, seed: int, trial: int = 0, positive: bool = False) -> PlanarNetwork:
    if n < 1 or depth < 0:
        raise InvalidArgument("need n >= 1 and depth >= 0")
    return from_chips(n, random_chips(n, depth, make_rng(seed, trial), positive))


def totally_positive_network(n: int, rng: np.random.Generator) -> PlanarNetwork:
    """A network whose path matrix is totally positive (all minors > 0).

    Uses the standard reduced-word layout: every down chip and every up chip
    of the longest element, plus positive diagonal scaling.
    """
    chips = []
    for top in range(n - 1, 0, -1):
        for r in range(top, n):
            chips.append(Chip("down", r, random_weight(rng, positive=True)))
    for r in range(1, n + 1):
        chips.append(Chip("scale", r, random_weight(rng, positive=True)))
    for top in range(1, n):
        for r in range(n - 1, top - 1, -1):
            chips.append(Chip("up", r, random_weight(rng, positive=True)))
    return from_chips(n, chips)


def factor_to_network(A) -> PlanarNetwork:
    """Neville elimination A = (down chips) D (up chips), all weights nonnegative."""
    a = [list(r) for r in to_exact(A)]
    n = len(a)

    def eliminate(m: list[list[Fraction]], what: str) -> list[tuple[int, Fraction]]:
        steps = []
        for j in range(n - 1):
            for i in range(n - 1, j, -1):
                if m[i][j] == 0:
                    continue
                if m[i - 1][j] == 0:
                    raise NotFactorable(f"{what}: zero pivot at ({i}, {j + 1}) above nonzero ({i + 1}, {j + 1})")
                mult = m[i][j] / m[i - 1][j]
                if mult < 0:
                    raise NotFactorable(f"{what}: negative multiplier {mult} at ({i + 1}, {j + 1})")
                m[i] = [x - mult * y for x, y in zip(m[i], m[i - 1])]
                steps.append((i, mult))
        return steps

    lower = eliminate(a, "lower")
    diag = [a[i][i] for i in range(n)]
    for i, d in enumerate(diag):
        if d <= 0:
            raise NotFactorable(f"nonpositive pivot {d} at ({i + 1}, {i + 1})")
    unit_upper_t = [[a[j][i] / diag[j] for j in range(n)] for i in range(n)]
    upper = eliminate(unit_upper_t, "upper")
    chips = [Chip("down", i, m) for i, m in lower]
    chips += [Chip("scale", i + 1, d) for i, d in enumerate(diag) if d != 1]
    chips += [Chip("up", i, m) for i, m in reversed(upper)]
    return from_chips(n, chips)


def example_network_3(a=1, b=1, c=1, d=1, e=1, f=1, g=1, h=1) -> PlanarNetwork:
    """An order-3 network with eight labelled edge weights a..h."""
    w = {k: Fraction(v) for k, v in dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h).items()}
    one = Fraction(1)
    E = [
        Edge("s3", "u3", w["d"], "d"),
        Edge("s3", "u2", one),
        Edge("s2", "u2", one),
        Edge("s2", "u1", w["a"], "a"),
        Edge("s1", "u1", one),
        Edge("u2", "u3", w["e"], "e"),
        Edge("u2", "v", w["f"], "f"),
        Edge("u1", "v", w["b"], "b"),
        Edge("u1", "t2", w["c"], "c"),
        Edge("u1", "t1", one),
        Edge("u3", "t3", w["g"], "g"),
        Edge("u3", "v", one),
        Edge("v", "t3", w["h"], "h"),
        Edge("v", "t2", one),
    ]
    return PlanarNetwork(3, ["s1", "s2", "s3"], ["t1", "t2", "t3"], E)


def path_by_vertices(F: PlanarNetwork, vertices: Sequence) -> Path:
    """Look up the path visiting exactly these vertices in order."""
    edges = []
    for u, v in zip(vertices, vertices[1:]):
        k = next((k for k in F.out_edges(u) if F.edges[k].head == v), None)
        if k is None:
            raise InvalidArgument(f"no edge {u!r} -> {v!r}")
        edges.append(k)
    return Path(tuple(edges), frozenset(vertices))
