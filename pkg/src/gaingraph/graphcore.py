"""Simple graphs, gain graphs, walks and switching.

Each edge stores one gain, for the direction from its smaller to its larger
endpoint.  The reverse direction is always read through
:meth:`GainGraph.directed_gain`, which returns the inverse.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .gains import IDENTITY, GroupSpec, UnitGain, format_gain, inv, mul, validate_spec

__all__ = [
    "SimpleGraph",
    "GainGraph",
    "Switching",
    "Walk",
    "SpanningForest",
    "NotEquivalent",
    "WalkError",
    "gain_of_walk",
    "switch",
    "spanning_forest",
    "fundamental_cycle",
    "fundamental_cycles",
    "find_switching",
    "is_switching_equivalent",
    "random_gain_graph",
    "random_switching",
]


class WalkError(ValueError):
    """A walk whose consecutive elements are not incident."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices ``0..n-1`` and edges indexed ``0..m-1``, stored as ``(i, j)``, ``i < j``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _incident: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        index = {}
        incident = [[] for _ in range(self.n)]
        for k, (a, b) in enumerate(self.edges):
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"edge {k} is a loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {k} = {{{a}, {b}}} has a vertex outside 0..{self.n - 1}")
            pair = (min(a, b), max(a, b))
            if pair in index:
                raise ValueError(f"edge {k} duplicates edge {index[pair]} {pair}")
            index[pair] = k
            canon.append(pair)
            incident[a].append(k)
            incident[b].append(k)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_incident", tuple(tuple(x) for x in incident))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, a: int, b: int) -> Optional[int]:
        return self._index.get((min(a, b), max(a, b)))

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self._incident[v]]

    def degree(self, v: int) -> int:
        return len(self._incident[v])


@dataclass(frozen=True)
class GainGraph:
    """A simple graph with one gain per edge, read from smaller to larger endpoint."""

    graph: SimpleGraph
    spec: GroupSpec
    gains: tuple[UnitGain, ...]

    def __post_init__(self):
        problem = validate_spec(self.spec)
        if problem:
            raise ValueError(problem)
        gains = tuple(UnitGain.of(g) for g in self.gains)
        if len(gains) != self.graph.m:
            raise ValueError(f"{len(gains)} gains given for {self.graph.m} edges")
        for k, g in enumerate(gains):
            if not self.spec.contains(g):
                raise ValueError(f"gain {format_gain(g)} on edge {k} lies outside {self.spec}")
        object.__setattr__(self, "gains", gains)

    @classmethod
    def from_edges(cls, n: int, spec: GroupSpec, edges: Iterable[tuple[int, int, object]]) -> "GainGraph":
        """Build from ``(i, j, gain)`` triples; the gain is read from ``i`` to ``j``."""
        pairs, gains = [], []
        for i, j, g in edges:
            g = UnitGain.of(g)
            pairs.append((i, j))
            gains.append(g if i < j else inv(g))
        return cls(SimpleGraph(n, tuple(pairs)), spec, tuple(gains))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def involution(self) -> UnitGain:
        return self.spec.involution

    def directed_gain(self, e: int, tail: int) -> UnitGain:
        """Gain of edge ``e`` traversed starting from vertex ``tail``."""
        a, b = self.graph.edges[e]
        if tail == a:
            return self.gains[e]
        if tail == b:
            return inv(self.gains[e])
        raise ValueError(f"vertex {tail} is not an endpoint of edge {e}")

    def gain_between(self, i: int, j: int) -> UnitGain:
        e = self.graph.edge_index(i, j)
        if e is None:
            raise KeyError(f"no edge between {i} and {j}")
        return self.directed_gain(e, i)

    def with_gains(self, gains: Sequence[UnitGain]) -> "GainGraph":
        return GainGraph(self.graph, self.spec, tuple(gains))


@dataclass(frozen=True)
class Switching:
    """A switching function, one gain per vertex."""

    values: tuple[UnitGain, ...]

    @classmethod
    def identity(cls, n: int) -> "Switching":
        return cls((IDENTITY,) * n)

    def __getitem__(self, v: int) -> UnitGain:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def __bool__(self) -> bool:
        # found-vs-NotEquivalent tests must hold on the empty graph too
        return True

    def inverse(self) -> "Switching":
        return Switching(tuple(inv(z) for z in self.values))

    def then(self, other: "Switching") -> "Switching":
        """Switching by ``self`` followed by ``other``; gains compose pointwise."""
        return Switching(tuple(mul(a, b) for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class Walk:
    """Vertices ``v_0 .. v_k`` and the edges ``e_0 .. e_{k-1}`` joining them."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a walk has exactly one more vertex than edges")

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)


class NotEquivalent:
    """Negative answer from :func:`find_switching`; falsy, carries a witness cycle."""

    __slots__ = ("witness", "gain1", "gain2")

    def __init__(self, witness: Walk, gain1: UnitGain, gain2: UnitGain):
        self.witness = witness
        self.gain1 = gain1
        self.gain2 = gain2

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return (f"NotEquivalent(witness={self.witness.vertices}, "
                f"gains {format_gain(self.gain1)} != {format_gain(self.gain2)})")


def gain_of_walk(phi: GainGraph, w: Walk) -> UnitGain:
    g = phi.graph
    total = IDENTITY
    for pos, e in enumerate(w.edges):
        if not 0 <= e < g.m:
            raise WalkError(f"edge {e} does not exist", pos)
        u, v = w.vertices[pos], w.vertices[pos + 1]
        a, b = g.edges[e]
        if (u, v) == (a, b):
            total = mul(total, phi.gains[e])
        elif (u, v) == (b, a):
            total = mul(total, inv(phi.gains[e]))
        else:
            raise WalkError(f"edge {e} = {{{a}, {b}}} does not join {u} and {v}", pos)
    return total


def switch(phi: GainGraph, zeta: Switching) -> GainGraph:
    """Switch ``phi``: gain ``g`` on ``i -> j`` becomes ``zeta[i]^-1 * g * zeta[j]``."""
    if len(zeta) != phi.n:
        raise ValueError(f"switching function has {len(zeta)} values for {phi.n} vertices")
    for v, z in enumerate(zeta.values):
        if not phi.spec.contains(z):
            raise ValueError(f"switching value {format_gain(z)} at vertex {v} lies outside {phi.spec}")
    gains = tuple(
        mul(mul(inv(zeta[a]), phi.gains[k]), zeta[b])
        for k, (a, b) in enumerate(phi.graph.edges)
    )
    return phi.with_gains(gains)


@dataclass(frozen=True)
class SpanningForest:
    """Maximal forest as a parent map, plus a BFS order per component.

    ``parent[v]`` is ``None`` for roots; ``parent_edge[v]`` is the tree edge
    to the parent.  ``order`` lists vertices component by component, each
    vertex after its parent.
    """

    parent: tuple[Optional[int], ...]
    parent_edge: tuple[Optional[int], ...]
    order: tuple[int, ...]
    component: tuple[int, ...]

    @property
    def tree_edges(self) -> frozenset[int]:
        return frozenset(e for e in self.parent_edge if e is not None)

    @property
    def roots(self) -> list[int]:
        return [v for v in self.order if self.parent[v] is None]

    def depth(self, v: int) -> int:
        d = 0
        while self.parent[v] is not None:
            v = self.parent[v]
            d += 1
        return d


def spanning_forest(g: SimpleGraph) -> SpanningForest:
    parent: list[Optional[int]] = [None] * g.n
    parent_edge: list[Optional[int]] = [None] * g.n
    component = [-1] * g.n
    order = []
    for root in range(g.n):
        if component[root] != -1:
            continue
        comp = root
        component[root] = comp
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for e in g.incident_edges(u):
                w = g.other_end(e, u)
                if component[w] == -1:
                    component[w] = comp
                    parent[w] = u
                    parent_edge[w] = e
                    queue.append(w)
    return SpanningForest(tuple(parent), tuple(parent_edge), tuple(order), tuple(component))


def _path_to_root(forest: SpanningForest, v: int) -> list[int]:
    path = [v]
    while forest.parent[v] is not None:
        v = forest.parent[v]
        path.append(v)
    return path


def fundamental_cycle(g: SimpleGraph, forest: SpanningForest, e: int) -> Walk:
    """Closed walk around the cycle that cotree edge ``e = {a, b}`` (``a < b``) closes.

    The walk starts at ``b``, crosses ``e`` to ``a`` and returns to ``b``
    through the forest.
    """
    if e in forest.tree_edges:
        raise ValueError(f"edge {e} is not a cotree edge")
    a, b = g.edges[e]
    if forest.component[a] != forest.component[b]:
        raise ValueError(f"edge {e} joins two forest components")
    up_a = _path_to_root(forest, a)
    up_b = _path_to_root(forest, b)
    on_b = set(up_b)
    meet = next(v for v in up_a if v in on_b)
    # a -> ... -> meet, then meet -> ... -> b
    path = up_a[: up_a.index(meet) + 1] + list(reversed(up_b[: up_b.index(meet)]))
    vertices = [b] + path
    edges = [e]
    for u, w in zip(path, path[1:]):
        edges.append(forest.parent_edge[w] if forest.parent[w] == u else forest.parent_edge[u])
    return Walk(tuple(vertices), tuple(edges))


def fundamental_cycles(g: SimpleGraph, forest: Optional[SpanningForest] = None) -> list[tuple[int, Walk]]:
    """All ``(cotree edge, fundamental cycle)`` pairs, in edge-index order."""
    forest = forest or spanning_forest(g)
    tree = forest.tree_edges
    return [(e, fundamental_cycle(g, forest, e)) for e in range(g.m) if e not in tree]


def find_switching(phi1: GainGraph, phi2: GainGraph) -> Switching | NotEquivalent:
    """Decide whether ``phi2`` is a switching of ``phi1``.

    Builds the switching function along a spanning forest, root first, then
    compares the gains of every fundamental cycle.  Returns the switching
    function, or a falsy :class:`NotEquivalent` holding a cycle whose gains
    differ.
    """
    if phi1.graph != phi2.graph:
        raise ValueError("gain graphs have different underlying graphs")
    if phi1.spec.family != phi2.spec.family or phi1.spec.order != phi2.spec.order:
        raise ValueError(f"gain groups differ: {phi1.spec} vs {phi2.spec}")
    g = phi1.graph
    forest = spanning_forest(g)
    for e, cycle in fundamental_cycles(g, forest):
        g1, g2 = gain_of_walk(phi1, cycle), gain_of_walk(phi2, cycle)
        if g1 != g2:
            return NotEquivalent(cycle, g1, g2)

    zeta = [IDENTITY] * g.n
    for v in forest.order:
        p = forest.parent[v]
        if p is None:
            continue
        e = forest.parent_edge[v]
        # zeta(v) = phi1(v -> p) zeta(p) phi2(v -> p)^-1
        zeta[v] = mul(mul(phi1.directed_gain(e, v), zeta[p]), inv(phi2.directed_gain(e, v)))
    result = Switching(tuple(zeta))
    switched = switch(phi1, result)
    assert switched.gains == phi2.gains, "switching construction failed on a cotree edge"
    return result


def is_switching_equivalent(phi1: GainGraph, phi2: GainGraph) -> bool:
    return bool(find_switching(phi1, phi2))


def random_gain_graph(
    n: int,
    spec: GroupSpec,
    rng: np.random.Generator,
    *,
    m: Optional[int] = None,
    p: float = 0.5,
    order: Optional[int] = None,
) -> GainGraph:
    """Random gain graph on ``n`` vertices with gains uniform in a finite subgroup.

    With ``m`` given, exactly ``m`` distinct edges are drawn without
    replacement; otherwise each pair is an edge with probability ``p``.
    ``order`` selects the subgroup for the circle family (default 24).
    """
    pairs = list(combinations(range(n), 2))
    if m is not None:
        if m > len(pairs):
            raise ValueError(f"{m} edges requested, only {len(pairs)} pairs on {n} vertices")
        chosen = sorted(rng.choice(len(pairs), size=m, replace=False)) if m else []
        edges = [pairs[k] for k in chosen]
    else:
        edges = [pr for pr in pairs if rng.random() < p]
    k = order or spec.finite_order() or 24
    gains = tuple(UnitGain(Fraction(int(t), k)) for t in rng.integers(0, k, size=len(edges)))
    return GainGraph(SimpleGraph(n, tuple(edges)), spec, gains)


def random_switching(n: int, order: int, rng: np.random.Generator) -> Switching:
    return Switching(tuple(UnitGain(Fraction(int(t), order)) for t in rng.integers(0, order, size=n)))
