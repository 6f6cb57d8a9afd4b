"""Incidence phase functions and oriented gain graphs.

An incidence phase assigns a gain to each (vertex, edge) incidence.  Given
the group's involution ``s``, it determines edge gains by

    gain(i -> j) = omega(i, e) * s * omega(j, e)^-1

and an orientation of a gain graph is any incidence phase reproducing its
gains this way.  Non-incident pairs are simply absent from the mapping.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Union

import numpy as np

from .gains import IDENTITY, GroupSpec, UnitGain, format_gain, inv, mul
from .graphcore import GainGraph, SimpleGraph, Switching, switch

__all__ = [
    "IncidencePhase",
    "OrientedGainGraph",
    "OrientationError",
    "associated_gain_graph",
    "default_orientation",
    "random_orientation",
    "uniform_orientation",
    "switch_orientation",
    "reorient_edge",
    "DEFAULT_CIRCLE_ORDER",
]

DEFAULT_CIRCLE_ORDER = 24


class OrientationError(ValueError):
    pass


class IncidencePhase(Mapping):
    """Read-only mapping ``(vertex, edge) -> UnitGain``."""

    __slots__ = ("_values",)

    def __init__(self, values: Union[Mapping, None] = None):
        self._values = {(int(v), int(e)): UnitGain.of(g) for (v, e), g in (values or {}).items()}

    def __getitem__(self, key) -> UnitGain:
        return self._values[key]

    def __iter__(self) -> Iterator:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, IncidencePhase):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({v}, {e}): {format_gain(g)}" for (v, e), g in sorted(self._values.items()))
        return f"IncidencePhase({{{body}}})"

    def check_support(self, g: SimpleGraph) -> None:
        """Raise unless the mapping is defined exactly on the incidences of ``g``."""
        for e, (a, b) in enumerate(g.edges):
            for v in (a, b):
                if (v, e) not in self._values:
                    raise OrientationError(f"missing incidence value at (vertex {v}, edge {e})")
        extra = [k for k in self._values if k[1] >= g.m or k[0] not in g.edges[k[1]]]
        if extra:
            v, e = extra[0]
            raise OrientationError(f"vertex {v} is not incident to edge {e}")


def _edge_gain(omega: Mapping, s: UnitGain, tail: int, head: int, e: int) -> UnitGain:
    return mul(mul(omega[tail, e], s), inv(omega[head, e]))


def associated_gain_graph(g: SimpleGraph, omega: IncidencePhase, spec: GroupSpec) -> GainGraph:
    """The gain graph whose gains an incidence phase induces."""
    omega.check_support(g)
    s = spec.involution
    gains = []
    for e, (a, b) in enumerate(g.edges):
        forward = _edge_gain(omega, s, a, b, e)
        backward = _edge_gain(omega, s, b, a, e)
        assert mul(forward, backward) == IDENTITY, f"edge {e}: reverse gain is not the inverse"
        gains.append(forward)
    return GainGraph(g, spec, tuple(gains))


@dataclass(frozen=True)
class OrientedGainGraph:
    """A gain graph with an orientation; the edge-gain relation is checked on construction."""

    phi: GainGraph
    omega: IncidencePhase

    def __post_init__(self):
        self.omega.check_support(self.phi.graph)
        s = self.phi.involution
        for e, (a, b) in enumerate(self.phi.graph.edges):
            for v in (a, b):
                if not self.phi.spec.contains(self.omega[v, e]):
                    raise OrientationError(
                        f"phase {format_gain(self.omega[v, e])} at ({v}, {e}) lies outside {self.phi.spec}")
            got = _edge_gain(self.omega, s, a, b, e)
            if got != self.phi.gains[e]:
                raise OrientationError(
                    f"edge {e}: orientation induces gain {format_gain(got)}, "
                    f"graph has {format_gain(self.phi.gains[e])}")

    @property
    def graph(self) -> SimpleGraph:
        return self.phi.graph

    @property
    def spec(self) -> GroupSpec:
        return self.phi.spec

    @classmethod
    def from_phase(cls, g: SimpleGraph, omega: IncidencePhase, spec: GroupSpec) -> "OrientedGainGraph":
        return cls(associated_gain_graph(g, omega, spec), omega)


def default_orientation(phi: GainGraph) -> OrientedGainGraph:
    """Orientation with phase 1 at each edge's larger endpoint and ``s * gain`` at the smaller."""
    s = phi.involution
    omega = {}
    for e, (a, b) in enumerate(phi.graph.edges):
        omega[a, e] = mul(s, phi.gains[e])
        omega[b, e] = IDENTITY
    return OrientedGainGraph(phi, IncidencePhase(omega))


def random_orientation(phi: GainGraph, seed=None, *, order: Optional[int] = None) -> OrientedGainGraph:
    """Orientation with a uniformly random phase at each larger endpoint.

    Phases are drawn from the finite group itself, or from the ``order``-th
    roots of unity for the circle family (24 unless given).  The phase at
    the smaller endpoint is then forced by the edge gain.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    k = order or phi.spec.finite_order() or DEFAULT_CIRCLE_ORDER
    s = phi.involution
    omega = {}
    for e, (a, b) in enumerate(phi.graph.edges):
        head = UnitGain(Fraction(int(rng.integers(k)), k))
        omega[b, e] = head
        omega[a, e] = mul(mul(phi.gains[e], s), head)
    return OrientedGainGraph(phi, IncidencePhase(omega))


def uniform_orientation(g: SimpleGraph, spec: GroupSpec) -> OrientedGainGraph:
    """Every incidence carries the involution, so every edge gain equals it."""
    s = spec.involution
    omega = {(v, e): s for e, pair in enumerate(g.edges) for v in pair}
    return OrientedGainGraph.from_phase(g, IncidencePhase(omega), spec)


def switch_orientation(og: OrientedGainGraph, zeta: Switching) -> OrientedGainGraph:
    """Switch an orientation: ``omega(v, e)`` becomes ``zeta[v]^-1 * omega(v, e)``.

    The induced gain graph is the switched gain graph; this is checked
    exactly before returning.
    """
    omega = IncidencePhase({(v, e): mul(inv(zeta[v]), g) for (v, e), g in og.omega.items()})
    phi = associated_gain_graph(og.graph, omega, og.spec)
    expected = switch(og.phi, zeta)
    assert phi.gains == expected.gains, "switched orientation disagrees with switched gain graph"
    return OrientedGainGraph(phi, omega)


def reorient_edge(og: OrientedGainGraph, e: int, c: UnitGain) -> OrientedGainGraph:
    """Multiply both phases of edge ``e`` by ``c``; the gain graph is unchanged."""
    omega = dict(og.omega.items())
    for v in og.graph.edges[e]:
        omega[v, e] = mul(c, omega[v, e])
    return OrientedGainGraph(og.phi, IncidencePhase(omega))
