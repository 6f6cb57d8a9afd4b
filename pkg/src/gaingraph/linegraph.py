"""Line graphs of oriented gain graphs.

Vertex ``k`` of a line graph is edge ``k`` of the source graph.  Two line
vertices are adjacent when the source edges share an endpoint, and the
source orientation induces one on the line graph: the line edge joining
``e`` and ``f`` at shared vertex ``v`` gets phases ``omega(v, e)^-1`` and
``omega(v, f)^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gains import inv
from .graphcore import GainGraph, SimpleGraph
from .orientation import IncidencePhase, OrientedGainGraph, default_orientation

__all__ = [
    "LineGraphMap",
    "underlying_line_graph",
    "line_orientation",
    "line_graph_oriented",
    "line_graph_class",
]


@dataclass(frozen=True)
class LineGraphMap:
    source: SimpleGraph
    line_graph: SimpleGraph
    shared_vertex: tuple[int, ...]


def underlying_line_graph(g: SimpleGraph) -> LineGraphMap:
    found = {}
    for v in range(g.n):
        for e, f in combinations(sorted(g.incident_edges(v)), 2):
            # simple source: two edges meet in at most one vertex
            assert (e, f) not in found
            found[e, f] = v
    pairs = sorted(found)
    return LineGraphMap(g, SimpleGraph(g.m, tuple(pairs)), tuple(found[p] for p in pairs))


def line_orientation(og: OrientedGainGraph, lgm: LineGraphMap) -> IncidencePhase:
    if lgm.source != og.graph:
        raise ValueError("line graph map was built for a different graph")
    omega = og.omega
    phases = {}
    for k, ((e, f), v) in enumerate(zip(lgm.line_graph.edges, lgm.shared_vertex)):
        phases[e, k] = inv(omega[v, e])
        phases[f, k] = inv(omega[v, f])
    return IncidencePhase(phases)


def line_graph_oriented(og: OrientedGainGraph) -> OrientedGainGraph:
    """The oriented line graph of ``og``, with the same group and involution.

    The line edge from ``e`` to ``f`` at shared vertex ``v`` carries gain
    ``omega(v, e)^-1 * s * omega(v, f)``.
    """
    lgm = underlying_line_graph(og.graph)
    return OrientedGainGraph.from_phase(lgm.line_graph, line_orientation(og, lgm), og.spec)


def line_graph_class(phi: GainGraph) -> GainGraph:
    """A representative of the line graph's switching class.

    Built from :func:`default_orientation`, so the output is deterministic;
    other orientations give switching-equivalent gain graphs.
    """
    return line_graph_oriented(default_orientation(phi)).phi
