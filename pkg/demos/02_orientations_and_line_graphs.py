"""
Orientations and line graphs
============================

An orientation assigns a unit phase to every (vertex, edge) incidence.
Each edge gain is then the phase at one end, times the involution s,
times the inverse phase at the other end.  Many orientations induce the
same gain graph; they differ by a per-edge rescaling, which becomes a
switching of the line graph.
"""
import numpy as np

from gaingraph import GainGraph, GroupSpec, SimpleGraph, UnitGain, find_switching, switch
from gaingraph.gains import format_gain
from gaingraph.linegraph import line_graph_oriented
from gaingraph.orientation import default_orientation, random_orientation, uniform_orientation

star = SimpleGraph(4, ((0, 1), (0, 2), (0, 3)))
phi = GainGraph(star, GroupSpec.mu(8), tuple(UnitGain.of(x) for x in ("1/8", "1/2", "3/4")))

og = default_orientation(phi)
for (v, e), w in sorted(og.omega.items()):
    print(f"vertex {v + 1} edge {e}: phase {format_gain(w)}")

# the line graph of a star is a triangle
line = line_graph_oriented(og).phi
print("line graph edges:", line.graph.edges)
print("line gains (default orientation):", [format_gain(x) for x in line.gains])

# another orientation gives another representative of the same switching class
other = line_graph_oriented(random_orientation(phi, 7)).phi
print("line gains (random orientation): ", [format_gain(x) for x in other.gains])
zeta = find_switching(line, other)
print("related by switching:", bool(zeta) and switch(line, zeta) == other)

# with every phase equal to s, every gain in the graph and its line graph is s
for s in ("0", "1/2"):
    uniform = line_graph_oriented(uniform_orientation(SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3))), GroupSpec.circle(s)))
    print(f"s = {s}: line gains", sorted({format_gain(x) for x in uniform.phi.gains}))
