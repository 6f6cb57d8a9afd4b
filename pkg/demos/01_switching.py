"""
Switching and balance
=====================

A gain graph puts a unit complex number on every edge, read in one
direction and conjugated in the other.  Switching multiplies the gain on
each edge by the inverse value at its tail and the value at its head.
Closed-walk gains survive switching, and that is all that survives.
"""
import numpy as np

from gaingraph import GainGraph, GroupSpec, SimpleGraph, UnitGain, find_switching, switch
from gaingraph.graphcore import Switching, fundamental_cycles, gain_of_walk, spanning_forest
from gaingraph.gains import format_gain

# a 4-cycle with one chord, gains in the 4th roots of unity
g = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))
phi = GainGraph(g, GroupSpec.mu(4), tuple(UnitGain.of(x) for x in ("1/4", "0", "1/2", "3/4", "1/4")))

# gains around the fundamental cycles of a BFS tree
forest = spanning_forest(g)
for e, cycle in fundamental_cycles(g, forest):
    print("cycle", [v + 1 for v in cycle.vertices], "gain", format_gain(gain_of_walk(phi, cycle)))

# switch by a random function on the vertices
rng = np.random.default_rng(1)
zeta = Switching(tuple(UnitGain.of(f"{k}/4") for k in rng.integers(0, 4, size=4)))
switched = switch(phi, zeta)
print("switched gains:", [format_gain(x) for x in switched.gains])

# the decision procedure recovers a switching function (not necessarily zeta itself)
found = find_switching(phi, switched)
print("found:", [format_gain(x) for x in found.values])
print("reproduces the switched graph:", switch(phi, found) == switched)

# change one edge on a cycle and the two graphs are no longer equivalent
bent = switched.with_gains((UnitGain.of("0"),) + switched.gains[1:])
verdict = find_switching(phi, bent)
print("equivalent after bending an edge:", bool(verdict))
print("witness", [v + 1 for v in verdict.witness.vertices],
      "gains", format_gain(verdict.gain1), "vs", format_gain(verdict.gain2))
