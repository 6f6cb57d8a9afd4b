"""
Incidence identity and eigenvalue bounds
========================================

With H the incidence matrix of an oriented gain graph, H*H equals 2I plus
s times the adjacency matrix of the line graph.  Since H*H is positive
semidefinite, the line graph's eigenvalues are at most 2 when s = -1 and
at least -2 when s = +1.  Here we check both on random graphs.
"""
import numpy as np

from gaingraph import GroupSpec, random_gain_graph
from gaingraph.orientation import random_orientation
from gaingraph.spectra import check_line_identity, gram_matrix, hermitian_eigenvalues, oriented_line_spectrum

rng = np.random.default_rng(0)
phi = random_gain_graph(6, GroupSpec.mu(6), rng, p=0.5)
og = random_orientation(phi, rng)

np.set_printoptions(precision=3, suppress=True)
print(gram_matrix(og))
print("identity residual:", check_line_identity(og))
print("eigenvalues of H*H:", hermitian_eigenvalues(gram_matrix(og)))

# sweep both involutions
for s in ("1/2", "0"):
    extremes = []
    for _ in range(40):
        phi = random_gain_graph(int(rng.integers(3, 9)), GroupSpec.mu(12, s), rng, p=0.5)
        ev = oriented_line_spectrum(random_orientation(phi, rng))
        if ev.size:
            extremes.append(ev[-1] if s == "1/2" else ev[0])
    label = "max eigenvalue (s = -1)" if s == "1/2" else "min eigenvalue (s = +1)"
    print(f"{label} over 40 graphs: {max(extremes) if s == '1/2' else min(extremes):.6f}")

# the spectrum does not depend on which orientation was used
phi = random_gain_graph(7, GroupSpec.circle(), rng, p=0.6)
a = oriented_line_spectrum(random_orientation(phi, 1))
b = oriented_line_spectrum(random_orientation(phi, 2))
print("spectral gap between two orientations:", np.max(np.abs(a - b)))
