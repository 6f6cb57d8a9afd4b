"""Complex unit gain graphs: switching, orientations, line graphs and spectra."""
from .gains import HALF_TURN, IDENTITY, GroupSpec, UnitGain, inv, mul, to_complex, validate_spec
from .graphcore import (GainGraph, NotEquivalent, SimpleGraph, Switching, Walk, find_switching,
                        fundamental_cycle, gain_of_walk, is_switching_equivalent, random_gain_graph,
                        random_switching, spanning_forest, switch)
from .linegraph import line_graph_class, line_graph_oriented, line_orientation, underlying_line_graph
from .orientation import (IncidencePhase, OrientedGainGraph, associated_gain_graph, default_orientation,
                          random_orientation, switch_orientation)
from .spectra import (adjacency_matrix, check_bound, check_line_identity, hermitian_eigenvalues,
                      incidence_matrix, line_spectrum, spectrum_switching_invariance)

__version__ = "0.1.0"
