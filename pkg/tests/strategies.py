"""Hypothesis strategies for gain graphs."""
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from gaingraph import GainGraph, GroupSpec, SimpleGraph, Switching, UnitGain

ORDERS = (2, 3, 4, 6, 8, 12)


def gain_in(order):
    return st.integers(0, order - 1).map(lambda k: UnitGain(Fraction(k, order)))


@st.composite
def group_specs(draw, involutions=(Fraction(0), Fraction(1, 2))):
    s = draw(st.sampled_from(involutions))
    family = draw(st.sampled_from(["mu", "sign", "circle"]))
    if family == "mu":
        order = draw(st.sampled_from([k for k in ORDERS if s == 0 or k % 2 == 0]))
        return GroupSpec("mu", UnitGain(s), order)
    return GroupSpec(family, UnitGain(s))


def sample_order(spec):
    return spec.finite_order() or 24


@st.composite
def simple_graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, tuple(chosen))


@st.composite
def gain_graphs(draw, max_n=6, spec=None):
    spec = spec or draw(group_specs())
    g = draw(simple_graphs(max_n))
    k = sample_order(spec)
    gains = draw(st.lists(gain_in(k), min_size=g.m, max_size=g.m))
    return GainGraph(g, spec, tuple(gains))


@st.composite
def switchings(draw, n, order):
    return Switching(tuple(draw(st.lists(gain_in(order), min_size=n, max_size=n))))
