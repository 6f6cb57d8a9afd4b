"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``.
"""
from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest

from gaingraph import cli
from gaingraph.document import parse, serialize
from gaingraph.gains import IDENTITY, GroupSpec, UnitGain, inv, mul
from gaingraph.graphcore import (GainGraph, SimpleGraph, find_switching, random_gain_graph, random_switching,
                                 switch)
from gaingraph.linegraph import line_graph_oriented
from gaingraph.oracles import brute_force_switching, charpoly_eigenvalues
from gaingraph.orientation import (IncidencePhase, associated_gain_graph, random_orientation, switch_orientation,
                                   uniform_orientation)
from gaingraph.spectra import (EIGEN_TOL, IDENTITY_TOL, adjacency_matrix, check_line_identity, gram_matrix,
                               hermitian_eigenvalues, oriented_line_spectrum)

SEED = 20240517
ORDERS = (2, 4, 6, 8, 12)
INVOLUTIONS = ("0", "1/2")


@pytest.fixture
def report(capsys):
    def _report(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
        assert ok, detail
    return _report


def random_spec(rng):
    return GroupSpec.mu(int(rng.choice(ORDERS)), INVOLUTIONS[int(rng.integers(2))])


@pytest.fixture(scope="module")
def sweep():
    """200 oriented gain graphs, n in 2..8, p = 0.5, half with each involution."""
    rng = np.random.default_rng(SEED)
    out = []
    for k in range(200):
        spec = GroupSpec.mu(int(rng.choice(ORDERS)), INVOLUTIONS[k % 2])
        phi = random_gain_graph(int(rng.integers(2, 9)), spec, rng, p=0.5)
        out.append(random_orientation(phi, rng))
    return out


def test_criterion_1_incidence_identity(sweep, report):
    worst = worst_diag = 0.0
    for og in sweep:
        worst = max(worst, check_line_identity(og))
        gram = gram_matrix(og)
        if gram.size:
            worst_diag = max(worst_diag, float(np.max(np.abs(np.diag(gram) - 2.0))))
    ok = worst <= IDENTITY_TOL and worst_diag <= 1e-14
    report(1, "incidence identity", ok,
           f"{len(sweep)} graphs, max residual {worst:.2e} (<= 1e-10), max diagonal deviation {worst_diag:.2e} (<= 1e-14)")


def test_criterion_2_eigenvalue_bounds(sweep, report):
    top, bottom = -np.inf, np.inf
    counts = {"0": 0, "1/2": 0}
    for og in sweep:
        ev = oriented_line_spectrum(og)
        if ev.size == 0:
            continue
        if og.spec.involution.turns == 0:
            counts["0"] += 1
            bottom = min(bottom, float(ev[0]))
        else:
            counts["1/2"] += 1
            top = max(top, float(ev[-1]))
    ok = top <= 2 + 1e-8 and bottom >= -2 - 1e-8 and min(counts.values()) > 0
    report(2, "line-graph eigenvalue bounds", ok,
           f"s=-1: {counts['1/2']} graphs, max eigenvalue {top:.10f} (<= 2); "
           f"s=+1: {counts['0']} graphs, min eigenvalue {bottom:.10f} (>= -2)")


def test_criterion_3_line_graphs_of_switched_pairs(report):
    rng = np.random.default_rng(SEED + 3)
    failures = nontrivial = 0
    for _ in range(50):
        spec = random_spec(rng)
        phi = random_gain_graph(int(rng.integers(2, 8)), spec, rng, p=0.5)
        switched = switch(phi, random_switching(phi.n, spec.order, rng))
        a = line_graph_oriented(random_orientation(phi, rng)).phi
        b = line_graph_oriented(random_orientation(switched, rng)).phi
        nontrivial += a.gains != b.gains
        zeta = find_switching(a, b)
        if not zeta or switch(a, zeta) != b:
            failures += 1
    report(3, "switching-equivalent sources give switching-equivalent line graphs", failures == 0,
           f"50 pairs ({nontrivial} with differing representatives), {failures} failures, exact equality")


def _mu2_assignments(g):
    return [tuple(UnitGain(Fraction(b, 2)) for b in bits) for bits in product((0, 1), repeat=g.m)]


def test_criterion_4_switching_decision_vs_brute_force(report):
    exhaustive = disagreements = 0
    for s in INVOLUTIONS:
        spec = GroupSpec.mu(2, s)
        for n in range(1, 5):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = SimpleGraph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
                assigns = _mu2_assignments(g)
                for x in assigns:
                    for y in assigns:
                        p1, p2 = GainGraph(g, spec, x), GainGraph(g, spec, y)
                        exhaustive += 1
                        disagreements += bool(find_switching(p1, p2)) != (brute_force_switching(p1, p2, 2) is not None)

    rng = np.random.default_rng(SEED + 4)
    outcomes = {True: 0, False: 0}
    for k in range(200):
        spec = GroupSpec.mu(4, INVOLUTIONS[k % 2])
        phi = random_gain_graph(int(rng.integers(1, 6)), spec, rng, p=0.6)
        other = switch(phi, random_switching(phi.n, 4, rng))
        if k % 4 >= 2 and phi.m:
            # perturb one edge so that about half the instances are not equivalent
            e = int(rng.integers(phi.m))
            gains = list(other.gains)
            gains[e] = mul(gains[e], UnitGain(Fraction(int(rng.integers(1, 4)), 4)))
            other = other.with_gains(tuple(gains))
        truth = brute_force_switching(phi, other, 4) is not None
        outcomes[truth] += 1
        disagreements += bool(find_switching(phi, other)) != truth
    ok = disagreements == 0 and outcomes[True] > 0 and outcomes[False] > 0
    report(4, "switching decision agrees with brute force", ok,
           f"{exhaustive} exhaustive mu2 pairs (n <= 4) + 200 random mu4 pairs "
           f"({outcomes[True]} equivalent, {outcomes[False]} not), {disagreements} disagreements")


def test_criterion_5_switched_orientation(report):
    rng = np.random.default_rng(SEED + 5)
    failures = 0
    for _ in range(200):
        spec = random_spec(rng)
        phi = random_gain_graph(int(rng.integers(2, 9)), spec, rng, p=0.5)
        og = random_orientation(phi, rng)
        zeta = random_switching(phi.n, spec.order, rng)
        # switched phase built here, independently of switch_orientation
        omega = IncidencePhase({(v, e): mul(inv(zeta[v]), g) for (v, e), g in og.omega.items()})
        target = switch(phi, zeta)
        if associated_gain_graph(phi.graph, omega, spec) != target or switch_orientation(og, zeta).phi != target:
            failures += 1
    report(5, "switched orientation induces the switched gain graph", failures == 0,
           f"200 (orientation, switching) pairs, {failures} failures, exact equality")


def test_criterion_6_spectral_invariance(report):
    rng = np.random.default_rng(SEED + 6)
    worst_switch = worst_orient = 0.0
    for _ in range(100):
        spec = random_spec(rng)
        phi = random_gain_graph(int(rng.integers(2, 9)), spec, rng, p=0.5)
        switched = switch(phi, random_switching(phi.n, spec.order, rng))
        a = hermitian_eigenvalues(adjacency_matrix(phi))
        b = hermitian_eigenvalues(adjacency_matrix(switched))
        worst_switch = max(worst_switch, float(np.max(np.abs(a - b))))
        x = oriented_line_spectrum(random_orientation(phi, rng))
        y = oriented_line_spectrum(random_orientation(phi, rng))
        z = oriented_line_spectrum(random_orientation(switched, rng))
        if x.size:
            worst_orient = max(worst_orient, float(np.max(np.abs(x - y))), float(np.max(np.abs(x - z))))
    ok = worst_switch <= EIGEN_TOL and worst_orient <= EIGEN_TOL
    report(6, "spectra invariant under switching and orientation", ok,
           f"100 instances, max difference {worst_switch:.2e} under switching, "
           f"{worst_orient:.2e} for line graphs across orientations (<= 1e-8)")


def _random_hermitian(rng, n):
    X = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (X + X.conj().T) / 2


def test_criterion_7_eigensolver(report):
    rng = np.random.default_rng(SEED + 7)
    worst_oracle = 0.0
    for k in range(100):
        M = _random_hermitian(rng, 1 + k % 6)
        worst_oracle = max(worst_oracle, float(np.max(np.abs(hermitian_eigenvalues(M) - charpoly_eigenvalues(M)))))
    worst_identity = 0.0
    for n in (1, 2, 7, 13, 25, 38, 50):
        M = _random_hermitian(rng, n)
        ev = hermitian_eigenvalues(M)
        err = max(abs(ev.sum() - np.trace(M).real), abs(np.sum(ev**2) - np.linalg.norm(M) ** 2))
        worst_identity = max(worst_identity, err / n)
    ok = worst_oracle <= 1e-8 and worst_identity <= 1e-8
    report(7, "eigensolver validation", ok,
           f"100 matrices (dim <= 6) max gap to charpoly oracle {worst_oracle:.2e} (<= 1e-8); "
           f"trace/Frobenius up to dim 50 max error/n {worst_identity:.2e} (<= 1e-8)")


def test_criterion_8_uniform_orientation(report):
    rng = np.random.default_rng(SEED + 8)
    failures = 0
    for k in range(20):
        spec = GroupSpec.circle(INVOLUTIONS[k % 2])
        g = random_gain_graph(int(rng.integers(2, 9)), spec, rng, p=0.5).graph
        line = line_graph_oriented(uniform_orientation(g, spec)).phi
        if any(x != spec.involution for x in line.gains):
            failures += 1
    report(8, "uniform orientation gives uniform line-graph gains", failures == 0,
           f"20 graphs, {failures} with a line gain different from the involution")


def test_criterion_9_documents_and_cli(report, tmp_path, capsys):
    rng = np.random.default_rng(SEED + 9)
    mismatches = 0
    for _ in range(100):
        phi = random_gain_graph(int(rng.integers(0, 9)), random_spec(rng), rng, p=0.5)
        text = serialize(phi)
        mismatches += parse(text) != phi or serialize(parse(text)) != text
    bad_exits = []
    for seed in range(20):
        n = 2 + seed % 7
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        group = ("mu:4", "mu:6", "sign", "circle")[seed % 4]
        assert cli.main(["random", "--vertices", str(n), "--edges", str(m), "--group", group,
                         "--involution", INVOLUTIONS[seed % 2], "--seed", str(seed)]) == 0
        path = tmp_path / f"g{seed}.txt"
        path.write_text(capsys.readouterr().out)
        code = cli.main(["verify", str(path), "--seed", str(seed)])
        capsys.readouterr()
        if code != 0:
            bad_exits.append(seed)
    ok = mismatches == 0 and not bad_exits
    report(9, "document round trip and CLI verify", ok,
           f"100 documents, {mismatches} round-trip mismatches; 20 generated instances, "
           f"verify nonzero exits {bad_exits or 'none'}")
