"""Per-instance checks of the incidence identity and line-graph spectra."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphcore import GainGraph, random_switching, switch
from .orientation import (DEFAULT_CIRCLE_ORDER, associated_gain_graph, default_orientation,
                          random_orientation, switch_orientation)
from .spectra import (EIGEN_TOL, IDENTITY_TOL, check_bound, check_line_identity, gram_matrix,
                      oriented_line_spectrum)

__all__ = ["CheckResult", "run_checks", "DIAGONAL_TOL"]

DIAGONAL_TOL = 1e-14


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def run_checks(phi: GainGraph, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    og = random_orientation(phi, rng)
    results = []

    residual = check_line_identity(og)
    gram = gram_matrix(og)
    diag = float(np.max(np.abs(np.diag(gram) - 2.0))) if gram.size else 0.0
    results.append(CheckResult(
        "incidence-identity",
        residual <= IDENTITY_TOL and diag <= DIAGONAL_TOL,
        f"max residual {residual:.3e} (tol {IDENTITY_TOL:g}), diagonal deviation {diag:.3e} (tol {DIAGONAL_TOL:g})",
    ))

    holds, extremal = check_bound(phi)
    if phi.involution.turns == 0:
        what = "min line eigenvalue >= -2"
    else:
        what = "max line eigenvalue <= 2"
    shown = "none (no edges)" if extremal is None else f"{extremal:.12f}"
    results.append(CheckResult("eigenvalue-bound", holds, f"{what}; extremal {shown}"))

    order = phi.spec.finite_order() or DEFAULT_CIRCLE_ORDER
    zeta = random_switching(phi.n, order, rng)
    lhs = associated_gain_graph(phi.graph, switch_orientation(og, zeta).omega, phi.spec)
    rhs = switch(phi, zeta)
    results.append(CheckResult(
        "switched-orientation",
        lhs.gains == rhs.gains,
        "gains induced by the switched orientation equal the switched gains (exact)",
    ))

    first = oriented_line_spectrum(default_orientation(phi))
    second = oriented_line_spectrum(og)
    gap = float(np.max(np.abs(first - second))) if first.size else 0.0
    results.append(CheckResult(
        "orientation-independent-spectrum",
        gap <= EIGEN_TOL,
        f"max spectral difference {gap:.3e} between two orientations (tol {EIGEN_TOL:g})",
    ))
    return results
