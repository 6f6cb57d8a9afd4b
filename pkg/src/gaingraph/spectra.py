"""Adjacency and incidence matrices, and Hermitian eigenvalues.

Matrices are dense ``complex128`` numpy arrays and spectra are ascending
``float64`` arrays.  Eigenvalues come from :func:`jacobi_eigenvalues`, a
cyclic Jacobi solver applied to the real symmetric embedding

    [[Re H, -Im H],
     [Im H,  Re H]]

of a Hermitian ``H``; each eigenvalue of ``H`` appears twice in the
embedding.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .gains import to_complex
from .graphcore import GainGraph, Switching, switch
from .linegraph import line_graph_class, line_graph_oriented
from .orientation import OrientedGainGraph

__all__ = [
    "NotHermitianError",
    "ConvergenceError",
    "adjacency_matrix",
    "incidence_matrix",
    "gram_matrix",
    "hermitian_eigenvalues",
    "jacobi_eigenvalues",
    "check_line_identity",
    "line_spectrum",
    "oriented_line_spectrum",
    "check_bound",
    "spectrum_switching_invariance",
    "format_matrix",
    "parse_matrix",
    "HERMITIAN_TOL",
    "IDENTITY_TOL",
    "EIGEN_TOL",
]

HERMITIAN_TOL = 1e-12
IDENTITY_TOL = 1e-10
EIGEN_TOL = 1e-8
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    def __init__(self, asymmetry: float):
        super().__init__(f"matrix is not Hermitian: max |M - M*| = {asymmetry:.3e}")
        self.asymmetry = asymmetry


class ConvergenceError(RuntimeError):
    pass


def _z(g) -> complex:
    re, im = to_complex(g)
    return complex(re, im)


def adjacency_matrix(phi: GainGraph) -> np.ndarray:
    A = np.zeros((phi.n, phi.n), dtype=complex)
    for (a, b), g in zip(phi.graph.edges, phi.gains):
        z = _z(g)
        A[a, b] = z
        A[b, a] = z.conjugate()
    return A


def incidence_matrix(og: OrientedGainGraph) -> np.ndarray:
    H = np.zeros((og.graph.n, og.graph.m), dtype=complex)
    for (v, e), g in og.omega.items():
        H[v, e] = _z(g)
    return H


def gram_matrix(og: OrientedGainGraph) -> np.ndarray:
    """``H* H`` for the incidence matrix ``H`` of ``og``; an edge-by-edge matrix."""
    H = incidence_matrix(og)
    return H.conj().T @ H


def jacobi_eigenvalues(S: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all ``(p, q)`` pairs in row order until the off-diagonal
    Frobenius norm falls below ``tol * max(1, ||S||_F)``.  Returns the
    eigenvalues sorted ascending.
    """
    A = np.array(S, dtype=float, copy=True)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    threshold = tol * max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        # summed directly; subtracting the diagonal from the full norm stalls near sqrt(eps)
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off < threshold:
            return np.sort(np.diag(A).copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q]
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :]
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def hermitian_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Raises
    ------
    NotHermitianError
        If ``max |M - M*|`` exceeds ``HERMITIAN_TOL``.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    n = M.shape[0]
    asym = float(np.max(np.abs(M - M.conj().T))) if n else 0.0
    if asym > HERMITIAN_TOL:
        raise NotHermitianError(asym)
    re, im = M.real, M.imag
    S = np.block([[re, -im], [im, re]])
    S = 0.5 * (S + S.T)
    doubled = jacobi_eigenvalues(S)
    first, second = doubled[0::2], doubled[1::2]
    gap = float(np.max(np.abs(first - second))) if n else 0.0
    if gap > EIGEN_TOL:
        raise ValueError(f"real embedding did not pair eigenvalues (gap {gap:.3e}); input not Hermitian?")
    return 0.5 * (first + second)


def check_line_identity(og: OrientedGainGraph) -> float:
    """Max entrywise modulus of ``H* H - (2 I + s A(line graph))``."""
    lhs = gram_matrix(og)
    line = line_graph_oriented(og)
    s = _z(og.spec.involution).real
    rhs = 2.0 * np.eye(og.graph.m) + s * adjacency_matrix(line.phi)
    if lhs.size == 0:
        return 0.0
    return float(np.max(np.abs(lhs - rhs)))


def line_spectrum(phi: GainGraph) -> np.ndarray:
    """Spectrum of the line graph's adjacency matrix; orientation independent."""
    return hermitian_eigenvalues(adjacency_matrix(line_graph_class(phi)))


def oriented_line_spectrum(og: OrientedGainGraph) -> np.ndarray:
    return hermitian_eigenvalues(adjacency_matrix(line_graph_oriented(og).phi))


def check_bound(phi: GainGraph, tol: float = EIGEN_TOL) -> tuple[bool, Optional[float]]:
    """Check the line-graph eigenvalue bound for the graph's involution.

    With involution ``-1`` every line-graph eigenvalue is at most 2; with
    ``+1`` every one is at least -2.  Returns ``(holds, extremal)``, where
    ``extremal`` is the largest (resp. smallest) eigenvalue, or ``None``
    for an edgeless graph.
    """
    spectrum = line_spectrum(phi)
    if spectrum.size == 0:
        return True, None
    if phi.involution.turns == 0:
        lowest = float(spectrum[0])
        return lowest >= -2.0 - tol, lowest
    highest = float(spectrum[-1])
    return highest <= 2.0 + tol, highest


def spectrum_switching_invariance(phi: GainGraph, zeta: Switching) -> float:
    """Largest difference between the sorted spectra of ``A(phi)`` and ``A(phi^zeta)``."""
    before = hermitian_eigenvalues(adjacency_matrix(phi))
    after = hermitian_eigenvalues(adjacency_matrix(switch(phi, zeta)))
    if before.size == 0:
        return 0.0
    return float(np.max(np.abs(before - after)))


def format_matrix(M: np.ndarray) -> str:
    """Plain-text form: ``"rows cols"``, then one line per row of ``re+imi`` entries."""
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    rows, cols = M.shape
    lines = [f"{rows} {cols}"]
    for row in M:
        lines.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}i" for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    rows, cols = int(tokens[0]), int(tokens[1])
    entries = tokens[2:]
    if len(entries) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(entries)}")
    values = [complex(tok[:-1] + "j") if tok.endswith("i") else complex(tok) for tok in entries]
    return np.array(values, dtype=complex).reshape(rows, cols)
