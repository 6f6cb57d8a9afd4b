"""Brute-force references for testing.

Nothing here calls the code it is meant to check: switching equivalence is
decided by exhaustive search in integer arithmetic, and eigenvalues come
from the characteristic polynomial by cofactor expansion and bisection.
Both are exponential and meant for small inputs only.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .gains import UnitGain
from .graphcore import GainGraph, Switching

__all__ = [
    "ENUMERATION_LIMIT",
    "MAX_CHARPOLY_DIM",
    "brute_force_switching",
    "charpoly",
    "charpoly_eigenvalues",
]

ENUMERATION_LIMIT = 10**6
MAX_CHARPOLY_DIM = 6


def brute_force_switching(phi1: GainGraph, phi2: GainGraph, order: int) -> Optional[Switching]:
    """First switching function ``V -> mu_order`` carrying ``phi1`` to ``phi2``, or ``None``.

    Functions are tried in lexicographic order of their turn numerators, so
    the identity comes first.
    """
    n = phi1.n
    count = order ** n
    if count > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration needs {count} switching functions, limit is {ENUMERATION_LIMIT}")
    if phi1.graph != phi2.graph:
        raise ValueError("gain graphs have different underlying graphs")
    # common denominator so every gain is an integer mod L
    L = order
    for g in phi1.gains + phi2.gains:
        L = math.lcm(L, g.turns.denominator)
    step = L // order
    g1 = [int(g.turns * L) for g in phi1.gains]
    g2 = [int(g.turns * L) for g in phi2.gains]
    edges = phi1.graph.edges
    for z in product(range(order), repeat=n):
        for (a, b), x, y in zip(edges, g1, g2):
            if (x - z[a] * step + z[b] * step - y) % L:
                break
        else:
            return Switching(tuple(UnitGain(Fraction(k, order)) for k in z))
    return None


def _det_poly(entries: list[list[np.ndarray]]) -> np.ndarray:
    """Determinant of a matrix of polynomials, by expansion along the first row."""
    k = len(entries)
    if k == 1:
        return entries[0][0]
    total = np.zeros(1, dtype=complex)
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = P.polymul(entries[0][j], _det_poly(minor))
        total = P.polyadd(total, term) if j % 2 == 0 else P.polysub(total, term)
    return total


def charpoly(M: np.ndarray) -> np.ndarray:
    """Coefficients of ``det(M - x I)``, lowest degree first."""
    M = np.asarray(M, dtype=complex)
    k = M.shape[0]
    entries = [
        [np.array([M[i, j], -1.0]) if i == j else np.array([M[i, j]]) for j in range(k)]
        for i in range(k)
    ]
    coeffs = _det_poly(entries)
    out = np.zeros(k + 1, dtype=complex)
    out[: len(coeffs)] = coeffs
    return out


def _real_roots(coeffs: np.ndarray, lo: float, hi: float) -> list[float]:
    """Roots in ``[lo, hi]`` of a real-rooted polynomial (lowest degree first).

    Roots of the derivative interlace those of the polynomial, so between
    consecutive critical points the polynomial is monotone and holds
    exactly one root.  A repeated root sits on a critical point.
    """
    degree = len(coeffs) - 1
    if degree == 0:
        return []
    if degree == 1:
        return [-coeffs[0] / coeffs[1]]
    critical = _real_roots(P.polyder(coeffs), lo, hi)
    bounds = [lo] + critical + [hi]
    roots = []
    for a, b in zip(bounds, bounds[1:]):
        fa, fb = P.polyval(a, coeffs), P.polyval(b, coeffs)
        if fa == 0.0 or fb == 0.0 or (fa > 0) == (fb > 0):
            roots.append(a if abs(fa) <= abs(fb) else b)
            continue
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            fm = P.polyval(mid, coeffs)
            if fm == 0.0:
                a = b = mid
                break
            if (fm > 0) == (fa > 0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    return roots


def charpoly_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a small Hermitian matrix from its characteristic polynomial."""
    M = np.asarray(M, dtype=complex)
    k = M.shape[0]
    if k > MAX_CHARPOLY_DIM:
        raise ValueError(f"dimension {k} exceeds the oracle limit of {MAX_CHARPOLY_DIM}")
    if k == 0:
        return np.zeros(0)
    coeffs = charpoly(M)
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    if float(np.max(np.abs(coeffs.imag))) > 1e-9 * scale:
        raise ValueError("characteristic polynomial has complex coefficients; input not Hermitian")
    # spectral radius is at most the max absolute row sum
    radius = float(np.max(np.sum(np.abs(M), axis=1))) + 1.0
    return np.sort(np.array(_real_roots(coeffs.real, -radius, radius)))
