"""Independent reference computations used to freeze expected values.

Nothing here imports the package's multiplication machinery.
"""

import math

import numpy as np

NAMES = ("1", "e1", "e2", "e3", "e23", "e31", "e12", "I")

# Worked out by hand from e_i e_i = 1 and e_i e_j = -e_j e_i.
# Row = left factor, column = right factor.
CAYLEY = {
    "1":   ("1", "e1", "e2", "e3", "e23", "e31", "e12", "I"),
    "e1":  ("e1", "1", "e12", "-e31", "I", "-e3", "e2", "e23"),
    "e2":  ("e2", "-e12", "1", "e23", "e3", "I", "-e1", "e31"),
    "e3":  ("e3", "e31", "-e23", "1", "-e2", "e1", "I", "e12"),
    "e23": ("e23", "I", "-e3", "e2", "-1", "-e12", "e31", "-e1"),
    "e31": ("e31", "e3", "I", "-e1", "e12", "-1", "-e23", "-e2"),
    "e12": ("e12", "-e2", "e1", "I", "-e31", "e23", "-1", "-e3"),
    "I":   ("I", "e23", "e31", "e12", "-e1", "-e2", "-e3", "-1"),
}


def table_entry(left: str, right: str) -> tuple[int, int]:
    """(sign, blade index) of left * right from the hand-written table."""
    entry = CAYLEY[left][NAMES.index(right)]
    sign = -1 if entry.startswith("-") else 1
    return sign, NAMES.index(entry.lstrip("-"))


def table_product(u, v) -> np.ndarray:
    """Brute-force double sum over the hand-written table."""
    out = np.zeros(8)
    for i, ni in enumerate(NAMES):
        for j, nj in enumerate(NAMES):
            sign, k = table_entry(ni, nj)
            out[k] += sign * u[i] * v[j]
    return out


def vec(x, y, z) -> np.ndarray:
    return np.array([0.0, x, y, z, 0.0, 0.0, 0.0, 0.0])


def rotation_matrix(axis, angle) -> np.ndarray:
    """Rodrigues formula, right-handed about ``axis``."""
    k = np.asarray(axis, dtype=float)
    k = k / np.linalg.norm(k)
    kx = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + math.sin(angle) * kx + (1 - math.cos(angle)) * kx @ kx


def fibonacci_sphere(n: int) -> np.ndarray:
    i = np.arange(n) + 0.5
    z = 1 - 2 * i / n
    r = np.sqrt(1 - z * z)
    phi = math.pi * (3 - math.sqrt(5)) * i
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def sign_model_correlation_by_quadrature(theta: float, n: int = 400_000) -> float:
    """E = mean of sgn(a.h) * (-sgn(b.h)) over a near-uniform lattice on the sphere."""
    h = fibonacci_sphere(n)
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([math.cos(theta), math.sin(theta), 0.0])
    sa = np.where(h @ a >= 0, 1, -1)
    sb = np.where(h @ b >= 0, 1, -1)
    return float(np.mean(sa * -sb))
