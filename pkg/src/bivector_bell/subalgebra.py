"""
The two even subalgebras of Cl(3,0) and their representations.

Both subalgebras span {1, e23, e31, e12}.  They differ in which bivectors are
taken as the basis units:

    Right:  B1 = e23,  B2 = e31,  B3 = e12      Bi Bj = -d_ij - eps_ijk Bk
    Left:   B1 = -e23, B2 = -e31, B3 = -e12     Bi Bj = -d_ij + eps_ijk Bk

Left is the reversion (adjoint) of Right.  An :class:`EvenElement` carries its
flavor, and any attempt to add or multiply elements of different flavors
raises :class:`MixedRepresentationError`: it is the algebraic equivalent of
adding a row vector to a column vector.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MixedRepresentationError
from .ga_core import (
    E1,
    E2,
    E3,
    E12,
    E23,
    E31,
    ONE,
    Multivector,
    geometric_product,
    reflect_axis,
    reverse,
)


class Flavor(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> Flavor:
        return Flavor.LEFT if self is Flavor.RIGHT else Flavor.RIGHT

    @property
    def bivector_sign(self) -> float:
        """Sign relating this flavor's B_i to the blades (e23, e31, e12)."""
        return 1.0 if self is Flavor.RIGHT else -1.0


Handedness = Flavor

_LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI_CIVITA[_i, _j, _k] = 1.0
    _LEVI_CIVITA[_i, _k, _j] = -1.0


def levi_civita() -> np.ndarray:
    return _LEVI_CIVITA.copy()


@dataclass(frozen=True)
class EvenElement:
    """c0 + c1 B1 + c2 B2 + c3 B3 in the given flavor."""

    flavor: Flavor
    coeffs: tuple[float, float, float, float]

    def __post_init__(self):
        values = tuple(float(c) for c in self.coeffs)
        if len(values) != 4:
            raise ValueError(f"expected 4 coefficients, got {len(values)}")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def basis(cls, flavor: Flavor, index: int) -> EvenElement:
        """Unit element: index 0 is the identity, 1..3 are B1..B3."""
        c = [0.0, 0.0, 0.0, 0.0]
        c[index] = 1.0
        return cls(flavor, tuple(c))

    @property
    def scalar(self) -> float:
        return self.coeffs[0]

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs[1:])

    def embed(self) -> Multivector:
        s = self.flavor.bivector_sign
        c0, c1, c2, c3 = self.coeffs
        return c0 * ONE + s * (c1 * E23 + c2 * E31 + c3 * E12)

    def _check(self, other):
        if not isinstance(other, EvenElement):
            return NotImplemented
        if other.flavor is not self.flavor:
            raise MixedRepresentationError(
                f"cannot combine {self.flavor.value} and {other.flavor.value} "
                "representation elements"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return EvenElement(self.flavor, tuple(np.add(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return EvenElement(self.flavor, tuple(np.subtract(self.coeffs, other.coeffs)))

    def __neg__(self):
        return EvenElement(self.flavor, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return EvenElement(self.flavor, tuple(c * other for c in self.coeffs))
        return even_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return EvenElement(self.flavor, tuple(c * other for c in self.coeffs))
        return NotImplemented

    def isclose(self, other: EvenElement, tol: float = 1e-12) -> bool:
        return other.flavor is self.flavor and bool(
            np.max(np.abs(np.subtract(self.coeffs, other.coeffs))) <= tol
        )


def right(c0=0.0, c1=0.0, c2=0.0, c3=0.0) -> EvenElement:
    return EvenElement(Flavor.RIGHT, (c0, c1, c2, c3))


def left(c0=0.0, c1=0.0, c2=0.0, c3=0.0) -> EvenElement:
    return EvenElement(Flavor.LEFT, (c0, c1, c2, c3))


def even_product(x: EvenElement, y: EvenElement) -> EvenElement:
    """Product from the flavor's own structure constants.

    Uses Bi Bj = -d_ij -/+ eps_ijk Bk directly; the geometric product of the
    embeddings is never consulted here.
    """
    if not isinstance(x, EvenElement) or not isinstance(y, EvenElement):
        raise TypeError("even_product expects two EvenElement values")
    if x.flavor is not y.flavor:
        raise MixedRepresentationError(
            f"cannot multiply {x.flavor.value} by {y.flavor.value} representation element"
        )
    eps_sign = -1.0 if x.flavor is Flavor.RIGHT else 1.0
    x0, xv = x.scalar, x.vector
    y0, yv = y.scalar, y.vector
    scalar = x0 * y0 - float(xv @ yv)
    vec = x0 * yv + y0 * xv + eps_sign * np.einsum("i,j,ijk->k", xv, yv, _LEVI_CIVITA)
    return EvenElement(x.flavor, (scalar, *vec))


def triple_product(flavor: Flavor) -> float:
    """B1 B2 B3 in the given flavor, evaluated through even_product."""
    b1, b2, b3 = (EvenElement.basis(flavor, i) for i in (1, 2, 3))
    result = even_product(even_product(b1, b2), b3)
    if np.any(np.abs(result.vector) > 1e-12):
        raise ArithmeticError(f"triple product is not a scalar: {result}")
    return result.scalar


def adjoint(x: EvenElement) -> EvenElement:
    """Reversion: same coefficients, opposite flavor (B_R^dagger = B_L)."""
    return EvenElement(x.flavor.other, x.coeffs)


def to_right(x: EvenElement) -> EvenElement:
    """Re-express ``x`` on the Right basis using B_L = -B_R."""
    if x.flavor is Flavor.RIGHT:
        return x
    c0, c1, c2, c3 = x.coeffs
    return right(c0, -c1, -c2, -c3)


# --- 2x2 complex matrix, ket and bra representations -------------------------

_SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)

MATRIX_TABLE = {
    Flavor.LEFT: (
        np.array([[1j, 0], [0, -1j]]),
        np.array([[0, -1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [-1j, 0]]),
    ),
    Flavor.RIGHT: (
        np.array([[-1j, 0], [0, 1j]]),
        np.array([[0, 1], [-1, 0]], dtype=complex),
        np.array([[0, 1j], [1j, 0]]),
    ),
}


def pauli() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return _SIGMA1.copy(), _SIGMA2.copy(), _SIGMA3.copy()


def to_matrix(x: EvenElement) -> np.ndarray:
    """Linear extension of the explicit basis table (a 2x2 complex array)."""
    m = x.scalar * IDENTITY2
    for c, basis in zip(x.vector, MATRIX_TABLE[x.flavor]):
        m = m + c * basis
    return m


def matrix_adjoint_check(x: EvenElement, tol: float = 1e-12) -> bool:
    """True iff to_matrix(x)^dagger equals to_matrix(adjoint(x))."""
    lhs = to_matrix(x).conj().T
    rhs = to_matrix(adjoint(x))
    return bool(np.max(np.abs(lhs - rhs)) <= tol)


@dataclass(frozen=True)
class Ket2:
    """Column-shaped pair of complex numbers."""

    top: complex
    bottom: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.top, self.bottom], dtype=complex)

    @property
    def dagger(self) -> Bra2:
        return Bra2(np.conj(self.top), np.conj(self.bottom))


@dataclass(frozen=True)
class Bra2:
    """Row-shaped pair of complex numbers."""

    first: complex
    second: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.first, self.second], dtype=complex)

    @property
    def dagger(self) -> Ket2:
        return Ket2(np.conj(self.first), np.conj(self.second))


def ket(x: EvenElement) -> Ket2:
    """First column of the Left matrix; kets exist for the Left algebra only."""
    if x.flavor is not Flavor.LEFT:
        raise MixedRepresentationError("kets represent the left algebra")
    col = to_matrix(x)[:, 0]
    return Ket2(complex(col[0]), complex(col[1]))


def bra(x: EvenElement) -> Bra2:
    """First row of the Right matrix; bras exist for the Right algebra only."""
    if x.flavor is not Flavor.RIGHT:
        raise MixedRepresentationError("bras represent the right algebra")
    row = to_matrix(x)[0, :]
    return Bra2(complex(row[0]), complex(row[1]))


def ket_matrix(k: Ket2) -> np.ndarray:
    """Rebuild the Left matrix from its first column (Cayley-Dickson pair)."""
    z1, z2 = k.top, k.bottom
    return np.array([[z1, -np.conj(z2)], [z2, np.conj(z1)]], dtype=complex)


def bra_matrix(b: Bra2) -> np.ndarray:
    w1, w2 = b.first, b.second
    return np.array([[w1, w2], [-np.conj(w2), np.conj(w1)]], dtype=complex)


def ket_product(k1: Ket2, k2: Ket2) -> Ket2:
    col = ket_matrix(k1) @ k2.as_array()
    return Ket2(complex(col[0]), complex(col[1]))


def bra_product(b1: Bra2, b2: Bra2) -> Bra2:
    row = b1.as_array() @ bra_matrix(b2)
    return Bra2(complex(row[0]), complex(row[1]))


# --- the four algebra x handedness basis classes -----------------------------


@dataclass(frozen=True)
class HandedBasisClass:
    algebra: Flavor
    handedness: Handedness
    frame: tuple[Multivector, Multivector, Multivector]
    basis: tuple[Multivector, Multivector, Multivector, Multivector]

    @property
    def pseudoscalar(self) -> Multivector:
        f1, f2, f3 = self.frame
        return geometric_product(geometric_product(f1, f2), f3)


def handed_basis(algebra: Flavor, handedness: Handedness) -> HandedBasisClass:
    """Build one of the four basis classes from the fixed right-handed frame.

    A left-handed frame is obtained by mirroring e2.  The right algebra uses
    the cyclic products (f2 f3, f3 f1, f1 f2); the left algebra uses their
    reversions (f3 f2, f1 f3, f2 f1).
    """
    f1, f2, f3 = E1, E2, E3
    if handedness is Flavor.LEFT:
        f2 = -f2
    pairs = ((f2, f3), (f3, f1), (f1, f2))
    if algebra is Flavor.LEFT:
        pairs = tuple((q, p) for p, q in pairs)
    basis = (ONE,) + tuple(geometric_product(p, q) for p, q in pairs)
    return HandedBasisClass(algebra, handedness, (f1, f2, f3), basis)


PRINTED_HANDED_BASES = {
    (Flavor.RIGHT, Flavor.RIGHT): (ONE, E23, E31, E12),
    (Flavor.RIGHT, Flavor.LEFT): (ONE, -E23, E31, -E12),
    (Flavor.LEFT, Flavor.RIGHT): (ONE, -E23, -E31, -E12),
    (Flavor.LEFT, Flavor.LEFT): (ONE, E23, -E31, E12),
}


def triple_product_after_reflections(flavor: Flavor, axes: Sequence[int]) -> float:
    """B1 B2 B3 with every embedded B mirrored along each of ``axes`` in turn."""
    bs = []
    for i in (1, 2, 3):
        mv = EvenElement.basis(flavor, i).embed()
        for axis in axes:
            mv = reflect_axis(mv, axis)
        bs.append(mv)
    result = geometric_product(geometric_product(bs[0], bs[1]), bs[2])
    return result.coeffs[0]


# --- complex numbers as the even subalgebra of Cl(2,0) -----------------------


def left_real_matrix(z: complex) -> np.ndarray:
    return np.array([[z.real, -z.imag], [z.imag, z.real]])


def right_real_matrix(z: complex) -> np.ndarray:
    return np.array([[z.real, z.imag], [-z.imag, z.real]])


@dataclass(frozen=True)
class ComplexRepReport:
    expected: complex
    right_subalgebra: complex
    left_subalgebra: complex
    left_matrix: complex
    right_matrix: complex
    left_right_adjoint: bool
    agree: bool
    max_error: float


def complex_rep_demo(z1: tuple[float, float], z2: tuple[float, float], tol: float = 1e-12) -> ComplexRepReport:
    """Multiply two complex numbers in four representations and compare.

    The subalgebras {1, e1e2} and {1, -e1e2} are evaluated with the Cl(3,0)
    product; the matrix forms use 2x2 real matrices acting from the left on
    kets and from the right on bras.
    """
    a = complex(*z1)
    b = complex(*z2)
    expected = a * b

    results = {}
    for name, unit in (("right_subalgebra", E12), ("left_subalgebra", -E12)):
        za = a.real * ONE + a.imag * unit
        zb = b.real * ONE + b.imag * unit
        p = geometric_product(za, zb)
        results[name] = complex(p.coeffs[0], p.coeffs[6] * unit.coeffs[6])

    ml = left_real_matrix(a) @ left_real_matrix(b)
    results["left_matrix"] = complex(ml[0, 0], ml[1, 0])
    mr = right_real_matrix(a) @ right_real_matrix(b)
    results["right_matrix"] = complex(mr[0, 0], mr[0, 1])

    adj = bool(np.array_equal(left_real_matrix(a).T, right_real_matrix(a)))
    err = max(abs(v - expected) for v in results.values())
    return ComplexRepReport(
        expected=expected,
        left_right_adjoint=adj,
        agree=err <= tol,
        max_error=float(err),
        **results,
    )
