"""
Dense arithmetic for the 8-dimensional real Clifford algebra Cl(3,0).

Multivectors are stored as 8 float64 coefficients over the blade basis

    index: 0   1   2   3   4    5    6    7
    blade: 1   e1  e2  e3  e23  e31  e12  e123

The bivector order (e23, e31, e12) is the cyclic one, so that e23 = I e1,
e31 = I e2 and e12 = I e3 with I = e1 e2 e3.

The multiplication table is not typed in by hand.  It is generated once at
import time from the two defining rules of the algebra: every e_i squares to
+1 and distinct e_i anticommute.  A product of two blades is written as a
string of generator letters, bubble sorted while tracking the swap parity,
and adjacent equal letters are contracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Iterable, Union

import numpy as np

from .errors import DomainError

BLADES: tuple[tuple[int, ...], ...] = (
    (),
    (1,),
    (2,),
    (3,),
    (2, 3),
    (3, 1),
    (1, 2),
    (1, 2, 3),
)
BLADE_NAMES = ("1", "e1", "e2", "e3", "e23", "e31", "e12", "e123")
GRADES = np.array([len(b) for b in BLADES])
_REVERSE_SIGNS = np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])


def _canonical(letters: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Sort a generator string into increasing order, contracting e_i e_i = 1.

    Returns the sorted, repeat-free letter tuple and the accumulated sign.
    """
    word = list(letters)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] == word[i + 1]:
                del word[i : i + 2]
                changed = True
            elif word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return tuple(word), sign


def _build_tables() -> tuple[np.ndarray, np.ndarray]:
    # stored blades may be non-sorted (e31), so map sorted form -> (index, sign)
    lookup = {}
    for idx, blade in enumerate(BLADES):
        key, sign = _canonical(blade)
        lookup[key] = (idx, sign)

    product = np.zeros((8, 8, 8))
    outer = np.zeros((8, 8, 8))
    for i, bi in enumerate(BLADES):
        for j, bj in enumerate(BLADES):
            key, sign = _canonical(bi + bj)
            k, stored_sign = lookup[key]
            product[i, j, k] = sign * stored_sign
            if GRADES[k] == GRADES[i] + GRADES[j]:
                outer[i, j, k] = sign * stored_sign
    return product, outer


PRODUCT_TABLE, OUTER_TABLE = _build_tables()


class Multivector:
    """An immutable element of Cl(3,0).

    Supports ``+``, ``-``, scalar ``*`` and ``/``, and the geometric product
    via ``*`` between multivectors (or vectors).
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float] | None = None):
        c = np.zeros(8) if coeffs is None else np.array(coeffs, dtype=float)
        if c.shape != (8,):
            raise ValueError(f"expected 8 coefficients, got shape {c.shape}")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def scalar(cls, value: float) -> Multivector:
        c = np.zeros(8)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, index: int, value: float = 1.0) -> Multivector:
        c = np.zeros(8)
        c[index] = value
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, index: Union[int, str]) -> float:
        if isinstance(index, str):
            index = BLADE_NAMES.index(index)
        return float(self._c[index])

    def __add__(self, other):
        other = as_multivector(other)
        return Multivector(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_multivector(other)
        return Multivector(self._c - other._c)

    def __rsub__(self, other):
        return as_multivector(other) - self

    def __neg__(self):
        return Multivector(-self._c)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Multivector(self._c * float(other))
        return geometric_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return Multivector(self._c * float(other))
        return geometric_product(other, self)

    def __truediv__(self, other):
        if not isinstance(other, Real):
            return NotImplemented
        return Multivector(self._c / float(other))

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other, tol: float = 1e-12) -> bool:
        """Max-abs-coefficient comparison."""
        return self.max_abs_diff(other) <= tol

    def max_abs_diff(self, other) -> float:
        other = as_multivector(other)
        return float(np.max(np.abs(self._c - other._c)))

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.linalg.norm(self._c))

    def grades(self, tol: float = 0.0) -> set[int]:
        return {int(g) for g in GRADES[np.abs(self._c) > tol]}

    def __repr__(self):
        return f"Multivector({list(self._c)!r})"

    def __str__(self):
        parts = []
        for value, name in zip(self._c, BLADE_NAMES):
            mag = format(abs(value), ".12g")
            term = mag if name == "1" else f"{mag} {name}"
            if not parts:
                parts.append(f"-{term}" if value < 0 else term)
            else:
                parts.append(f"- {term}" if value < 0 else f"+ {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class Vector3:
    """A direction in the fixed frame {e1, e2, e3}."""

    x: float
    y: float
    z: float

    @property
    def mv(self) -> Multivector:
        return Multivector([0.0, self.x, self.y, self.z, 0.0, 0.0, 0.0, 0.0])

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, values) -> Vector3:
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> Vector3:
        return unit_vector(self.x, self.y, self.z)

    def __add__(self, other: Vector3) -> Vector3:
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vector3) -> Vector3:
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vector3:
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Real):
            k = float(other)
            return Vector3(self.x * k, self.y * k, self.z * k)
        return geometric_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return geometric_product(other, self)


def unit_vector(x: float, y: float, z: float) -> Vector3:
    n = float(np.linalg.norm([x, y, z]))
    if n == 0.0:
        raise DomainError("cannot normalize the zero vector")
    return Vector3(x / n, y / n, z / n)


@dataclass(frozen=True)
class Pseudoscalar:
    """The unit trivector with an explicit sign, +I or -I."""

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"pseudoscalar sign must be +1 or -1, got {self.sign}")

    @property
    def mv(self) -> Multivector:
        return Multivector.blade(7, float(self.sign))


ONE = Multivector.blade(0)
E1 = Multivector.blade(1)
E2 = Multivector.blade(2)
E3 = Multivector.blade(3)
E23 = Multivector.blade(4)
E31 = Multivector.blade(5)
E12 = Multivector.blade(6)
I = Multivector.blade(7)

X_AXIS = Vector3(1.0, 0.0, 0.0)
Y_AXIS = Vector3(0.0, 1.0, 0.0)
Z_AXIS = Vector3(0.0, 0.0, 1.0)


def as_multivector(value) -> Multivector:
    if isinstance(value, Multivector):
        return value
    if isinstance(value, (Vector3, Pseudoscalar)):
        return value.mv
    if isinstance(value, Real):
        return Multivector.scalar(float(value))
    raise TypeError(f"cannot interpret {type(value).__name__} as a multivector")


def geometric_product(u, v) -> Multivector:
    u, v = as_multivector(u), as_multivector(v)
    return Multivector(np.einsum("i,j,ijk->k", u.coeffs, v.coeffs, PRODUCT_TABLE))


def dot(a: Vector3, b: Vector3) -> float:
    """Scalar product, computed as the scalar part of (ab + ba)/2."""
    ab = geometric_product(a, b)
    ba = geometric_product(b, a)
    return 0.5 * (ab.coeffs[0] + ba.coeffs[0])


def wedge(u, v) -> Multivector:
    """Outer product: the grade-raising part of the blade-by-blade product."""
    u, v = as_multivector(u), as_multivector(v)
    return Multivector(np.einsum("i,j,ijk->k", u.coeffs, v.coeffs, OUTER_TABLE))


def grade_project(u, k: int) -> Multivector:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be one of 0..3, got {k!r}")
    u = as_multivector(u)
    return Multivector(np.where(GRADES == k, u.coeffs, 0.0))


def reverse(u) -> Multivector:
    u = as_multivector(u)
    return Multivector(u.coeffs * _REVERSE_SIGNS)


def hodge_dual(u) -> Multivector:
    """Left multiplication by I; exchanges vectors with bivectors."""
    return geometric_product(I, u)


def cross(a: Vector3, b: Vector3) -> Vector3:
    """Right-handed cross product in the fixed frame."""
    return Vector3(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )


def reflect_axis(u, axis: int) -> Multivector:
    """Mirror the frame in the hyperplane orthogonal to e_axis (e_axis -> -e_axis).

    Every blade containing e_axis flips sign.  This is an algebra
    automorphism, so it commutes with the geometric product.
    """
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    u = as_multivector(u)
    signs = np.array([-1.0 if axis in blade else 1.0 for blade in BLADES])
    return Multivector(u.coeffs * signs)


def reflect_vector(a: Vector3, axis: int) -> Vector3:
    """Vector counterpart of :func:`reflect_axis`."""
    values = a.as_array()
    values[axis - 1] = -values[axis - 1]
    return Vector3.from_array(values)


def vector_part(u) -> Vector3:
    """The grade-1 coefficients of ``u`` as a Vector3."""
    c = as_multivector(u).coeffs
    return Vector3(float(c[1]), float(c[2]), float(c[3]))
