"""
Rotors, rotation of multivectors and the coplanar parallel-transport setup.

Convention: a rotor ``R = cos(w) + B sin(w)`` with unit bivector ``B = I c``
acts as ``G -> reverse(R) G R`` and turns vectors by ``2 w`` about the axis
``c`` (right-handed).  To rotate by an angle ``theta`` use ``w = theta / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParallelVectorsError
from .ga_core import (
    I,
    ONE,
    Multivector,
    Vector3,
    as_multivector,
    cross,
    geometric_product,
    grade_project,
    hodge_dual,
    reverse,
    unit_vector,
    wedge,
)

PARALLEL_TOL = 1e-9
UNIT_TOL = 1e-9


@dataclass(frozen=True)
class Rotor:
    value: Multivector

    def __post_init__(self):
        odd = grade_project(self.value, 1) + grade_project(self.value, 3)
        if odd.norm() > 1e-12:
            raise DomainError("a rotor has no odd-grade part")
        unit = geometric_product(self.value, reverse(self.value))
        if not unit.isclose(ONE, 1e-9):
            raise DomainError(f"rotor is not unit: R R~ = {unit}")

    def __mul__(self, other: Rotor) -> Rotor:
        return Rotor(geometric_product(self.value, other.value))

    @property
    def reverse(self) -> Multivector:
        return reverse(self.value)


IDENTITY_ROTOR = Rotor(ONE)


def rotor_from(bivector: Multivector, omega: float) -> Rotor:
    """cos(omega) + bivector sin(omega) for a unit bivector."""
    bivector = as_multivector(bivector)
    if bivector.grades(1e-15) - {2}:
        raise DomainError("rotor generator must be a pure bivector")
    if abs(bivector.norm() - 1.0) > UNIT_TOL:
        raise DomainError(f"rotor generator must have unit norm, got {bivector.norm()!r}")
    return Rotor(math.cos(omega) * ONE + math.sin(omega) * bivector)


def sin_between(m: Vector3, n: Vector3) -> float:
    return cross(m, n).norm() / (m.norm() * n.norm())


def unit_bivector_between(m: Vector3, n: Vector3) -> Multivector:
    """(m ^ n) normalized by its own magnitude.

    Raises ParallelVectorsError when |sin(angle)| < 1e-9.  Above that
    threshold the magnitude of the result is 1 no matter how small the
    angle: numerator and denominator shrink together.
    """
    if sin_between(m, n) < PARALLEL_TOL:
        raise ParallelVectorsError("m and n are parallel; they span no plane")
    b = wedge(m, n)
    return b / b.norm()


def rotate(g, r: Rotor) -> Multivector:
    return geometric_product(geometric_product(r.reverse, as_multivector(g)), r.value)


def rotor_about(axis: Vector3, angle: float) -> Rotor:
    """Rotor turning vectors by ``angle`` about ``axis`` (half-angle form)."""
    c = axis.normalized()
    return rotor_from(hodge_dual(c), angle / 2.0)


def _orthogonal_unit(c: Vector3) -> Vector3:
    # project the basis vector least aligned with c; it is at least ~55 degrees
    # off c, so the subtraction never cancels catastrophically
    c_arr = c.as_array()
    e = np.eye(3)[int(np.argmin(np.abs(c_arr)))]
    return unit_vector(*(e - (e @ c_arr) * c_arr))


def _turn(v: Vector3, c: Vector3, angle: float) -> Vector3:
    # v is orthogonal to unit c, so Rodrigues reduces to two terms
    w = cross(c, v)
    return Vector3.from_array(math.cos(angle) * v.as_array() + math.sin(angle) * w.as_array())


@dataclass(frozen=True)
class CoplanarConfig:
    """Four unit vectors in the plane orthogonal to ``normal``.

    ``a`` comes from Gram-Schmidt on the basis vector least aligned with
    the normal.  Turning about the normal: a' = a by eps*omega, b = a by
    omega and b' = b by eps*omega, so the pair (a, a') turned by omega is
    (b, b').
    """

    omega: float
    eps: float
    normal: Vector3 = Vector3(0.0, 0.0, 1.0)

    def __post_init__(self):
        if not 0.0 <= self.eps <= 1.0:
            raise DomainError(f"eps must lie in [0, 1], got {self.eps}")
        object.__setattr__(self, "normal", self.normal.normalized())

    @property
    def a(self) -> Vector3:
        return _orthogonal_unit(self.normal)

    @property
    def a_prime(self) -> Vector3:
        return _turn(self.a, self.normal, self.eps * self.omega)

    @property
    def b(self) -> Vector3:
        return _turn(self.a, self.normal, self.omega)

    @property
    def b_prime(self) -> Vector3:
        return _turn(self.a, self.normal, self.omega + self.eps * self.omega)

    @property
    def vectors(self) -> tuple[Vector3, Vector3, Vector3, Vector3]:
        return self.a, self.a_prime, self.b, self.b_prime

    @property
    def plane(self) -> Multivector:
        """The unit bivector I c of the common plane."""
        return hodge_dual(self.normal)


def composition_decomposition(cfg: CoplanarConfig) -> tuple[Rotor, Rotor, Rotor]:
    """Split the rotor of angle omega into the a->a' and a'->b factors.

    Both factors use the plane bivector of the configuration, so the split
    is valid at eps = 0 where a = a'.  The product is the full rotor
    cos(omega) + B sin(omega), bivector part included.
    """
    plane = cfg.plane
    r_aa = rotor_from(plane, cfg.eps * cfg.omega)
    r_ab = rotor_from(plane, (1.0 - cfg.eps) * cfg.omega)
    return r_aa, r_ab, r_aa * r_ab


def truncated_limit(cfg: CoplanarConfig) -> Multivector:
    """The composite rotor with its bivector part dropped (the invalid limit)."""
    _, _, product = composition_decomposition(cfg)
    return grade_project(product.value, 0)


def transport_rotor(cfg: CoplanarConfig) -> Rotor:
    """cos(theta_ab/2) + (I c) sin(theta_ab/2), taking a to b."""
    return rotor_from(cfg.plane, cfg.omega / 2.0)


def beable_pair(u: Vector3, u_prime: Vector3, mu_sign: int) -> Multivector:
    """(I u)(mu u') with mu = mu_sign * I."""
    return geometric_product(geometric_product(I, u), geometric_product(float(mu_sign) * I, u_prime))


def parallel_transport_check(cfg: CoplanarConfig, mu_sign: int) -> Multivector:
    """Transport (I a)(mu a') to Bob's side with the a->b rotor.

    The pair's bivector lies in the plane I c, which commutes with the rotor,
    so the value comes back unchanged; at eps = 0 it is the scalar -mu_sign.
    """
    if mu_sign not in (1, -1):
        raise DomainError(f"mu sign must be +1 or -1, got {mu_sign}")
    return rotate(beable_pair(cfg.a, cfg.a_prime, mu_sign), transport_rotor(cfg))


def correct_rotor_axis(a: Vector3, a_prime: Vector3, b: Vector3, b_prime: Vector3) -> Vector3 | None:
    """Unit axis (a x a') x (b x b') of the rotor aligning the two planes.

    Returns None when the plane normals are parallel: the rotor is then the
    identity.
    """
    n1 = cross(a, a_prime)
    n2 = cross(b, b_prime)
    if sin_between(a, a_prime) < PARALLEL_TOL or sin_between(b, b_prime) < PARALLEL_TOL:
        raise ParallelVectorsError("a pair of analyzer vectors is parallel")
    n1, n2 = n1.normalized(), n2.normalized()
    axis = cross(n1, n2)
    if axis.norm() < PARALLEL_TOL:
        return None
    return axis.normalized()


def aligning_rotor(a: Vector3, a_prime: Vector3, b: Vector3, b_prime: Vector3) -> Rotor:
    """Rotor about the corrected axis taking the plane of (a, a') onto (b, b')."""
    n1 = cross(a, a_prime).normalized()
    n2 = cross(b, b_prime).normalized()
    axis = correct_rotor_axis(a, a_prime, b, b_prime)
    cos_phi = float(np.clip(n1.as_array() @ n2.as_array(), -1.0, 1.0))
    if axis is None:
        if cos_phi > 0:
            return IDENTITY_ROTOR
        # antiparallel normals: half turn about any direction inside plane 1
        return rotor_about(a, math.pi)
    return rotor_about(axis, math.acos(cos_phi))
