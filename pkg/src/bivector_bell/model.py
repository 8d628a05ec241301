"""
The mu = +/-I hidden-variable layer and discrete outcome models.

``beable_product`` is the honest computation of (mu a)(mu b); the two signs
of mu cancel, so the result is -a.b - a^b for either sign.  ``claimed_product``
is the faulty form -a.b - mu (a x b), which treats mu as if it could replace
I in the duality a^b = I (a x b).  Only the faulty form loses its bivector
under a fair-coin average over mu.  It is kept here so the verification
suite can exhibit the failure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .ga_core import (
    I,
    Multivector,
    Vector3,
    as_multivector,
    cross,
    dot,
    geometric_product,
    grade_project,
    wedge,
)
from .subalgebra import EvenElement, Flavor, even_product, levi_civita, to_right

UNIT_TOL = 1e-9


@dataclass(frozen=True)
class Mu:
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"mu sign must be +1 or -1, got {self.sign}")

    @property
    def mv(self) -> Multivector:
        return float(self.sign) * I


MU_PLUS = Mu(1)
MU_MINUS = Mu(-1)


@dataclass(frozen=True)
class BeableProduct:
    scalar_part: float
    bivector_part: Multivector

    @classmethod
    def from_multivector(cls, mv: Multivector, tol: float = 1e-12) -> BeableProduct:
        odd = grade_project(mv, 1) + grade_project(mv, 3)
        if odd.norm() > tol:
            raise DomainError(f"not an even multivector: {mv}")
        return cls(float(mv.coeffs[0]), grade_project(mv, 2))

    @property
    def multivector(self) -> Multivector:
        return self.scalar_part + self.bivector_part


def _require_unit(*vectors: Vector3) -> None:
    for v in vectors:
        if abs(v.norm() - 1.0) > UNIT_TOL:
            raise DomainError(f"expected a unit vector, got norm {v.norm()!r}")


def beable_product(a: Vector3, b: Vector3, mu: Mu) -> BeableProduct:
    _require_unit(a, b)
    mv = geometric_product(geometric_product(mu.mv, a), geometric_product(mu.mv, b))
    return BeableProduct.from_multivector(mv)


def claimed_product(a: Vector3, b: Vector3, mu: Mu) -> BeableProduct:
    """The faulty -a.b - mu (a x b): mu wrongly stands in for I."""
    _require_unit(a, b)
    mv = -dot(a, b) - geometric_product(mu.mv, cross(a, b))
    return BeableProduct.from_multivector(mv)


def corrected_handedness_product(a: Vector3, b: Vector3) -> BeableProduct:
    """-a.b - (-I)(-(a x b)): in a mirrored frame both I and a x b flip."""
    _require_unit(a, b)
    flipped_cross = -cross(a, b)
    mv = -dot(a, b) - geometric_product(-I, flipped_cross)
    return BeableProduct.from_multivector(mv)


def mu_average(f: Callable[[Mu], object]) -> Multivector:
    """Exact fair-coin average of ``f`` over mu = +I and mu = -I."""

    def value(mu):
        out = f(mu)
        return out.multivector if isinstance(out, BeableProduct) else as_multivector(out)

    return 0.5 * (value(MU_PLUS) + value(MU_MINUS))


# --- mu-factor parity ---------------------------------------------------------


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class MuExpression:
    """An integrand tagged only by the places where mu appears."""

    name: str
    factors: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.factors)


OUTCOME_EXPR = MuExpression("outcome average", ("mu.n", "d rho(mu)"))
CORRELATION_EXPR = MuExpression("correlation average", ("mu.a", "mu.b", "d rho(mu)"))


def mu_parity(expr: MuExpression) -> Parity:
    return Parity.ODD if expr.count % 2 else Parity.EVEN


def parity_average(expr: MuExpression, value_at_plus):
    """Average of an expression whose only mu dependence is its sign factors.

    Odd: the two signs cancel and the average is exactly zero.  Even: the
    sign factors square away and the mu = +1 value survives.
    """
    if mu_parity(expr) is Parity.ODD:
        return 0 * value_at_plus
    return value_at_plus


def parities_exclusive(first: MuExpression, second: MuExpression) -> bool:
    """True when at most one of the two averages can vanish identically."""
    return mu_parity(first) is not mu_parity(second)


# --- the lambda-dependent basis -----------------------------------------------


@dataclass(frozen=True)
class LambdaBasisReport:
    unknowns: tuple[str, ...]
    rank_single: dict[int, int]
    rank_joint: int
    betas_forced_zero: bool
    right_satisfies: dict[int, bool]
    left_satisfies: dict[int, bool]
    flavor_correct_total: Multivector
    single_step_total: Multivector
    expected_total: Multivector


def _lambda_constraints(lam: int) -> tuple[np.ndarray, list[str]]:
    """Rows of  p_jk + lam * eps_jkl * beta_l = 0  for j != k.

    The nine unknowns are the three betas and the six ordered products
    p_jk = beta_j beta_k, treated as independent symbols.
    """
    eps = levi_civita()
    pairs = [(j, k) for j in range(3) for k in range(3) if j != k]
    names = [f"beta{l + 1}" for l in range(3)] + [f"p{j + 1}{k + 1}" for j, k in pairs]
    rows = []
    for idx, (j, k) in enumerate(pairs):
        row = np.zeros(9)
        row[3 + idx] = 1.0
        row[:3] = lam * eps[j, k, :]
        rows.append(row)
    return np.array(rows), names


def _satisfies(bivectors: Sequence[Multivector], lam: int) -> bool:
    eps = levi_civita()
    for j in range(3):
        for k in range(3):
            lhs = geometric_product(bivectors[j], bivectors[k])
            rhs = Multivector.scalar(-1.0 if j == k else 0.0)
            for l in range(3):
                rhs = rhs - lam * eps[j, k, l] * bivectors[l]
            if not lhs.isclose(rhs, 1e-12):
                return False
    return True


def flavor_correct_total(a: Vector3, b: Vector3) -> Multivector:
    """Fair-coin average of (sum a_j B_j)(sum b_k B_k) with each lambda kept in its own algebra.

    lambda = +1 is evaluated in the Right algebra and lambda = -1 in the
    Left algebra, each with its own structure constants; the Left result is
    converted with B_L = -B_R before the two are added.
    """
    totals = []
    for flavor in (Flavor.RIGHT, Flavor.LEFT):
        x = EvenElement(flavor, (0.0, a.x, a.y, a.z))
        y = EvenElement(flavor, (0.0, b.x, b.y, b.z))
        totals.append(to_right(even_product(x, y)).embed())
    return 0.5 * (totals[0] + totals[1])


def single_step_total(a: Vector3, b: Vector3) -> Multivector:
    """The same average with lambda substituted into one fixed basis.

    Each term is -a.b - lam eps_jkl a_j b_k beta_l with beta = B_R for both
    values of lambda, so the bivector cancels.
    """
    c = cross(a, b)
    betas = EvenElement(Flavor.RIGHT, (0.0, c.x, c.y, c.z)).embed()
    terms = [-dot(a, b) - lam * betas for lam in (1, -1)]
    return 0.5 * (terms[0] + terms[1])


def lambda_basis_contradiction(
    a: Vector3 = Vector3(1.0, 0.0, 0.0),
    b: Vector3 = Vector3(0.6, 0.8, 0.0),
) -> LambdaBasisReport:
    m_plus, names = _lambda_constraints(1)
    m_minus, _ = _lambda_constraints(-1)
    joint = np.vstack([m_plus, m_minus])
    rank_joint = int(np.linalg.matrix_rank(joint))
    # full column rank of the joint homogeneous system: only the zero solution
    forced_zero = rank_joint == joint.shape[1]

    b_right = [EvenElement.basis(Flavor.RIGHT, i).embed() for i in (1, 2, 3)]
    b_left = [EvenElement.basis(Flavor.LEFT, i).embed() for i in (1, 2, 3)]
    return LambdaBasisReport(
        unknowns=tuple(names),
        rank_single={1: int(np.linalg.matrix_rank(m_plus)), -1: int(np.linalg.matrix_rank(m_minus))},
        rank_joint=rank_joint,
        betas_forced_zero=forced_zero,
        right_satisfies={lam: _satisfies(b_right, lam) for lam in (1, -1)},
        left_satisfies={lam: _satisfies(b_left, lam) for lam in (1, -1)},
        flavor_correct_total=flavor_correct_total(a, b),
        single_step_total=single_step_total(a, b),
        expected_total=-dot(a, b) - wedge(a, b),
    )


# --- discrete outcome models --------------------------------------------------


class Side(enum.Enum):
    ALICE = "alice"
    BOB = "bob"


@dataclass(frozen=True)
class HiddenStates:
    """A batch of hidden states; each model reads the fields it needs."""

    mu_sign: np.ndarray | None = None
    direction: np.ndarray | None = None

    def __len__(self):
        arr = self.mu_sign if self.mu_sign is not None else self.direction
        return 0 if arr is None else len(arr)


def _signs(x: np.ndarray) -> np.ndarray:
    # ties resolve to +1
    return np.where(x >= 0.0, 1, -1).astype(np.int8)


@dataclass(frozen=True)
class ChristianBivector:
    """Outcome -mu at both stations, whatever the analyzer direction."""

    name: str = field(default="christian-bivector", init=False)

    def sample(self, rng: np.random.Generator, n: int) -> HiddenStates:
        return HiddenStates(mu_sign=np.where(rng.random(n) < 0.5, 1, -1).astype(np.int8))

    def outcomes(self, direction: Vector3, hidden: HiddenStates, side: Side) -> np.ndarray:
        return (-hidden.mu_sign).astype(np.int8)


@dataclass(frozen=True)
class LocalSign:
    """Shared uniform unit vector h; Alice reports sgn(a.h), Bob -sgn(b.h)."""

    name: str = field(default="local-sign", init=False)

    def sample(self, rng: np.random.Generator, n: int) -> HiddenStates:
        g = rng.standard_normal((n, 3))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        return HiddenStates(direction=g)

    def outcomes(self, direction: Vector3, hidden: HiddenStates, side: Side) -> np.ndarray:
        s = _signs(hidden.direction @ direction.as_array())
        return s if side is Side.ALICE else -s


OutcomeModel = ChristianBivector | LocalSign

MODELS: dict[str, Callable[[], OutcomeModel]] = {
    "local-sign": LocalSign,
    "christian-bivector": ChristianBivector,
}


def outcome(model: OutcomeModel, direction: Vector3, hidden, side: Side = Side.ALICE) -> int:
    """Single-trial outcome (+1 or -1).

    ``hidden`` is a mu sign for ChristianBivector and a unit Vector3 for
    LocalSign; HiddenStates batches go through ``model.outcomes``.
    """
    _require_unit(direction)
    if isinstance(model, ChristianBivector):
        states = HiddenStates(mu_sign=np.array([Mu(int(hidden)).sign], dtype=np.int8))
    else:
        states = HiddenStates(direction=hidden.as_array()[None, :])
    return int(model.outcomes(direction, states, side)[0])
