"""
Monte Carlo estimation of E(a, b) and the CHSH combination.

Randomness is counter based.  Trials are grouped in fixed blocks of
``BLOCK_SIZE``; block ``k`` of angle pair ``p`` draws from a generator seeded
by ``SeedSequence(seed, spawn_key=(p, k))``.  A trial's hidden state thus
depends only on (seed, pair, trial index), never on how blocks are spread
over workers.  Outcome products are +/-1, so block sums are integers and
the reduction is exact in any order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .ga_core import Vector3, dot
from .model import OutcomeModel, Side

BLOCK_SIZE = 1 << 16
CLASSICAL_BOUND = 2.0


@dataclass(frozen=True)
class ExperimentConfig:
    model: OutcomeModel
    angle_pairs: tuple[tuple[Vector3, Vector3], ...]
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "angle_pairs", tuple(tuple(p) for p in self.angle_pairs))
        if int(self.trials) < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        for pair in self.angle_pairs:
            for v in pair:
                if abs(v.norm() - 1.0) > 1e-12:
                    raise DomainError(f"analyzer direction is not unit: {v}")


@dataclass(frozen=True)
class CorrelationEstimate:
    mean: float
    stderr: float
    trials: int


@dataclass(frozen=True)
class ChshResult:
    estimates: tuple[CorrelationEstimate, CorrelationEstimate, CorrelationEstimate, CorrelationEstimate]
    s: float
    stderr: float
    quantum_value: float
    classical_bound: float = CLASSICAL_BOUND


def planar(theta: float) -> Vector3:
    """Unit vector at angle ``theta`` in the e1 e2 plane."""
    return Vector3(math.cos(theta), math.sin(theta), 0.0)


def block_rng(seed: int, pair_index: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(int(seed) & (2**64 - 1), spawn_key=(pair_index, block))
    return np.random.Generator(np.random.Philox(ss))


def _block_sum(model, a: Vector3, b: Vector3, seed: int, pair_index: int, block: int, n: int,
               swap: bool) -> int:
    hidden = model.sample(block_rng(seed, pair_index, block), n)
    if swap:
        # Bob's apparatus at a, Alice's at b
        first = model.outcomes(a, hidden, Side.BOB)
        second = model.outcomes(b, hidden, Side.ALICE)
    else:
        first = model.outcomes(a, hidden, Side.ALICE)
        second = model.outcomes(b, hidden, Side.BOB)
    return int(np.sum(first.astype(np.int64) * second))


def estimate_correlation(cfg: ExperimentConfig, pair_index: int, workers: int = 1,
                         swap_roles: bool = False) -> CorrelationEstimate:
    """Sample mean of A(a, h) B(b, h) over ``cfg.trials`` hidden states.

    ``swap_roles`` puts Bob's rule at the first direction and Alice's at the
    second, with the same hidden states.
    """
    if not 0 <= pair_index < len(cfg.angle_pairs):
        raise IndexError(f"pair index {pair_index} out of range")
    a, b = cfg.angle_pairs[pair_index]
    n = int(cfg.trials)
    sizes = [BLOCK_SIZE] * (n // BLOCK_SIZE)
    if n % BLOCK_SIZE:
        sizes.append(n % BLOCK_SIZE)

    def run(k):
        return _block_sum(cfg.model, a, b, cfg.seed, pair_index, k, sizes[k], swap_roles)

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(run, range(len(sizes))))
    else:
        total = sum(run(k) for k in range(len(sizes)))

    mean = total / n
    # products are +/-1: sum of squares is n, so the sample variance is closed form
    var = (n - total * total / n) / (n - 1) if n > 1 else 0.0
    return CorrelationEstimate(mean=mean, stderr=math.sqrt(max(var, 0.0) / n), trials=n)


def quantum_prediction(a: Vector3, b: Vector3) -> float:
    """Singlet-state correlation -a.b."""
    return -dot(a, b)


def local_sign_prediction(theta: float) -> float:
    """Analytic correlation of the LocalSign model at analyzer angle theta."""
    return -1.0 + 2.0 * theta / math.pi


def chsh_combination(e_ab: float, e_abp: float, e_apb: float, e_apbp: float) -> float:
    return e_ab - e_abp + e_apb + e_apbp


def canonical_pairs(a: float, a_prime: float, b: float, b_prime: float) -> tuple:
    """(a,b), (a,b'), (a',b), (a',b') from planar angles."""
    va, vap, vb, vbp = (planar(t) for t in (a, a_prime, b, b_prime))
    return ((va, vb), (va, vbp), (vap, vb), (vap, vbp))


CANONICAL_ANGLES = (0.0, math.pi / 2, math.pi / 4, 3 * math.pi / 4)


def chsh(cfg: ExperimentConfig, workers: int = 1) -> ChshResult:
    if len(cfg.angle_pairs) != 4:
        raise ValueError(f"CHSH needs exactly 4 angle pairs, got {len(cfg.angle_pairs)}")
    estimates = tuple(estimate_correlation(cfg, i, workers=workers) for i in range(4))
    s = chsh_combination(*(e.mean for e in estimates))
    stderr = math.sqrt(sum(e.stderr**2 for e in estimates))
    quantum = chsh_combination(*(quantum_prediction(a, b) for a, b in cfg.angle_pairs))
    return ChshResult(estimates=estimates, s=s, stderr=stderr, quantum_value=quantum)


def sweep_pairs(thetas: Sequence[float]) -> tuple:
    """Alice fixed along e1, Bob at angle theta in the e1 e2 plane."""
    return tuple((planar(0.0), planar(t)) for t in thetas)
