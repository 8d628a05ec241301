"""
Registry of verification checks run by ``bivector-bell verify``.

Every check is a function of a :class:`CheckContext` that returns
``(expected, computed, ok)``; the runner turns it into a :class:`Verdict`.
Random samples are drawn from a generator keyed by (seed, check id), so a
check gives the same result alone, filtered, or inside a concurrent run.
"""

from __future__ import annotations

import fnmatch
import itertools
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import bell
from .errors import MixedRepresentationError, ParallelVectorsError
from .ga_core import (
    E1,
    E2,
    E3,
    E12,
    E23,
    E31,
    I,
    ONE,
    Multivector,
    Vector3,
    cross,
    dot,
    geometric_product,
    grade_project,
    hodge_dual,
    reflect_axis,
    reflect_vector,
    reverse,
    unit_vector,
    wedge,
)
from .model import (
    CORRELATION_EXPR,
    MU_MINUS,
    MU_PLUS,
    OUTCOME_EXPR,
    ChristianBivector,
    LocalSign,
    Parity,
    Side,
    beable_product,
    claimed_product,
    corrected_handedness_product,
    lambda_basis_contradiction,
    mu_average,
    mu_parity,
    outcome,
    parities_exclusive,
    parity_average,
)
from .rotor import (
    CoplanarConfig,
    aligning_rotor,
    beable_pair,
    composition_decomposition,
    correct_rotor_axis,
    parallel_transport_check,
    rotate,
    truncated_limit,
    unit_bivector_between,
)
from .subalgebra import (
    MATRIX_TABLE,
    PRINTED_HANDED_BASES,
    EvenElement,
    Flavor,
    adjoint,
    bra,
    complex_rep_demo,
    even_product,
    handed_basis,
    ket,
    ket_product,
    levi_civita,
    matrix_adjoint_check,
    pauli,
    to_matrix,
    triple_product,
    triple_product_after_reflections,
)

CONFIRMED = "Confirmed"
REFUTED = "Refuted"
ERROR = "Error"


@dataclass(frozen=True)
class Verdict:
    check_id: str
    claim: str
    expected: str
    computed: str
    status: str

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CheckContext:
    seed: int
    trials: int

    def rng(self, check_id: str) -> np.random.Generator:
        return np.random.default_rng([int(self.seed) & 0xFFFFFFFF, zlib.crc32(check_id.encode())])


@dataclass(frozen=True)
class Check:
    check_id: str
    claim: str
    fn: Callable[[CheckContext], tuple[str, str, bool]]

    def run(self, ctx: CheckContext) -> Verdict:
        try:
            expected, computed, ok = self.fn(ctx)
        except Exception as exc:  # a crashing check is reported, not raised
            return Verdict(self.check_id, self.claim, "no exception", f"{type(exc).__name__}: {exc}", ERROR)
        return Verdict(self.check_id, self.claim, expected, computed, CONFIRMED if ok else REFUTED)


REGISTRY: list[Check] = []


def check(check_id: str, claim: str):
    def register(fn):
        REGISTRY.append(Check(check_id, claim, fn))
        return fn

    return register


def select(pattern: str | None) -> list[Check]:
    if not pattern:
        return list(REGISTRY)
    return [c for c in REGISTRY if fnmatch.fnmatchcase(c.check_id, pattern)]


def run_checks(checks: list[Check], ctx: CheckContext, workers: int = 1) -> list[Verdict]:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda c: c.run(ctx), checks))
    return [c.run(ctx) for c in checks]


# --- sampling helpers ---------------------------------------------------------

E1_V = Vector3(1.0, 0.0, 0.0)


def random_units(rng: np.random.Generator, n: int) -> list[Vector3]:
    g = rng.standard_normal((n, 3))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return [Vector3.from_array(row) for row in g]


def random_multivectors(rng: np.random.Generator, n: int) -> list[Multivector]:
    return [Multivector(row) for row in rng.uniform(-1.0, 1.0, (n, 8))]


def random_even(rng: np.random.Generator, flavor: Flavor, n: int) -> list[EvenElement]:
    return [EvenElement(flavor, tuple(row)) for row in rng.uniform(-1.0, 1.0, (n, 4))]


def random_coplanar(rng: np.random.Generator, n: int, eps: float | None = None) -> list[CoplanarConfig]:
    normals = random_units(rng, n)
    omegas = rng.uniform(0.1, 3.0, n)
    epss = rng.uniform(0.0, 1.0, n) if eps is None else np.full(n, eps)
    return [CoplanarConfig(float(o), float(e), c) for o, e, c in zip(omegas, epss, normals)]


def _max(values) -> float:
    return float(max(values, default=0.0))


def _err(x: float) -> str:
    return f"{x:.3e}"


def _le(value: float, tol: float) -> tuple[str, str, bool]:
    return f"max error <= {tol:g}", f"max error {_err(value)}", value <= tol


# --- tutorial identities ------------------------------------------------------


@check("tutorial.basis-squares", "e1 e1 = e2 e2 = e3 e3 = 1")
def _basis_squares(ctx):
    err = _max(geometric_product(e, e).max_abs_diff(ONE) for e in (E1, E2, E3))
    return _le(err, 0.0)


@check("tutorial.anticommute", "e_i e_j = -e_j e_i for i != j, and ab + ba = 2 a.b")
def _anticommute(ctx):
    basis = (E1, E2, E3)
    err = _max(
        (geometric_product(basis[i], basis[j]) + geometric_product(basis[j], basis[i])).norm()
        for i in range(3) for j in range(3) if i != j
    )
    vs = random_units(ctx.rng("tutorial.anticommute"), 2000)
    err2 = _max(
        (geometric_product(a, b) + geometric_product(b, a)).max_abs_diff(2 * float(a.as_array() @ b.as_array()))
        for a, b in zip(vs[::2], vs[1::2])
    )
    return _le(max(err, err2), 1e-12)


@check("tutorial.pseudoscalar-square", "I I = -1")
def _i_square(ctx):
    return _le(geometric_product(I, I).max_abs_diff(-1.0), 0.0)


@check("tutorial.pseudoscalar-central", "I u = u I for every multivector u")
def _i_central(ctx):
    us = random_multivectors(ctx.rng("tutorial.pseudoscalar-central"), 1000)
    return _le(_max(geometric_product(I, u).max_abs_diff(geometric_product(u, I)) for u in us), 1e-12)


@check("tutorial.dot-wedge", "ab = a.b + a^b")
def _dot_wedge(ctx):
    vs = random_units(ctx.rng("tutorial.dot-wedge"), 2000)
    err = _max(geometric_product(a, b).max_abs_diff(dot(a, b) + wedge(a, b)) for a, b in zip(vs[::2], vs[1::2]))
    return _le(err, 1e-12)


@check("tutorial.hodge", "a^b = +I (a x b)")
def _hodge(ctx):
    vs = random_units(ctx.rng("tutorial.hodge"), 2000)
    err = _max(wedge(a, b).max_abs_diff(geometric_product(I, cross(a, b))) for a, b in zip(vs[::2], vs[1::2]))
    return _le(err, 1e-12)


@check("tutorial.hodge-reflection",
       "a mirror flips both I and a x b, so a^b = I (a x b) keeps its sign; flipping I alone breaks it")
def _hodge_reflection(ctx):
    vs = random_units(ctx.rng("tutorial.hodge-reflection"), 200)
    err = 0.0
    naive_min = math.inf
    for a, b in zip(vs[::2], vs[1::2]):
        for m in (1, 2, 3):
            ra, rb = reflect_vector(a, m), reflect_vector(b, m)
            # cross product recomputed by the right-hand rule in the mirrored frame
            mirrored_cross = reflect_axis(cross(ra, rb), m)
            mirrored_i = reflect_axis(I, m)
            err = max(err, wedge(a, b).max_abs_diff(geometric_product(mirrored_i, mirrored_cross)))
            # same statement in mirrored coordinates
            err = max(err, reflect_axis(wedge(a, b), m).max_abs_diff(geometric_product(I, cross(ra, rb))))
            naive = geometric_product(mirrored_i, cross(a, b))
            naive_min = min(naive_min, naive.max_abs_diff(wedge(a, b)) / max(wedge(a, b).norm(), 1e-300))
    ok = err <= 1e-12 and naive_min > 1.0
    return ("duality error <= 1e-12; flip-I-only relative error > 1",
            f"duality error {_err(err)}; flip-I-only relative error {naive_min:.3f}", ok)


@check("tutorial.reversion", "reverse(uv) = reverse(v) reverse(u); (e1 e2)~ = e2 e1")
def _reversion(ctx):
    us = random_multivectors(ctx.rng("tutorial.reversion"), 2000)
    err = _max(
        reverse(geometric_product(u, v)).max_abs_diff(geometric_product(reverse(v), reverse(u)))
        for u, v in zip(us[::2], us[1::2])
    )
    ok_basis = reverse(E12) == geometric_product(E2, E1)
    return ("max error <= 1e-12 and (e1e2)~ = e2e1", f"max error {_err(err)}; basis case {ok_basis}",
            err <= 1e-12 and ok_basis)


@check("tutorial.associativity", "(uv)w = u(vw)")
def _assoc(ctx):
    us = random_multivectors(ctx.rng("tutorial.associativity"), 3000)
    err = _max(
        geometric_product(geometric_product(u, v), w).max_abs_diff(geometric_product(u, geometric_product(v, w)))
        for u, v, w in zip(us[::3], us[1::3], us[2::3])
    )
    return _le(err, 1e-12)


@check("tutorial.triple-reflection", "mirroring e1, e2, e3 leaves e23 alone and turns I into -I")
def _triple_reflection(ctx):
    b, p = E23, I
    for m in (1, 2, 3):
        b, p = reflect_axis(b, m), reflect_axis(p, m)
    ok = b == E23 and p == -I
    return "e23 -> e23, I -> -I", f"e23 -> {b}, I -> {p}", ok


# --- Error 1 ------------------------------------------------------------------


@check("error1.mu-independence", "(mu a)(mu b) is the same for mu = +I and mu = -I")
def _mu_independence(ctx):
    vs = random_units(ctx.rng("error1.mu-independence"), 200)
    err = _max(
        beable_product(a, b, MU_PLUS).multivector.max_abs_diff(beable_product(a, b, MU_MINUS).multivector)
        for a, b in zip(vs[::2], vs[1::2])
    )
    return _le(err, 0.0)


@check("error1.mu-average", "averaging (mu a)(mu b) over mu keeps the wedge: -a.b - a^b, |bivector| = |sin|")
def _mu_average(ctx):
    vs = random_units(ctx.rng("error1.mu-average"), 200)
    err = 0.0
    for a, b in zip(vs[::2], vs[1::2]):
        avg = mu_average(lambda mu: beable_product(a, b, mu))
        err = max(err, avg.max_abs_diff(-dot(a, b) - wedge(a, b)))
        err = max(err, avg.max_abs_diff(-geometric_product(a, b)))
        err = max(err, abs(grade_project(avg, 2).norm() - cross(a, b).norm()))
    return _le(err, 1e-12)


@check("error1.claimed-cancels", "the -a.b - mu(a x b) form loses the wedge on averaging and so disagrees")
def _claimed(ctx):
    vs = random_units(ctx.rng("error1.claimed-cancels"), 200)
    err = 0.0
    gap = math.inf
    for a, b in zip(vs[::2], vs[1::2]):
        wrong = mu_average(lambda mu: claimed_product(a, b, mu))
        right = mu_average(lambda mu: beable_product(a, b, mu))
        err = max(err, wrong.max_abs_diff(-dot(a, b)))
        gap = min(gap, (wrong - right).norm() / cross(a, b).norm())
    ok = err <= 1e-12 and abs(gap - 1.0) <= 1e-9
    return ("claimed average = -a.b; |claimed - correct| = |sin|",
            f"error {_err(err)}; min |claimed - correct|/|sin| = {gap:.12f}", ok)


@check("error1.complex-analogy", "a fair-coin sign of i averages z = 3 + 2i to 3, not z")
def _complex_analogy(ctx):
    z_right = 3.0 * ONE + 2.0 * E12
    z_left_mistaken = 3.0 * ONE + 2.0 * (-E12)
    wrong = 0.5 * (z_right + z_left_mistaken)
    ok = wrong == 3.0 * ONE and not wrong.isclose(z_right)
    return "<z> = 3 (the invalid average)", f"<z> = {wrong[0]:g} + {wrong['e12']:g} e12", ok


@check("error1.corrected-handedness", "(-I a)(-I b) = -a.b - (-I)(-(a x b)) equals (I a)(I b)")
def _corrected(ctx):
    vs = random_units(ctx.rng("error1.corrected-handedness"), 200)
    err = 0.0
    for a, b in zip(vs[::2], vs[1::2]):
        c = corrected_handedness_product(a, b).multivector
        lhs = geometric_product(geometric_product(-I, a), geometric_product(-I, b))
        err = max(err, c.max_abs_diff(beable_product(a, b, MU_PLUS).multivector), c.max_abs_diff(lhs))
    return _le(err, 1e-12)


# --- Error 2 ------------------------------------------------------------------


@check("error2.parity", "the outcome integrand has two mu factors (even), the correlation three (odd)")
def _parity(ctx):
    p_out, p_cor = mu_parity(OUTCOME_EXPR), mu_parity(CORRELATION_EXPR)
    ok = (p_out is Parity.EVEN and p_cor is Parity.ODD
          and parities_exclusive(OUTCOME_EXPR, CORRELATION_EXPR)
          and parity_average(CORRELATION_EXPR, 1.0) == 0.0
          and parity_average(OUTCOME_EXPR, 1.0) == 1.0)
    return ("Even(2) / Odd(3), exclusive",
            f"{p_out.name.title()}({OUTCOME_EXPR.count}) / {p_cor.name.title()}({CORRELATION_EXPR.count})", ok)


@check("error2.exclusivity", "mu.n averages to 0 while the correlation's bivector part survives")
def _exclusivity(ctx):
    vs = random_units(ctx.rng("error2.exclusivity"), 300)
    worst_outcome = 0.0
    min_bivector = math.inf
    for n, a, b in zip(vs[::3], vs[1::3], vs[2::3]):
        worst_outcome = max(worst_outcome, mu_average(lambda mu: geometric_product(mu.mv, n)).norm())
        corr = mu_average(lambda mu: beable_product(a, b, mu))
        min_bivector = min(min_bivector, grade_project(corr, 2).norm())
    ok = worst_outcome == 0.0 and min_bivector > 0.0
    return ("outcome average = 0 exactly; correlation bivector != 0",
            f"max |<mu n>| = {worst_outcome:g}; min |bivector| = {min_bivector:.6f}", ok)


# --- Error 3 ------------------------------------------------------------------

EPS_SWEEP = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 0.0)


@check("error3.limit", "R(aa')R(a'b) keeps bivector norm |sin W| for every eps, eps = 0 included")
def _limit(ctx):
    err = 0.0
    cut_gap = math.inf
    for omega in (math.pi / 3, 1.0, 2.5):
        for eps in EPS_SWEEP:
            cfg = CoplanarConfig(omega, eps)
            product = composition_decomposition(cfg)[2].value
            full = math.cos(omega) + math.sin(omega) * cfg.plane
            err = max(err, abs(grade_project(product, 2).norm() - abs(math.sin(omega))),
                      product.max_abs_diff(full))
            cut_gap = min(cut_gap, truncated_limit(cfg).max_abs_diff(product))
    ok = err <= 1e-9 and cut_gap > 0.5
    return ("|bivector| = |sin W| within 1e-9; dropping the bivector changes the rotor",
            f"max error {_err(err)}; min change from truncation {cut_gap:.6f}", ok)


@check("error3.unit-bivector", "(a ^ a')/sin keeps unit norm as a' -> a; exactly parallel raises")
def _unit_bivector(ctx):
    err = 0.0
    for eps in EPS_SWEEP[:-1]:
        cfg = CoplanarConfig(1.0, eps)
        bhat = unit_bivector_between(cfg.a, cfg.a_prime)
        err = max(err, abs(bhat.norm() - 1.0), bhat.max_abs_diff(cfg.plane))
    try:
        unit_bivector_between(E1_V, E1_V)
        raised = False
    except ParallelVectorsError:
        raised = True
    ok = err <= 1e-6 and raised
    return "max error <= 1e-6; parallel raises", f"max error {_err(err)}; parallel raises {raised}", ok



@check("error3.composition", "W = pi/3, eps = 1/2 composes to 1/2 + (sqrt3/2) e12, not 1/2")
def _composition(ctx):
    product = composition_decomposition(CoplanarConfig(math.pi / 3, 0.5))[2].value
    expected = 0.5 * ONE + (math.sqrt(3) / 2) * E12
    err = product.max_abs_diff(expected)
    return f"{expected}", f"{product}", err <= 1e-12


# --- Error 4 ------------------------------------------------------------------


@check("error4.transport", "transporting (I a)(mu a') returns -lambda; the value is unchanged for any eps")
def _transport(ctx):
    rng = ctx.rng("error4.transport")
    err = 0.0
    for cfg in random_coplanar(rng, 100, eps=0.0):
        for sign in (1, -1):
            err = max(err, parallel_transport_check(cfg, sign).max_abs_diff(-float(sign)))
    for cfg in random_coplanar(rng, 100):
        for sign in (1, -1):
            err = max(err, parallel_transport_check(cfg, sign).max_abs_diff(beable_pair(cfg.a, cfg.a_prime, sign)))
    return _le(err, 1e-9)


@check("error4.coplanar-bivectors", "(I a)(mu a') and (I b)(mu b') carry the same bivector")
def _coplanar_bivectors(ctx):
    err = 0.0
    for cfg in random_coplanar(ctx.rng("error4.coplanar-bivectors"), 100):
        for sign in (1, -1):
            p = grade_project(beable_pair(cfg.a, cfg.a_prime, sign), 2)
            q = grade_project(beable_pair(cfg.b, cfg.b_prime, sign), 2)
            err = max(err, p.max_abs_diff(q))
    return _le(err, 1e-9)


@check("error4.rotor-axis", "the aligning axis (a x a') x (b x b') is the identity for coplanar pairs")
def _rotor_axis(ctx):
    configs = random_coplanar(ctx.rng("error4.rotor-axis"), 100)
    configs = [c for c in configs if c.eps * c.omega > 1e-3]
    identities = sum(correct_rotor_axis(*c.vectors) is None for c in configs)
    crossed = correct_rotor_axis(E1_V, Vector3(0.0, 1.0, 0.0), Vector3(0.0, 1.0, 0.0), Vector3(0.0, 0.0, 1.0))
    ok = identities == len(configs) and crossed is not None and crossed == Vector3(0.0, 1.0, 0.0)
    return (f"Identity for {len(configs)}/{len(configs)}; crossed planes -> e2",
            f"Identity for {identities}/{len(configs)}; crossed planes -> {crossed}", ok)


@check("error4.aligning-rotor", "the rotor about the corrected axis carries plane aa' onto plane bb'")
def _aligning(ctx):
    vs = random_units(ctx.rng("error4.aligning-rotor"), 400)
    err = 0.0
    for a, ap, b, bp in zip(vs[::4], vs[1::4], vs[2::4], vs[3::4]):
        r = aligning_rotor(a, ap, b, bp)
        src = hodge_dual(cross(a, ap).normalized())
        dst = hodge_dual(cross(b, bp).normalized())
        err = max(err, rotate(src, r).max_abs_diff(dst))
    return _le(err, 1e-9)


@check("error4.perfect-correlation", "the bivector outcome is -mu everywhere, so E(a, b) = +1 exactly")
def _perfect(ctx):
    pairs = bell.canonical_pairs(*bell.CANONICAL_ANGLES)
    cfg = bell.ExperimentConfig(ChristianBivector(), pairs, ctx.trials, ctx.seed)
    means = [bell.estimate_correlation(cfg, i).mean for i in range(4)]
    dirs = random_units(ctx.rng("error4.perfect-correlation"), 50)
    constant = all(
        outcome(ChristianBivector(), d, s, side) == -s for d in dirs for s in (1, -1) for side in Side
    )
    ok = all(m == 1.0 for m in means) and constant
    return "E = 1.0 for every pair", f"E = {', '.join(repr(m) for m in means)}", ok


@check("error4.swap-symmetry", "swapping Alice's and Bob's apparatus leaves every estimate unchanged")
def _swap(ctx):
    thetas = (0.0, math.pi / 4, math.pi / 2, 2.0)
    diffs = []
    for model in (LocalSign(), ChristianBivector()):
        cfg = bell.ExperimentConfig(model, bell.sweep_pairs(thetas), min(ctx.trials, 100_000), ctx.seed)
        for i in range(len(thetas)):
            e = bell.estimate_correlation(cfg, i)
            s = bell.estimate_correlation(cfg, i, swap_roles=True)
            diffs.append(abs(e.mean - s.mean) + abs(e.stderr - s.stderr))
    return _le(max(diffs), 0.0)


# --- subalgebra ---------------------------------------------------------------


@check("subalgebra.structure-constants", "B_iR B_jR = -d_ij - eps_ijk B_kR and B_iL B_jL = -d_ij + eps_ijk B_kL")
def _structure(ctx):
    eps = levi_civita()
    err = 0.0
    for flavor, sign in ((Flavor.RIGHT, -1.0), (Flavor.LEFT, 1.0)):
        for i, j in itertools.product(range(3), repeat=2):
            got = even_product(EvenElement.basis(flavor, i + 1), EvenElement.basis(flavor, j + 1))
            want = (-1.0 if i == j else 0.0, *(sign * eps[i, j, :]))
            err = max(err, float(np.max(np.abs(np.subtract(got.coeffs, want)))))
            emb = geometric_product(EvenElement.basis(flavor, i + 1).embed(), EvenElement.basis(flavor, j + 1).embed())
            err = max(err, emb.max_abs_diff(got.embed()))
    return _le(err, 0.0)


@check("subalgebra.embedding-product", "even_product agrees with the geometric product of embeddings")
def _embedding(ctx):
    rng = ctx.rng("subalgebra.embedding-product")
    err = 0.0
    for flavor in Flavor:
        xs = random_even(rng, flavor, 1000)
        for x, y in zip(xs[::2], xs[1::2]):
            err = max(err, even_product(x, y).embed().max_abs_diff(geometric_product(x.embed(), y.embed())))
    return _le(err, 1e-12)


@check("subalgebra.triple-product", "B1R B2R B3R = +1 and B1L B2L B3L = -1")
def _triple(ctx):
    r, l = triple_product(Flavor.RIGHT), triple_product(Flavor.LEFT)
    return "+1 / -1", f"{r:+g} / {l:+g}", r == 1.0 and l == -1.0


@check("subalgebra.triple-product-reflection", "mirror reflections never change the triple-product sign")
def _triple_reflection_sign(ctx):
    results = []
    for flavor in Flavor:
        base = triple_product(flavor)
        for axes in ((1,), (2,), (3,), (1, 2, 3)):
            results.append(triple_product_after_reflections(flavor, axes) == base)
    return "unchanged for all mirrors", f"unchanged in {sum(results)}/{len(results)} cases", all(results)


@check("subalgebra.adjoint", "B_R^dagger = B_L = -B_R in the algebra, the matrices and the kets/bras")
def _adjoint(ctx):
    ok = True
    for i in (1, 2, 3):
        br = EvenElement.basis(Flavor.RIGHT, i)
        bl = EvenElement.basis(Flavor.LEFT, i)
        ok &= adjoint(br) == bl
        ok &= reverse(br.embed()) == bl.embed() == -br.embed()
        ok &= bool(np.array_equal(to_matrix(br).conj().T, to_matrix(bl)))
        ok &= bool(np.array_equal(to_matrix(bl), -to_matrix(br)))
        ok &= ket(bl).dagger == bra(br)
    xs = random_even(ctx.rng("subalgebra.adjoint"), Flavor.RIGHT, 200)
    ok &= all(matrix_adjoint_check(x) and matrix_adjoint_check(adjoint(x)) for x in xs)
    return "holds in all three representations", f"holds: {ok}", ok


@check("subalgebra.matrix-table", "B1L = i s3, B2L = -i s2, B3L = -i s1, and B_R the negatives")
def _matrix_table(ctx):
    s1, s2, s3 = pauli()
    left = (1j * s3, -1j * s2, -1j * s1)
    ok = all(np.array_equal(m, p) for m, p in zip(MATRIX_TABLE[Flavor.LEFT], left))
    ok &= all(np.array_equal(m, -p) for m, p in zip(MATRIX_TABLE[Flavor.RIGHT], left))
    return "table matches the Pauli forms", f"matches: {ok}", bool(ok)


@check("subalgebra.matrix-homomorphism", "to_matrix respects products and sums")
def _homomorphism(ctx):
    rng = ctx.rng("subalgebra.matrix-homomorphism")
    err = 0.0
    for flavor in Flavor:
        xs = random_even(rng, flavor, 2000)
        for x, y in zip(xs[::2], xs[1::2]):
            err = max(err, float(np.max(np.abs(to_matrix(x) @ to_matrix(y) - to_matrix(even_product(x, y))))))
            err = max(err, float(np.max(np.abs(to_matrix(x) + to_matrix(y) - to_matrix(x + y)))))
    return _le(err, 1e-12)


@check("subalgebra.ket-bra", "ket/bra listings, |z>^dagger = <z|, and A B C|d> = A|b c d>")
def _ket_bra(ctx):
    kets = [ket(EvenElement.basis(Flavor.LEFT, i)) for i in (1, 2, 3)]
    bras = [bra(EvenElement.basis(Flavor.RIGHT, i)) for i in (1, 2, 3)]
    listed = ([(k.top, k.bottom) for k in kets] == [(1j, 0), (0, 1), (0, -1j)]
              and [(b.first, b.second) for b in bras] == [(-1j, 0), (0, 1), (0, 1j)])
    rng = ctx.rng("subalgebra.ket-bra")
    err = 0.0
    for A, B, C, D in zip(*[iter(random_even(rng, Flavor.LEFT, 400))] * 4):
        lhs = to_matrix(A) @ to_matrix(B) @ to_matrix(C) @ ket(D).as_array()
        mid = to_matrix(A) @ to_matrix(B) @ ket_product(ket(C), ket(D)).as_array()
        rhs = to_matrix(A) @ ket(even_product(even_product(B, C), D)).as_array()
        err = max(err, float(np.max(np.abs(lhs - mid))), float(np.max(np.abs(lhs - rhs))))
    for A, B, C, D in zip(*[iter(random_even(rng, Flavor.RIGHT, 400))] * 4):
        lhs = bra(D).as_array() @ to_matrix(C) @ to_matrix(B) @ to_matrix(A)
        rhs = bra(even_product(even_product(D, C), B)).as_array() @ to_matrix(A)
        err = max(err, float(np.max(np.abs(lhs - rhs))))
    ok = listed and err <= 1e-12
    return "listings match; chain error <= 1e-12", f"listings match {listed}; chain error {_err(err)}", ok


@check("subalgebra.flavor-mixing", "adding or multiplying left and right elements always raises")
def _mixing(ctx):
    attempts = raised = 0
    for i, j in itertools.product(range(4), repeat=2):
        x, y = EvenElement.basis(Flavor.RIGHT, i), EvenElement.basis(Flavor.LEFT, j)
        for op in (lambda p, q: p + q, lambda p, q: p * q, lambda p, q: q * p, lambda p, q: q - p):
            attempts += 1
            try:
                op(x, y)
            except MixedRepresentationError:
                raised += 1
    return f"{attempts}/{attempts} raise", f"{raised}/{attempts} raise", raised == attempts


@check("subalgebra.handed-basis", "the four algebra x handedness basis classes come out as printed")
def _handed(ctx):
    matches = []
    for (alg, hand), printed in sorted(PRINTED_HANDED_BASES.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value)):
        built = handed_basis(alg, hand)
        same = all(u == v for u, v in zip(built.basis, printed))
        handed_ok = built.pseudoscalar == (I if hand is Flavor.RIGHT else -I)
        matches.append(same and handed_ok)
    return "4/4 classes match", f"{sum(matches)}/4 classes match", all(matches)


@check("subalgebra.complex-rep", "complex products agree in {1, e12}, {1, -e12}, Z_left, Z_right; Z_left^T = Z_right")
def _complex(ctx):
    rng = ctx.rng("subalgebra.complex-rep")
    reports = [complex_rep_demo((3.0, 2.0), (1.0, 0.0)), complex_rep_demo((0.0, 1.0), (0.0, 1.0))]
    reports += [complex_rep_demo(tuple(p), tuple(q)) for p, q in rng.uniform(-2, 2, (100, 2, 2))]
    err = max(r.max_error for r in reports)
    ok = all(r.agree and r.left_right_adjoint for r in reports) and reports[1].expected == -1
    return "max error <= 1e-12; adjoint relation holds", f"max error {_err(err)}", ok


# --- one-pager lambda basis ---------------------------------------------------


@check("onepager.lambda-basis", "requiring the lambda = +1 and lambda = -1 products together forces every beta to 0")
def _lambda_basis(ctx):
    r = lambda_basis_contradiction()
    ok = (r.betas_forced_zero and r.rank_joint == len(r.unknowns)
          and r.rank_single[1] < len(r.unknowns)
          and r.right_satisfies == {1: True, -1: False} and r.left_satisfies == {1: False, -1: True})
    return (f"joint rank {len(r.unknowns)} (only beta = 0); each single instance realized by one flavor",
            f"joint rank {r.rank_joint}, single ranks {r.rank_single[1]}/{r.rank_single[-1]}; "
            f"right fits {r.right_satisfies}, left fits {r.left_satisfies}", ok)


@check("onepager.flavor-correct", "keeping each lambda in its own algebra gives -a.b - a^b, not -a.b")
def _flavor_correct(ctx):
    vs = random_units(ctx.rng("onepager.flavor-correct"), 200)
    err = 0.0
    min_gap = math.inf
    for a, b in zip(vs[::2], vs[1::2]):
        r = lambda_basis_contradiction(a, b)
        err = max(err, r.flavor_correct_total.max_abs_diff(r.expected_total))
        err = max(err, grade_project(r.flavor_correct_total, 2).max_abs_diff(-wedge(a, b)))
        min_gap = min(min_gap, (r.flavor_correct_total - r.single_step_total).norm())
    ok = err <= 1e-12 and min_gap > 0.0
    return "total = -a.b - a^b; single-step total differs", f"error {_err(err)}; min difference {min_gap:.6f}", ok


# --- Bell / CHSH --------------------------------------------------------------


@check("bell.quantum-prediction", "the singlet correlation is -a.b = -cos(theta)")
def _quantum(ctx):
    got = [bell.quantum_prediction(bell.planar(0.0), bell.planar(t)) for t in (0.0, math.pi / 4, math.pi / 2)]
    want = [-1.0, -math.sqrt(2) / 2, 0.0]
    err = max(abs(g - w) for g, w in zip(got, want))
    return _le(err, 1e-15)


@check("bell.localsign-curve", "the sign model follows -1 + 2 theta/pi and misses -cos(pi/4)")
def _curve(ctx):
    thetas = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)
    cfg = bell.ExperimentConfig(LocalSign(), bell.sweep_pairs(thetas), ctx.trials, ctx.seed)
    worst = 0.0
    gap = None
    for i, t in enumerate(thetas):
        e = bell.estimate_correlation(cfg, i)
        dev = abs(e.mean - bell.local_sign_prediction(t))
        worst = max(worst, dev / e.stderr if e.stderr else (0.0 if dev == 0 else math.inf))
        if i == 1:
            gap = abs(e.mean + math.cos(t)) / e.stderr
    ok = worst <= 4.0 and gap >= 10.0
    return ("within 4 stderr of -1 + 2 theta/pi; >= 10 stderr from -cos(pi/4)",
            f"max deviation {worst:.2f} stderr; gap at pi/4 {gap:.1f} stderr", ok)


@check("bell.chsh-localsign", "the sign model gives |S| = 2 where quantum mechanics gives 2 sqrt 2")
def _chsh_local(ctx):
    cfg = bell.ExperimentConfig(LocalSign(), bell.canonical_pairs(*bell.CANONICAL_ANGLES), ctx.trials, ctx.seed)
    r = bell.chsh(cfg)
    ok = abs(abs(r.s) - 2.0) <= 5 * r.stderr and abs(abs(r.quantum_value) - 2 * math.sqrt(2)) <= 1e-12
    return ("|S| = 2 within 5 stderr; quantum |S| = 2.828427",
            f"S = {r.s:.6f} (stderr {r.stderr:.6f}); quantum {r.quantum_value:.6f}", ok)


@check("bell.chsh-christian", "constant outcomes give S = 1 - 1 + 1 + 1 = 2 exactly")
def _chsh_christian(ctx):
    cfg = bell.ExperimentConfig(ChristianBivector(), bell.canonical_pairs(*bell.CANONICAL_ANGLES),
                                ctx.trials, ctx.seed)
    r = bell.chsh(cfg)
    return "S = 2", f"S = {r.s!r}", r.s == 2.0


@check("bell.local-bound", "every local model stays within |S| <= 2 + 5 stderr")
def _local_bound(ctx):
    configs = (bell.CANONICAL_ANGLES, (0.0, math.pi / 3, math.pi / 6, math.pi / 2), (0.3, 1.9, 1.1, 2.7))
    worst = -math.inf
    for model in (LocalSign(), ChristianBivector()):
        for angles in configs:
            r = bell.chsh(bell.ExperimentConfig(model, bell.canonical_pairs(*angles), ctx.trials, ctx.seed))
            worst = max(worst, abs(r.s) - 2.0 - 5 * r.stderr)
    return "max(|S| - 2 - 5 stderr) <= 0", f"max(|S| - 2 - 5 stderr) = {worst:.6f}", worst <= 0.0
