import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bivector_bell.errors import MixedRepresentationError
from bivector_bell.ga_core import E1, E2, E3, E12, E23, E31, I, ONE, geometric_product, reverse
from bivector_bell.subalgebra import (
    PRINTED_HANDED_BASES,
    Bra2,
    EvenElement,
    Flavor,
    Ket2,
    adjoint,
    bra,
    bra_product,
    complex_rep_demo,
    even_product,
    handed_basis,
    ket,
    ket_product,
    left,
    left_real_matrix,
    matrix_adjoint_check,
    pauli,
    right,
    right_real_matrix,
    to_matrix,
    to_right,
    triple_product,
    triple_product_after_reflections,
)

R, L = Flavor.RIGHT, Flavor.LEFT
coef = st.floats(min_value=-3, max_value=3, allow_nan=False)
even_coeffs = st.tuples(coef, coef, coef, coef)


def B(flavor, i):
    return EvenElement.basis(flavor, i)


def test_embeddings():
    assert [B(R, i).embed() for i in (1, 2, 3)] == [E23, E31, E12]
    assert [B(L, i).embed() for i in (1, 2, 3)] == [-E23, -E31, -E12]
    for i in (1, 2, 3):
        assert B(R, i).embed() == -B(L, i).embed()


@given(even_coeffs)
def test_embedding_is_even(c):
    assert right(*c).embed().grades() <= {0, 2}
    assert left(*c).embed().grades() <= {0, 2}


def test_named_products():
    assert even_product(B(R, 1), B(R, 2)) == -B(R, 3)
    assert even_product(B(L, 1), B(L, 2)) == B(L, 3)
    assert even_product(B(R, 1), B(R, 1)) == right(-1.0)


@pytest.mark.parametrize("flavor, sign", [(R, -1.0), (L, 1.0)])
def test_structure_constants(flavor, sign):
    eps = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}
    for i, j in itertools.product(range(3), repeat=2):
        want = [-1.0 if i == j else 0.0, 0.0, 0.0, 0.0]
        for k in range(3):
            want[k + 1] = sign * eps.get((i, j, k), 0)
        assert even_product(B(flavor, i + 1), B(flavor, j + 1)).coeffs == tuple(want)


@pytest.mark.parametrize("flavor", [R, L])
@given(x=even_coeffs, y=even_coeffs)
def test_even_product_matches_geometric_product(flavor, x, y):
    ex, ey = EvenElement(flavor, x), EvenElement(flavor, y)
    assert even_product(ex, ey).embed().max_abs_diff(geometric_product(ex.embed(), ey.embed())) <= 1e-12


def test_triple_product():
    assert triple_product(R) == 1.0
    assert triple_product(L) == -1.0


@pytest.mark.parametrize("flavor", [R, L])
@pytest.mark.parametrize("axes", [(1,), (2,), (3,), (1, 2, 3), (2, 3)])
def test_triple_product_ignores_mirrors(flavor, axes):
    assert triple_product_after_reflections(flavor, axes) == triple_product(flavor)


def test_adjoint():
    assert adjoint(B(R, 1)) == B(L, 1)
    assert adjoint(right(2.5)) == left(2.5)


@given(even_coeffs)
def test_adjoint_involution_and_reversion(c):
    x = right(*c)
    assert adjoint(adjoint(x)) == x
    assert adjoint(x).embed() == reverse(x.embed())
    assert adjoint(left(*c)).embed() == reverse(left(*c).embed())


@given(even_coeffs)
def test_to_right_preserves_the_element(c):
    assert to_right(left(*c)).embed() == left(*c).embed()


@pytest.mark.parametrize("i", range(4))
@pytest.mark.parametrize("j", range(4))
def test_flavor_mixing_raises(i, j):
    x, y = B(R, i), B(L, j)
    with pytest.raises(MixedRepresentationError):
        even_product(x, y)
    with pytest.raises(MixedRepresentationError):
        even_product(y, x)
    with pytest.raises(MixedRepresentationError):
        x + y
    with pytest.raises(MixedRepresentationError):
        y - x


def test_matrix_table():
    s1, s2, s3 = pauli()
    assert np.array_equal(to_matrix(B(L, 1)), np.array([[1j, 0], [0, -1j]]))
    assert np.array_equal(to_matrix(B(R, 3)), np.array([[0, 1j], [1j, 0]]))
    assert np.array_equal(to_matrix(B(L, 1)), 1j * s3)
    assert np.array_equal(to_matrix(B(L, 2)), -1j * s2)
    assert np.array_equal(to_matrix(B(L, 3)), -1j * s1)
    assert np.array_equal(to_matrix(B(R, 1)), -1j * s3)
    assert np.array_equal(to_matrix(B(R, 2)), 1j * s2)
    assert np.array_equal(to_matrix(B(R, 3)), 1j * s1)
    assert np.array_equal(to_matrix(right(1.0)), np.eye(2))


@pytest.mark.parametrize("flavor", [R, L])
def test_matrix_homomorphism(flavor, rng):
    xs = [EvenElement(flavor, tuple(r)) for r in rng.uniform(-1, 1, (2000, 4))]
    for x, y in zip(xs[::2], xs[1::2]):
        assert np.max(np.abs(to_matrix(x) @ to_matrix(y) - to_matrix(even_product(x, y)))) <= 1e-12
        assert np.max(np.abs(to_matrix(x) + to_matrix(y) - to_matrix(x + y))) <= 1e-12


@given(even_coeffs)
def test_unit_elements_are_unitary(c):
    x = right(*c)
    n = np.sqrt(sum(v * v for v in c))
    if n < 1e-6:
        return
    m = to_matrix(x * (1 / n))
    assert np.max(np.abs(m @ m.conj().T - np.eye(2))) <= 1e-12


def test_matrix_adjoint_check_examples(rng):
    assert matrix_adjoint_check(B(R, 2))
    assert matrix_adjoint_check(right(1.0))
    for r in rng.uniform(-1, 1, (200, 4)):
        assert matrix_adjoint_check(right(*r))
        assert matrix_adjoint_check(left(*r))


def test_ket_and_bra_listings():
    assert [ket(B(L, i)) for i in (1, 2, 3)] == [Ket2(1j, 0), Ket2(0, 1), Ket2(0, -1j)]
    assert [bra(B(R, i)) for i in (1, 2, 3)] == [Bra2(-1j, 0), Bra2(0, 1), Bra2(0, 1j)]
    for i in (1, 2, 3):
        assert ket(B(L, i)).dagger == bra(B(R, i))
    with pytest.raises(MixedRepresentationError):
        ket(B(R, 1))
    with pytest.raises(MixedRepresentationError):
        bra(B(L, 1))


def test_ket_chain(rng):
    for row in rng.uniform(-1, 1, (50, 4, 4)):
        A, Bb, C, D = (left(*r) for r in row)
        lhs = to_matrix(A) @ to_matrix(Bb) @ to_matrix(C) @ ket(D).as_array()
        step1 = to_matrix(A) @ to_matrix(Bb) @ ket(even_product(C, D)).as_array()
        step2 = to_matrix(A) @ to_matrix(Bb) @ ket_product(ket(C), ket(D)).as_array()
        step3 = to_matrix(A) @ ket(even_product(even_product(Bb, C), D)).as_array()
        for rhs in (step1, step2, step3):
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_bra_chain(rng):
    for row in rng.uniform(-1, 1, (50, 4, 4)):
        A, Bb, C, D = (right(*r) for r in row)
        lhs = bra(D).as_array() @ to_matrix(C) @ to_matrix(Bb) @ to_matrix(A)
        step1 = bra(even_product(D, C)).as_array() @ to_matrix(Bb) @ to_matrix(A)
        step2 = bra_product(bra(D), bra(C)).as_array() @ to_matrix(Bb) @ to_matrix(A)
        step3 = bra(even_product(even_product(D, C), Bb)).as_array() @ to_matrix(A)
        for rhs in (step1, step2, step3):
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_handed_basis_listings():
    assert handed_basis(R, R).basis == (ONE, geometric_product(E2, E3), geometric_product(E3, E1),
                                        geometric_product(E1, E2))
    assert handed_basis(L, R).basis == (ONE, -E23, -E31, -E12)
    assert handed_basis(R, L).basis == (ONE, geometric_product(-E2, E3), geometric_product(E3, E1),
                                        geometric_product(E1, -E2))
    for key, printed in PRINTED_HANDED_BASES.items():
        assert handed_basis(*key).basis == printed


@pytest.mark.parametrize("algebra", [R, L])
def test_handedness_sets_pseudoscalar_sign(algebra):
    assert handed_basis(algebra, R).pseudoscalar == I
    assert handed_basis(algebra, L).pseudoscalar == -I


@pytest.mark.parametrize("handedness", [R, L])
def test_left_algebra_is_reversion_of_right(handedness):
    rb = handed_basis(R, handedness).basis
    lb = handed_basis(L, handedness).basis
    assert tuple(reverse(b) for b in rb) == lb


def test_complex_rep_examples():
    r = complex_rep_demo((3, 2), (1, 0))
    assert r.agree and r.expected == 3 + 2j
    assert r.right_subalgebra == r.left_subalgebra == r.left_matrix == r.right_matrix == 3 + 2j
    r = complex_rep_demo((0, 1), (0, 1))
    assert r.agree and r.expected == -1
    assert r.left_right_adjoint


@given(st.tuples(coef, coef), st.tuples(coef, coef))
def test_complex_rep_against_complex_arithmetic(z1, z2):
    r = complex_rep_demo(z1, z2)
    assert r.agree
    assert abs(r.right_subalgebra - complex(*z1) * complex(*z2)) <= 1e-12


def test_real_matrix_reps_are_transposes():
    z = 3 + 2j
    assert np.array_equal(left_real_matrix(z).T, right_real_matrix(z))
