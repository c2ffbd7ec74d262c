from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bundleobs.coh_algebra import (AlgebraError, GradedAlgebra, LinearMap, identity_map, kernel_of_map_on_subspace,
                                   kernel_with_coefficients, multiply, rank, rref)
from bundleobs.spaces import cp, product, restriction_projection, sphere, torus

from oracles import sympy_rank
from strategies import element


def test_unit_law():
    A = cp(3).algebra
    a = A.basis_element("a")
    assert multiply(A.one(), a) == a
    assert multiply(a, A.one()) == a


def test_torus_sign_rule():
    T = torus(2)
    t1, t2 = T.generator("t1"), T.generator("t2")
    assert str(t1 * t2) == "t1*t2"
    assert t2 * t1 == -(t1 * t2)
    assert t1 * t1 == 0


def test_cp3_truncation():
    # (1 + a^2)^2 = 1 + 2a^2 + a^4 and a^4 sits in degree 8 > 6
    A = cp(3).algebra
    x = A.one() + A.basis_element("a^2")
    assert str(x * x) == "1 + 2*a^2"


def test_mismatched_parents():
    with pytest.raises(AlgebraError):
        multiply(cp(2).algebra.one(), cp(3).algebra.one())


def test_rejects_bad_unit_count():
    with pytest.raises(AlgebraError):
        GradedAlgebra([("1", 0), ("u", 0)], {}, 0)


def test_exhaustive_violations_catch_noncommutative_table():
    basis = [("1", 0), ("x", 1), ("y", 1), ("z", 2)]
    table = {(0, i): ((i, 1),) for i in range(4)}
    table.update({(i, 0): ((i, 1),) for i in range(4)})
    table[(1, 2)] = ((3, 1),)
    table[(2, 1)] = ((3, 1),)        # should be -z
    A = GradedAlgebra(basis, table, 2)
    assert any("commut" in v for v in A.violations())


def test_exhaustive_violations_catch_nonassociative_table():
    basis = [("1", 0), ("x", 2), ("y", 4), ("z", 6)]
    table = {(0, i): ((i, 1),) for i in range(4)}
    table.update({(i, 0): ((i, 1),) for i in range(4)})
    table[(1, 1)] = ((2, 1),)
    table[(1, 2)] = ((3, 1),)
    table[(2, 1)] = ((3, 2),)        # x*(x*x) = z but (x*x)*x = 2z
    A = GradedAlgebra(basis, table, 6)
    assert A.violations()


def test_fractions_print_in_lowest_terms():
    A = cp(2).algebra
    assert str(A.basis_element("a") * Fraction(6, 4)) == "3/2*a"


@given(st.data())
def test_multiply_bilinear(data):
    A = product(cp(2), torus(2)).algebra
    a, a2, b = (data.draw(element(A)) for _ in range(3))
    assert (a + a2) * b == a * b + a2 * b
    assert b * (a + a2) == b * a + b * a2
    assert (a * 3) * b == (a * b) * 3


@given(st.data())
def test_graded_commutativity_on_homogeneous(data):
    A = product(sphere(3), torus(3)).algebra
    i = data.draw(st.integers(0, A.dim - 1))
    j = data.draw(st.integers(0, A.dim - 1))
    x, y = A.basis_element(i), A.basis_element(j)
    sign = -1 if A.degrees[i] * A.degrees[j] % 2 else 1
    assert x * y == (y * x) * sign


@given(st.data())
def test_associativity_random(data):
    A = product(cp(1), torus(3)).algebra
    x, y, z = (data.draw(element(A)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


def test_kernel_examples():
    T = torus(4)
    R = restriction_projection(T)
    A = T.algebra
    top = T.orientation_class()
    assert kernel_of_map_on_subspace(R, [A.zero()]) == []
    assert kernel_of_map_on_subspace(identity_map(A), [A.one(), top]) == []
    assert kernel_of_map_on_subspace(R, [A.one() + top, A.one()]) == [top]


@given(st.data())
def test_kernel_against_sympy_rank(data):
    B = product(cp(1), torus(2))
    R = restriction_projection(B)
    A = B.algebra
    vs = data.draw(st.lists(element(A), max_size=6))
    kern = kernel_with_coefficients(R, vs)
    for x, lam in kern:
        assert not R.apply(x)
        combo = A.zero()
        for c, v in zip(lam, vs):
            combo = combo + v * c
        assert combo == x
    # dim(span cap ker) = rank(V) - rank(R(V))
    expected = sympy_rank([v.vector() for v in vs]) - sympy_rank([R.apply(v).vector() for v in vs])
    assert len(kern) == expected
    # adjoining any spanning vector outside the kernel span raises the rank
    basis = [x.vector() for x, _ in kern]
    for v in vs:
        if R.apply(v):
            assert rank(basis + [v.vector()]) == len(basis) + 1


def test_rref_pivots_left_to_right():
    rows, piv = rref([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert rows == [[1, 0, -1], [0, 1, 2]]


def test_linear_map_rank_and_injectivity():
    A = cp(2).algebra
    f = LinearMap(A, A, [A.one(), A.zero(), A.basis_element("a^2")])
    assert f.rank() == 2
    assert not f.is_injective()
    assert identity_map(A).is_injective()
