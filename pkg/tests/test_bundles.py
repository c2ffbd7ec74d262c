import pytest
import sympy
from hypothesis import given, strategies as st

from bundleobs.bundles import (Bundle, BundleError, external_product, newton_power_sums, power_sums,
                               pontrjagin_character_scale, pullback, stabilize, tangent_bundle, trivial,
                               whitney_sum)
from bundleobs.spaces import (compose, cp, degree_map_to_sphere, identity, point, product, sphere, torus,
                              torus_cover_map)

from oracles import power_sums_by_expansion
from strategies import bundle_over, c_times_t


def test_tangent_examples():
    T = tangent_bundle(torus(3))
    assert (T.rank, T.is_rationally_trivial()) == (3, True)
    t = tangent_bundle(cp(3))
    assert str(t.total_pontrjagin()) == "1 + 4*a^2"
    assert str(t.euler) == "4*a^3"
    s = tangent_bundle(sphere(4))
    assert str(s.euler) == "2*s"
    assert s.total_pontrjagin() == sphere(4).algebra.one()
    assert tangent_bundle(sphere(3)).euler == 0


def test_cp_euler_number_matches_euler_characteristic():
    for n in range(1, 5):
        e = tangent_bundle(cp(n)).euler
        assert e == cp(n).orientation_class() * (n + 1)


def test_tangent_of_product_is_cross():
    A, B = cp(2), sphere(2)
    assert tangent_bundle(product(A, B)) == external_product(tangent_bundle(A), tangent_bundle(B))


def test_invariants_enforced():
    C = cp(3)
    a = C.generator("a")
    with pytest.raises(BundleError):
        Bundle(C, 3, True, a * a * a)          # wrong degree anyway, and odd rank
    with pytest.raises(BundleError):
        Bundle(C, 2, True, a, [a * a * 2])     # p1 != e^2
    with pytest.raises(BundleError):
        Bundle(C, 2, False, a)
    # p_{n/2} defaults to e^2
    assert Bundle(C, 2, True, a).p(1) == a * a
    assert trivial(C, 0).euler == C.algebra.one()


def test_whitney_examples():
    C = cp(2)
    a2 = C.generator("a") ** 2
    x = Bundle(C, 3, True, None, [a2])
    y = Bundle(C, 3, True, None, [a2 * 3])
    s = whitney_sum(x, y)
    assert s.p(1) == a2 * 4
    assert whitney_sum(x, trivial(C, 0)) == x
    with pytest.raises(BundleError):
        whitney_sum(x, trivial(cp(3), 1))


def test_pdual_p2_component():
    B = product(cp(3), torus(2))
    a, t = B.generator("a"), B.generator("t1") * B.generator("t2")
    xi = Bundle(B, 2, True, a + t)
    tot = whitney_sum(tangent_bundle(B), xi)
    assert B.torus_degree_part(tot.p(2), 2) == (a ** 3) * t * 8


def test_external_product_crosses_classes():
    eta = Bundle(cp(2), 3, True, None, [cp(2).generator("a") ** 2])
    T = torus(4)
    xi = Bundle(T, 3, True, None, [T.orientation_class()])
    N = external_product(eta, xi)
    B = N.base
    assert B.torus_degree_part(N.p(2), 4) == B.cross(eta.p(1), xi.p(1))
    assert N.p(2)
    r0 = external_product(trivial(point(), 0), xi)
    assert r0.p(1) == r0.base.cross(point().algebra.one(), xi.p(1))


def test_pullback_examples():
    S = sphere(4)
    T = torus(4)
    for d in (1, 3, -2):
        f = degree_map_to_sphere(T, 4, d)
        pb = pullback(f, tangent_bundle(S))
        assert pb.euler == T.orientation_class() * (2 * d)
        assert pb.total_pontrjagin() == T.algebra.one()
    B = product(cp(3), torus(2))
    a, t = B.generator("a"), B.generator("t1") * B.generator("t2")
    xi = Bundle(B, 2, True, a + t)
    assert pullback(torus_cover_map(B, 5), xi).euler == a + t * 25
    assert pullback(identity(B), xi) == xi


@given(c_times_t(max_torus=2), st.integers(1, 4), st.integers(1, 4), st.data())
def test_pullback_functorial(space, m1, m2, data):
    xi = data.draw(bundle_over(space))
    f, g = torus_cover_map(space, m1), torus_cover_map(space, m2)
    assert pullback(compose(f, g), xi) == pullback(f, pullback(g, xi))


def test_stabilize_examples():
    C = cp(1)
    a = C.generator("a")
    xi = Bundle(C, 2, True, a * 3)
    s = stabilize(xi, 1)
    assert (s.rank, s.euler, s.p(1)) == (3, C.algebra.zero(), xi.p(1))
    assert stabilize(xi, 0) is xi
    assert stabilize(trivial(C, 0), 5) == trivial(C, 5)


@given(c_times_t(max_torus=2), st.data())
def test_whitney_commutative_associative(space, data):
    x, y, z = (data.draw(bundle_over(space, max_rank=4)) for _ in range(3))
    assert whitney_sum(x, y) == whitney_sum(y, x)
    assert whitney_sum(whitney_sum(x, y), z) == whitney_sum(x, whitney_sum(y, z))
    assert whitney_sum(x, trivial(space, 0)) == x


@given(c_times_t(max_torus=3), st.data())
def test_top_pontrjagin_is_euler_squared(space, data):
    x, y = (data.draw(bundle_over(space)) for _ in range(2))
    for b in (x, y, whitney_sum(x, y), stabilize(x, 2)):
        if b.oriented and b.rank and b.rank % 2 == 0:
            assert b.p(b.rank // 2) == b.euler * b.euler


def test_newton_first_terms():
    p1, p2, p3 = sympy.symbols("p1 p2 p3")
    s = newton_power_sums([p1, p2, p3], 3, sympy.Integer(0), sympy.Integer(1))
    assert sympy.expand(s[0] - p1) == 0
    assert sympy.expand(s[1] - (p1 ** 2 - 2 * p2)) == 0
    assert sympy.expand(s[2] - (p1 ** 3 - 3 * p1 * p2 + 3 * p3)) == 0


@pytest.mark.parametrize("roots", [1, 2, 3, 4])
def test_newton_against_symmetric_expansion(roots):
    ys, elem, sums = power_sums_by_expansion(roots, 4)
    s = newton_power_sums(elem, 4, sympy.Integer(0), sympy.Integer(1))
    for k in range(4):
        assert sympy.expand(s[k] - sums[k]) == 0


@given(c_times_t(max_torus=3), st.data())
def test_power_sums_additive(space, data):
    x, y = (data.draw(bundle_over(space)) for _ in range(2))
    r = max(1, space.dim // 4)
    sx, sy, sxy = power_sums(x, r), power_sums(y, r), power_sums(whitney_sum(x, y), r)
    for a, b, c in zip(sx, sy, sxy):
        assert c == a + b


def test_character_scale():
    assert pontrjagin_character_scale(1) == 1
    assert pontrjagin_character_scale(2) == sympy.Rational(1, 12)
