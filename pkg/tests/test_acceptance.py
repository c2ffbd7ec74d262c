"""
Acceptance suite: one test per criterion, numbered 01 to 11.

Run on its own with ``python3 tests/test_acceptance.py`` or
``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import dataclasses
import itertools
import random
from fractions import Fraction

import pytest
import sympy

from bundleobs.bundles import (Bundle, external_product, newton_power_sums, power_sums, stabilize,
                               tangent_bundle, trivial, whitney_sum)
from bundleobs.lowdim import LowDimBundle, S4BundleClass, classify_s1s3, s4_invariants, s4_realizable, to_descriptor
from bundleobs.obstruction import (ClassPolynomial, ObstructionError, Verdict, betti_obstruction, check_flat_product,
                                   check_pdual, find_obstruction)
from bundleobs.spaces import compose, cp, point, product, sphere, torus, torus_cover_map
from bundleobs.sphere_bundles import gysin_betti, sphere_euler_check, sphere_pontrjagin_check
from bundleobs.verify import CertificateRejected, check_certificate, reevaluate

from oracles import power_sums_by_expansion

OB, NONE, CURVED = Verdict.OBSTRUCTED, Verdict.NO_OBSTRUCTION_FOUND, Verdict.KNOWN_NONNEG


def rand_class(rng, A, degree, lo=-3, hi=3):
    return A.element({i: rng.randint(lo, hi) for i in A.degree_indices(degree)})


def rand_bundle(rng, B, max_rank=4):
    A = B.algebra
    r = rng.randint(0, max_rank)
    oriented = rng.random() < 0.7
    p = [rand_class(rng, A, 4 * i) for i in range(1, r // 2 + 1)]
    e = None
    if oriented and r and r % 2 == 0:
        e = rand_class(rng, A, r)
        p[-1] = e * e
    return Bundle(B, r, oriented, e, p)


def axiom_failures(A):
    """Graded commutativity, associativity and unit on raw structure constants."""
    deg, n = A.degrees, A.dim

    def mul(i, j):
        return {k: c for k, c in A.structure.get((i, j), ())}

    bad = 0
    u = A.unit_index
    for i in range(n):
        bad += mul(u, i) != {i: 1} or mul(i, u) != {i: 1}
        for j in range(n):
            sign = (-1) ** (deg[i] * deg[j])
            bad += mul(i, j) != {k: sign * c for k, c in mul(j, i).items()}
    gens = [i for i in range(n) if deg[i] > 0]
    for i, j, k in itertools.product(gens, repeat=3):
        if deg[i] + deg[j] + deg[k] > A.top_degree:
            continue
        lhs, rhs = {}, {}
        for m, c in mul(i, j).items():
            for r, d in mul(m, k).items():
                lhs[r] = lhs.get(r, 0) + c * d
        for m, c in mul(j, k).items():
            for r, d in mul(i, m).items():
                rhs[r] = rhs.get(r, 0) + c * d
        bad += {r: c for r, c in lhs.items() if c} != {r: c for r, c in rhs.items() if c}
    return bad


def test_criterion_01_algebra_axioms():
    factors = [sphere(n) for n in range(1, 9)] + [torus(k) for k in range(1, 5)] + [cp(n) for n in range(1, 5)]
    spaces = factors + [product(X, Y) for X, Y in itertools.combinations_with_replacement(factors, 2)]
    assert len(spaces) == 16 + 136
    for X in spaces:
        assert X.algebra.violations() == [], X.name
    # the independent checker is cubic; run it on factors and a spread of products
    sample = factors + [product(X, Y) for X, Y in itertools.combinations_with_replacement(factors, 2)
                        if X.algebra.dim * Y.algebra.dim <= 64]
    for X in sample:
        assert axiom_failures(X.algebra) == 0, X.name
    for X in spaces:
        assert all(isinstance(c, Fraction) for terms in X.algebra.structure.values() for _, c in terms)


def test_criterion_02_flat_products():
    T4 = torus(4)
    top = T4.orientation_class()
    C3 = cp(3)
    etas = [trivial(point(), 0), trivial(point(), 2), tangent_bundle(C3),
            Bundle(C3, 2, True, C3.generator("a") * 2), Bundle(C3, 3, False)]
    for eta in etas:
        for c in (1, -2, 5):
            xi = Bundle(T4, 3, True, None, [top * c])
            assert check_flat_product(eta, xi).verdict == OB
            assert find_obstruction(external_product(eta, xi)).verdict == OB
        for r in (0, 1, 3):
            assert check_flat_product(eta, trivial(T4, r)).verdict == NONE
            assert find_obstruction(external_product(eta, trivial(T4, r))).verdict == NONE
        # Euler branch: xi with e = top class and no Pontrjagin classes
        xi = Bundle(T4, 4, True, top)
        want = OB if eta.rank == 0 or (eta.has_euler() and eta.euler) else NONE
        assert check_flat_product(eta, xi).verdict == want
        assert find_obstruction(external_product(eta, xi)).verdict == want
    rng = random.Random(2024)
    for _ in range(100):
        eta = rand_bundle(rng, rng.choice([point(), C3]))
        xi = rand_bundle(rng, T4)
        flat = check_flat_product(eta, xi).verdict
        full = find_obstruction(external_product(eta, xi)).verdict
        assert flat == full, (eta, xi)


def test_criterion_03_pdual_value():
    B = product(cp(3), torus(2))
    a, t = B.generator("a"), B.generator("t1") * B.generator("t2")
    xi = Bundle(B, 2, True, a + t)
    total = whitney_sum(tangent_bundle(B), xi)
    comp = B.torus_degree_part(total.p(2), 2)
    assert comp == (a ** 3) * t * 8
    # 2 p_1(TCP3) y (x) t with y = a
    assert comp == B.from_c(tangent_bundle(cp(3)).p(1)) * a * t * 2
    cert = find_obstruction(xi)
    assert cert.verdict == OB and str(cert.witness) == "P2" and cert.value == comp
    pcert, _, pcomp = check_pdual(cp(3), 2)
    assert pcert.verdict == OB and pcomp == comp


def test_criterion_04_s1s3_dichotomy():
    for p1 in range(-10, 11):
        for e in range(-10, 11):
            b = LowDimBundle("S1xS3", 4, p1=p1, e=e)
            generic = find_obstruction(to_descriptor(b)).verdict
            special = classify_s1s3(b).verdict
            if (p1, e) == (0, 0):
                assert generic == NONE and special == CURVED
            else:
                assert generic == special == OB, (p1, e)


def test_criterion_05_s1s2_never_obstructed():
    B = product(sphere(2), torus(1))
    s = B.generator("s")
    count = 0
    for r in range(0, 6):
        for oriented in (True, False):
            es = range(-10, 11) if oriented and r == 2 else [None]
            for e in es:
                euler = None if e is None else s * e
                if oriented and r and r % 2 == 0 and euler is None:
                    euler = B.algebra.zero()
                xi = Bundle(B, r, oriented, euler)
                assert find_obstruction(xi).verdict != OB
                count += 1
    assert count == 11 + 21


def test_criterion_06_s4_table():
    seen = {}
    for m in range(-20, 21):
        for n in range(-20, 21):
            inv = s4_invariants(S4BundleClass(m, n))
            assert inv == (2 * (m - n), m + n)
            assert inv not in seen
            seen[inv] = (m, n)
    for k in range(-40, 41):
        assert s4_realizable(3, k, 0) == (k % 4 == 0)
    for p1 in range(-20, 21):
        for e in range(-20, 21):
            assert s4_realizable(4, p1, e) == ((p1, e) in seen)


def test_criterion_07_gysin():
    S = sphere(4)
    for d in range(-5, 6):
        g = gysin_betti(Bundle(S, 4, True, S.generator("s") * d))
        if d:
            assert g.betti == (1, 0, 0, 0, 0, 0, 0, 1)
        else:
            assert g.betti == (1, 0, 0, 1, 1, 0, 0, 1)
    bases = [sphere(2), sphere(4), cp(2), cp(3), torus(2), torus(3), product(cp(1), torus(2)),
             product(sphere(2), torus(1)), product(cp(2), torus(1))]
    rng = random.Random(77)
    for _ in range(50):
        B = rng.choice(bases)
        r = rng.randint(2, 6)
        e = rand_class(rng, B.algebra, r) if r % 2 == 0 else None
        g = gysin_betti(Bundle(B, r, True, e))
        chi_B = sum((-1) ** d for d in B.algebra.degrees)
        chi_fibre = 1 + (-1) ** (r - 1)
        assert g.euler_characteristic == chi_B * chi_fibre


def test_criterion_08_cover_scaling():
    rng = random.Random(8)
    for C in (point(), sphere(2), sphere(3), cp(1), cp(2)):
        for k in (1, 2, 3):
            B = product(C, torus(k))
            A = B.algebra
            for m in range(1, 6):
                f = torus_cover_map(B, m)
                assert f.induced.is_injective()
                x = A.element({i: rng.randint(-4, 4) for i in range(A.dim)})
                fx = f.induced.apply(x)
                for j in range(k + 1):
                    assert B.torus_degree_part(fx, j) == B.torus_degree_part(x, j) * m ** j
                m2 = rng.randint(1, 5)
                g = torus_cover_map(B, m2)
                assert compose(f, g).induced.apply(x) == torus_cover_map(B, m * m2).induced.apply(x)


def test_criterion_09_newton():
    for roots in range(1, 5):
        ys, elem, sums = power_sums_by_expansion(roots, 4)
        s = newton_power_sums(elem, 4, sympy.Integer(0), sympy.Integer(1))
        assert all(sympy.expand(a - b) == 0 for a, b in zip(s, sums))
    rng = random.Random(9)
    for _ in range(30):
        B = product(rng.choice([point(), cp(2), cp(3), sphere(4)]), torus(rng.randint(1, 3)))
        x, y = rand_bundle(rng, B, 6), rand_bundle(rng, B, 6)
        r = max(1, B.dim // 4)
        for a, b, c in zip(power_sums(x, r), power_sums(y, r), power_sums(whitney_sum(x, y), r)):
            assert c == a + b


def test_criterion_10_certificates(recheck_certificates):
    # a mixed batch of obstructed cases; the conftest fixture re-checks every
    # certificate made anywhere in the suite, this test also exercises rejection
    T4 = torus(4)
    cases = [find_obstruction(Bundle(T4, 3, True, None, [T4.orientation_class()])),
             check_pdual(cp(3), 2)[0],
             find_obstruction(to_descriptor(LowDimBundle("S1xS3", 4, p1=1, e=2))),
             check_flat_product(tangent_bundle(cp(3)), Bundle(T4, 4, True, T4.orientation_class()))]
    rng = random.Random(10)
    while len(cases) < 40:
        B = product(rng.choice([point(), sphere(2), cp(2), cp(3)]), torus(rng.randint(1, 3)))
        c = find_obstruction(rand_bundle(rng, B, 5))
        if c.verdict == OB:
            cases.append(c)
    for c in cases:
        assert check_certificate(c)
        raw = reevaluate(c.witness.terms, dict(c.generator_report), c.base.algebra)
        assert raw and raw == dict(c.value.coords)
        bg = c.base.torus_bigrading
        assert all(bg[i] > 0 for i in raw)
    forged = []
    for c in cases:
        for bad in (dataclasses.replace(c, witness=ClassPolynomial()),
                    dataclasses.replace(c, value=c.value * 3)):
            forged.append(bad)
            with pytest.raises(CertificateRejected):
                check_certificate(bad)
    recheck_certificates[:] = [x for x in recheck_certificates if not any(x is f for f in forged)]


def test_criterion_11_sphere_checks_and_betti():
    rng = random.Random(11)
    for k in range(1, 5):
        T = torus(k)
        for r in (2, 3, 4):
            for _ in range(8):
                e = rand_class(rng, T.algebra, r, -1, 1) if r % 2 == 0 else None
                v = sphere_euler_check(Bundle(T, r, True, e))
                assert (v.verdict == OB) == bool(e)
    T4 = torus(4)
    xi = Bundle(T4, 3, True, None, [T4.orientation_class()])
    assert sphere_pontrjagin_check(xi, ClassPolynomial.parse("P1")).verdict == OB
    assert sphere_pontrjagin_check(stabilize(xi, 1), "P1").verdict == OB
    with pytest.raises(ObstructionError):
        sphere_pontrjagin_check(Bundle(T4, 4, True, T4.orientation_class()), "P1")
    for total, c_betti, k in [(3, 2, 1), (4, 2, 1), (7, 4, 1), (8, 4, 1), (15, 1, 4), (16, 1, 4),
                              (31, 2, 4), (32, 2, 4), (1, 1, 1), (2, 1, 1)]:
        want = OB if total < c_betti * 2 ** k else NONE
        assert betti_obstruction(total, c_betti, k) == want


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
