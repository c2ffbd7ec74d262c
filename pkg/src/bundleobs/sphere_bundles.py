"""
Sphere bundles: rational Betti numbers from the Gysin sequence and the two
obstructions to nonnegative Ricci curvature on S(xi).

Only graded dimensions of H^*(S(xi)) are computed; the ring structure is
never needed because both checks run on the base.
"""

from dataclasses import dataclass

from .bundles import BundleError, external_product, trivial
from .coh_algebra import rank
from .obstruction import (DEFAULT_BUDGET, ClassPolynomial, ObstructionCertificate, ObstructionError,
                          Verdict, _certificate, eval_poly, generator_values, search_witness)
from .spaces import product


@dataclass(frozen=True)
class GysinProfile:
    base: object
    fiber_dim: int
    euler: object
    betti: tuple
    cup_ranks: tuple

    @property
    def total(self):
        return sum(self.betti)

    @property
    def euler_characteristic(self):
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def is_rational_homology_sphere(self):
        n = len(self.betti) - 1
        return self.betti[0] == 1 and self.betti[n] == 1 and not any(self.betti[1:n])


def cup_rank(e, degree):
    """Rank of x -> x * e from H^degree(B) into H^{degree + deg e}(B)."""
    A = e.parent
    idx = A.degree_indices(degree)
    if not idx:
        return 0
    return rank([(A.basis_element(i) * e).vector() for i in idx])


def gysin_betti(xi):
    """
    b_i(S(xi)) = (b_i - r_{i-n}) + (b_{i-k} - r_{i-k}) with n = rank,
    k = n - 1 and r_j the rank of cup with e on H^j(B).
    """
    if not xi.oriented:
        raise BundleError("the rational Gysin sequence needs an oriented bundle")
    if xi.rank < 2:
        raise BundleError("need rank >= 2 so that the fiber is a sphere of positive dimension")
    B = xi.base
    A = B.algebra
    n = xi.rank
    k = n - 1
    e = xi.euler
    top = B.dim
    b = A.betti()

    def bb(i):
        return b[i] if 0 <= i <= top else 0

    r = [cup_rank(e, j) for j in range(top + 1)]

    def rr(j):
        return r[j] if 0 <= j <= top else 0

    betti = tuple((bb(i) - rr(i - n)) + (bb(i - k) - rr(i - k)) for i in range(top + k + 1))
    return GysinProfile(B, k, e, betti, tuple(r))


@dataclass(frozen=True)
class SphereVerdict:
    verdict: Verdict
    check: str
    detail: str
    certificate: ObstructionCertificate = None

    @property
    def obstructed(self):
        return self.verdict == Verdict.OBSTRUCTED


NOTE_EULER = ("nonzero rational Euler class over a flat base: S(xi), and any closed manifold mapping "
              "to it by a fundamental-group isomorphism, has no metric of nonnegative Ricci curvature")
NOTE_PONT = ("Q(TB + xi) is nonzero on the base but dies on the universal cover model, "
             "so S(xi) has no metric of nonnegative Ricci curvature")


def sphere_euler_check(xi):
    """xi over a torus (standing in for a flat manifold)."""
    if not xi.base.is_torus:
        raise ObstructionError("the Euler check needs a torus base")
    if xi.rank < 2:
        raise BundleError("need rank >= 2")
    if xi.has_euler() and xi.euler:
        return SphereVerdict(Verdict.OBSTRUCTED, "sphere-euler", "e = %s; %s" % (xi.euler, NOTE_EULER))
    if not xi.oriented:
        why = "nonorientable bundle: no rational Euler class"
    elif xi.rank % 2:
        why = "odd rank forces e = 0"
    else:
        why = "e = 0"
    return SphereVerdict(Verdict.NO_OBSTRUCTION_FOUND, "sphere-euler", why)


def _universal_cover_ok(B):
    # a product of tori would be read as C x T with C a torus; only torus(k) qualifies
    if B.kind == "torus":
        return
    if not B.has_bigrading():
        raise ObstructionError("base %s is neither a torus nor of the form C x T" % B.name)
    if B.c_space.simply_connected is not True:
        raise ObstructionError("C = %s is not known to be simply connected, so its ring does not model "
                               "the universal cover" % B.c_space.name)


def sphere_pontrjagin_check(xi, Q=None, budget=DEFAULT_BUDGET):
    """
    Requires e(xi) = 0.  With Q given, test it; without, search the span of
    P-monomials (E excluded) for one that is nonzero on B and zero on the
    universal cover model.
    """
    B = xi.base
    _universal_cover_ok(B)
    if xi.has_euler() and xi.rank > 0 and xi.euler:
        raise ObstructionError("the Pontrjagin check needs e(xi) = 0")
    if isinstance(Q, str):
        Q = ClassPolynomial.parse(Q)
    if Q is not None and Q.uses_euler():
        raise ObstructionError("Q may not involve E here")
    gens = [g for g in generator_values(xi) if g[0] != "E"]
    if Q is None:
        found = search_witness(B, gens, budget)
    else:
        pvals = [x for _, _, x in gens]
        v = eval_poly(Q, None, pvals, B.algebra)
        found = (Q, v) if v and not B.restriction(v) else None
    cert = _certificate(B, gens, found, "sphere-pontrjagin", NOTE_PONT)
    if cert.obstructed:
        return SphereVerdict(Verdict.OBSTRUCTED, "sphere-pontrjagin", "Q = %s, value %s" % (cert.witness, cert.value),
                             cert)
    detail = "no P-polynomial found" if Q is None else "Q = %s does not separate" % Q
    return SphereVerdict(Verdict.NO_OBSTRUCTION_FOUND, "sphere-pontrjagin", detail, cert)


def check_sphere_product(C, xi, budget=DEFAULT_BUDGET):
    """
    C simply connected, xi over a torus: C x S(xi) is obstructed as soon as
    some p_i(xi) or e(xi) is nonzero.
    """
    if C.simply_connected is not True:
        raise ObstructionError("C must be simply connected")
    v = sphere_euler_check(xi)
    if v.obstructed:
        return v
    B = product(C, xi.base)
    pulled = external_product(trivial(C, 0), xi, B)
    return sphere_pontrjagin_check(pulled, None, budget)
