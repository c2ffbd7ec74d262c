"""
Complete answers in low dimensions.

Over S^1 x S^3 a bundle has a nonnegatively curved total space exactly when
it is trivial or the Moebius line bundle plus a trivial bundle.  Over
S^1 x S^2 every bundle splits as a product and is nonnegatively curved.  Over
S^4 the rank-4 bundles are indexed by pairs (m, n) with p1 = 2(m - n) and
e = m + n.

The Z/2 data needed here is carried as explicit bits.
"""

from dataclasses import dataclass

from .bundles import Bundle
from .obstruction import Verdict
from .spaces import product, sphere, torus

S1XS3 = "S1xS3"
S1XS2 = "S1xS2"


class LowDimError(ValueError):
    pass


@dataclass(frozen=True)
class LowDimBundle:
    """
    base: "S1xS3" or "S1xS2"; p1 and e are integer coefficients of the
    relevant generators.  ``lift_trivial`` only applies to nonorientable
    bundles over S^1 x S^3 (is the pullback to the orientation cover
    trivial?); ``w2`` only to rank >= 3 bundles over S^1 x S^2.
    """
    base: str
    rank: int
    w1: int = 0
    p1: int = 0
    e: int = 0
    lift_trivial: int = None
    w2: int = None

    def __post_init__(self):
        if self.base not in (S1XS3, S1XS2):
            raise LowDimError("base must be S1xS3 or S1xS2")
        if self.rank < 1:
            raise LowDimError("rank must be at least 1")
        if self.w1 not in (0, 1):
            raise LowDimError("w1 is a bit")
        if self.rank % 2 and self.e:
            raise LowDimError("odd rank %d forces e = 0" % self.rank)
        if self.w1 and self.e:
            raise LowDimError("a nonorientable bundle has no Euler class")
        if self.w1 == 0 and self.lift_trivial is not None:
            raise LowDimError("the orientation-lift flag only makes sense when w1 = 1")
        if self.lift_trivial not in (None, 0, 1):
            raise LowDimError("lift_trivial is a bit")
        if self.w2 not in (None, 0, 1):
            raise LowDimError("w2 is a bit")
        if self.base == S1XS3:
            if self.w2 is not None:
                raise LowDimError("w2 is not part of the S1xS3 data (H^2 vanishes)")
            if self.rank < 2 and self.p1:
                raise LowDimError("a line bundle has no p1")
            if self.rank == 2 and (self.e or self.p1):
                raise LowDimError("rank 2 over S1xS3: H^2 = 0 forces e = 0 and p1 = e^2 = 0")
            if self.rank > 4 and self.e:
                raise LowDimError("e lives in H^%d = 0" % self.rank)
        else:
            if self.p1:
                raise LowDimError("S1xS2 has no degree-4 cohomology, so p1 = 0")
            if self.lift_trivial is not None:
                raise LowDimError("the orientation-lift flag is only used over S1xS3")
            if self.e and self.rank != 2:
                raise LowDimError("e lives in H^%d(S1xS2) = 0" % self.rank)
            if self.w2 is not None and self.rank < 3:
                raise LowDimError("w2 is only an independent datum for rank >= 3")

    @property
    def oriented(self):
        return self.w1 == 0


def reduce_rank(b):
    """Split off a trivial summand so that the rank is at most 4."""
    if b.rank <= 4:
        return b, 0
    extra = b.rank - 4
    return LowDimBundle(b.base, 4, b.w1, b.p1, 0, b.lift_trivial, b.w2), extra


@dataclass(frozen=True)
class S4BundleClass:
    m: int
    n: int


def s4_invariants(c):
    """(p1, e) of the rank-4 bundle over S^4 with coordinates (m, n)."""
    return 2 * (c.m - c.n), c.m + c.n


def s4_realizable(rank, p1, e):
    if rank == 3:
        if e:
            raise LowDimError("odd rank forces e = 0")
        return p1 % 4 == 0
    if rank == 4:
        return p1 % 2 == 0 and (p1 // 2 - e) % 2 == 0
    raise LowDimError("only ranks 3 and 4 are supported")


def s4_preimage(p1, e):
    """(m, n) with s4_invariants = (p1, e), or None."""
    if not s4_realizable(4, p1, e):
        return None
    d = p1 // 2
    return S4BundleClass((e + d) // 2, (e - d) // 2)


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    kind: str
    detail: str
    trivial_summand: int = 0


def classify_s1s3(b):
    if b.base != S1XS3:
        raise LowDimError("expected a bundle over S1xS3")
    r, extra = reduce_rank(b)
    if r.w1 == 0:
        bad = [name for name, v in (("p1", r.p1), ("e", r.e)) if v]
        if bad:
            return Classification(Verdict.OBSTRUCTED, "Obstructed",
                                  "nonzero %s; the pullback to the universal cover is trivial, so these "
                                  "classes must vanish" % " and ".join(bad), extra)
        return Classification(Verdict.KNOWN_NONNEG, "Trivial", "trivial rank %d bundle" % b.rank, extra)
    lift = r.lift_trivial
    if lift is None:
        if b.rank == 1:
            lift = 1
        elif r.p1 == 0:
            raise LowDimError("w1 = 1 with p1 = 0: the orientation-lift flag is required")
    if r.p1:
        if lift == 1:
            raise LowDimError("a trivial orientation lift has p1 = 0, but p1 = %d" % r.p1)
        return Classification(Verdict.OBSTRUCTED, "Obstructed",
                              "nonzero p1 survives in the orientation lift, which is then nontrivial", extra)
    if lift == 1:
        return Classification(Verdict.KNOWN_NONNEG, "MoebiusPlusTrivial",
                              "Moebius line bundle over S1 times a trivial rank %d bundle over S3" % (b.rank - 1),
                              extra)
    return Classification(Verdict.OBSTRUCTED, "Obstructed", "nontrivial orientation lift", extra)


@dataclass(frozen=True)
class Decomposition:
    verdict: Verdict
    s1_factor: str
    s2_factor: str
    trivial_rank: int

    @property
    def detail(self):
        return "%s over S1, %s over S2, plus trivial rank %d" % (self.s1_factor, self.s2_factor, self.trivial_rank)


def classify_s1s2(b):
    """Every bundle over S1 x S2 is a product of bundles over the factors."""
    if b.base != S1XS2:
        raise LowDimError("expected a bundle over S1xS2")
    line = "Moebius line" if b.w1 else "trivial line"
    if b.rank == 1:
        return Decomposition(Verdict.KNOWN_NONNEG, line, "rank 0", 0)
    if b.rank == 2:
        if b.w1 == 0:
            return Decomposition(Verdict.KNOWN_NONNEG, "rank 0", "rank 2 with Euler number %d" % b.e, 0)
        # the orientation cover has e = 0, so the restriction to S2 is trivial
        return Decomposition(Verdict.KNOWN_NONNEG, "rank 2 (Moebius + trivial line)", "rank 0", 0)
    w2 = b.w2 or 0
    s2 = "rank 2 with w2 = 1" if w2 else "trivial rank 2"
    return Decomposition(Verdict.KNOWN_NONNEG, line, s2, b.rank - 3)


def to_descriptor(b):
    """The rational descriptor over sphere(3) x torus(1) or sphere(2) x torus(1)."""
    n = 3 if b.base == S1XS3 else 2
    B = product(sphere(n), torus(1))
    top = B.orientation_class()
    A = B.algebra
    p = []
    if b.rank >= 2:
        p = [top * b.p1 if n == 3 else A.zero()]
    if not b.oriented:
        return Bundle(B, b.rank, False, None, p)
    if b.base == S1XS3:
        e = top * b.e if b.rank == 4 else A.zero()
    else:
        e = B.generator("s") * b.e if b.rank == 2 else A.zero()
    if b.rank == 2 and n == 2:
        p = [A.zero()]
    return Bundle(B, b.rank, True, e, p)
