"""
Vector bundles recorded by their rational characteristic classes.

A Bundle carries its rank, an orientation flag, the rational Euler class (for
oriented bundles; zero when the rank is odd) and Pontrjagin classes
p_1 .. p_{rank//2}.  All operations work on the classes only.  Over C x T
consistent class data is realized by an honest bundle once a finite cover
along the torus is allowed (see ``obstruction.realize``).
"""

from fractions import Fraction

from .coh_algebra import AlgebraElement
from .spaces import SpaceError, product


class BundleError(ValueError):
    pass


class Bundle:
    def __init__(self, base, rank, oriented=True, euler=None, pontrjagin=(), name=None):
        A = base.algebra
        rank = int(rank)
        if rank < 0:
            raise BundleError("rank must be nonnegative")
        self.base = base
        self.rank = rank
        self.oriented = bool(oriented) or rank == 0
        self.name = name
        n = rank // 2
        p = list(pontrjagin)
        if oriented and rank and rank % 2 == 0 and euler is not None and len(p) < n:
            # p_{n/2} left out: it is determined by the Euler class
            p = p + [A.zero()] * (n - 1 - len(p)) + [euler * euler]
        if len(p) > n:
            extra = [x for x in p[n:] if x]
            if extra:
                raise BundleError("rank %d bundle has only p_1..p_%d" % (rank, n))
            p = p[:n]
        p = [A.zero() if x is None else x for x in p] + [A.zero()] * (n - len(p))
        for i, x in enumerate(p, 1):
            self._check_class(x, 4 * i, "p_%d" % i)
        self.pontrjagin = tuple(p)

        if not self.oriented:
            if euler is not None and euler:
                raise BundleError("a nonorientable bundle carries no rational Euler class")
            self.euler = None
        else:
            if rank == 0:
                e = A.one() if euler is None else euler
                if e != A.one():
                    raise BundleError("the rank-0 bundle has Euler class 1")
            else:
                e = A.zero() if euler is None else euler
                self._check_class(e, rank, "euler")
                if rank % 2 and e:
                    raise BundleError("odd rank %d forces zero rational Euler class" % rank)
                if rank % 2 == 0 and self.pontrjagin[n - 1] != e * e:
                    raise BundleError("p_%d must equal euler^2 for an oriented rank %d bundle" % (n, rank))
            self.euler = e

    def _check_class(self, x, degree, what):
        if not isinstance(x, AlgebraElement):
            raise BundleError("%s must be an algebra element" % what)
        if x.parent != self.base.algebra:
            raise BundleError("%s does not live on the base %s" % (what, self.base.name))
        if not x.is_homogeneous(degree):
            raise BundleError("%s must be homogeneous of degree %d" % (what, degree))

    def p(self, i):
        """p_i with p_0 = 1 and zero past the rank."""
        if i == 0:
            return self.base.algebra.one()
        if 1 <= i <= len(self.pontrjagin):
            return self.pontrjagin[i - 1]
        return self.base.algebra.zero()

    def total_pontrjagin(self):
        out = self.base.algebra.one()
        for x in self.pontrjagin:
            out = out + x
        return out

    def has_euler(self):
        """True when a rational Euler class is defined and can enter polynomials."""
        return self.oriented and self.rank % 2 == 0

    def is_rationally_trivial(self):
        return all(not x for x in self.pontrjagin) and (self.euler is None or self.rank == 0 or not self.euler)

    def __eq__(self, other):
        if not isinstance(other, Bundle):
            return NotImplemented
        return (self.base == other.base and self.rank == other.rank and self.oriented == other.oriented
                and self.euler == other.euler and self.pontrjagin == other.pontrjagin)

    def __hash__(self):
        return hash((self.base, self.rank, self.oriented, self.euler, self.pontrjagin))

    def __repr__(self):
        parts = ["rank %d" % self.rank, "oriented" if self.oriented else "nonorientable"]
        if self.euler is not None and self.rank:
            parts.append("e=%s" % self.euler)
        for i, x in enumerate(self.pontrjagin, 1):
            if x:
                parts.append("p%d=%s" % (i, x))
        return "Bundle(%s over %s)" % (", ".join(parts), self.base.name)


def trivial(base, rank=0):
    return Bundle(base, rank, oriented=True)


def from_total(base, rank, oriented, euler, total):
    """Build a bundle from a total Pontrjagin class, cut off at rank//2."""
    p = [total.homogeneous(4 * i) for i in range(1, rank // 2 + 1)]
    return Bundle(base, rank, oriented, euler, p)


def whitney_sum(xi, eta):
    if xi.base != eta.base:
        raise BundleError("Whitney sum needs a common base")
    rank = xi.rank + eta.rank
    total = xi.total_pontrjagin() * eta.total_pontrjagin()
    oriented = xi.oriented and eta.oriented
    e = xi.euler * eta.euler if oriented else None
    return from_total(xi.base, rank, oriented, e, total)


def external_product(xi, eta, space=None):
    """xi x eta over A x B: total Pontrjagin and Euler classes cross."""
    if space is None:
        space = product(xi.base, eta.base)
    if space.left != xi.base or space.right != eta.base:
        raise BundleError("bases do not match the factors of %s" % space.name)
    rank = xi.rank + eta.rank
    total = space.cross(xi.total_pontrjagin(), eta.total_pontrjagin())
    oriented = xi.oriented and eta.oriented
    e = space.cross(xi.euler, eta.euler) if oriented else None
    return from_total(space, rank, oriented, e, total)


def pullback(f, xi):
    """f^# xi for f: X -> Y and xi over Y."""
    if f.target != xi.base:
        raise BundleError("map target %s is not the bundle base %s" % (f.target.name, xi.base.name))
    g = f.induced.apply
    e = None if xi.euler is None else g(xi.euler)
    return Bundle(f.source, xi.rank, xi.oriented, e, [g(x) for x in xi.pontrjagin])


def stabilize(xi, r):
    """xi (+) trivial rank r; rational Euler class dies for r >= 1."""
    r = int(r)
    if r < 0:
        raise BundleError("cannot stabilize by a negative rank")
    if r == 0:
        return xi
    A = xi.base.algebra
    e = A.zero() if xi.oriented else None
    return Bundle(xi.base, xi.rank + r, xi.oriented, e, xi.pontrjagin)


def tangent_bundle(X):
    """
    Rational tangent data of a model space: spheres and tori are stably
    trivial, TCP^n has p = (1+a^2)^(n+1) and e = (n+1)a^n, products cross.
    """
    A = X.algebra
    if X.kind == "point":
        return trivial(X, 0)
    if X.kind == "sphere":
        n = X.params[0]
        e = 2 * X.generator("s") if n % 2 == 0 else A.zero()
        return Bundle(X, n, True, e)
    if X.kind == "torus":
        return trivial(X, X.params[0])
    if X.kind == "cp":
        n = X.params[0]
        a = X.generator("a")
        total = (A.one() + a * a) ** (n + 1)
        return from_total(X, 2 * n, True, (n + 1) * a ** n, total)
    if X.kind == "product":
        return external_product(tangent_bundle(X.left), tangent_bundle(X.right), X)
    if X.kind == "manual":
        t = X.tangent
        if t is None:
            raise BundleError("manual space %s has no tangent data" % X.name)
        return Bundle(X, t.get("rank", X.dim), t.get("oriented", True), t.get("euler"), t.get("pontrjagin", ()))
    raise SpaceError("unknown space kind %r" % X.kind)


def newton_power_sums(p, r, zero, one):
    """
    Power sums s_1..s_r of formal roots from elementary symmetric p_1..p_r:
        s_k = sum_{i<k} (-1)^(i-1) p_i s_{k-i} + (-1)^(k-1) k p_k.
    Works for any ring whose elements support +, -, * (algebra elements,
    class polynomials, sympy expressions).
    """
    def pk(i):
        return p[i - 1] if i <= len(p) else zero

    s = []
    for k in range(1, r + 1):
        acc = zero
        for i in range(1, k):
            term = pk(i) * s[k - i - 1]
            acc = acc + term if i % 2 else acc - term
        last = pk(k) * k
        acc = acc + last if k % 2 else acc - last
        s.append(acc)
    return s


def power_sums(xi, r):
    """
    s_1..s_r of the Pontrjagin roots of xi.  The degree-4i part of the
    Pontrjagin character is 2 s_i / (2i)!, a nonzero multiple, so vanishing
    tests can use s_i directly.
    """
    if r < 1:
        raise BundleError("need r >= 1")
    A = xi.base.algebra
    return newton_power_sums(list(xi.pontrjagin), r, A.zero(), A.one())


def pontrjagin_character_scale(i):
    """ph_i = scale * s_i."""
    f = 1
    for k in range(2, 2 * i + 1):
        f *= k
    return Fraction(2, f)
