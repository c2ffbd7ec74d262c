"""
Decision procedures for nonnegative curvature on total spaces of bundles over
C x T.

The central test: if some rational polynomial Q in e(xi) and the Pontrjagin
classes of TB (+) xi is nonzero on B = C x T but its torus-degree-0 part (its
pullback to C) vanishes, the total space of xi carries no complete metric of
nonnegative sectional curvature.  ``find_obstruction`` searches the full span
of monomials up to the top degree for such a Q and returns a certificate that
can be re-checked without any geometry.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import expr
from .bundles import (Bundle, BundleError, external_product, from_total, newton_power_sums,
                      stabilize, tangent_bundle, trivial, whitney_sum)
from .coh_algebra import AlgebraElement, kernel_with_coefficients, rank
from .spaces import SpaceError, product, restriction_projection, torus, torus_cover_map

DEFAULT_BUDGET = 20000
MAX_GENERATORS = 12


class ObstructionError(ValueError):
    pass


class BudgetExceeded(ObstructionError):
    pass


class Verdict(str, enum.Enum):
    OBSTRUCTED = "Obstructed"
    NO_OBSTRUCTION_FOUND = "NoObstructionFound"
    KNOWN_NONNEG = "KnownNonnegativelyCurved"

    def __str__(self):
        return self.value


# -- class polynomials -----------------------------------------------------

def _trim(mono):
    mono = tuple(mono)
    while mono and mono[-1] == 0:
        mono = mono[:-1]
    return mono


def symbol_name(i):
    return "E" if i == 0 else "P%d" % i


def symbol_index(name):
    if name == "E":
        return 0
    if name.startswith("P") and name[1:].isdigit() and int(name[1:]) > 0:
        return int(name[1:])
    raise ObstructionError("unknown class symbol %r (use E, P1, P2, ...)" % name)


def monomial_key(mono, width):
    return tuple(mono) + (0,) * (width - len(mono))


class ClassPolynomial:
    """
    A polynomial with rational coefficients in E, P1, P2, ...; a monomial is
    the exponent vector (e, p1, p2, ...) with trailing zeros dropped.
    """

    def __init__(self, terms=None):
        out = {}
        for m, c in (terms or {}).items():
            m = _trim(m)
            c = Fraction(c)
            out[m] = out.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in out.items() if c}

    @classmethod
    def symbol(cls, name):
        i = symbol_index(name)
        return cls({tuple([0] * i + [1]): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def parse(cls, text):
        ast = expr.parse(text)
        return expr.evaluate(ast, cls.symbol, cls.constant(1))

    def width(self):
        return max((len(m) for m in self.terms), default=0)

    def monomials(self):
        w = self.width()
        return sorted(self.terms, key=lambda m: monomial_key(m, w))

    def support_key(self, width=None):
        w = self.width() if width is None else width
        return tuple(sorted(monomial_key(m, w) for m in self.terms))

    def uses_euler(self):
        return any(m and m[0] for m in self.terms)

    def p_indices(self):
        return sorted({i for m in self.terms for i, k in enumerate(m) if i and k})

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, ClassPolynomial):
            other = ClassPolynomial.constant(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return ClassPolynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return ClassPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ClassPolynomial):
            c = Fraction(other)
            return ClassPolynomial({m: c * v for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                n = max(len(m1), len(m2))
                m = tuple(a + b for a, b in zip(monomial_key(m1, n), monomial_key(m2, n)))
                out[m] = out.get(m, 0) + c1 * c2
        return ClassPolynomial(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        out = ClassPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ClassPolynomial.constant(other)
        if not isinstance(other, ClassPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            word = "*".join(symbol_name(i) + ("^%d" % k if k > 1 else "") for i, k in enumerate(m) if k)
            neg = c < 0
            a = -c if neg else c
            astr = str(a.numerator) if a.denominator == 1 else "%d/%d" % (a.numerator, a.denominator)
            if not word:
                body = astr
            elif a == 1:
                body = word
            else:
                body = astr + "*" + word
            if parts:
                parts.append(("- " if neg else "+ ") + body)
            else:
                parts.append(("-" if neg else "") + body)
        return " ".join(parts)

    __repr__ = __str__


def monomial_polynomial(mono):
    return ClassPolynomial({mono: 1})


def power_sum_polynomial(i):
    """s_i as a polynomial in P1..Pi."""
    ps = [ClassPolynomial.symbol("P%d" % j) for j in range(1, i + 1)]
    return newton_power_sums(ps, i, ClassPolynomial(), ClassPolynomial.constant(1))[-1]


def character_qprime(i):
    """
    Q' with P_i + Q' a nonzero multiple of s_i, so that the projection of
    p_i(TC) + Q'(TC) vanishes exactly when the degree-4i Pontrjagin character
    component of TC does.
    """
    s = power_sum_polynomial(i)
    lead = Fraction((-1) ** (i - 1) * i)
    return s * (1 / lead) - ClassPolynomial.symbol("P%d" % i)


def eval_poly(Q, e, p, algebra=None):
    """Substitute e for E and p[i-1] for Pi (missing entries are zero)."""
    if algebra is None:
        if e is not None:
            algebra = e.parent
        elif p:
            algebra = p[0].parent
        else:
            raise ObstructionError("cannot tell which algebra to evaluate in")
    if Q.uses_euler() and e is None:
        raise ObstructionError("polynomial uses E but no Euler class is available")
    one = algebra.one()
    out = algebra.zero()
    for m, c in Q.terms.items():
        v = one
        for i, k in enumerate(m):
            if not k:
                continue
            x = e if i == 0 else (p[i - 1] if i <= len(p) else algebra.zero())
            for _ in range(k):
                v = v * x
        out = out + v * c
    return out


# -- certificates ----------------------------------------------------------

@dataclass(frozen=True)
class ObstructionCertificate:
    verdict: Verdict
    base: object = None
    witness: ClassPolynomial = None
    value: AlgebraElement = None
    restriction: AlgebraElement = None
    generator_report: tuple = ()
    check: str = ""
    notes: str = ""

    @property
    def obstructed(self):
        return self.verdict == Verdict.OBSTRUCTED

    def generators(self):
        return dict(self.generator_report)


NOTE_RESTRICTION = ("a class polynomial in e(xi) and p(TB+xi) is nonzero on C x T but vanishes on C; "
                    "the total space admits no complete metric of nonnegative sectional curvature")
NOTE_NONE = "no polynomial in the searched span vanishes on C while staying nonzero; this is not a curvature guarantee"


def generator_values(xi, use_bundle_classes=False):
    """
    [(symbol, degree, class)]: E = e(xi) when xi is oriented of even positive
    rank, and P_i = p_i(TB (+) xi) (or p_i(xi)) for 4i <= dim B.
    """
    B = xi.base
    out = []
    if xi.has_euler() and xi.rank > 0:
        out.append(("E", xi.rank, xi.euler))
    total = xi if use_bundle_classes else whitney_sum(tangent_bundle(B), xi)
    for i in range(1, B.dim // 4 + 1):
        out.append(("P%d" % i, 4 * i, total.p(i)))
    return out


def _enumerate_monomials(degrees, top, budget):
    """Exponent vectors over the given generator degrees with 1 <= degree <= top."""
    out = []

    def rec(i, deg, mono):
        if i == len(degrees):
            if deg > 0:
                out.append(tuple(mono))
                if len(out) > budget:
                    raise BudgetExceeded("more than %d monomials to search" % budget)
            return
        d = degrees[i]
        k = 0
        while deg + k * d <= top:
            rec(i + 1, deg + k * d, mono + [k])
            k += 1
            if d == 0:
                break

    rec(0, 0, [])
    return out


def search_witness(space, gens, budget=DEFAULT_BUDGET, allow_euler=True, target_zero=None):
    """
    Look for Q in the given generators whose value is nonzero and whose
    image under ``target_zero`` (default: restriction to C) vanishes.

    gens is a list of (symbol, degree, class).  Returns (witness, value) or None.
    Single monomials are tried first in increasing exponent-vector order
    (E, P1, P2, ...); otherwise the reduced kernel basis element with the
    least sorted support is used.
    """
    if target_zero is None:
        target_zero = restriction_projection(space)
    width = max([symbol_index(s) for s, _, _ in gens] + [0]) + 1
    usable = [(symbol_index(s), d, x) for s, d, x in gens
              if x and (allow_euler or s != "E")]
    if len(usable) > MAX_GENERATORS:
        raise BudgetExceeded("%d generators exceeds the cap of %d" % (len(usable), MAX_GENERATORS))
    top = space.dim
    raw = _enumerate_monomials([d for _, d, _ in usable], top, budget)

    def full(mono):
        m = [0] * width
        for (idx, _, _), k in zip(usable, mono):
            m[idx] = k
        return tuple(m)

    monos = sorted(((full(m), m) for m in raw), key=lambda t: t[0])
    cache = {}

    def value(m):
        if m in cache:
            return cache[m]
        j = max(i for i, k in enumerate(m) if k)
        rest = list(m)
        rest[j] -= 1
        rest = tuple(rest)
        v = usable[j][2] if not any(rest) else value(rest) * usable[j][2]
        cache[m] = v
        return v

    values = []
    for fm, m in monos:
        v = value(m)
        values.append(v)
        if v and not target_zero.apply(v):
            return monomial_polynomial(fm), v
    keep = [(fm, v) for (fm, _), v in zip(monos, values) if v]
    if not keep:
        return None
    kern = kernel_with_coefficients(target_zero, [v for _, v in keep])
    if not kern:
        return None
    best = None
    for vec, lam in kern:
        Q = ClassPolynomial({fm: c for (fm, _), c in zip(keep, lam) if c})
        key = (len(Q.terms), Q.support_key(width))
        if best is None or key < best[0]:
            best = (key, Q, vec)
    return best[1], best[2]


def _gen_report(gens):
    return tuple((s, x) for s, _, x in gens)


def _certificate(space, gens, found, check, notes=NOTE_RESTRICTION):
    if found is None:
        return ObstructionCertificate(Verdict.NO_OBSTRUCTION_FOUND, space, generator_report=_gen_report(gens),
                                      check=check, notes=NOTE_NONE)
    Q, v = found
    e = dict((s, x) for s, _, x in gens).get("E")
    p = [dict((s, x) for s, _, x in gens).get("P%d" % i, space.algebra.zero())
         for i in range(1, space.dim // 4 + 1)]
    value = eval_poly(Q, e, p, space.algebra)
    restriction = space.restriction(value)
    if value != v or not value or restriction:
        raise AssertionError("internal error: witness does not re-evaluate consistently")
    return ObstructionCertificate(Verdict.OBSTRUCTED, space, Q, value, restriction, _gen_report(gens),
                                  check=check, notes=notes)


def find_obstruction(xi, budget=DEFAULT_BUDGET, use_bundle_classes=False):
    """
    Search for Q(e(xi), p_1(TB+xi), ...) nonzero on B = C x T with zero
    restriction to C.  Obstructed means the total space of xi admits no
    complete nonnegatively curved metric; NoObstructionFound decides nothing.
    """
    B = xi.base
    if not B.has_bigrading():
        raise ObstructionError("base %s is not of the form C x T" % B.name)
    gens = generator_values(xi, use_bundle_classes)
    return _certificate(B, gens, search_witness(B, gens, budget), "restriction-criterion")


# -- product bundles over C x T --------------------------------------------

def check_flat_product(eta, xi):
    """
    eta over C, xi over a torus.  Obstructed when some p_k(xi) != 0 (then
    P_{i+k} with i maximal for p_i(eta + TC) != 0 is a witness) or when
    xi has positive rank, e(xi) != 0, and either rank(eta) = 0 or e(eta) != 0.
    """
    if not xi.base.is_torus:
        raise ObstructionError("xi must live over a torus")
    C = eta.base
    B = product(C, xi.base)
    N = external_product(eta, xi, B)
    gens = generator_values(N)
    eta1 = whitney_sum(eta, tangent_bundle(C))
    i = max(j for j in range(len(eta1.pontrjagin) + 1) if eta1.p(j))
    ks = [k for k in range(1, len(xi.pontrjagin) + 1) if xi.p(k)]
    if ks:
        Q = ClassPolynomial.symbol("P%d" % (i + ks[0]))
        return _certificate(B, gens, (Q, eval_poly(Q, None, [x for s, _, x in gens if s != "E"], B.algebra)),
                            "flat-product/pontrjagin")
    euler_ok = eta.rank == 0 or (eta.has_euler() and bool(eta.euler))
    if xi.rank > 0 and xi.has_euler() and xi.euler and euler_ok:
        Q = ClassPolynomial.symbol("E")
        return _certificate(B, gens, (Q, N.euler), "flat-product/euler")
    return ObstructionCertificate(Verdict.NO_OBSTRUCTION_FOUND, B, generator_report=_gen_report(gens),
                                  check="flat-product", notes=NOTE_NONE)


def relative_nonzero(space, degree):
    """H^degree(C x T, C) != 0."""
    return bool(space.relative_indices(degree))


@dataclass
class FamilyResult:
    hypotheses_hold: bool
    reasons: list = field(default_factory=list)
    bundle: Bundle = None
    certificate: ObstructionCertificate = None
    search: ObstructionCertificate = None

    @property
    def verdict(self):
        if self.certificate is not None and self.certificate.obstructed:
            return Verdict.OBSTRUCTED
        return Verdict.NO_OBSTRUCTION_FOUND


def _tangent_of(C):
    try:
        return tangent_bundle(C)
    except (BundleError, SpaceError) as exc:
        raise ObstructionError(str(exc)) from None


def check_polynomialQ_family(C, i, qprime, torus_rank, multiple=1, budget=DEFAULT_BUDGET):
    """
    Hypotheses: H^{4i}(C x T, C) != 0 and the H^{4i}(C) part of
    p_i(TC) + Q'(TC) vanishes, Q' in P_j with 0 < j < i.  When they hold, a
    rank 2i+1 bundle with p_j = 0 (0<j<i) and p_i a nonzero relative class
    is built and Q = P_i + Q' is certified on it.
    """
    if i < 1:
        raise ObstructionError("need i >= 1")
    if not isinstance(qprime, ClassPolynomial):
        qprime = ClassPolynomial.parse(str(qprime))
    if qprime.uses_euler() or any(j >= i for j in qprime.p_indices()):
        raise ObstructionError("Q' may only involve P_j with 0 < j < %d" % i)
    B = product(C, torus(torus_rank))
    TC = _tangent_of(C)
    reasons = []
    rel = B.relative_indices(4 * i)
    if not rel:
        reasons.append("H^%d(C x T, C) = 0" % (4 * i))
    proj = (TC.p(i) + eval_poly(qprime, None, list(TC.pontrjagin), C.algebra)).homogeneous(4 * i)
    if proj:
        reasons.append("projection of p_%d(TC) + Q'(TC) to H^%d(C) is %s, not zero" % (i, 4 * i, proj))
    if reasons:
        return FamilyResult(False, reasons)
    x = B.algebra.basis_element(rel[0]) * multiple
    p = [B.algebra.zero()] * (i - 1) + [x]
    xi = Bundle(B, 2 * i + 1, True, None, p)
    gens = generator_values(xi)
    Q = ClassPolynomial.symbol("P%d" % i) + qprime
    pvals = [v for s, _, v in gens if s != "E"]
    cert = _certificate(B, gens, (Q, eval_poly(Q, None, pvals, B.algebra)), "polynomial-family")
    search = find_obstruction(xi, budget)
    return FamilyResult(True, ["hypotheses hold"], xi, cert, search)


def check_pdual(C, torus_rank, y=None, stabilize_by=0):
    """
    dim C = 4m+2 with p_m(TC) != 0 and a torus of rank >= 2: the rank 2
    bundle with e = y(x)1 + 1(x)t has p_{m+1}(TB+xi) with component
    2 p_m(TC) y (x) t in H^{4m+2}(C) (x) H^2(T), which restricts to 0 on C.
    """
    if (C.dim - 2) % 4:
        raise ObstructionError("dim C must be 4m+2, got %d" % C.dim)
    if torus_rank < 2:
        raise ObstructionError("need a torus of rank >= 2 for a degree-2 torus class")
    m = (C.dim - 2) // 4
    TC = _tangent_of(C)
    pm = TC.p(m)
    if not pm:
        raise ObstructionError("p_%d(TC) vanishes" % m)
    A = C.algebra
    if y is None:
        for k in A.degree_indices(2):
            cand = A.basis_element(k)
            if pm * cand:
                y = cand
                break
        if y is None:
            raise ObstructionError("no degree-2 basis class y with p_%d(TC) y != 0" % m)
    elif not (pm * y):
        raise ObstructionError("p_%d(TC) y vanishes for the supplied y" % m)
    T = torus(torus_rank)
    B = product(C, T)
    t = T.algebra.basis_element(T.algebra.degree_indices(2)[0])
    e = B.cross(y, T.algebra.one()) + B.cross(A.one(), t)
    xi = Bundle(B, 2, True, e, [e * e])
    total = whitney_sum(tangent_bundle(B), xi)
    expected = B.cross(pm * y, t) * 2
    component = B.torus_degree_part(total.p(m + 1), 2)
    if component != expected:
        raise AssertionError("p_%d(TB+xi) component %s differs from 2 p_m(TC) y t = %s"
                             % (m + 1, component, expected))
    xi = stabilize(xi, stabilize_by)
    gens = generator_values(xi)
    Q = ClassPolynomial.symbol("P%d" % (m + 1))
    pvals = [v for s, _, v in gens if s != "E"]
    cert = _certificate(B, gens, (Q, eval_poly(Q, None, pvals, B.algebra)), "pdual")
    return cert, xi, component


def stable_inverse(total):
    """(1 + x)^{-1} = sum (-x)^j for nilpotent x of positive degree."""
    one = total.parent.one()
    x = total - one
    if x.homogeneous(0):
        raise ObstructionError("total class must have constant term 1")
    out = one
    term = one
    while True:
        term = term * (-x)
        if not term:
            return out
        out = out + term


def normal_bundle(C):
    """Rank dim C bundle stably inverse to TC; Euler class taken to be 0."""
    TC = _tangent_of(C)
    inv = stable_inverse(TC.total_pontrjagin())
    return from_total(C, C.dim, True, C.algebra.zero() if C.dim % 2 == 0 or C.dim == 0 else None, inv) \
        if C.dim else trivial(C, 0)


def check_add_norm_bundle(C, i, rank_k, torus_rank, multiple=1):
    """
    H^{4i}(C x T, C) != 0 and rank >= dim C: xi restricts to nu(C) on C and
    p_i(xi) has a nonzero relative part, so p_i(xi + TB) restricts to zero on C
    while staying nonzero.
    """
    if rank_k < C.dim:
        raise ObstructionError("rank %d is below dim C = %d" % (rank_k, C.dim))
    if rank_k <= 2 * i:
        raise ObstructionError("rank %d must exceed 2i = %d to carry a free p_%d" % (rank_k, 2 * i, i))
    B = product(C, torus(torus_rank))
    rel = B.relative_indices(4 * i)
    if not rel:
        raise ObstructionError("H^%d(C x T, C) = 0" % (4 * i))
    nu = normal_bundle(C)
    x = B.algebra.basis_element(rel[0]) * multiple
    total = B.from_c(nu.total_pontrjagin()) + x
    xi = from_total(B, rank_k, True, B.algebra.zero(), total)
    TB = tangent_bundle(B)
    s = whitney_sum(xi, TB)
    if B.restriction(s.total_pontrjagin()) != B.algebra.one():
        raise AssertionError("nu(C) + TC should be stably trivial")
    if s.p(i) != x:
        raise AssertionError("relative part of p_%d(xi + TB) should be the chosen class" % i)
    gens = generator_values(xi)
    Q = ClassPolynomial.symbol("P%d" % i)
    pvals = [v for sym, _, v in gens if sym != "E"]
    cert = _certificate(B, gens, (Q, eval_poly(Q, None, pvals, B.algebra)), "normal-bundle")
    return cert, xi


# -- realization after finite covers ---------------------------------------

class RealizationError(ObstructionError):
    def __init__(self, problems):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


def realize(xi_c, space, euler=None, pontrjagin=(), m=1):
    """
    Classes e', p'_1.. on C x T restricting to those of xi_c on C are realized
    by a bundle after the cover along T of multiplier m: each torus-degree-j
    component gets multiplied by m^j.  m is supplied by the caller.
    """
    if not space.has_bigrading():
        raise ObstructionError("target space must be of the form C x T")
    if xi_c.base != space.c_space:
        raise ObstructionError("xi lives over %s, not over C = %s" % (xi_c.base.name, space.c_space.name))
    n = xi_c.rank
    A = space.algebra
    p = list(pontrjagin) + [A.zero()] * (n // 2 - len(pontrjagin))
    problems = []
    if len(p) > n // 2:
        problems.append("rank %d allows only p_1..p_%d" % (n, n // 2))
        p = p[:n // 2]
    for k, x in enumerate(p, 1):
        if x.parent != A or not x.is_homogeneous(4 * k):
            problems.append("p'_%d must be a degree-%d class on %s" % (k, 4 * k, space.name))
        elif space.to_c(x) != xi_c.p(k):
            problems.append("p'_%d restricts to %s on C, but p_%d(xi) = %s"
                            % (k, space.to_c(x), k, xi_c.p(k)))
    if xi_c.oriented:
        e = A.zero() if euler is None else euler
        if e.parent != A or not e.is_homogeneous(n):
            problems.append("e' must be a degree-%d class" % n)
        else:
            if n % 2 and e:
                problems.append("e' must vanish for odd rank %d" % n)
            if n % 2 == 0 and n and p and p[n // 2 - 1] != e * e:
                problems.append("p'_%d must equal e' squared" % (n // 2))
            if n and space.to_c(e) != xi_c.euler:
                problems.append("e' restricts to %s on C, but e(xi) = %s" % (space.to_c(e), xi_c.euler))
    else:
        e = None
        if euler is not None and euler:
            problems.append("a nonorientable bundle has no Euler class")
    if problems:
        raise RealizationError(problems)
    g = torus_cover_map(space, m, check=False).induced.apply
    if n == 0:
        return trivial(space, 0)
    return Bundle(space, n, xi_c.oriented, None if e is None else g(e), [g(x) for x in p])


def nonisomorphic_family(space, i, rank_n, js, m=1):
    """eta_j: trivial on C, p_i = cover image of j times a relative class."""
    rel = space.relative_indices(4 * i)
    if not rel:
        raise ObstructionError("H^%d(C x T, C) = 0" % (4 * i))
    if rank_n <= 2 * i:
        raise ObstructionError("rank must exceed 2i")
    x = space.algebra.basis_element(rel[0])
    base = trivial(space.c_space, rank_n)
    out = []
    for j in js:
        if j == 0:
            raise ObstructionError("j must be nonzero")
        p = [space.algebra.zero()] * (i - 1) + [x * j]
        out.append(realize(base, space, None, p, m))
    return out


@dataclass
class CoverComparison:
    same: bool
    rank: bool
    orientation: bool
    pontrjagin: bool
    euler: bool
    restriction: bool
    caveat: str = ("agreement of restrictions to C is only checked on rational classes; an isomorphism "
                   "over C x * is assumed as stated by the user")


def same_in_finite_cover(xi, eta):
    """
    Bundles over C x T with the same rational classes and isomorphic
    restrictions to C become isomorphic after a finite cover along T.
    """
    if xi.base != eta.base:
        raise ObstructionError("bundles live over different bases")
    B = xi.base
    r = xi.rank == eta.rank
    o = xi.oriented == eta.oriented
    n = max(len(xi.pontrjagin), len(eta.pontrjagin))
    p = all(xi.p(k) == eta.p(k) for k in range(1, n + 1))
    e = (xi.euler is None) == (eta.euler is None) and (xi.euler is None or xi.euler == eta.euler)
    if B.has_bigrading():
        res = all(B.restriction(xi.p(k)) == B.restriction(eta.p(k)) for k in range(1, n + 1))
        if xi.euler is not None and eta.euler is not None:
            res = res and B.restriction(xi.euler) == B.restriction(eta.euler)
    else:
        res = p and e
    return CoverComparison(r and o and p and e and res, r, o, p, e, res)


def betti_obstruction(total_betti_p, total_betti_c, k):
    """
    A fibration C -> P -> T^k with a nonzero rational differential has
    dim H^*(P) < dim H^*(C) * 2^k, which rules out nonnegative curvature.
    """
    if total_betti_p <= 0 or total_betti_c <= 0 or k < 0:
        raise ObstructionError("Betti totals must be positive and the torus rank nonnegative")
    if total_betti_p < total_betti_c * 2 ** k:
        return Verdict.OBSTRUCTED
    return Verdict.NO_OBSTRUCTION_FOUND


def span_meets_kernel_trivially(space, values):
    """rank(values) == rank(restrictions): the check NoObstructionFound rests on."""
    R = restriction_projection(space)
    vs = [v.vector() for v in values]
    rs = [R.apply(v).vector() for v in values]
    return rank(vs) == rank(rs)
