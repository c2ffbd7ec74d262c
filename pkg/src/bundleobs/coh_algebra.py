"""
Finite-dimensional graded-commutative algebras over Q.

Everything here is exact: coefficients are ``fractions.Fraction`` and no
floating point is ever introduced.  An algebra is given by an ordered basis of
(label, degree) pairs and a sparse table of structure constants.  Products that
would land above ``top_degree`` simply do not appear in the table, which is
how cohomological vanishing above the dimension is modelled.
"""

from fractions import Fraction


class AlgebraError(ValueError):
    pass


def _frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def canonical_key(label, degree):
    return (degree, label)


class GradedAlgebra:
    """
    A graded-commutative Q-algebra with an explicit basis.

    ``basis`` is a sequence of (label, degree) pairs in canonical order
    (degree, then label).  ``structure`` maps a pair of basis indices (i, j)
    to a tuple of (k, coefficient) pairs giving basis[i]*basis[j].  Missing
    pairs multiply to zero.
    """

    def __init__(self, basis, structure, top_degree, check=True):
        self.basis = tuple((str(l), int(d)) for l, d in basis)
        self.top_degree = int(top_degree)
        table = {}
        for (i, j), terms in structure.items():
            acc = {}
            for k, c in terms:
                c = _frac(c)
                acc[k] = acc.get(k, Fraction(0)) + c
            acc = tuple(sorted((k, c) for k, c in acc.items() if c != 0))
            if acc:
                table[(i, j)] = acc
        self.structure = table
        self.labels = tuple(l for l, _ in self.basis)
        self.degrees = tuple(d for _, d in self.basis)
        self.index = {l: i for i, l in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise AlgebraError("duplicate basis labels")
        zero_deg = [i for i, d in enumerate(self.degrees) if d == 0]
        if len(zero_deg) != 1:
            raise AlgebraError("need exactly one basis element in degree 0, got %d" % len(zero_deg))
        self.unit_index = zero_deg[0]
        self._hash = None
        if check:
            problems = self.cheap_violations()
            if problems:
                raise AlgebraError("; ".join(problems[:5]))

    # -- structure ---------------------------------------------------

    @property
    def dim(self):
        return len(self.basis)

    def degree_indices(self, d):
        return [i for i, dd in enumerate(self.degrees) if dd == d]

    def betti(self):
        """Graded dimensions b_0 .. b_top."""
        out = [0] * (self.top_degree + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    def poincare(self):
        return tuple(self.betti())

    def mul_basis(self, i, j):
        return self.structure.get((i, j), ())

    # -- elements ----------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {self.unit_index: Fraction(1)})

    def basis_element(self, i):
        if isinstance(i, str):
            if i not in self.index:
                raise AlgebraError("unknown basis label %r" % i)
            i = self.index[i]
        return AlgebraElement(self, {i: Fraction(1)})

    def element(self, coords):
        out = {}
        for k, c in coords.items():
            if isinstance(k, str):
                k = self.index[k]
            out[k] = out.get(k, Fraction(0)) + _frac(c)
        return AlgebraElement(self, out)

    def from_vector(self, vec):
        return AlgebraElement(self, {i: c for i, c in enumerate(vec) if c})

    # -- verification ------------------------------------------------

    def cheap_violations(self):
        """Unit law, degree additivity and top-degree truncation."""
        out = []
        u = self.unit_index
        for i in range(self.dim):
            for left in (True, False):
                terms = self.mul_basis(u, i) if left else self.mul_basis(i, u)
                if terms != ((i, Fraction(1)),):
                    out.append("unit law fails on %s" % self.labels[i])
        for i, d in enumerate(self.degrees):
            if d < 0 or d > self.top_degree:
                out.append("basis element %s has degree %d outside [0, %d]"
                           % (self.labels[i], d, self.top_degree))
        for (i, j), terms in self.structure.items():
            for k, _ in terms:
                if not 0 <= k < self.dim:
                    out.append("structure constant refers to index %d" % k)
                elif self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    out.append("deg(%s*%s) != deg %s" % (self.labels[i], self.labels[j], self.labels[k]))
        return out

    def violations(self):
        """
        Exhaustive check of all algebra axioms; returns a list of problems.

        Triples whose degrees sum past top_degree are skipped: once degree
        additivity holds both sides of the associativity law vanish there.
        """
        out = self.cheap_violations()
        if out:
            return out
        deg = self.degrees
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                s = -1 if (deg[i] * deg[j]) % 2 else 1
                a = dict(self.mul_basis(i, j))
                b = {k: s * c for k, c in self.mul_basis(j, i)}
                if a != b:
                    out.append("graded commutativity fails for %s, %s" % (self.labels[i], self.labels[j]))
        top = self.top_degree
        order = sorted(range(n), key=lambda i: deg[i])
        for i in order:
            if i == self.unit_index:
                continue
            for j in order:
                if deg[i] + deg[j] > top:
                    break
                if j == self.unit_index:
                    continue
                ij = self.mul_basis(i, j)
                for k in order:
                    if deg[i] + deg[j] + deg[k] > top:
                        break
                    if k == self.unit_index:
                        continue
                    lhs = {}
                    for m, c in ij:
                        for r, c2 in self.mul_basis(m, k):
                            lhs[r] = lhs.get(r, 0) + c * c2
                    rhs = {}
                    for m, c in self.mul_basis(j, k):
                        for r, c2 in self.mul_basis(i, m):
                            rhs[r] = rhs.get(r, 0) + c * c2
                    lhs = {r: c for r, c in lhs.items() if c}
                    rhs = {r: c for r, c in rhs.items() if c}
                    if lhs != rhs:
                        out.append("associativity fails for (%s,%s,%s)"
                                   % (self.labels[i], self.labels[j], self.labels[k]))
        return out

    def verify(self):
        problems = self.violations()
        if problems:
            raise AlgebraError("; ".join(problems[:5]))
        return self

    # -- equality ----------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.basis == other.basis and self.top_degree == other.top_degree
                and self.structure == other.structure)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, self.top_degree, len(self.structure)))
        return self._hash

    def __repr__(self):
        return "GradedAlgebra(dim=%d, top=%d)" % (self.dim, self.top_degree)


def fstr(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class AlgebraElement:
    """A sparse linear combination of basis elements of a GradedAlgebra."""

    __slots__ = ("parent", "coords", "_hash")

    def __init__(self, parent, coords):
        self.parent = parent
        clean = {}
        for k, c in coords.items():
            if c:
                if not 0 <= k < parent.dim:
                    raise AlgebraError("basis index %d out of range" % k)
                clean[k] = c if isinstance(c, Fraction) else Fraction(c)
        self.coords = clean
        self._hash = None

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement, got %r" % type(other).__name__)
        if other.parent is not self.parent and other.parent != self.parent:
            raise AlgebraError("elements live in different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.parent.one() * other
        self._check(other)
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, 0) + c
        return AlgebraElement(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.parent, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return AlgebraElement(self.parent, {k: c * other for k, c in self.coords.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.parent.one()
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coords)

    def is_zero(self):
        return not self.coords

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coords
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.parent is not self.parent and other.parent != self.parent:
            return False
        return self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coords.items()))
        return self._hash

    # -- grading -----------------------------------------------------

    def degrees(self):
        return sorted({self.parent.degrees[k] for k in self.coords})

    def homogeneous(self, d):
        degs = self.parent.degrees
        return AlgebraElement(self.parent, {k: c for k, c in self.coords.items() if degs[k] == d})

    def is_homogeneous(self, d=None):
        ds = self.degrees()
        if not ds:
            return True
        if len(ds) > 1:
            return False
        return d is None or ds[0] == d

    def constant_term(self):
        return self.coords.get(self.parent.unit_index, Fraction(0))

    def vector(self):
        v = [Fraction(0)] * self.parent.dim
        for k, c in self.coords.items():
            v[k] = c
        return v

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "<%s>" % format_element(self)


def format_element(x):
    """Render as a Q-linear combination of basis labels in canonical basis order."""
    if not x.coords:
        return "0"
    parts = []
    for k in sorted(x.coords):
        c = x.coords[k]
        label = x.parent.labels[k]
        neg = c < 0
        a = -c if neg else c
        if k == x.parent.unit_index:
            body = fstr(a)
        elif a == 1:
            body = label
        else:
            body = "%s*%s" % (fstr(a), label)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def multiply(a, b):
    """Cup product: bilinear extension of the structure constants."""
    a._check(b)
    A = a.parent
    table = A.structure
    acc = {}
    for i, ci in a.coords.items():
        for j, cj in b.coords.items():
            terms = table.get((i, j))
            if not terms:
                continue
            cij = ci * cj
            for k, c in terms:
                acc[k] = acc.get(k, 0) + cij * c
    return AlgebraElement(A, acc)


class LinearMap:
    """
    A degree-preserving linear map between graded algebras, given by the image
    of each source basis element.
    """

    def __init__(self, source, target, images):
        images = tuple(images)
        if len(images) != source.dim:
            raise AlgebraError("need one image per source basis element")
        for i, y in enumerate(images):
            if y.parent is not target and y.parent != target:
                raise AlgebraError("image of %s does not live in the target" % source.labels[i])
            if not y.is_homogeneous(source.degrees[i]):
                raise AlgebraError("image of %s is not of degree %d" % (source.labels[i], source.degrees[i]))
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, x):
        return self.apply(x)

    def apply(self, x):
        if x.parent is not self.source and x.parent != self.source:
            raise AlgebraError("element does not live in the source algebra")
        acc = {}
        for i, c in x.coords.items():
            for k, d in self.images[i].coords.items():
                acc[k] = acc.get(k, 0) + c * d
        return AlgebraElement(self.target, acc)

    def then(self, other):
        """The composite ``other after self``."""
        if other.source != self.target:
            raise AlgebraError("maps do not compose")
        return type(self)._compose(self, other)

    @staticmethod
    def _compose(first, second):
        imgs = [second.apply(y) for y in first.images]
        if isinstance(first, AlgebraMap) and isinstance(second, AlgebraMap):
            return AlgebraMap(first.source, second.target, imgs, check=False)
        return LinearMap(first.source, second.target, imgs)

    def matrix(self):
        """Rows = images of source basis vectors as dense target vectors."""
        return [y.vector() for y in self.images]

    def rank(self):
        return rank(self.matrix())

    def is_injective(self):
        return self.rank() == self.source.dim

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.images == other.images

    __hash__ = None


class AlgebraMap(LinearMap):
    """A unital, multiplicative LinearMap."""

    def __init__(self, source, target, images, check=True):
        super().__init__(source, target, images)
        if check:
            problems = self.violations()
            if problems:
                raise AlgebraError("; ".join(problems[:5]))

    def violations(self):
        out = []
        S = self.source
        if self.images[S.unit_index] != self.target.one():
            out.append("unit is not sent to unit")
        # both sides vanish once the degree exceeds both algebras' tops
        bound = max(S.top_degree, self.target.top_degree)
        for i in range(S.dim):
            for j in range(S.dim):
                if S.degrees[i] + S.degrees[j] > bound:
                    continue
                lhs = self.apply(AlgebraElement(S, dict(S.mul_basis(i, j))))
                rhs = self.images[i] * self.images[j]
                if lhs != rhs:
                    out.append("not multiplicative on (%s, %s)" % (S.labels[i], S.labels[j]))
        return out


def identity_map(A):
    return AlgebraMap(A, A, [A.basis_element(i) for i in range(A.dim)], check=False)


# -- exact linear algebra --------------------------------------------------

def rref(rows, ncols=None):
    """
    Reduced row echelon form over Q with pivots chosen left to right.
    Returns (nonzero rows, pivot columns).  Input is not modified.
    """
    M = [[_frac(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    nrows = len(M)
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if M[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][col]
        if pv != 1:
            M[r] = [x / pv for x in M[r]]
        row = M[r]
        for i in range(nrows):
            if i != r:
                f = M[i][col]
                if f:
                    Mi = M[i]
                    M[i] = [a - f * b for a, b in zip(Mi, row)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return M[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def kernel_of_map_on_subspace(f, spanning_set):
    """
    Basis of span(spanning_set) intersected with ker(f).

    Rows [f(v) | v] are reduced with the image columns first; the rows whose
    image part vanishes span the intersection, and reducing them further over
    the source columns gives a canonical basis.
    """
    return [x for x, _ in kernel_with_coefficients(f, spanning_set)]


def kernel_with_coefficients(f, spanning_set):
    """
    Like kernel_of_map_on_subspace, but each basis vector comes with
    coefficients lam such that it equals sum(lam[i] * spanning_set[i]).
    """
    for v in spanning_set:
        if v.parent is not f.source and v.parent != f.source:
            raise AlgebraError("spanning element does not live in the map's source")
    if not spanning_set:
        return []
    nt, ns, n = f.target.dim, f.source.dim, len(spanning_set)
    rows = []
    for i, v in enumerate(spanning_set):
        tag = [Fraction(0)] * n
        tag[i] = Fraction(1)
        rows.append(f.apply(v).vector() + v.vector() + tag)
    red, pivots = rref(rows, nt + ns)
    out = []
    for row, p in zip(red, pivots):
        if nt <= p < nt + ns:
            out.append((f.source.from_vector(row[nt:nt + ns]), row[nt + ns:]))
    return out
