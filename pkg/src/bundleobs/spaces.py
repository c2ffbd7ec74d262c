"""
Rational cohomology rings of the model spaces and the maps between them.

Built-in spaces are the point, spheres, tori, complex projective spaces and
their products (Kunneth).  A product whose right factor is a torus remembers
the torus degree of every basis class, which is what the restriction-to-C
criterion needs.  Flat manifolds are modelled by their torus covers.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .coh_algebra import AlgebraMap, GradedAlgebra, identity_map


class SpaceError(ValueError):
    pass


class Space:
    """
    A closed model space together with its rational cohomology ring.

    Attributes of interest:
      algebra           the GradedAlgebra H^*(X; Q)
      generators        name -> AlgebraElement, used to write classes
      orientation       basis index of the fundamental class, or None
      torus_bigrading   per basis index, the torus degree (C x T shapes only)
      c_space           the factor C of a C x T shape
      c_embed           C basis index -> basis index of x (x) 1
    """

    def __init__(self, name, kind, algebra, generators, key, *, params=(), left=None, right=None,
                 orientation=None, torus_bigrading=None, c_space=None, c_embed=None,
                 pair_index=None, simply_connected=None, tangent=None):
        self.name = name
        self.kind = kind
        self.algebra = algebra
        self.generators = dict(generators)
        self.key = key
        self.params = tuple(params)
        self.left = left
        self.right = right
        self.orientation = orientation
        self.torus_bigrading = None if torus_bigrading is None else tuple(torus_bigrading)
        self.c_space = c_space
        self.c_embed = None if c_embed is None else dict(c_embed)
        self.pair_index = pair_index
        self.simply_connected = simply_connected
        self.tangent = tangent

    @property
    def dim(self):
        return self.algebra.top_degree

    @property
    def is_torus(self):
        if self.kind == "torus":
            return True
        if self.kind == "product":
            return self.left.is_torus and self.right.is_torus
        return False

    @property
    def torus_rank(self):
        if self.torus_bigrading is None:
            return None
        return self.dim - self.c_space.dim

    def has_bigrading(self):
        return self.torus_bigrading is not None

    def generator(self, name):
        try:
            return self.generators[name]
        except KeyError:
            raise SpaceError("space %s has no generator %r (known: %s)"
                             % (self.name, name, ", ".join(sorted(self.generators)) or "none")) from None

    def orientation_class(self):
        if self.orientation is None:
            raise SpaceError("space %s has no designated orientation class" % self.name)
        return self.algebra.basis_element(self.orientation)

    def cross(self, x, y):
        """x (x) y for x in H^*(left), y in H^*(right)."""
        if self.pair_index is None:
            raise SpaceError("%s is not a product space" % self.name)
        if x.parent != self.left.algebra or y.parent != self.right.algebra:
            raise SpaceError("cross product factors do not match %s" % self.name)
        acc = {}
        for i, a in x.coords.items():
            for j, b in y.coords.items():
                k = self.pair_index[(i, j)]
                acc[k] = acc.get(k, 0) + a * b
        return self.algebra.element(acc)

    # -- torus-degree bookkeeping -------------------------------------

    def _need_bigrading(self):
        if self.torus_bigrading is None:
            raise SpaceError("space %s is not of the form C x T" % self.name)

    def torus_degree_part(self, x, j):
        self._need_bigrading()
        bg = self.torus_bigrading
        return self.algebra.element({k: c for k, c in x.coords.items() if bg[k] == j})

    def restriction(self, x):
        """Torus-degree-0 component of x, still as a class on C x T."""
        return self.torus_degree_part(x, 0)

    def relative_indices(self, degree):
        """Basis classes of the given degree with positive torus degree: H^deg(C x T, C)."""
        self._need_bigrading()
        return [i for i, d in enumerate(self.algebra.degrees)
                if d == degree and self.torus_bigrading[i] > 0]

    def to_c(self, x):
        """Pull back along the inclusion of C; returns a class on C."""
        return inclusion_map(self).induced.apply(x)

    def from_c(self, x):
        """Pull back a class on C along the projection C x T -> C."""
        return projection_map(self).induced.apply(x)

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Space):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Space(%s)" % self.name

    def describe(self):
        return "%s: dim %d, betti %s" % (self.name, self.dim, list(self.algebra.betti()))


def _sorted_basis(items):
    """items: list of (label, degree, payload); returns them in canonical order."""
    return sorted(items, key=lambda t: (t[1], t[0]))


@lru_cache(maxsize=None)
def point():
    A = GradedAlgebra([("1", 0)], {(0, 0): ((0, 1),)}, 0)
    return Space("point", "point", A, {}, ("point",), orientation=0, simply_connected=True)


@lru_cache(maxsize=None)
def sphere(n):
    if n < 1:
        raise SpaceError("sphere dimension must be >= 1")
    table = {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((1, 1),)}
    A = GradedAlgebra([("1", 0), ("s", n)], table, n)
    return Space("S%d" % n, "sphere", A, {"s": A.basis_element(1)}, ("sphere", n), params=(n,),
                 orientation=1, simply_connected=n >= 2)


@lru_cache(maxsize=None)
def cp(n):
    if n < 1:
        raise SpaceError("complex projective dimension must be >= 1")
    labels = ["1", "a"] + ["a^%d" % i for i in range(2, n + 1)]
    basis = [(labels[i], 2 * i) for i in range(n + 1)]
    table = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i + j <= n:
                table[(i, j)] = ((i + j, 1),)
    A = GradedAlgebra(basis, table, 2 * n)
    return Space("CP%d" % n, "cp", A, {"a": A.basis_element(1)}, ("cp", n), params=(n,),
                 orientation=n, simply_connected=True)


def _merge_sign(S, T):
    """Sign of the shuffle putting S+T (disjoint sorted tuples) in order."""
    inv = sum(1 for a in S for b in T if a > b)
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def torus(k):
    if k < 1:
        raise SpaceError("torus rank must be >= 1")
    subsets = [c for r in range(k + 1) for c in combinations(range(1, k + 1), r)]

    def label(S):
        return "*".join("t%d" % i for i in S) if S else "1"

    items = _sorted_basis([(label(S), len(S), S) for S in subsets])
    idx = {S: i for i, (_, _, S) in enumerate(items)}
    table = {}
    for S, i in idx.items():
        for T, j in idx.items():
            if set(S) & set(T):
                continue
            U = tuple(sorted(S + T))
            table[(i, j)] = ((idx[U], _merge_sign(S, T)),)
    A = GradedAlgebra([(l, d) for l, d, _ in items], table, k)
    gens = {"t%d" % i: A.basis_element(idx[(i,)]) for i in range(1, k + 1)}
    pt = point()
    return Space("T%d" % k, "torus", A, gens, ("torus", k), params=(k,),
                 orientation=idx[tuple(range(1, k + 1))],
                 torus_bigrading=A.degrees, c_space=pt, c_embed={0: A.unit_index},
                 simply_connected=False)


def _tokens(label):
    return [] if label == "1" else label.split("*")


def _prefixed(label, prefix):
    if label == "1":
        return label
    return "*".join(prefix + t for t in _tokens(label))


def _strip_power(tok):
    return tok.split("^")[0]


_product_cache = {}


def product(A, B, name=None):
    """Kunneth product: (x(x)y)(x'(x)y') = (-1)^{deg y deg x'} xx' (x) yy'."""
    key = ("product", A.key, B.key)
    if name is None and key in _product_cache:
        return _product_cache[key]
    RA, RB = A.algebra, B.algebra
    left_names = {_strip_power(t) for l in RA.labels for t in _tokens(l)}
    right_names = {_strip_power(t) for l in RB.labels for t in _tokens(l)}
    clash = bool(left_names & right_names)
    lp, rp = ("left.", "right.") if clash else ("", "")

    items = []
    for i, (la, da) in enumerate(RA.basis):
        for j, (lb, db) in enumerate(RB.basis):
            la2, lb2 = _prefixed(la, lp), _prefixed(lb, rp)
            if la == "1":
                lab = lb2
            elif lb == "1":
                lab = la2
            else:
                lab = la2 + "*" + lb2
            items.append((lab, da + db, (i, j)))
    items = _sorted_basis(items)
    pair_index = {pair: k for k, (_, _, pair) in enumerate(items)}
    dA, dB = RA.degrees, RB.degrees
    table = {}
    for (i, j), k in pair_index.items():
        for (i2, j2), k2 in pair_index.items():
            ta = RA.mul_basis(i, i2)
            if not ta:
                continue
            tb = RB.mul_basis(j, j2)
            if not tb:
                continue
            s = -1 if (dB[j] * dA[i2]) % 2 else 1
            table[(k, k2)] = tuple((pair_index[(a, b)], s * ca * cb) for a, ca in ta for b, cb in tb)
    R = GradedAlgebra([(l, d) for l, d, _ in items], table, RA.top_degree + RB.top_degree)

    space = Space(name or "%s x %s" % (A.name, B.name), "product", R, {}, key,
                  left=A, right=B, pair_index=pair_index)
    one_a, one_b = RA.one(), RB.one()
    gens = {}
    for g, x in A.generators.items():
        gens["left." + g] = space.cross(x, one_b)
    for g, y in B.generators.items():
        gens["right." + g] = space.cross(one_a, y)
    for g, x in A.generators.items():
        if g not in B.generators:
            gens[g] = gens["left." + g]
    for g, y in B.generators.items():
        if g not in A.generators:
            gens[g] = gens["right." + g]
    space.generators = gens

    if A.orientation is not None and B.orientation is not None:
        space.orientation = pair_index[(A.orientation, B.orientation)]
    if A.simply_connected is not None and B.simply_connected is not None:
        space.simply_connected = A.simply_connected and B.simply_connected
    elif A.simply_connected is False or B.simply_connected is False:
        space.simply_connected = False
    if B.is_torus:
        bg = [0] * R.dim
        for (i, j), k in pair_index.items():
            bg[k] = dB[j]
        space.torus_bigrading = tuple(bg)
        space.c_space = A
        space.c_embed = {i: pair_index[(i, RB.unit_index)] for i in range(RA.dim)}
    if name is None:
        _product_cache[key] = space
    return space


def manual(algebra, name="manual", orientation=None, simply_connected=None, tangent=None):
    """
    A user-supplied ring.  All algebra axioms are re-verified.  ``tangent`` may
    be a dict with keys rank, euler, pontrjagin (list) giving TC's classes.
    """
    algebra.verify()
    if orientation is None:
        tops = algebra.degree_indices(algebra.top_degree)
        if len(tops) == 1:
            orientation = tops[0]
    elif isinstance(orientation, str):
        orientation = algebra.index[orientation]
    if orientation is not None and algebra.degrees[orientation] != algebra.top_degree:
        raise SpaceError("orientation class must sit in the top degree")
    gens = {l: algebra.basis_element(i) for i, l in enumerate(algebra.labels) if i != algebra.unit_index}
    key = ("manual", name, algebra.basis, tuple(sorted(algebra.structure.items())), algebra.top_degree)
    return Space(name, "manual", algebra, gens, key, orientation=orientation,
                 simply_connected=simply_connected, tangent=tangent)


# -- maps ------------------------------------------------------------------

class SpaceMap:
    """
    A map source -> target of spaces, recorded by its cohomology pullback
    ``induced``: H^*(target) -> H^*(source).
    """

    def __init__(self, kind, source, target, induced, params=()):
        if induced.source != target.algebra or induced.target != source.algebra:
            raise SpaceError("induced map does not match the spaces")
        self.kind = kind
        self.source = source
        self.target = target
        self.induced = induced
        self.params = tuple(params)

    def __repr__(self):
        return "SpaceMap(%s: %s -> %s)" % (self.kind, self.source.name, self.target.name)


def identity(space):
    return SpaceMap("identity", space, space, identity_map(space.algebra))


def compose(f, g):
    """g after f."""
    if f.target != g.source:
        raise SpaceError("cannot compose %r with %r" % (g, f))
    return SpaceMap("composite", f.source, g.target, g.induced.then(f.induced), params=(f, g))


def inclusion_map(space):
    """C -> C x T onto C x *.  Pullback keeps torus-degree-0 classes."""
    space._need_bigrading()
    C = space.c_space
    inv = {k: i for i, k in space.c_embed.items()}
    images = []
    for k in range(space.algebra.dim):
        if space.torus_bigrading[k] == 0:
            images.append(C.algebra.basis_element(inv[k]))
        else:
            images.append(C.algebra.zero())
    induced = AlgebraMap(space.algebra, C.algebra, images, check=False)
    return SpaceMap("inclusion", C, space, induced)


def projection_map(space):
    """C x T -> C; pullback is x -> x (x) 1."""
    space._need_bigrading()
    C = space.c_space
    images = [space.algebra.basis_element(space.c_embed[i]) for i in range(C.algebra.dim)]
    induced = AlgebraMap(C.algebra, space.algebra, images, check=False)
    return SpaceMap("projection", space, C, induced)


def torus_cover_map(space, m, check=True):
    """(c, z_1..z_k) -> (c, z_1^m..z_k^m): torus-degree-j classes scale by m^j."""
    if space.torus_bigrading is None:
        raise SpaceError("space %s has no torus factor to cover along" % space.name)
    m = int(m)
    if m < 1:
        raise SpaceError("cover multiplier must be a positive integer")
    A = space.algebra
    images = [A.basis_element(k) * Fraction(m) ** space.torus_bigrading[k] for k in range(A.dim)]
    induced = AlgebraMap(A, A, images, check=check)
    return SpaceMap("cover", space, space, induced, params=(m,))


def degree_map_to_sphere(B, n, d):
    """A map B -> S^n of degree d: s pulls back to d times the fundamental class."""
    if n < 1 or n % 2:
        raise SpaceError("target sphere dimension must be even and positive")
    if B.dim != n:
        raise SpaceError("dimension mismatch: %s has dimension %d, sphere has %d" % (B.name, B.dim, n))
    if B.orientation is None:
        raise SpaceError("%s has no designated orientation class" % B.name)
    S = sphere(n)
    images = [B.algebra.one(), B.orientation_class() * int(d)]
    induced = AlgebraMap(S.algebra, B.algebra, images)
    return SpaceMap("degree", B, S, induced, params=(int(d),))


def restriction_projection(space):
    """
    The endomorphism of H^*(C x T) keeping torus-degree-0 components, i.e.
    pull back to C and then back along the projection.  Its kernel is the
    relative cohomology H^*(C x T, C).
    """
    space._need_bigrading()
    A = space.algebra
    images = [A.basis_element(k) if space.torus_bigrading[k] == 0 else A.zero() for k in range(A.dim)]
    return AlgebraMap(A, A, images, check=False)
