from fractions import Fraction

from hypothesis import strategies as st

from bundleobs.bundles import Bundle
from bundleobs.spaces import cp, point, product, sphere, torus

small_fraction = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


def element(algebra, coef=small_fraction):
    n = algebra.dim
    return st.dictionaries(st.integers(0, n - 1), coef, max_size=min(n, 6)).map(algebra.element)


def homogeneous(algebra, degree, coef=st.integers(-4, 4)):
    idx = algebra.degree_indices(degree)
    if not idx:
        return st.just(algebra.zero())
    return st.lists(coef, min_size=len(idx), max_size=len(idx)).map(
        lambda cs: algebra.element(dict(zip(idx, cs))))


small_c = st.sampled_from([point(), sphere(2), sphere(3), cp(1), cp(2), cp(3)])


@st.composite
def c_times_t(draw, max_torus=3):
    C = draw(small_c)
    k = draw(st.integers(1, max_torus))
    return product(C, torus(k))


@st.composite
def bundle_over(draw, space, max_rank=6, coef=st.integers(-3, 3)):
    A = space.algebra
    r = draw(st.integers(0, max_rank))
    oriented = draw(st.booleans())
    n = r // 2
    p = [draw(homogeneous(A, 4 * i, coef)) for i in range(1, n + 1)]
    e = None
    if oriented and r and r % 2 == 0:
        e = draw(homogeneous(A, r, coef))
        p[-1] = e * e
    return Bundle(space, r, oriented, e, p)
