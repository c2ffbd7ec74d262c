"""
Independent reference computations used by the tests.  None of these call
into the package's kernel, search or Newton code.
"""

import itertools
from fractions import Fraction

import sympy

from bundleobs.verify import reevaluate


def sympy_rank(vectors):
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in vectors]).rank()


def power_sums_by_expansion(p_count, r):
    """
    Pontrjagin classes are elementary symmetric in squared roots y_j = x_j^2.
    Returns (p symbols as expressions in y, power sums sum y_j^k) for k = 1..r.
    """
    ys = sympy.symbols("y1:%d" % (p_count + 1))
    elem = []
    for i in range(1, p_count + 1):
        elem.append(sum(sympy.Mul(*c) for c in itertools.combinations(ys, i)))
    sums = [sum(y ** k for y in ys) for k in range(1, r + 1)]
    return ys, elem, sums


def brute_force_has_witness(space, gens, extra_degree_cap=None):
    """
    Enumerate every monomial of degree 1..top in the generators, evaluate
    with raw structure constants, and compare ranks of values and their
    torus-degree-0 parts: a witness exists iff the ranks differ.
    gens: list of (symbol, degree, element).
    """
    top = space.dim if extra_degree_cap is None else extra_degree_cap
    syms = [(s, d, x) for s, d, x in gens if x]
    bounds = [range(0, top // d + 1) for _, d, _ in syms]
    width = 1 + max([0] + [0 if s == "E" else int(s[1:]) for s, _, _ in syms])
    reported = {s: x for s, _, x in syms}
    values, restricted = [], []
    bg = space.torus_bigrading
    n = space.algebra.dim
    for exps in itertools.product(*bounds):
        deg = sum(k * d for k, (_, d, _) in zip(exps, syms))
        if deg == 0 or deg > top:
            continue
        mono = [0] * width
        for k, (s, _, _) in zip(exps, syms):
            mono[0 if s == "E" else int(s[1:])] = k
        v = reevaluate({tuple(mono): 1}, reported, space.algebra)
        values.append([v.get(i, Fraction(0)) for i in range(n)])
        restricted.append([v.get(i, Fraction(0)) if bg[i] == 0 else Fraction(0) for i in range(n)])
    return sympy_rank(values) != sympy_rank(restricted)


def betti_by_hand(space):
    out = [0] * (space.dim + 1)
    for d in space.algebra.degrees:
        out[d] += 1
    return out
