"""
Independent re-checking of obstruction certificates.

This module deliberately avoids AlgebraElement arithmetic, the kernel search
and the restriction helpers: it multiplies raw coordinate dictionaries with
the structure table and reads torus degrees straight from the bigrading.
"""

from fractions import Fraction


class CertificateRejected(AssertionError):
    pass


def _mul(structure, x, y):
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in structure.get((i, j), ()):
                out[k] = out.get(k, Fraction(0)) + a * b * c
    return {k: v for k, v in out.items() if v}


def _coords(element):
    return {k: Fraction(v) for k, v in element.coords.items() if v}


def reevaluate(witness_terms, generators, algebra):
    """
    witness_terms: {exponent tuple over (E, P1, P2, ...): coefficient}
    generators: {symbol: element}.  Missing P symbols count as zero.
    """
    structure = algebra.structure
    unit = {algebra.unit_index: Fraction(1)}
    total = {}
    for mono, coef in witness_terms.items():
        v = dict(unit)
        for idx, k in enumerate(mono):
            if not k:
                continue
            sym = "E" if idx == 0 else "P%d" % idx
            if sym not in generators:
                if sym == "E":
                    raise CertificateRejected("witness uses E but no Euler class was reported")
                v = {}
                break
            g = _coords(generators[sym])
            for _ in range(k):
                v = _mul(structure, v, g)
        for key, c in v.items():
            total[key] = total.get(key, Fraction(0)) + Fraction(coef) * c
    return {k: c for k, c in total.items() if c}


def check_certificate(cert):
    """Raise CertificateRejected unless an Obstructed certificate is sound."""
    space = cert.base
    algebra = space.algebra
    bigrading = space.torus_bigrading
    if bigrading is None:
        raise CertificateRejected("certificate base lacks a torus bigrading")
    value = reevaluate(cert.witness.terms, dict(cert.generator_report), algebra)
    if not value:
        raise CertificateRejected("witness evaluates to zero")
    if value != _coords(cert.value):
        raise CertificateRejected("reported value does not match re-evaluation")
    restricted = {k: c for k, c in value.items() if bigrading[k] == 0}
    if restricted:
        raise CertificateRejected("witness value has a nonzero torus-degree-0 part")
    if _coords(cert.restriction):
        raise CertificateRejected("reported restriction is not zero")
    return True
