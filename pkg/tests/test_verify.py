import dataclasses

import pytest

from bundleobs.bundles import Bundle
from bundleobs.obstruction import ClassPolynomial, find_obstruction
from bundleobs.spaces import cp, product, torus
from bundleobs.verify import CertificateRejected, check_certificate, reevaluate


def pdual_certificate():
    B = product(cp(3), torus(2))
    a, t = B.generator("a"), B.generator("t1") * B.generator("t2")
    return find_obstruction(Bundle(B, 2, True, a + t))


def test_accepts_genuine():
    assert check_certificate(pdual_certificate())


def test_reevaluate_matches_value():
    c = pdual_certificate()
    raw = reevaluate(c.witness.terms, dict(c.generator_report), c.base.algebra)
    assert raw == dict(c.value.coords)


def test_rejects_tampering(recheck_certificates):
    c = pdual_certificate()
    B = c.base
    bad = [
        dataclasses.replace(c, witness=ClassPolynomial.parse("E")),          # E restricts to a
        dataclasses.replace(c, witness=ClassPolynomial.parse("P2 - P2")),    # zero polynomial
        dataclasses.replace(c, value=c.value * 2),
        dataclasses.replace(c, restriction=B.generator("a")),
    ]
    for cert in bad:
        with pytest.raises(CertificateRejected):
            check_certificate(cert)
    # these were forged on purpose; keep them away from the suite-wide recheck
    recheck_certificates[:] = [x for x in recheck_certificates if not any(x is b for b in bad)]
