import pytest
from hypothesis import HealthCheck, settings

from bundleobs.obstruction import ObstructionCertificate, Verdict
from bundleobs.verify import check_certificate

settings.register_profile("suite", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow])
settings.load_profile("suite")

# every Obstructed certificate built anywhere in the suite is re-checked here
SEEN = {"obstructed": 0, "verified": 0}
_ACCEPTANCE = {}


@pytest.fixture(autouse=True)
def recheck_certificates(monkeypatch):
    made = []
    original = ObstructionCertificate.__init__

    def recording_init(self, *args, **kwargs):
        original(self, *args, **kwargs)
        made.append(self)

    monkeypatch.setattr(ObstructionCertificate, "__init__", recording_init)
    yield made
    monkeypatch.undo()
    for cert in made:
        if cert.verdict == Verdict.OBSTRUCTED:
            SEEN["obstructed"] += 1
            check_certificate(cert)
            SEEN["verified"] += 1


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome == "failed":
        prev = _ACCEPTANCE.get(name)
        if prev != "FAIL":
            _ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name in sorted(_ACCEPTANCE):
            terminalreporter.write_line("%s %s" % (_ACCEPTANCE[name], name))
    terminalreporter.write_line("certificates re-verified independently: %d of %d obstructed"
                                % (SEEN["verified"], SEEN["obstructed"]))
