import pytest

from s2quant._backend import load


def _available():
    out = ["python"]
    try:
        load("cython")
        out.append("cython")
    except ImportError:
        pass
    return out


@pytest.fixture(params=_available())
def kernels(request):
    """Each arithmetic kernel that can be imported here."""
    return load(request.param)


_CRITERIA = pytest.StashKey()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_CRITERIA, [])

    def record(number, ok, text):
        line = "%s criterion %s: %s" % ("PASS" if ok else "FAIL", number, text)
        lines.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_CRITERIA, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
