import os

from hypothesis import HealthCheck, settings, strategies as st

from bary.core import Partition

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

bases = st.integers(min_value=2, max_value=5)


@st.composite
def partitions(draw, b=None, max_part=30, max_len=6):
    b = draw(bases) if b is None else b
    parts = draw(st.lists(st.integers(0, max_part), max_size=max_len))
    return Partition(tuple(parts), b)


def P(*parts, b=2):
    return Partition(tuple(parts), b)


_acceptance: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion of the build")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _acceptance.append((outcome, marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, label in _acceptance:
        terminalreporter.write_line(f"{outcome}  {label}")
