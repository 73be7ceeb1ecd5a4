from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from salcom import _kernels
from salcom.corpus import two_points, two_points_right_half
from salcom.geom import STRICT, AffineForm, Constraint, Region
from salcom.signs import SignVector

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("SALCOM_HYPOTHESIS_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

DATA = Path(__file__).resolve().parents[1] / "src" / "salcom" / "data"

BACKENDS = [pytest.param(True, id="python")]
if _kernels.BACKEND == "cython":
    BACKENDS.insert(0, pytest.param(False, id="cython"))


@pytest.fixture(params=BACKENDS)
def force_python(request) -> bool:
    return request.param


def sv(text: str) -> SignVector:
    return SignVector.parse(text)


def svs(*texts: str) -> list[SignVector]:
    return [SignVector.parse(t) for t in texts]


# the two-point line: A < -1 < H < 1 < C, chambers A, B, C and points H, H'
A, H, B, Hp, C = svs("--", "0-", "+-", "+0", "++")


@pytest.fixture
def twopts():
    return two_points()


@pytest.fixture
def twopts_right():
    return two_points_right_half()


def gt_region(a, b):
    """The open halfspace a.x + b > 0."""
    return Region(len(a), (Constraint(AffineForm(a, b), STRICT),))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.format_line(number, *acceptance.RESULTS[number]))
