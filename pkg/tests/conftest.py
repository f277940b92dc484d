"""Shared test configuration.

The acceptance tests in ``test_acceptance.py`` are named
``test_criterion_<N>_...``; the report hook below echoes one uncaptured
``[criterion N] PASS|FAIL`` line per criterion so a plain ``pytest`` run
shows the gate at a glance.
"""

from __future__ import annotations

import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "artifact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("artifact")

_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    hit = _CRITERION.search(report.nodeid)
    if hit is None:
        return
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\n[criterion {int(hit.group(1))}] {verdict}", flush=True)
