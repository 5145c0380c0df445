import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parents[1] / "src" / "homindex" / "corpus"
PLANE_CURVES = ["a1_node", "a2_cusp", "a3_tacnode", "e6", "d4_triple_point"]
PARAM_CURVES = PLANE_CURVES + ["axes3", "monomial345", "smooth_line"]


def load(name):
    from homindex import load_germ
    return load_germ(CORPUS / f"{name}.germ")


@pytest.fixture
def corpus():
    return load


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 9):
        if n in RESULTS:
            ok, detail = RESULTS[n]
            terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"criterion {n}: FAIL  (did not run to completion)")
