from __future__ import annotations

import pytest

from spherecodes import configurations as cfg

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "heavy: Leech-family checks (deselect with -m 'not heavy')")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture(scope="session")
def mandatory():
    """The five small configurations the acceptance checks require."""
    return {
        "icosahedron": cfg.icosahedron(),
        "600-cell": cfg.cell600(),
        "e8": cfg.e8_roots(),
        "kissing56": cfg.kissing_56(),
        "schlafli27": cfg.schlafli_27(),
    }


@pytest.fixture(scope="session")
def e8():
    return cfg.e8_roots()


@pytest.fixture(scope="session")
def ico():
    return cfg.icosahedron()


@pytest.fixture(scope="session")
def cell():
    return cfg.cell600()


@pytest.fixture(scope="session")
def leech():
    return cfg.leech_min_vectors()


@pytest.fixture(scope="session")
def kissing4600(leech):
    return cfg.kissing_4600(leech)
