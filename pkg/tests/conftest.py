import pytest

from lrctower import TowerSpec, build_recovery_group, construct_lrc, make_field


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4)


@pytest.fixture(scope="session")
def gf25():
    return make_field(5, 2)


@pytest.fixture(scope="session")
def golden_code(gf9):
    """[6, 2] code at the rational level: additive kernel + scalar pair."""
    spec = TowerSpec("gs96", gf9, 1)
    h1 = build_recovery_group(spec, "additive", shifts="kernel")
    h2 = build_recovery_group(spec, "multiplicative", order=2)
    return construct_lrc(spec, h1, h2, 2)


@pytest.fixture(scope="session")
def tower_code(gf9):
    """Level-2 y-tower code on 18 places, same group pair."""
    spec = TowerSpec("gs96", gf9, 2)
    h1 = build_recovery_group(spec, "additive", shifts="kernel")
    h2 = build_recovery_group(spec, "multiplicative", order=2)
    return construct_lrc(spec, h1, h2, 6)


@pytest.fixture(scope="session")
def hermitian_code(gf25):
    """Level-2 xz-tower code on 120 places with norm-one groups (2, 3)."""
    spec = TowerSpec("gs95", gf25, 2)
    h1 = build_recovery_group(spec, "multiplicative", order=2)
    h2 = build_recovery_group(spec, "multiplicative", order=3)
    return construct_lrc(spec, h1, h2, 100)
