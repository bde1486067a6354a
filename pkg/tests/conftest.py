import pytest

from wreathmarks.groups import group_from_spec, subgroup_conjugacy_classes


def table(spec: str):
    """Class table for a spec; groups and tables are cached by the package."""
    return subgroup_conjugacy_classes(group_from_spec(spec))


@pytest.fixture(scope="session")
def t_e():
    return table("e")


@pytest.fixture(scope="session")
def t_c2():
    return table("C2")


@pytest.fixture(scope="session")
def t_c3():
    return table("C3")


@pytest.fixture(scope="session")
def t_c6():
    return table("C6")


@pytest.fixture(scope="session")
def t_v4():
    return table("V4")


@pytest.fixture(scope="session")
def t_s3():
    return table("S3")


@pytest.fixture(scope="session")
def t_d4():
    return table("D4")


@pytest.fixture(scope="session")
def t_a4():
    return table("A4")
