import pytest

from goldrank import load_dataset


@pytest.fixture(scope="session")
def ds():
    return load_dataset()


@pytest.fixture(scope="session")
def debian(ds):
    return ds.universe("Debian")


@pytest.fixture(scope="session")
def hibernate(ds):
    return ds.universe("Hibernate")
