import pytest

from chartab.groups import conjugacy_data, enumerate_group, load_catalog
from chartab.tables import compute_table

ALL_GROUPS = (
    "trivial", "C2", "C3", "C4", "C5", "C6", "S3",
    "D8", "Q8", "D12", "A4", "S4", "A5", "S5",
)


@pytest.fixture(scope="session")
def group_factory():
    specs = load_catalog()
    cache = {}

    def get(name):
        if name not in cache:
            group = enumerate_group(specs[name])
            cache[name] = (group, conjugacy_data(group))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def table_factory(group_factory):
    cache = {}

    def get(name):
        if name not in cache:
            group, cd = group_factory(name)
            cache[name] = compute_table(group, cd)
        return cache[name]

    return get
