import pytest

from kingmesh.kings import KingClass
from kingmesh.mesh import catalog
from kingmesh.oracle import distribution_tables


@pytest.fixture(scope="session")
def catalog_sweep_9():
    """Exhaustive distribution rows for every catalog pattern, n <= 9.

    One shared enumeration pass; several test modules compare against it.
    Returns {ident: DistributionTable} over the unrestricted class.
    """
    entries = catalog()
    tables = distribution_tables([e.pattern for e in entries], 9, KingClass.ALL)
    return {e.ident: t for e, t in zip(entries, tables)}
