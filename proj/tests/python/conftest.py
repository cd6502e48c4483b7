import os
import sys

import pytest


@pytest.fixture(scope="session")
def biorder_pkg():
    """Import the biorder package assembled in the build tree."""
    path = os.environ.get("BIORDER_PYTHONPATH")
    if not path:
        pytest.skip("BIORDER_PYTHONPATH not set; build the python module first")
    sys.path.insert(0, path)
    import biorder

    return biorder


@pytest.fixture(scope="session")
def biorder_cli():
    path = os.environ.get("BIORDER_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("BIORDER_CLI not set; build the CLI first")
    return path
