import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cubic2f.generate import random_cubic_bipartite  # noqa: E402


@pytest.fixture
def random_cubic_graphs():
    """A deterministic batch of small random cubic bipartite graphs."""

    def make(count, n, seed0=0, require_girth6=False):
        return [
            random_cubic_bipartite(n, seed=seed0 + i, require_girth6=require_girth6)
            for i in range(count)
        ]

    return make
