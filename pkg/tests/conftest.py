import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import ramseystats as rs

DATA = Path(__file__).parent / "data"

# Real UCI house-votes-84 file, if the user supplied one. Checked in
# order: environment variable, then the conventional repo location.
HOUSE_VOTES_ENV = "RAMSEYSTATS_HOUSE_VOTES"
_HOUSE_VOTES_CANDIDATES = (
    Path(__file__).parent.parent / "data" / "house-votes-84.data",
    DATA / "house-votes-84.data",
)


def house_votes_file():
    env = os.environ.get(HOUSE_VOTES_ENV)
    if env:
        p = Path(env)
        if p.is_file():
            return p
    for p in _HOUSE_VOTES_CANDIDATES:
        if p.is_file():
            return p
    return None


@pytest.fixture
def sample_votes_path() -> Path:
    return DATA / "house-votes-84-sample.csv"


@pytest.fixture
def sample_records(sample_votes_path):
    return rs.parse_votes(sample_votes_path.read_text().splitlines())


@pytest.fixture
def sample_matrix(sample_records):
    return rs.hamming_matrix(sample_records)


@pytest.fixture
def trade_small_path() -> Path:
    return DATA / "trade-small.csv"


@pytest.fixture
def trade_ring_path() -> Path:
    return DATA / "trade-ring.csv"


@pytest.fixture
def star_coloring():
    # blue star: center 0 joined to 1..4, vertex 5 isolated in blue
    return rs.from_blue_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4)])


# Distance matrix the six-voter sample must reproduce.
SIX_VOTER_MATRIX = (
    (0, 3, 7, 7, 7, 6),
    (3, 0, 6, 7, 7, 5),
    (7, 6, 0, 5, 5, 5),
    (7, 7, 5, 0, 5, 4),
    (7, 7, 5, 5, 0, 3),
    (6, 5, 5, 4, 3, 0),
)
