"""pytest configuration for hofflat."""

import tempfile
from pathlib import Path
from typing import Generator

import pytest

from hofflat.families import family_a3tilde, family_ht
from hofflat.graph import HoffmanGraph, format_hg, parse_hg

A3TILDE_HG = """\
# four slim vertices around a cycle of fat vertices
slim 0
slim 1
slim 2
slim 3
fat f0
fat f1
fat f2
fat f3
edge 0 2
edge 1 3
edge 0 f0
edge 1 f0
edge 1 f1
edge 2 f1
edge 2 f2
edge 3 f2
edge 3 f3
edge 0 f3
"""


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture
def a3tilde() -> HoffmanGraph:
    """Four slim vertices whose minus graph is a 4-cycle."""
    return family_a3tilde()


@pytest.fixture
def a3tilde_file(temp_dir: Path) -> Path:
    """The a3tilde graph written as a .hg file."""
    path = temp_dir / "a3tilde.hg"
    path.write_text(A3TILDE_HG, encoding="utf-8")
    return path


@pytest.fixture
def h3_file(temp_dir: Path) -> Path:
    """One slim vertex with three fat neighbors, as a .hg file."""
    path = temp_dir / "h3.hg"
    path.write_text(format_hg(family_ht(3)), encoding="utf-8")
    return path


@pytest.fixture
def two_slim_no_fat() -> HoffmanGraph:
    """Two isolated slim vertices."""
    return parse_hg("slim x\nslim y\n")
