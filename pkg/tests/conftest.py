"""
Pytest configuration and fixtures for Harbourne tests
"""

import os
import random
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from harbourne.arrangement import (
    Arrangement,
    ComponentClass,
    SingularitySpectrum,
    SurfaceKind,
)

# Fixed seed for every randomized property suite
SEED = 20240613

# Cases per randomized property
PROPERTY_CASES = 1000

GOLDEN_DIR = Path(__file__).parent / "fixtures" / "golden"


def random_spectrum(rng: random.Random, max_k: int = 8, max_t: int = 6, min_points: int = 1):
    """Draw t_k uniformly on a bounded support, resampling until f0 >= min_points"""
    while True:
        counts = {k: rng.randint(0, max_t) for k in range(2, max_k + 1) if rng.random() < 0.6}
        spectrum = SingularitySpectrum.of(counts)
        if sum(t for _, t in spectrum.items()) >= min_points:
            return spectrum


def elliptic_arrangement(spectrum: SingularitySpectrum, d: int = 4, label: str = "random"):
    """Ordinary arrangement of d elliptic curves on an abelian surface"""
    return Arrangement(
        label=label,
        surface=SurfaceKind.ABELIAN,
        ordinary=True,
        components=(ComponentClass(genus=1, self_intersection=0, count=d),),
        spectrum=spectrum,
    )


def abelian_arrangement(rng: random.Random, spectrum: SingularitySpectrum, label: str = "random"):
    """Ordinary abelian arrangement with a random mix of elliptic and higher genus classes"""
    components = [ComponentClass(genus=1, self_intersection=0, count=rng.randint(2, 6))]
    if rng.random() < 0.5:
        genus = rng.randint(2, 4)
        components.append(ComponentClass(genus, 2 * genus - 2, rng.randint(1, 3)))
    return Arrangement(
        label=label,
        surface=SurfaceKind.ABELIAN,
        ordinary=True,
        components=tuple(components),
        spectrum=spectrum,
    )


def line_arrangement(d: int, spectrum, label: str = "lines"):
    """d lines in the plane with the given spectrum; pair count not enforced"""
    if not isinstance(spectrum, SingularitySpectrum):
        spectrum = SingularitySpectrum.of(spectrum)
    return Arrangement(
        label=label,
        surface=SurfaceKind.PROJECTIVE_PLANE,
        ordinary=True,
        components=(ComponentClass(genus=0, self_intersection=1, count=d),),
        spectrum=spectrum,
    )


@pytest.fixture
def rng():
    """Seeded random generator, fresh for each test"""
    return random.Random(SEED)


@pytest.fixture
def golden():
    """Read a committed golden output by file name"""

    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")

    return read


def pytest_collection_modifyitems(config, items):
    """
    Modify test collection to add markers based on test location
    """
    for item in items:
        if "test_cli" in item.nodeid:
            item.add_marker(pytest.mark.integration)
        else:
            item.add_marker(pytest.mark.unit)
