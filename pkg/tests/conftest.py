"""Shared fixtures: shipped catalog data, calculi, tube algebras and decompositions."""

import numpy as np
import pytest

from config.settings import ToleranceConfig
from engine.commutant import decompose, extract_half_braiding
from engine.fusion_data import full_view, load_catalog, subcategory
from engine.hom_calculus import HomCalculus
from engine.tube_algebra import build_tube

GOLDEN = (1 + np.sqrt(5)) / 2


@pytest.fixture(scope="session")
def tolerances():
    return ToleranceConfig()


@pytest.fixture(scope="session")
def ising():
    return load_catalog("ising")


@pytest.fixture(scope="session")
def fibonacci():
    return load_catalog("fibonacci")


@pytest.fixture(scope="session")
def vec_z2():
    return load_catalog("vec_z2")


@pytest.fixture(scope="session")
def vec_z3():
    return load_catalog("vec_z3")


@pytest.fixture(scope="session")
def semion():
    return load_catalog("vec_z2_twisted")


@pytest.fixture(scope="session")
def ising_calc(ising):
    return HomCalculus(ising)


@pytest.fixture(scope="session")
def fibonacci_calc(fibonacci):
    return HomCalculus(fibonacci)


@pytest.fixture(scope="session")
def vec_z2_calc(vec_z2):
    return HomCalculus(vec_z2)


@pytest.fixture(scope="session")
def ising_tube(ising, ising_calc):
    return build_tube(full_view(ising), ising, ising_calc)


@pytest.fixture(scope="session")
def ising_even_tube(ising, ising_calc):
    """Tube({1, ψ}, Ising)."""
    return build_tube(subcategory(ising, [0, 2]), ising, ising_calc)


@pytest.fixture(scope="session")
def ising_trivial_tube(ising, ising_calc):
    return build_tube(subcategory(ising, [0]), ising, ising_calc)


@pytest.fixture(scope="session")
def fibonacci_tube(fibonacci, fibonacci_calc):
    return build_tube(full_view(fibonacci), fibonacci, fibonacci_calc)


@pytest.fixture(scope="session")
def vec_z2_tube(vec_z2, vec_z2_calc):
    return build_tube(full_view(vec_z2), vec_z2, vec_z2_calc)


@pytest.fixture(scope="session")
def ising_blocks(ising_tube, tolerances):
    return decompose(ising_tube, tolerances, seed=0)


@pytest.fixture(scope="session")
def ising_even_blocks(ising_even_tube, tolerances):
    return decompose(ising_even_tube, tolerances, seed=0)


@pytest.fixture(scope="session")
def fibonacci_blocks(fibonacci_tube, tolerances):
    return decompose(fibonacci_tube, tolerances, seed=0)


@pytest.fixture(scope="session")
def vec_z2_blocks(vec_z2_tube, tolerances):
    return decompose(vec_z2_tube, tolerances, seed=0)


@pytest.fixture(scope="session")
def ising_even_half_braidings(ising_even_tube, ising_even_blocks, tolerances):
    return [extract_half_braiding(ising_even_tube, block, tolerances) for block in ising_even_blocks]


@pytest.fixture(scope="session")
def fibonacci_half_braidings(fibonacci_tube, fibonacci_blocks, tolerances):
    return [extract_half_braiding(fibonacci_tube, block, tolerances) for block in fibonacci_blocks]


@pytest.fixture(scope="session")
def vec_z2_half_braidings(vec_z2_tube, vec_z2_blocks, tolerances):
    return [extract_half_braiding(vec_z2_tube, block, tolerances) for block in vec_z2_blocks]
