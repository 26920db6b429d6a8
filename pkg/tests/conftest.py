import pytest

from patchwork.builders import grid_triangulation_2d, staircase_triangulation_3d
from patchwork.construction import ModelComplex


@pytest.fixture(scope="session")
def grid2():
    return grid_triangulation_2d(2)


@pytest.fixture(scope="session")
def grid3():
    return grid_triangulation_2d(3)


@pytest.fixture(scope="session")
def grid4():
    return grid_triangulation_2d(4)


@pytest.fixture(scope="session")
def grid6():
    return grid_triangulation_2d(6)


@pytest.fixture(scope="session")
def model2(grid2):
    return ModelComplex(grid2)


@pytest.fixture(scope="session")
def model3(grid3):
    return ModelComplex(grid3)


@pytest.fixture(scope="session")
def model4(grid4):
    return ModelComplex(grid4)


@pytest.fixture(scope="session")
def model6(grid6):
    return ModelComplex(grid6)


@pytest.fixture(scope="session")
def cube2():
    return staircase_triangulation_3d(2)


@pytest.fixture(scope="session")
def model_cube2(cube2):
    return ModelComplex(cube2)
