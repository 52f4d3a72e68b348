from pathlib import Path

import pytest

from pyrankone.tower.schedule import preset


@pytest.fixture
def data_folder_path():
    tests_folder_path = Path(__file__)
    data_folder_path = tests_folder_path.parent / "data"
    return data_folder_path


@pytest.fixture
def chacon():
    return preset("chacon")


@pytest.fixture
def four_copy():
    return preset("paper-4copy")


@pytest.fixture
def staircase():
    return preset("staircase")


@pytest.fixture
def odometer():
    return preset("odometer2")


@pytest.fixture
def alternating():
    return preset("alternating")
