import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 path에 추가
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from constructions.double_coset import double_coset_hypergroup, function_algebra  # noqa: E402
from constructions.group_algebra import group_algebra_hopf  # noqa: E402
from constructions.groups import cyclic_group, dihedral_group, symmetric_group  # noqa: E402
from constructions.sweedler import sweedler_fixture  # noqa: E402
from duality.dual import build_dual  # noqa: E402
from parsers.structure_json import hypergroup_to_json  # noqa: E402


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def s3h12(s3):
    """S3 // {e, (12)}: 2차원"""
    return double_coset_hypergroup(s3, ["e", "(12)"])


@pytest.fixture(scope="session")
def s3a3(s3):
    return double_coset_hypergroup(s3, ["e", "(123)", "(132)"])


@pytest.fixture(scope="session")
def d4s(d4):
    return double_coset_hypergroup(d4, ["e", "s"])


@pytest.fixture(scope="session")
def kz2(z2):
    return function_algebra(z2)


@pytest.fixture(scope="session")
def cz2(z2):
    return group_algebra_hopf(z2)


@pytest.fixture(scope="session")
def cs3(s3):
    return group_algebra_hopf(s3)


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_fixture()


@pytest.fixture(scope="session")
def s3h12_dual(s3h12):
    return build_dual(s3h12)


@pytest.fixture(scope="session")
def sweedler_dual(sweedler):
    return build_dual(sweedler)


@pytest.fixture
def s3h12_json(s3h12):
    """수정해도 되는 새 dict"""
    return hypergroup_to_json(s3h12)


@pytest.fixture
def sweedler_json(sweedler):
    return hypergroup_to_json(sweedler)
