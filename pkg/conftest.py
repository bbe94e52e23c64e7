"""Shared fixtures: algebras and embeddings reused across test modules"""

import pytest

import classical
import embeddings


@pytest.fixture(scope="session")
def sp1():
    return classical.sp_algebra(1)


@pytest.fixture(scope="session")
def sp2():
    return classical.sp_algebra(2)


@pytest.fixture(scope="session")
def sp_in_so_2():
    return embeddings.embed_sp_in_so(2)


@pytest.fixture(scope="session")
def sp_sp1_in_so_2():
    return embeddings.embed_sp_sp1_in_so(2)


@pytest.fixture(scope="session")
def split_2():
    return embeddings.symmetric_split(2)
