"""Shared fixtures: pinned datasets, trained black boxes, fixture instance.

Training the MLPs dominates suite setup time, so everything heavy is
session-scoped. The moons fixture (n=1000, noise=0.1, data seed 7, MLP seed
0, instance (0.5, 0.25)) is the canonical 2-D setting used across analysis,
CLI, service, and acceptance tests.
"""

import numpy as np
import pytest

import surrscope as s

MOONS_INSTANCE = (0.5, 0.25)
FAST_FIT = dict(tol=1e-6, max_iter=1000)


@pytest.fixture(scope="session")
def moons_dataset():
    return s.make_moons(n=1000, noise=0.1, seed=7)


@pytest.fixture(scope="session")
def moons_mlp(moons_dataset):
    model = s.train_mlp(moons_dataset, s.MlpConfig())
    assert model.train_accuracy_ >= 0.95
    return model


@pytest.fixture(scope="session")
def moons_instance():
    return s.Instance(values=np.array(MOONS_INSTANCE))


@pytest.fixture(scope="session")
def circles_dataset():
    return s.make_circles(n=800, noise=0.05, factor=0.5, seed=3)


@pytest.fixture(scope="session")
def circles_mlp(circles_dataset):
    return s.train_mlp(circles_dataset, s.MlpConfig())


@pytest.fixture(scope="session")
def diabetes_dataset():
    return s.load_csv_binary(s.diabetes_csv_path(), target_column="target",
                             threshold="median")


@pytest.fixture(scope="session")
def diabetes_mlp(diabetes_dataset):
    return s.train_mlp(diabetes_dataset, s.MlpConfig())


@pytest.fixture(scope="session")
def fast_logistic():
    return s.FitConfig(family="logistic", **FAST_FIT)
