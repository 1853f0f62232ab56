"""Domain type invariants: validation at construction, immutability, equality."""

import numpy as np
import pytest

from surrscope import Instance, Neighbourhood, NeighbourhoodSpec
from surrscope.types import matrix_from_parts


def _spec(radius=1.0, n=8, **kw):
    return NeighbourhoodSpec(center=Instance(values=np.array([0.0, 0.0])),
                             radius=radius, n_samples=n, **kw)


def _hood(spec, scale=0.1):
    rng = np.random.default_rng(0)
    pts = spec.center.values + scale * rng.standard_normal((spec.n_samples, 2))
    return Neighbourhood(spec=spec, points=pts,
                         labels=np.zeros(spec.n_samples, dtype=np.int64))


class TestInstance:
    def test_dim_and_float64(self):
        x = Instance(values=[1, 2, 3])
        assert x.dim == 3
        assert x.values.dtype == np.float64

    def test_rejects_empty_2d_nonfinite(self):
        with pytest.raises(ValueError):
            Instance(values=np.array([]))
        with pytest.raises(ValueError):
            Instance(values=np.array([[1.0]]))
        with pytest.raises(ValueError):
            Instance(values=np.array([1.0, np.nan]))

    def test_immutable(self):
        x = Instance(values=np.array([1.0]))
        with pytest.raises(ValueError):
            x.values[0] = 2.0

    def test_equality_by_value(self):
        assert Instance(values=np.array([1.0, 2.0])) == Instance(values=[1.0, 2.0])
        assert Instance(values=np.array([1.0])) != Instance(values=np.array([2.0]))


class TestNeighbourhoodSpec:
    def test_defaults(self):
        spec = _spec()
        assert spec.n_samples == 8 and spec.seed == 0
        assert spec.kernel_width is None and spec.dim == 2

    def test_zero_radius_allowed(self):
        assert _spec(radius=0.0).radius == 0.0

    @pytest.mark.parametrize("kw", [
        dict(radius=-0.1), dict(radius=np.inf), dict(n=0),
        dict(seed=-1), dict(seed=2**64), dict(kernel_width=0.0),
    ])
    def test_rejects_bad_fields(self, kw):
        with pytest.raises(ValueError):
            _spec(**{k: v for k, v in kw.items()})

    def test_rejects_non_instance_center(self):
        with pytest.raises(ValueError):
            NeighbourhoodSpec(center=np.array([0.0]), radius=1.0)


class TestNeighbourhood:
    def test_valid_build(self):
        hood = _hood(_spec())
        assert hood.n_samples == 8 and hood.dim == 2
        assert hood.is_pure()

    def test_rejects_point_outside_radius(self):
        spec = _spec(radius=0.5, n=1)
        with pytest.raises(ValueError, match="outside"):
            Neighbourhood(spec=spec, points=np.array([[1.0, 1.0]]),
                          labels=np.array([0]))

    def test_rejects_row_count_mismatch(self):
        spec = _spec(n=3)
        with pytest.raises(ValueError):
            Neighbourhood(spec=spec, points=np.zeros((2, 2)),
                          labels=np.array([0, 1]))

    def test_rejects_nonbinary_labels(self):
        spec = _spec(n=2)
        with pytest.raises(ValueError):
            Neighbourhood(spec=spec, points=np.zeros((2, 2)),
                          labels=np.array([0, 2]))

    def test_weights_validated(self):
        spec = _spec(n=2)
        pts = np.zeros((2, 2))
        labels = np.array([0, 1])
        hood = Neighbourhood(spec=spec, points=pts, labels=labels,
                             weights=np.array([1.0, 0.5]))
        assert hood.weights is not None
        for bad in ([1.0], [0.0, 1.0], [1.5, 1.0], [np.nan, 1.0]):
            with pytest.raises(ValueError):
                Neighbourhood(spec=spec, points=pts, labels=labels,
                              weights=np.array(bad))

    def test_is_pure_mixed(self):
        spec = _spec(n=2)
        hood = Neighbourhood(spec=spec, points=np.zeros((2, 2)),
                             labels=np.array([0, 1]))
        assert not hood.is_pure()

    def test_arrays_frozen(self):
        hood = _hood(_spec())
        with pytest.raises(ValueError):
            hood.points[0, 0] = 9.0


def test_matrix_from_parts():
    m = matrix_from_parts(2, 3, [1, 2, 3, 4, 5, 6])
    np.testing.assert_array_equal(m, [[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        matrix_from_parts(2, 2, [1, 2, 3])
