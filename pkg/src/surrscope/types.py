"""Core domain types.

All types validate their invariants at construction and are immutable
afterwards (numpy payloads are marked read-only), so values can be shared
freely between threads. Equality is exact field-by-field comparison.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from . import records
from .validation import (
    check_binary_labels,
    check_feature_matrix,
    check_finite_float,
    check_instance_values,
    check_positive_int,
    check_seed,
)

CONTAINMENT_SLACK = 1e-9


class FieldEqMixin:
    """Dataclass equality that compares numpy array fields exactly."""

    def __eq__(self, other):
        if other.__class__ is not self.__class__:
            return NotImplemented
        for f in dataclasses.fields(self):
            a, b = getattr(self, f.name), getattr(other, f.name)
            if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
                if not (isinstance(a, np.ndarray) and isinstance(b, np.ndarray)):
                    return False
                if a.shape != b.shape or not np.array_equal(a, b):
                    return False
            elif a != b:
                return False
        return True

    __hash__ = None


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def matrix_from_parts(rows: int, cols: int, data) -> np.ndarray:
    """Build a feature matrix from a row-major flat buffer; shape must agree."""
    data = np.asarray(data, dtype=np.float64).ravel()
    if rows < 0 or cols < 0 or rows * cols != data.shape[0]:
        raise ValueError("rows*cols does not match data length")
    return check_feature_matrix(data.reshape(rows, cols))


@dataclass(frozen=True, eq=False)
class Instance(FieldEqMixin):
    """A single feature vector, the point whose vicinity gets explained."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _freeze(check_instance_values(self.values)))

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True, eq=False)
class NeighbourhoodSpec(FieldEqMixin):
    """Recipe for one neighbourhood draw: centre, radius, size, stream seed.

    ``kernel_width``, when set, requests closeness weights for the sampled
    points; by default no weights are computed.
    """

    center: Instance
    radius: float
    n_samples: int = 2000
    seed: int = 0
    kernel_width: float | None = None

    def __post_init__(self):
        if not isinstance(self.center, Instance):
            raise ValueError("center must be an Instance")
        object.__setattr__(self, "radius", check_finite_float(self.radius, name="radius", minimum=0.0))
        object.__setattr__(self, "n_samples", check_positive_int(self.n_samples, name="n_samples"))
        object.__setattr__(self, "seed", check_seed(self.seed))
        if self.kernel_width is not None:
            object.__setattr__(
                self,
                "kernel_width",
                check_finite_float(self.kernel_width, name="kernel_width", minimum=0.0, strict=True),
            )

    @property
    def dim(self) -> int:
        return self.center.dim


@dataclass(frozen=True, eq=False)
class Neighbourhood(FieldEqMixin):
    """A sampled neighbourhood: points inside the ball, black-box labels and
    optional closeness weights. This is the training set of a local surrogate.
    """

    spec: NeighbourhoodSpec
    points: np.ndarray
    labels: np.ndarray
    weights: np.ndarray | None = None

    def __post_init__(self):
        if not isinstance(self.spec, NeighbourhoodSpec):
            raise ValueError("spec must be a NeighbourhoodSpec")
        points = check_feature_matrix(self.points, n_cols=self.spec.dim, name="points")
        labels = check_binary_labels(self.labels, n_rows=points.shape[0], name="labels")
        if points.shape[0] != self.spec.n_samples:
            raise ValueError("points.rows must equal spec.n_samples")
        dist = np.linalg.norm(points - self.spec.center.values, axis=1)
        if points.shape[0] and float(dist.max()) > self.spec.radius + CONTAINMENT_SLACK:
            raise ValueError("a sampled point lies outside the neighbourhood radius")
        object.__setattr__(self, "points", _freeze(points))
        object.__setattr__(self, "labels", _freeze(labels))
        if self.weights is not None:
            w = np.ascontiguousarray(self.weights, dtype=np.float64)
            if w.shape != (points.shape[0],):
                raise ValueError("weights must have one entry per point")
            if not np.all(np.isfinite(w)) or np.any(w <= 0) or np.any(w > 1.0):
                raise ValueError("weights must lie in (0, 1]")
            object.__setattr__(self, "weights", _freeze(w))

    @property
    def n_samples(self) -> int:
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        return self.spec.dim

    def is_pure(self) -> bool:
        """True when the black-box labelled every point identically."""
        return bool(self.labels.size == 0 or self.labels.min() == self.labels.max())


# -- codecs -------------------------------------------------------------------

records.register(
    "instance",
    Instance,
    lambda v: {"values": records.encode_vector(v.values)},
    lambda r: Instance(records.decode_vector(r["values"])),
)


def _encode_spec(s: NeighbourhoodSpec) -> dict:
    return {
        "center": records.to_record(s.center),
        "radius": float(s.radius),
        "n_samples": int(s.n_samples),
        "seed": int(s.seed),
        "kernel_width": None if s.kernel_width is None else float(s.kernel_width),
    }


def _decode_spec(r: dict) -> NeighbourhoodSpec:
    return NeighbourhoodSpec(
        center=records.from_record(r["center"]),
        radius=float(r["radius"]),
        n_samples=int(r["n_samples"]),
        seed=int(r["seed"]),
        kernel_width=None if r.get("kernel_width") is None else float(r["kernel_width"]),
    )


records.register("neighbourhood_spec", NeighbourhoodSpec, _encode_spec, _decode_spec)


def _encode_neighbourhood(n: Neighbourhood) -> dict:
    return {
        "spec": records.to_record(n.spec),
        "points": records.encode_matrix(n.points),
        "labels": records.encode_int_vector(n.labels),
        "weights": None if n.weights is None else records.encode_vector(n.weights),
    }


def _decode_neighbourhood(r: dict) -> Neighbourhood:
    return Neighbourhood(
        spec=records.from_record(r["spec"]),
        points=records.decode_matrix(r["points"], name="points"),
        labels=np.asarray([int(v) for v in r["labels"]], dtype=np.int64),
        weights=None if r.get("weights") is None else records.decode_vector(r["weights"]),
    )


records.register("neighbourhood", Neighbourhood, _encode_neighbourhood, _decode_neighbourhood)
