"""Neighbourhood generation: uniform sampling in an L2 ball, plus optional
distance-kernel weights.

A point uniform in the d-ball of radius r is drawn as a uniformly random
direction (normalized standard Gaussian) scaled by r * U**(1/d) with
U ~ Uniform(0, 1); the radial CDF of the result is exactly (rho/r)**d.
The draw order (all directions, then all radii) is fixed so a given
(seed, spec) pair always produces bit-identical points.
"""

from __future__ import annotations

import numpy as np

from .rng import derive_rng
from .types import Instance, Neighbourhood, NeighbourhoodSpec
from .validation import check_feature_matrix, check_finite_float


def ball_points(center: np.ndarray, radius: float, n: int,
                rng: np.random.Generator) -> np.ndarray:
    """n points uniform in the closed ball of the given radius about center."""
    d = center.shape[0]
    directions = rng.standard_normal((n, d))
    norms = np.linalg.norm(directions, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0  # measure-zero guard
    directions /= norms
    u = rng.random(n)
    dist = radius * u ** (1.0 / d)
    return center + directions * dist[:, None]


def sample_ball(spec: NeighbourhoodSpec) -> np.ndarray:
    """The neighbourhood point cloud for a spec, deterministic in spec.seed."""
    rng = derive_rng(spec.seed, "sampling.sample_ball")
    return ball_points(spec.center.values, spec.radius, spec.n_samples, rng)


def kernel_weights(points: np.ndarray, center: Instance, width: float) -> np.ndarray:
    """Gaussian closeness weights exp(-dist^2 / width^2), in (0, 1]."""
    width = check_finite_float(width, name="width", minimum=0.0, strict=True)
    points = check_feature_matrix(points, n_cols=center.dim, name="points")
    sq = np.sum((points - center.values) ** 2, axis=1)
    return np.exp(-sq / (width * width))


def build_neighbourhood(spec: NeighbourhoodSpec, blackbox) -> Neighbourhood:
    """Sample the ball, label it with the black-box, attach optional weights."""
    from .blackbox import predict  # local import to keep module layering acyclic

    points = sample_ball(spec)
    labels = predict(blackbox, points)
    weights = None
    if spec.kernel_width is not None:
        weights = kernel_weights(points, spec.center, spec.kernel_width)
    return Neighbourhood(spec=spec, points=points, labels=labels, weights=weights)
