"""Datasets: two synthetic 2-D generators and a CSV loader for tabular tasks.

The generators produce the classic interleaved half-moons and concentric
circles, deterministic in the seed. ``load_csv_binary`` turns a numeric CSV
regression table into a binary task by thresholding the target column, which
is how the bundled diabetes data (442 rows, 10 features) is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import records
from .rng import derive_rng
from .types import FieldEqMixin, _freeze
from .validation import check_binary_labels, check_feature_matrix, check_finite_float


class NonNumericCsvError(ValueError):
    """A CSV cell could not be parsed as a number."""


class MissingTargetColumnError(ValueError):
    """The requested target column is not in the CSV header."""


@dataclass(frozen=True, eq=False)
class Dataset(FieldEqMixin):
    """A binary classification table with per-feature empirical bounds."""

    X: np.ndarray
    y: np.ndarray
    feature_names: list[str]
    bounds: np.ndarray = field(default=None)  # (d, 2) per-feature (min, max)

    def __post_init__(self):
        X = check_feature_matrix(self.X)
        y = check_binary_labels(self.y, n_rows=X.shape[0])
        if len(self.feature_names) != X.shape[1]:
            raise ValueError("feature_names must match the number of columns")
        empirical = np.column_stack([X.min(axis=0), X.max(axis=0)])
        if self.bounds is None:
            bounds = empirical
        else:
            bounds = np.ascontiguousarray(self.bounds, dtype=np.float64)
            if bounds.shape != (X.shape[1], 2) or not np.array_equal(bounds, empirical):
                raise ValueError("bounds must equal the empirical per-feature min/max")
        object.__setattr__(self, "X", _freeze(X))
        object.__setattr__(self, "y", _freeze(y))
        object.__setattr__(self, "feature_names", list(self.feature_names))
        object.__setattr__(self, "bounds", _freeze(bounds))

    @property
    def n_samples(self) -> int:
        return int(self.X.shape[0])

    @property
    def dim(self) -> int:
        return int(self.X.shape[1])


def _split_counts(n: int) -> tuple[int, int]:
    # class 0 gets the extra point when n is odd
    return n - n // 2, n // 2


def make_moons(n: int, noise: float, seed: int) -> Dataset:
    """Two interleaving half-circles in 2-D with additive Gaussian noise.

    Class 0 lies on the upper unit half-circle, class 1 on the lower arc
    shifted to interleave with it; classes are balanced to within one sample.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    noise = check_finite_float(noise, name="noise", minimum=0.0)
    rng = derive_rng(seed, "datasets.make_moons")
    n0, n1 = _split_counts(n)
    t0 = np.linspace(0.0, np.pi, n0)
    t1 = np.linspace(0.0, np.pi, n1)
    X = np.vstack([
        np.column_stack([np.cos(t0), np.sin(t0)]),
        np.column_stack([1.0 - np.cos(t1), 1.0 - np.sin(t1) - 0.5]),
    ])
    y = np.concatenate([np.zeros(n0, dtype=np.int64), np.ones(n1, dtype=np.int64)])
    if noise > 0.0:
        X = X + rng.normal(0.0, noise, size=X.shape)
    return Dataset(X=X, y=y, feature_names=["f0", "f1"])


def make_circles(n: int, noise: float, factor: float, seed: int) -> Dataset:
    """An outer circle (class 0, radius 1) around an inner circle (class 1,
    radius ``factor``), with additive Gaussian noise and balanced classes."""
    if n < 2:
        raise ValueError("n must be >= 2")
    noise = check_finite_float(noise, name="noise", minimum=0.0)
    factor = float(factor)
    if not 0.0 < factor < 1.0:
        raise ValueError("factor must lie in (0, 1)")
    rng = derive_rng(seed, "datasets.make_circles")
    n0, n1 = _split_counts(n)
    t0 = np.linspace(0.0, 2.0 * np.pi, n0, endpoint=False)
    t1 = np.linspace(0.0, 2.0 * np.pi, n1, endpoint=False)
    X = np.vstack([
        np.column_stack([np.cos(t0), np.sin(t0)]),
        factor * np.column_stack([np.cos(t1), np.sin(t1)]),
    ])
    y = np.concatenate([np.zeros(n0, dtype=np.int64), np.ones(n1, dtype=np.int64)])
    if noise > 0.0:
        X = X + rng.normal(0.0, noise, size=X.shape)
    return Dataset(X=X, y=y, feature_names=["f0", "f1"])


def load_csv_binary(path, target_column: str, threshold="median") -> Dataset:
    """Load a numeric CSV and binarize it: label 1 iff target > threshold.

    ``threshold`` is either a number or the string ``"median"``, in which case
    the median of the target column is used. Rows whose target equals the
    threshold get label 0. The remaining columns become features, in header
    order.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip() != ""]
    if not lines:
        raise NonNumericCsvError(f"{path}: empty file")
    header = [h.strip() for h in lines[0].split(",")]
    if target_column not in header:
        raise MissingTargetColumnError(
            f"{path}: target column {target_column!r} not in header {header}"
        )
    tcol = header.index(target_column)
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(header):
            raise NonNumericCsvError(f"{path}:{lineno}: expected {len(header)} cells")
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise NonNumericCsvError(f"{path}:{lineno}: {exc}") from None
    table = np.asarray(rows, dtype=np.float64)
    if not np.all(np.isfinite(table)):
        raise NonNumericCsvError(f"{path}: non-finite value in table")
    target = table[:, tcol]
    if threshold == "median":
        cut = float(np.median(target))
    else:
        cut = check_finite_float(threshold, name="threshold")
    y = (target > cut).astype(np.int64)
    keep = [i for i in range(len(header)) if i != tcol]
    return Dataset(
        X=table[:, keep],
        y=y,
        feature_names=[header[i] for i in keep],
    )


def diabetes_csv_path() -> Path:
    """Path of the diabetes CSV bundled with the package."""
    return Path(resources.files("surrscope").joinpath("data/diabetes.csv"))


def _encode_dataset(d: Dataset) -> dict:
    return {
        "X": records.encode_matrix(d.X),
        "y": records.encode_int_vector(d.y),
        "feature_names": list(d.feature_names),
        "bounds": records.encode_matrix(d.bounds),
    }


def _decode_dataset(r: dict) -> Dataset:
    return Dataset(
        X=records.decode_matrix(r["X"], name="X"),
        y=np.asarray([int(v) for v in r["y"]], dtype=np.int64),
        feature_names=[str(s) for s in r["feature_names"]],
        bounds=records.decode_matrix(r["bounds"], name="bounds"),
    )


records.register("dataset", Dataset, _encode_dataset, _decode_dataset)
