"""Input validation helpers.

Every public entry point funnels array-like inputs through these checks so
that shape/dtype/finiteness errors surface early with a consistent message,
and so downstream code can assume contiguous float64 arrays.
"""

from __future__ import annotations

import numpy as np

MAX_SEED = 2**64 - 1


def check_feature_matrix(X, *, n_cols: int | None = None, name: str = "X") -> np.ndarray:
    """Coerce to a 2-D float64 matrix with finite entries."""
    X = np.ascontiguousarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError(f"{name} contains non-finite values")
    if n_cols is not None and X.shape[1] != n_cols:
        raise ValueError(f"{name} has {X.shape[1]} columns, expected {n_cols}")
    return X


def check_instance_values(values, *, dim: int | None = None, name: str = "x") -> np.ndarray:
    """Coerce to a 1-D float64 vector with finite entries and length >= 1."""
    v = np.ascontiguousarray(values, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 1:
        raise ValueError(f"{name} must be a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite values")
    if dim is not None and v.shape[0] != dim:
        raise ValueError(f"{name} has dimension {v.shape[0]}, expected {dim}")
    return v


def check_binary_labels(y, *, n_rows: int | None = None, name: str = "y") -> np.ndarray:
    """Coerce to a 1-D int64 vector over {0, 1}."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {y.shape}")
    out = y.astype(np.int64, copy=True)
    if y.dtype.kind == "f" and not np.array_equal(out, y):
        raise ValueError(f"{name} has non-integer entries")
    if out.size and not np.all((out == 0) | (out == 1)):
        raise ValueError(f"{name} must contain only 0 and 1")
    if n_rows is not None and out.shape[0] != n_rows:
        raise ValueError(f"{name} has {out.shape[0]} entries, expected {n_rows}")
    return out


def check_sample_weight(w, n_rows: int, *, name: str = "sample_weight") -> np.ndarray:
    """Coerce to a 1-D float64 vector of strictly positive finite weights."""
    w = np.ascontiguousarray(w, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != n_rows:
        raise ValueError(f"{name} must be 1-D with {n_rows} entries, got shape {w.shape}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError(f"{name} must be finite and strictly positive")
    return w


def check_seed(seed, *, name: str = "seed") -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError(f"{name} must be an integer")
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"{name} must be in [0, 2**64)")
    return seed


def check_positive_int(value, *, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer")
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_finite_float(value, *, name: str, minimum: float | None = None,
                       strict: bool = False) -> float:
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite")
    if minimum is not None:
        if strict and value <= minimum:
            raise ValueError(f"{name} must be > {minimum}, got {value}")
        if not strict and value < minimum:
            raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value
