"""The opaque classifier being explained.

Two concrete black-boxes are provided: a small trainable multilayer
perceptron and an adapter that proxies predictions to an external child
process. Both only expose hard {0, 1} labels through :func:`predict`; the
explanation pipeline never sees internals, probabilities or gradients.
"""

from __future__ import annotations

import os
import select
import subprocess
import threading
import time
from dataclasses import dataclass

import numpy as np
from scipy.special import expit
from sklearn.base import BaseEstimator, ClassifierMixin

from . import records
from .datasets import Dataset
from .rng import derive_rng
from .types import FieldEqMixin, _freeze
from .validation import (
    check_feature_matrix,
    check_finite_float,
    check_positive_int,
    check_seed,
)

ACTIVATIONS = ("tanh", "relu")


class ExternalProcessError(RuntimeError):
    """The external model process misbehaved (died, timed out, bad output)."""


@dataclass(frozen=True, eq=False)
class MlpConfig(FieldEqMixin):
    """Architecture and full-batch training settings for the built-in MLP."""

    hidden_layers: tuple[int, ...] = (16, 16)
    activation: str = "tanh"
    learning_rate: float = 0.1
    epochs: int = 2000
    seed: int = 0

    def __post_init__(self):
        layers = tuple(check_positive_int(h, name="hidden layer width") for h in self.hidden_layers)
        if not layers:
            raise ValueError("at least one hidden layer is required")
        object.__setattr__(self, "hidden_layers", layers)
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"activation must be one of {ACTIVATIONS}")
        object.__setattr__(
            self, "learning_rate",
            check_finite_float(self.learning_rate, name="learning_rate", minimum=0.0, strict=True),
        )
        object.__setattr__(self, "epochs", check_positive_int(self.epochs, name="epochs"))
        object.__setattr__(self, "seed", check_seed(self.seed))


class MlpClassifier(ClassifierMixin, BaseEstimator):
    """Full-batch gradient-descent MLP with a single sigmoid output unit.

    Training minimizes the mean logistic loss by backpropagation with a fixed
    learning rate and no minibatching, so a given (data, config) pair always
    yields bit-identical weights. Predicted label is 1 iff the output
    probability exceeds 0.5 (exact ties give 0).
    """

    def __init__(self, hidden_layers=(16, 16), activation="tanh",
                 learning_rate=0.1, epochs=2000, seed=0):
        self.hidden_layers = hidden_layers
        self.activation = activation
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.seed = seed

    @classmethod
    def from_config(cls, config: MlpConfig) -> "MlpClassifier":
        return cls(
            hidden_layers=config.hidden_layers,
            activation=config.activation,
            learning_rate=config.learning_rate,
            epochs=config.epochs,
            seed=config.seed,
        )

    def config(self) -> MlpConfig:
        return MlpConfig(
            hidden_layers=tuple(self.hidden_layers),
            activation=self.activation,
            learning_rate=self.learning_rate,
            epochs=self.epochs,
            seed=self.seed,
        )

    def _act(self, z: np.ndarray) -> np.ndarray:
        return np.tanh(z) if self.activation == "tanh" else np.maximum(z, 0.0)

    def fit(self, X, y, sample_weight=None):
        cfg = self.config()  # validates parameters
        X = check_feature_matrix(X)
        y = np.asarray(y, dtype=np.int64)
        if y.shape != (X.shape[0],) or (y.size and not np.all((y == 0) | (y == 1))):
            raise ValueError("y must be binary labels, one per row of X")
        rng = derive_rng(cfg.seed, "blackbox.mlp_init")
        sizes = [X.shape[1], *cfg.hidden_layers, 1]
        weights, biases = [], []
        for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
            scale = np.sqrt(2.0 / fan_in) if cfg.activation == "relu" else np.sqrt(1.0 / fan_in)
            weights.append(rng.normal(0.0, scale, size=(fan_in, fan_out)))
            biases.append(np.zeros(fan_out))

        n = X.shape[0]
        target = y.astype(np.float64).reshape(-1, 1)
        lr = cfg.learning_rate
        for _ in range(cfg.epochs):
            activations = [X]
            for W, b in zip(weights[:-1], biases[:-1]):
                activations.append(self._act(activations[-1] @ W + b))
            logits = activations[-1] @ weights[-1] + biases[-1]
            delta = (expit(logits) - target) / n
            for layer in range(len(weights) - 1, -1, -1):
                grad_W = activations[layer].T @ delta
                grad_b = delta.sum(axis=0)
                if layer > 0:
                    upstream = delta @ weights[layer].T
                    h = activations[layer]
                    if cfg.activation == "tanh":
                        delta = upstream * (1.0 - h * h)
                    else:
                        delta = upstream * (h > 0.0)
                weights[layer] = weights[layer] - lr * grad_W
                biases[layer] = biases[layer] - lr * grad_b

        self.weights_ = [_freeze(W) for W in weights]
        self.biases_ = [_freeze(b) for b in biases]
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([0, 1])
        self.train_accuracy_ = float(np.mean(self.predict(X) == y)) if n else 0.0
        return self

    def _probability(self, X: np.ndarray) -> np.ndarray:
        h = X
        for W, b in zip(self.weights_[:-1], self.biases_[:-1]):
            h = self._act(h @ W + b)
        return expit((h @ self.weights_[-1] + self.biases_[-1]).ravel())

    def predict(self, X) -> np.ndarray:
        X = check_feature_matrix(X, n_cols=self.n_features_in_)
        if X.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        return (self._probability(X) > 0.5).astype(np.int64)


class ExternalProcessClassifier(BaseEstimator):
    """Black-box adapter around a child process speaking a line protocol.

    Per batch, the adapter writes a CSV header ``f0,...,f{d-1}``, one CSV row
    per sample, then an empty line; the child must answer with one ``0`` or
    ``1`` line per row. Calls are serialized through a lock; a slow or
    misbehaving child raises :class:`ExternalProcessError`.
    """

    def __init__(self, command, n_features, timeout=30.0):
        self.command = command
        self.n_features = n_features
        self.timeout = timeout

    def _ensure_started(self):
        if getattr(self, "_proc", None) is not None and self._proc.poll() is None:
            return
        # binary pipes, read via os.read: buffered readline would swallow
        # lines select() can no longer see, stalling the timeout loop
        self._proc = subprocess.Popen(
            list(self.command),
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
        )
        self._buffer = b""

    @property
    def n_features_in_(self) -> int:
        return int(self.n_features)

    def predict(self, X) -> np.ndarray:
        X = check_feature_matrix(X, n_cols=self.n_features)
        if X.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        if not hasattr(self, "_lock"):
            self._lock = threading.Lock()
        with self._lock:
            self._ensure_started()
            proc = self._proc
            header = ",".join(f"f{j}" for j in range(X.shape[1]))
            body = "\n".join(",".join(records.format_float(v) for v in row) for row in X)
            try:
                proc.stdin.write((header + "\n" + body + "\n\n").encode("utf-8"))
                proc.stdin.flush()
            except (BrokenPipeError, OSError) as exc:
                raise ExternalProcessError(f"external model process died: {exc}") from None
            labels = np.empty(X.shape[0], dtype=np.int64)
            for i in range(X.shape[0]):
                line = self._read_line(proc)
                if line not in ("0", "1"):
                    raise ExternalProcessError(f"external model wrote {line!r}, expected 0 or 1")
                labels[i] = int(line)
            return labels

    def _read_line(self, proc) -> str:
        deadline = time.monotonic() + self.timeout
        while True:
            nl = self._buffer.find(b"\n")
            if nl >= 0:
                line = self._buffer[:nl]
                self._buffer = self._buffer[nl + 1:]
                return line.decode("utf-8").strip()
            remaining = deadline - time.monotonic()
            ready, _, _ = select.select([proc.stdout], [], [], max(remaining, 0.0))
            if not ready:
                raise ExternalProcessError(f"external model timed out after {self.timeout}s")
            chunk = os.read(proc.stdout.fileno(), 65536)
            if not chunk:
                raise ExternalProcessError("external model closed its output")
            self._buffer += chunk

    def close(self):
        proc = getattr(self, "_proc", None)
        if proc is not None and proc.poll() is None:
            proc.stdin.close()
            proc.wait(timeout=5)
        self._proc = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def train_mlp(data: Dataset, config: MlpConfig) -> MlpClassifier:
    """Train the built-in MLP on a dataset; training accuracy is reported on
    the fitted estimator as ``train_accuracy_``."""
    return MlpClassifier.from_config(config).fit(data.X, data.y)


def predict(blackbox, X) -> np.ndarray:
    """Query the black-box for hard labels. The one sanctioned way in."""
    X = check_feature_matrix(X, n_cols=getattr(blackbox, "n_features_in_", None))
    return blackbox.predict(X)


@dataclass(frozen=True, eq=False)
class EvalGrid(FieldEqMixin):
    """A 2-D meshgrid with black-box labels, for exhaustive illustration and
    boundary heatmaps."""

    bounds: np.ndarray  # (2, 2) per-feature (min, max)
    resolution: int
    points: np.ndarray  # (resolution**2, 2)
    labels: np.ndarray

    def __post_init__(self):
        bounds = np.ascontiguousarray(self.bounds, dtype=np.float64)
        if bounds.shape != (2, 2):
            raise ValueError("bounds must be a (2, 2) array of per-feature (min, max)")
        resolution = check_positive_int(self.resolution, name="resolution", minimum=2)
        points = check_feature_matrix(self.points, n_cols=2, name="points")
        if points.shape[0] != resolution**2:
            raise ValueError("points.rows must equal resolution**2")
        eps = 1e-12
        for j in range(2):
            lo, hi = bounds[j]
            if points[:, j].min() < lo - eps or points[:, j].max() > hi + eps:
                raise ValueError("grid points must lie within bounds")
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.shape != (points.shape[0],):
            raise ValueError("labels must have one entry per grid point")
        object.__setattr__(self, "bounds", _freeze(bounds))
        object.__setattr__(self, "resolution", resolution)
        object.__setattr__(self, "points", _freeze(points))
        object.__setattr__(self, "labels", _freeze(labels))


def grid_points(bounds, resolution: int) -> np.ndarray:
    """Axis-aligned uniform grid including both endpoints of each bound.

    Rows are ordered with the second feature varying fastest: row
    ``i*resolution + j`` is ``(axis0[i], axis1[j])``.
    """
    bounds = np.ascontiguousarray(bounds, dtype=np.float64)
    if bounds.shape != (2, 2):
        raise ValueError("bounds must be a (2, 2) array")
    if np.any(bounds[:, 1] < bounds[:, 0]):
        raise ValueError("each bound must satisfy min <= max")
    resolution = check_positive_int(resolution, name="resolution", minimum=2)
    axis0 = np.linspace(bounds[0, 0], bounds[0, 1], resolution)
    axis1 = np.linspace(bounds[1, 0], bounds[1, 1], resolution)
    g0, g1 = np.meshgrid(axis0, axis1, indexing="ij")
    return np.column_stack([g0.ravel(), g1.ravel()])


def meshgrid_predict(blackbox, bounds, resolution: int) -> EvalGrid:
    """Evaluate a 2-D black-box exhaustively on a meshgrid spanning bounds."""
    if getattr(blackbox, "n_features_in_", 2) != 2:
        raise ValueError("meshgrid evaluation requires a 2-D black-box")
    points = grid_points(bounds, resolution)
    labels = predict(blackbox, points)
    return EvalGrid(
        bounds=np.ascontiguousarray(bounds, dtype=np.float64),
        resolution=int(resolution),
        points=points,
        labels=labels,
    )


# -- codecs -------------------------------------------------------------------

records.register(
    "mlp_config",
    MlpConfig,
    lambda c: {
        "hidden_layers": [int(h) for h in c.hidden_layers],
        "activation": c.activation,
        "learning_rate": float(c.learning_rate),
        "epochs": int(c.epochs),
        "seed": int(c.seed),
    },
    lambda r: MlpConfig(
        hidden_layers=tuple(int(h) for h in r["hidden_layers"]),
        activation=str(r["activation"]),
        learning_rate=float(r["learning_rate"]),
        epochs=int(r["epochs"]),
        seed=int(r["seed"]),
    ),
)


def _encode_eval_grid(g: EvalGrid) -> dict:
    return {
        "bounds": records.encode_matrix(g.bounds),
        "resolution": int(g.resolution),
        "points": records.encode_matrix(g.points),
        "labels": records.encode_int_vector(g.labels),
    }


def _decode_eval_grid(r: dict) -> EvalGrid:
    return EvalGrid(
        bounds=records.decode_matrix(r["bounds"], name="bounds"),
        resolution=int(r["resolution"]),
        points=records.decode_matrix(r["points"], name="points"),
        labels=np.asarray([int(v) for v in r["labels"]], dtype=np.int64),
    )


records.register("eval_grid", EvalGrid, _encode_eval_grid, _decode_eval_grid)


def _encode_mlp(m: MlpClassifier) -> dict:
    return {
        "config": records.to_record(m.config()),
        "weights": [records.encode_matrix(W) for W in m.weights_],
        "biases": [records.encode_vector(b) for b in m.biases_],
        "n_features_in": int(m.n_features_in_),
        "train_accuracy": float(m.train_accuracy_),
    }


def _decode_mlp(r: dict) -> MlpClassifier:
    cfg = records.from_record(r["config"])
    est = MlpClassifier.from_config(cfg)
    est.weights_ = [_freeze(records.decode_matrix(w)) for w in r["weights"]]
    est.biases_ = [_freeze(records.decode_vector(b)) for b in r["biases"]]
    est.n_features_in_ = int(r["n_features_in"])
    est.classes_ = np.array([0, 1])
    est.train_accuracy_ = float(r["train_accuracy"])
    return est


records.register("mlp_blackbox", MlpClassifier, _encode_mlp, _decode_mlp)
