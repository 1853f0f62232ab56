"""Run configuration: one dataset, one black box, one instance, one analysis.

The same JSON vocabulary drives the command line (config file + flag
overrides) and the HTTP service (request bodies), so a CLI run and a service
session describe work identically. Builders here turn the validated spec
dicts into live objects; :func:`run_analysis` dispatches to the analysis
procedures.

Errors raise :class:`ConfigError` (invalid spec) or its subclass
:class:`DimensionError` (shape disagreement between instance, dataset, and
black box), which callers map to exit codes or HTTP statuses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .analysis import (
    bootstrap_sweep,
    complexity_ladder,
    coverage_sweep,
    explain_instance,
    default_C_grid,
    lasso_path,
)
from .blackbox import ExternalProcessClassifier, MlpConfig, train_mlp
from .datasets import Dataset, diabetes_csv_path, load_csv_binary, make_circles, make_moons
from .surrogates import FitConfig
from .types import Instance

DATASET_KINDS = ("moons", "circles", "csv", "diabetes")
BLACKBOX_KINDS = ("builtin_mlp", "external_process")
INSTANCE_KINDS = ("row", "inline")
ANALYSIS_KINDS = ("sweep", "bootstrap", "path", "ladder", "explain")


class ConfigError(ValueError):
    """The configuration is malformed or self-contradictory."""


class DimensionError(ConfigError):
    """Instance, dataset, and black box disagree on feature dimension."""


def _require(spec: dict, key: str, context: str):
    if key not in spec:
        raise ConfigError(f"{context}: missing required field {key!r}")
    return spec[key]


def _as_float(value, name: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a number") from None
    if not np.isfinite(out):
        raise ConfigError(f"{name} must be finite")
    return out


def _as_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            if isinstance(value, float) and value.is_integer():
                return int(value)
        except AttributeError:
            pass
        raise ConfigError(f"{name} must be an integer")
    return value


def _check_kind(spec, kinds, context: str) -> str:
    if not isinstance(spec, dict):
        raise ConfigError(f"{context} spec must be an object")
    kind = _require(spec, "kind", context)
    if kind not in kinds:
        raise ConfigError(f"{context}: unknown kind {kind!r} (expected one of {kinds})")
    return kind


@dataclass
class RunConfig:
    """Everything one batch run or one service session needs."""

    dataset: dict
    blackbox: dict
    instance: dict
    analysis: dict | None = None
    seed: int = 0
    out_dir: str | None = None

    def __post_init__(self):
        _check_kind(self.dataset, DATASET_KINDS, "dataset")
        _check_kind(self.blackbox, BLACKBOX_KINDS, "blackbox")
        _check_kind(self.instance, INSTANCE_KINDS, "instance")
        if self.analysis is not None:
            _check_kind(self.analysis, ANALYSIS_KINDS, "analysis")
        self.seed = _as_int(self.seed, "seed")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must lie in [0, 2**64)")


def parse_config(text: str) -> RunConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(raw, dict) or raw.get("type") != "run_config":
        raise ConfigError('config must be an object with "type": "run_config"')
    known = {"type", "dataset", "blackbox", "instance", "analysis", "seed", "out_dir"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    return RunConfig(
        dataset=_require(raw, "dataset", "config"),
        blackbox=_require(raw, "blackbox", "config"),
        instance=_require(raw, "instance", "config"),
        analysis=raw.get("analysis"),
        seed=raw.get("seed", 0),
        out_dir=raw.get("out_dir"),
    )


# -- builders ---------------------------------------------------------------------

def build_dataset(spec: dict) -> Dataset:
    kind = _check_kind(spec, DATASET_KINDS, "dataset")
    try:
        if kind == "moons":
            return make_moons(
                n=_as_int(spec.get("n", 1000), "dataset.n"),
                noise=_as_float(spec.get("noise", 0.1), "dataset.noise"),
                seed=_as_int(spec.get("seed", 0), "dataset.seed"),
            )
        if kind == "circles":
            return make_circles(
                n=_as_int(spec.get("n", 1000), "dataset.n"),
                noise=_as_float(spec.get("noise", 0.05), "dataset.noise"),
                factor=_as_float(spec.get("factor", 0.5), "dataset.factor"),
                seed=_as_int(spec.get("seed", 0), "dataset.seed"),
            )
        if kind == "diabetes":
            return load_csv_binary(diabetes_csv_path(), target_column="target",
                                   threshold="median")
        path = _require(spec, "path", "dataset")
        threshold = spec.get("threshold", "median")
        if threshold != "median":
            threshold = _as_float(threshold, "dataset.threshold")
        return load_csv_binary(path, target_column=spec.get("target", "target"),
                               threshold=threshold)
    except ConfigError:
        raise
    except (ValueError, OSError) as exc:
        raise ConfigError(f"dataset: {exc}") from None


def build_blackbox(spec: dict, dataset: Dataset):
    """Train or attach the black box; returns (model, train_accuracy|None)."""
    kind = _check_kind(spec, BLACKBOX_KINDS, "blackbox")
    try:
        if kind == "builtin_mlp":
            config = MlpConfig(
                hidden_layers=tuple(_as_int(h, "blackbox.hidden_layers") for h in
                                    spec.get("hidden_layers", (16, 16))),
                activation=spec.get("activation", "tanh"),
                learning_rate=_as_float(spec.get("learning_rate", 0.1), "blackbox.learning_rate"),
                epochs=_as_int(spec.get("epochs", 2000), "blackbox.epochs"),
                seed=_as_int(spec.get("seed", 0), "blackbox.seed"),
            )
            model = train_mlp(dataset, config)
            return model, float(model.train_accuracy_)
        command = _require(spec, "command", "blackbox")
        if not (isinstance(command, list) and command
                and all(isinstance(c, str) for c in command)):
            raise ConfigError("blackbox.command must be a non-empty list of strings")
        model = ExternalProcessClassifier(
            command=command, n_features=dataset.dim,
            timeout=_as_float(spec.get("timeout", 30.0), "blackbox.timeout"),
        )
        return model, None
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"blackbox: {exc}") from None


def resolve_instance(spec: dict, dataset: Dataset) -> Instance:
    kind = _check_kind(spec, INSTANCE_KINDS, "instance")
    if kind == "row":
        index = _as_int(_require(spec, "index", "instance"), "instance.index")
        if not 0 <= index < dataset.n_samples:
            raise ConfigError(f"instance.index {index} outside dataset rows "
                              f"[0, {dataset.n_samples})")
        return Instance(values=dataset.X[index])
    values = _require(spec, "values", "instance")
    if not isinstance(values, list) or not values:
        raise ConfigError("instance.values must be a non-empty list of numbers")
    vec = np.asarray([_as_float(v, "instance.values") for v in values])
    if vec.shape[0] != dataset.dim:
        raise DimensionError(f"instance has {vec.shape[0]} features, "
                             f"dataset has {dataset.dim}")
    return Instance(values=vec)


def build_fit_config(spec: dict) -> FitConfig:
    family = spec.get("family", "logistic")
    try:
        return FitConfig(
            family=family,
            C=None if spec.get("C") is None else _as_float(spec["C"], "C"),
            max_depth=None if spec.get("max_depth") is None
            else _as_int(spec["max_depth"], "max_depth"),
            max_leaves=None if spec.get("max_leaves") is None
            else _as_int(spec["max_leaves"], "max_leaves"),
            tol=_as_float(spec.get("tol", 1e-8), "tol"),
            max_iter=_as_int(spec.get("max_iter", 10000), "max_iter"),
            standardize=spec.get("standardize"),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"fit config: {exc}") from None


def resolve_radii(spec: dict) -> np.ndarray:
    explicit = spec.get("radii")
    has_range = any(k in spec for k in ("radius_min", "radius_max", "radius_steps"))
    if explicit is not None and has_range:
        raise ConfigError("give either radii or radius_min/max/steps, not both")
    if explicit is not None:
        if not isinstance(explicit, list) or not explicit:
            raise ConfigError("radii must be a non-empty list")
        return np.asarray([_as_float(r, "radii") for r in explicit])
    if not has_range:
        raise ConfigError("analysis needs radii or radius_min/max/steps")
    lo = _as_float(_require(spec, "radius_min", "analysis"), "radius_min")
    hi = _as_float(_require(spec, "radius_max", "analysis"), "radius_max")
    steps = _as_int(spec.get("radius_steps", 10), "radius_steps")
    if steps < 1:
        raise ConfigError("radius_steps must be >= 1")
    return np.linspace(lo, hi, steps)


def resolve_C_grid(spec: dict) -> np.ndarray | None:
    grid = spec.get("C_grid")
    if grid is None:
        return None
    if not isinstance(grid, list) or not grid:
        raise ConfigError("C_grid must be a non-empty list")
    return np.asarray([_as_float(c, "C_grid") for c in grid])


def _common_sampling(spec: dict) -> dict:
    out = {
        "n_samples": _as_int(spec.get("n_samples", 2000), "n_samples"),
        "kernel_width": None if spec.get("kernel_width") is None
        else _as_float(spec["kernel_width"], "kernel_width"),
        "eval_n": None if spec.get("eval_n") is None
        else _as_int(spec["eval_n"], "eval_n"),
    }
    return out


def run_analysis(analysis: dict, *, blackbox, dataset: Dataset, instance: Instance,
                 seed: int, threads: int = 1, on_progress=None):
    """Dispatch one analysis spec to the matching library procedure."""
    kind = _check_kind(analysis, ANALYSIS_KINDS, "analysis")
    try:
        if kind == "explain":
            fit_config = build_fit_config(analysis)
            sampling = _common_sampling(analysis)
            radius = _as_float(_require(analysis, "radius", "analysis"), "radius")
            entry = explain_instance(blackbox, instance, radius, fit_config,
                                     seed=seed, **sampling)
            if on_progress is not None:
                on_progress(1, 1)
            return entry
        if kind == "sweep":
            fit_config = build_fit_config(analysis)
            sampling = _common_sampling(analysis)
            return coverage_sweep(blackbox, instance, resolve_radii(analysis),
                                  fit_config, seed=seed, threads=threads,
                                  on_progress=on_progress, **sampling)
        if kind == "bootstrap":
            fit_config = build_fit_config(analysis)
            return bootstrap_sweep(
                blackbox, instance, resolve_radii(analysis),
                _as_int(analysis.get("B", 500), "B"),
                _as_int(analysis.get("n", 200), "n"),
                fit_config, seed=seed,
                eval_n=_as_int(analysis.get("eval_n", 2000), "eval_n"),
                kernel_width=None if analysis.get("kernel_width") is None
                else _as_float(analysis["kernel_width"], "kernel_width"),
                threads=threads, on_progress=on_progress,
            )
        if kind == "path":
            sampling = _common_sampling(analysis)
            return lasso_path(
                blackbox, instance,
                _as_float(_require(analysis, "radius", "analysis"), "radius"),
                resolve_C_grid(analysis), seed=seed,
                tol=_as_float(analysis.get("tol", 1e-8), "tol"),
                max_iter=_as_int(analysis.get("max_iter", 10000), "max_iter"),
                standardize=analysis.get("standardize"),
                on_progress=on_progress, **sampling,
            )
        depth_grid = analysis.get("depth_grid", [1, 2, 3, 5, None])
        if not isinstance(depth_grid, list) or not depth_grid:
            raise ConfigError("depth_grid must be a non-empty list")
        depth_grid = [None if d is None else _as_int(d, "depth_grid") for d in depth_grid]
        return complexity_ladder(
            blackbox, dataset.bounds, depth_grid,
            resolution=_as_int(analysis.get("resolution", 100), "resolution"),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"analysis: {exc}") from None
