"""Neighbourhood-level experiments built from the core pieces.

Four reusable procedures:

* :func:`coverage_sweep` - fit one surrogate per radius and measure fresh-set
  fidelity, tracing how explanations change as the neighbourhood grows.
* :func:`bootstrap_sweep` - refit on B independent neighbourhood draws per
  radius to get mean/std bands for coefficients and accuracy.
* :func:`lasso_path` - sweep the L1 regularization strength on one
  neighbourhood with warm starts, tracking sparsity vs fidelity.
* :func:`complexity_ladder` - global tree surrogates of growing depth fitted
  and scored on a dense evaluation grid (2-D black boxes only).

Plus :func:`pareto_frontier` (non-dominated complexity/fidelity points) and
:func:`sign_transitions` (coefficient sign flips along a radius sweep).

Every output is a pure function of (inputs, seed): per-item seeds are derived
from the base seed by tag and index, so results are byte-identical across
runs and across thread counts, and extending a grid or replicate count keeps
the already-computed prefix identical.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

import numpy as np

from . import records
from .blackbox import meshgrid_predict
from .blackbox import predict as blackbox_predict
from .metrics import FidelityReport, evaluate, fresh_eval_set
from .rng import derive_seed
from .sampling import build_neighbourhood
from .surrogates import (
    FitConfig,
    LassoLogisticSurrogate,
    LinearFit,
    TreeFit,
    TreeSurrogate,
    complexity,
    fit_surrogate,
    summarize,
    surrogate_predict,
)
from .types import FieldEqMixin, Instance, NeighbourhoodSpec, _freeze
from .validation import check_finite_float, check_positive_int

SIGN_ZERO_TOL = 1e-10


def default_C_grid(n: int = 40) -> np.ndarray:
    """Inverse regularization grid: n log-spaced values over [1e-3, 1e3]."""
    n = check_positive_int(n, name="n", minimum=2)
    return np.geomspace(1e-3, 1e3, n)


def _check_radii(radii, *, allow_zero: bool) -> np.ndarray:
    r = np.ascontiguousarray(radii, dtype=np.float64)
    if r.ndim != 1 or r.shape[0] == 0:
        raise ValueError("radii must be a non-empty 1-D vector")
    if not np.all(np.isfinite(r)):
        raise ValueError("radii must be finite")
    if allow_zero:
        if r[0] < 0.0:
            raise ValueError("radii must be nonnegative")
    elif r[0] <= 0.0:
        raise ValueError("radii must be positive")
    if np.any(np.diff(r) <= 0.0):
        raise ValueError("radii must be strictly increasing")
    return _freeze(r)


def _check_C_grid(grid) -> np.ndarray:
    grid = np.ascontiguousarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.shape[0] == 0:
        raise ValueError("C_grid must be a non-empty 1-D vector")
    if not np.all(np.isfinite(grid)) or grid[0] <= 0.0 or np.any(np.diff(grid) <= 0.0):
        raise ValueError("C_grid must be positive and strictly increasing")
    return grid


def _run_ordered(tasks, threads: int = 1, on_progress=None) -> list:
    """Run independent callables, preserving input order in the result list.

    ``on_progress(done, total)`` fires once per completion, from the calling
    thread, with ``done`` strictly increasing. Because each task owns its
    derived seed, the result list is identical for any thread count.
    """
    total = len(tasks)
    results = [None] * total
    if threads <= 1:
        for i, task in enumerate(tasks):
            results[i] = task()
            if on_progress is not None:
                on_progress(i + 1, total)
        return results
    done = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {pool.submit(task): i for i, task in enumerate(tasks)}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
            done += 1
            if on_progress is not None:
                on_progress(done, total)
    return results


# -- coverage sweep ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SweepEntry(FieldEqMixin):
    """One radius of a sweep: the fitted surrogate and how faithful it is."""

    radius: float
    surrogate: LinearFit | TreeFit
    fidelity: FidelityReport
    complexity: int | tuple[int, int]
    degenerate: bool


@dataclass(frozen=True, eq=False)
class SweepResult(FieldEqMixin):
    radii: np.ndarray
    entries: list

    def __post_init__(self):
        radii = _check_radii(self.radii, allow_zero=False)
        object.__setattr__(self, "radii", radii)
        if len(self.entries) != radii.shape[0]:
            raise ValueError("one entry per radius required")
        for r, entry in zip(radii, self.entries):
            if entry.radius != r:
                raise ValueError("entry radii must match the radii vector")


def _sweep_entry(blackbox, instance: Instance, radius: float, index: int,
                 fit_config: FitConfig, n_samples: int, seed: int,
                 kernel_width: float | None, eval_n: int | None) -> SweepEntry:
    spec = NeighbourhoodSpec(
        center=instance, radius=radius, n_samples=n_samples,
        seed=derive_seed(seed, "sweep.neighbourhood", index),
        kernel_width=kernel_width,
    )
    neighbourhood = build_neighbourhood(spec, blackbox)
    est = fit_surrogate(neighbourhood, fit_config)
    X_eval = fresh_eval_set(spec, derive_seed(seed, "sweep.eval", index), n=eval_n)
    report = evaluate(est, blackbox, X_eval, "fresh_neighbourhood")
    summary = summarize(est)
    return SweepEntry(
        radius=radius,
        surrogate=summary,
        fidelity=report,
        complexity=complexity(est),
        degenerate=isinstance(summary, LinearFit) and summary.degenerate,
    )


def coverage_sweep(blackbox, instance: Instance, radii, fit_config: FitConfig,
                   *, n_samples: int = 2000, seed: int = 0,
                   kernel_width: float | None = None, eval_n: int | None = None,
                   threads: int = 1, on_progress=None) -> SweepResult:
    """Fit one surrogate per radius; fidelity is scored on a held-out draw.

    Neighbourhood and evaluation seeds are derived per radius index, so any
    prefix of the radius grid reproduces the same entries.
    """
    radii = _check_radii(radii, allow_zero=False)

    def entry_at(i: int, radius: float):
        def run() -> SweepEntry:
            return _sweep_entry(blackbox, instance, radius, i, fit_config,
                                n_samples, seed, kernel_width, eval_n)
        return run

    tasks = [entry_at(i, float(r)) for i, r in enumerate(radii)]
    entries = _run_ordered(tasks, threads, on_progress)
    return SweepResult(radii=radii, entries=entries)


def explain_instance(blackbox, instance: Instance, radius: float,
                     fit_config: FitConfig, *, n_samples: int = 2000,
                     seed: int = 0, kernel_width: float | None = None,
                     eval_n: int | None = None) -> SweepEntry:
    """One-shot fit at a single radius.

    Identical to the first entry of a sweep starting at this radius; unlike
    a sweep grid, radius 0 is allowed and yields a flagged constant model.
    """
    radius = float(radius)
    if not np.isfinite(radius) or radius < 0:
        raise ValueError("radius must be a nonnegative finite number")
    return _sweep_entry(blackbox, instance, radius, 0, fit_config,
                        n_samples, seed, kernel_width, eval_n)


def sweep_coefficient_matrix(sweep: SweepResult) -> np.ndarray:
    """(n_radii, d) coefficient matrix from a linear-family sweep."""
    rows = []
    for entry in sweep.entries:
        if not isinstance(entry.surrogate, LinearFit):
            raise ValueError("sweep entries must hold linear surrogates")
        rows.append(entry.surrogate.coefficients)
    return np.vstack(rows)


# -- bootstrap sweep --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BootstrapSummary(FieldEqMixin):
    """Replicate statistics at one radius: mean/std over B refits."""

    radius: float
    B: int
    n: int
    accuracy_mean: float
    accuracy_std: float
    coef_mean: np.ndarray
    coef_std: np.ndarray
    replicate_seeds: list

    def __post_init__(self):
        object.__setattr__(self, "radius", check_finite_float(self.radius, name="radius", minimum=0.0))
        object.__setattr__(self, "B", check_positive_int(self.B, name="B", minimum=2))
        object.__setattr__(self, "n", check_positive_int(self.n, name="n"))
        mean = np.ascontiguousarray(self.coef_mean, dtype=np.float64)
        std = np.ascontiguousarray(self.coef_std, dtype=np.float64)
        if mean.shape != std.shape or mean.ndim != 1:
            raise ValueError("coef_mean and coef_std must be 1-D and same length")
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(std))):
            raise ValueError("bootstrap statistics must be finite")
        if np.any(std < 0.0) or self.accuracy_std < 0.0:
            raise ValueError("std entries must be nonnegative")
        object.__setattr__(self, "coef_mean", _freeze(mean))
        object.__setattr__(self, "coef_std", _freeze(std))
        if len(self.replicate_seeds) != self.B:
            raise ValueError("one replicate seed per replicate required")


@dataclass(frozen=True, eq=False)
class BootstrapReplicates(FieldEqMixin):
    """Raw per-replicate results at one radius, before aggregation."""

    radius: float
    coefficients: np.ndarray  # (B, d)
    intercepts: np.ndarray    # (B,)
    accuracies: np.ndarray    # (B,)
    replicate_seeds: list


def bootstrap_replicates(blackbox, instance: Instance, radius: float, B: int,
                         n: int, fit_config: FitConfig, *, seed: int = 0,
                         radius_index: int = 0, eval_n: int = 2000,
                         kernel_width: float | None = None, threads: int = 1,
                         on_progress=None) -> BootstrapReplicates:
    """B independent neighbourhood draws and refits at one radius.

    Replicate b's neighbourhood seed depends only on (base seed,
    radius_index, b), so raising B extends the replicate list without
    touching earlier entries. All replicates share one held-out evaluation
    set drawn under its own derived seed.
    """
    radius = check_finite_float(radius, name="radius", minimum=0.0)
    B = check_positive_int(B, name="B", minimum=2)
    n = check_positive_int(n, name="n")
    if fit_config.family == "tree":
        raise ValueError("bootstrap summarizes coefficients; use a linear family")

    eval_spec = NeighbourhoodSpec(center=instance, radius=radius,
                                  n_samples=eval_n, seed=0)
    X_eval = fresh_eval_set(eval_spec, derive_seed(seed, "bootstrap.eval", radius_index))
    reference = blackbox_predict(blackbox, X_eval)
    seeds = [derive_seed(seed, f"bootstrap.replicate.{radius_index}", b)
             for b in range(B)]

    def replicate(b: int):
        def run():
            spec = NeighbourhoodSpec(center=instance, radius=radius, n_samples=n,
                                     seed=seeds[b], kernel_width=kernel_width)
            neighbourhood = build_neighbourhood(spec, blackbox)
            est = fit_surrogate(neighbourhood, fit_config)
            accuracy = float(np.mean(surrogate_predict(est, X_eval) == reference))
            return est.coef_, float(est.intercept_), accuracy
        return run

    flat = _run_ordered([replicate(b) for b in range(B)], threads, on_progress)
    return BootstrapReplicates(
        radius=radius,
        coefficients=_freeze(np.vstack([c for c, _, _ in flat])),
        intercepts=_freeze(np.array([b for _, b, _ in flat])),
        accuracies=_freeze(np.array([a for _, _, a in flat])),
        replicate_seeds=seeds,
    )


def bootstrap_sweep(blackbox, instance: Instance, radii, B: int, n: int,
                    fit_config: FitConfig, *, seed: int = 0,
                    eval_n: int = 2000, kernel_width: float | None = None,
                    threads: int = 1, on_progress=None) -> list[BootstrapSummary]:
    """Refit on B fresh neighbourhood draws per radius; summarize spread.

    Std is the population form (divisor B). Zero radius is allowed: every
    draw collapses onto the instance, so the stds are exactly zero.
    """
    radii = _check_radii(radii, allow_zero=True)
    B = check_positive_int(B, name="B", minimum=2)
    total = radii.shape[0] * B

    summaries = []
    for i, radius in enumerate(radii):
        chunk_progress = None
        if on_progress is not None:
            chunk_progress = lambda done, _t, base=i * B: on_progress(base + done, total)
        rep = bootstrap_replicates(
            blackbox, instance, float(radius), B, n, fit_config, seed=seed,
            radius_index=i, eval_n=eval_n, kernel_width=kernel_width,
            threads=threads, on_progress=chunk_progress,
        )
        summaries.append(BootstrapSummary(
            radius=float(radius), B=B, n=n,
            accuracy_mean=float(np.mean(rep.accuracies)),
            accuracy_std=float(np.std(rep.accuracies)),
            coef_mean=np.mean(rep.coefficients, axis=0),
            coef_std=np.std(rep.coefficients, axis=0),
            replicate_seeds=list(rep.replicate_seeds),
        ))
    return summaries


# -- lasso path -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PathEntry(FieldEqMixin):
    """One regularization strength: sparsity and held-out accuracy."""

    C: float
    coefficients: np.ndarray
    intercept: float
    l0: int
    accuracy: float

    def __post_init__(self):
        object.__setattr__(self, "C", check_finite_float(self.C, name="C", minimum=0.0, strict=True))
        coef = np.ascontiguousarray(self.coefficients, dtype=np.float64)
        object.__setattr__(self, "coefficients", _freeze(coef))
        if not 0 <= self.l0 <= coef.shape[0]:
            raise ValueError("l0 must be between 0 and d")
        if not 0.0 <= self.accuracy <= 1.0:
            raise ValueError("accuracy must lie in [0, 1]")


@dataclass(frozen=True, eq=False)
class LassoPathResult(FieldEqMixin):
    radius: float
    C_grid: np.ndarray
    entries: list

    def __post_init__(self):
        grid = np.ascontiguousarray(self.C_grid, dtype=np.float64)
        if grid.ndim != 1 or grid.shape[0] == 0:
            raise ValueError("C_grid must be a non-empty 1-D vector")
        if grid[0] <= 0.0 or np.any(np.diff(grid) <= 0.0):
            raise ValueError("C_grid must be positive and strictly increasing")
        object.__setattr__(self, "C_grid", _freeze(grid))
        if len(self.entries) != grid.shape[0]:
            raise ValueError("one entry per C required")
        for c, entry in zip(grid, self.entries):
            if entry.C != c:
                raise ValueError("entry C values must match C_grid")


def lasso_path(blackbox, instance: Instance, radius: float, C_grid=None,
               *, n_samples: int = 2000, seed: int = 0,
               kernel_width: float | None = None, eval_n: int | None = None,
               tol: float = 1e-8, max_iter: int = 10000,
               standardize: bool | None = None,
               on_progress=None) -> LassoPathResult:
    """Sweep the L1 penalty on one fixed neighbourhood, weakest last.

    C values are visited in increasing order (decreasing penalty) and each
    solve warm-starts from the previous solution; the sweep is therefore
    sequential by construction. Coefficients are reported in original units.
    """
    if C_grid is None:
        C_grid = default_C_grid()
    grid = _check_C_grid(C_grid)

    spec = NeighbourhoodSpec(center=instance, radius=float(radius),
                             n_samples=n_samples,
                             seed=derive_seed(seed, "path.neighbourhood"),
                             kernel_width=kernel_width)
    neighbourhood = build_neighbourhood(spec, blackbox)
    X_eval = fresh_eval_set(spec, derive_seed(seed, "path.eval"), n=eval_n)
    reference = blackbox_predict(blackbox, X_eval)

    if standardize is None:
        standardize = True
    entries = []
    coef_init, intercept_init = None, None
    for k, C in enumerate(grid):
        est = LassoLogisticSurrogate(C=float(C), tol=tol, max_iter=max_iter,
                                     standardize=standardize)
        est.fit(neighbourhood.points, neighbourhood.labels,
                sample_weight=neighbourhood.weights,
                coef_init=coef_init, intercept_init=intercept_init)
        coef_init, intercept_init = est.coef_, est.intercept_
        accuracy = float(np.mean(surrogate_predict(est, X_eval) == reference))
        entries.append(PathEntry(
            C=float(C),
            coefficients=est.coef_,
            intercept=float(est.intercept_),
            l0=complexity(est),
            accuracy=accuracy,
        ))
        if on_progress is not None:
            on_progress(k + 1, grid.shape[0])
    return LassoPathResult(radius=float(radius), C_grid=grid, entries=entries)


# -- pareto frontier --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ParetoPoint(FieldEqMixin):
    complexity: float
    fidelity: float
    tag: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "complexity", check_finite_float(self.complexity, name="complexity"))
        object.__setattr__(self, "fidelity", check_finite_float(self.fidelity, name="fidelity"))


@dataclass(frozen=True, eq=False)
class ParetoFrontier(FieldEqMixin):
    points: list
    frontier_indices: list

    def __post_init__(self):
        if not self.points:
            raise ValueError("frontier requires at least one point")
        idx = list(self.frontier_indices)
        if idx != sorted(set(idx)) or not idx:
            raise ValueError("frontier_indices must be sorted, unique, non-empty")
        if idx[0] < 0 or idx[-1] >= len(self.points):
            raise ValueError("frontier_indices out of range")


def pareto_frontier(points) -> ParetoFrontier:
    """Non-dominated subset: minimize complexity, maximize fidelity.

    A point is dominated when another has complexity <= and fidelity >= with
    at least one strict; points equal on both axes never dominate each other,
    so exact ties are all kept.
    """
    normalized = []
    for p in points:
        if isinstance(p, ParetoPoint):
            normalized.append(p)
        else:
            parts = tuple(p)
            tag = parts[2] if len(parts) > 2 else None
            normalized.append(ParetoPoint(complexity=float(parts[0]),
                                          fidelity=float(parts[1]), tag=tag))
    if not normalized:
        raise ValueError("frontier requires at least one point")

    order = sorted(range(len(normalized)),
                   key=lambda k: (normalized[k].complexity, -normalized[k].fidelity))
    frontier: list[int] = []
    best_fidelity = -np.inf
    i = 0
    while i < len(order):
        c = normalized[order[i]].complexity
        j = i
        while j < len(order) and normalized[order[j]].complexity == c:
            j += 1
        group_max = normalized[order[i]].fidelity  # sort puts the max first
        if group_max > best_fidelity:
            frontier.extend(k for k in order[i:j]
                            if normalized[k].fidelity == group_max)
            best_fidelity = group_max
        i = j
    return ParetoFrontier(points=normalized, frontier_indices=sorted(frontier))


# -- sign transitions -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SignTransition(FieldEqMixin):
    feature: int
    radius_interval: tuple[float, float]


def sign_transitions(radii, coefficients) -> list[SignTransition]:
    """Where each coefficient's sign strictly flips along the radius axis.

    Magnitudes at or below 1e-10 count as "no sign"; a flip whose endpoints
    straddle such zero entries is reported over the two signed radii.
    """
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    coef = np.ascontiguousarray(coefficients, dtype=np.float64)
    if coef.ndim != 2 or coef.shape[0] != radii.shape[0]:
        raise ValueError("coefficients must be (n_radii, d)")
    transitions = []
    for j in range(coef.shape[1]):
        last_sign = 0
        last_radius = None
        for i in range(coef.shape[0]):
            value = coef[i, j]
            sign = 0 if abs(value) <= SIGN_ZERO_TOL else (1 if value > 0 else -1)
            if sign == 0:
                continue
            if last_sign != 0 and sign != last_sign:
                transitions.append(SignTransition(
                    feature=j, radius_interval=(float(last_radius), float(radii[i]))))
            last_sign, last_radius = sign, radii[i]
    return transitions


# -- complexity ladder ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LadderEntry(FieldEqMixin):
    """One global tree: its depth budget, realized shape, and grid accuracy."""

    max_depth: int | None
    depth: int
    n_leaves: int
    accuracy: float

    def __post_init__(self):
        if not 0.0 <= self.accuracy <= 1.0:
            raise ValueError("accuracy must lie in [0, 1]")


def complexity_ladder(blackbox, data_bounds, depth_grid,
                      resolution: int = 100) -> list[LadderEntry]:
    """Global tree surrogates of growing depth, scored on their own grid.

    Labels come from the black box on a dense meshgrid over the data bounds;
    each tree trains and evaluates on that same grid (an exhaustive
    illustration, deliberately not a generalization estimate). depth_grid
    must be increasing; None (unconstrained) may appear only last.
    """
    grid = list(depth_grid)
    if not grid:
        raise ValueError("depth_grid must be non-empty")
    finite = [d for d in grid if d is not None]
    if any(d is None for d in grid[:-1]):
        raise ValueError("None (no depth cap) may only be the last entry")
    for d in finite:
        check_positive_int(d, name="max_depth", minimum=0)
    if any(a >= b for a, b in zip(finite, finite[1:])):
        raise ValueError("depth_grid must be strictly increasing")

    eval_grid = meshgrid_predict(blackbox, data_bounds, resolution)
    entries = []
    for max_depth in grid:
        tree = TreeSurrogate(max_depth=max_depth).fit(eval_grid.points, eval_grid.labels)
        report = evaluate(tree, blackbox, eval_grid.points, "meshgrid")
        entries.append(LadderEntry(
            max_depth=max_depth,
            depth=int(tree.depth_),
            n_leaves=int(tree.n_leaves_),
            accuracy=float(report.accuracy),
        ))
    return entries


# -- codecs -----------------------------------------------------------------------

records.register(
    "sweep_entry",
    SweepEntry,
    lambda e: {
        "radius": float(e.radius),
        "surrogate": records.to_record(e.surrogate),
        "fidelity": records.to_record(e.fidelity),
        "complexity": (int(e.complexity) if isinstance(e.complexity, (int, np.integer))
                       else [int(v) for v in e.complexity]),
        "degenerate": bool(e.degenerate),
    },
    lambda r: SweepEntry(
        radius=float(r["radius"]),
        surrogate=records.from_record(r["surrogate"]),
        fidelity=records.from_record(r["fidelity"]),
        complexity=(tuple(int(v) for v in r["complexity"])
                    if isinstance(r["complexity"], list) else int(r["complexity"])),
        degenerate=bool(r["degenerate"]),
    ),
)

records.register(
    "sweep_result",
    SweepResult,
    lambda s: {
        "radii": records.encode_vector(s.radii),
        "entries": [records.to_record(e) for e in s.entries],
    },
    lambda r: SweepResult(
        radii=records.decode_vector(r["radii"]),
        entries=[records.from_record(e) for e in r["entries"]],
    ),
)

records.register(
    "bootstrap_summary",
    BootstrapSummary,
    lambda s: {
        "radius": float(s.radius),
        "B": int(s.B),
        "n": int(s.n),
        "accuracy_mean": float(s.accuracy_mean),
        "accuracy_std": float(s.accuracy_std),
        "coef_mean": records.encode_vector(s.coef_mean),
        "coef_std": records.encode_vector(s.coef_std),
        "replicate_seeds": [int(v) for v in s.replicate_seeds],
    },
    lambda r: BootstrapSummary(
        radius=float(r["radius"]),
        B=int(r["B"]),
        n=int(r["n"]),
        accuracy_mean=float(r["accuracy_mean"]),
        accuracy_std=float(r["accuracy_std"]),
        coef_mean=records.decode_vector(r["coef_mean"]),
        coef_std=records.decode_vector(r["coef_std"]),
        replicate_seeds=[int(v) for v in r["replicate_seeds"]],
    ),
)

records.register(
    "path_entry",
    PathEntry,
    lambda e: {
        "C": float(e.C),
        "coefficients": records.encode_vector(e.coefficients),
        "intercept": float(e.intercept),
        "l0": int(e.l0),
        "accuracy": float(e.accuracy),
    },
    lambda r: PathEntry(
        C=float(r["C"]),
        coefficients=records.decode_vector(r["coefficients"]),
        intercept=float(r["intercept"]),
        l0=int(r["l0"]),
        accuracy=float(r["accuracy"]),
    ),
)

records.register(
    "lasso_path_result",
    LassoPathResult,
    lambda s: {
        "radius": float(s.radius),
        "C_grid": records.encode_vector(s.C_grid),
        "entries": [records.to_record(e) for e in s.entries],
    },
    lambda r: LassoPathResult(
        radius=float(r["radius"]),
        C_grid=records.decode_vector(r["C_grid"]),
        entries=[records.from_record(e) for e in r["entries"]],
    ),
)

records.register(
    "pareto_point",
    ParetoPoint,
    lambda p: {
        "complexity": float(p.complexity),
        "fidelity": float(p.fidelity),
        "tag": p.tag,
    },
    lambda r: ParetoPoint(
        complexity=float(r["complexity"]),
        fidelity=float(r["fidelity"]),
        tag=r.get("tag"),
    ),
)

records.register(
    "pareto_frontier",
    ParetoFrontier,
    lambda f: {
        "points": [records.to_record(p) for p in f.points],
        "frontier_indices": [int(i) for i in f.frontier_indices],
    },
    lambda r: ParetoFrontier(
        points=[records.from_record(p) for p in r["points"]],
        frontier_indices=[int(i) for i in r["frontier_indices"]],
    ),
)

records.register(
    "sign_transition",
    SignTransition,
    lambda t: {
        "feature": int(t.feature),
        "radius_interval": [float(t.radius_interval[0]), float(t.radius_interval[1])],
    },
    lambda r: SignTransition(
        feature=int(r["feature"]),
        radius_interval=(float(r["radius_interval"][0]), float(r["radius_interval"][1])),
    ),
)

records.register(
    "ladder_entry",
    LadderEntry,
    lambda e: {
        "max_depth": None if e.max_depth is None else int(e.max_depth),
        "depth": int(e.depth),
        "n_leaves": int(e.n_leaves),
        "accuracy": float(e.accuracy),
    },
    lambda r: LadderEntry(
        max_depth=None if r.get("max_depth") is None else int(r["max_depth"]),
        depth=int(r["depth"]),
        n_leaves=int(r["n_leaves"]),
        accuracy=float(r["accuracy"]),
    ),
)
