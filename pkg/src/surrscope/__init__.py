"""Local surrogate explanations with controllable coverage.

Sample a neighbourhood of adjustable radius around an instance, label it
with a black-box classifier, fit a small interpretable model to those
labels, and measure how faithful it is. Radius sweeps, bootstrap bands,
lasso paths, and Pareto frontiers expose the complexity / fidelity /
coverage trade-off; a CLI and an HTTP service wrap the same library calls.
"""

from . import records
from .analysis import (
    BootstrapReplicates,
    BootstrapSummary,
    LadderEntry,
    LassoPathResult,
    ParetoFrontier,
    ParetoPoint,
    PathEntry,
    SignTransition,
    SweepEntry,
    SweepResult,
    bootstrap_sweep,
    complexity_ladder,
    coverage_sweep,
    explain_instance,
    default_C_grid,
    lasso_path,
    pareto_frontier,
    bootstrap_replicates,
    sign_transitions,
    sweep_coefficient_matrix,
)
from .blackbox import (
    EvalGrid,
    ExternalProcessClassifier,
    ExternalProcessError,
    MlpClassifier,
    MlpConfig,
    grid_points,
    meshgrid_predict,
    train_mlp,
)
from .datasets import Dataset, diabetes_csv_path, load_csv_binary, make_circles, make_moons
from .metrics import FidelityReport, evaluate, fresh_eval_set
from .records import deserialize, serialize
from .rng import derive_rng, derive_seed
from .sampling import ball_points, build_neighbourhood, kernel_weights, sample_ball
from .surrogates import (
    FitConfig,
    LassoLogisticSurrogate,
    LinearFit,
    LogisticSurrogate,
    TreeFit,
    TreeSurrogate,
    complexity,
    fit_logistic,
    fit_logistic_l1,
    fit_surrogate,
    fit_tree,
    logistic_gradient,
    logistic_loss,
    soft_threshold,
    summarize,
    surrogate_predict,
)
from .types import Instance, Neighbourhood, NeighbourhoodSpec

__version__ = "0.1.0"

__all__ = [
    "BootstrapReplicates",
    "BootstrapSummary", "Dataset", "EvalGrid", "ExternalProcessClassifier",
    "ExternalProcessError", "FidelityReport", "FitConfig", "Instance",
    "LadderEntry", "LassoLogisticSurrogate", "LassoPathResult", "LinearFit",
    "LogisticSurrogate", "MlpClassifier", "MlpConfig", "Neighbourhood",
    "NeighbourhoodSpec", "ParetoFrontier", "ParetoPoint", "PathEntry",
    "SignTransition", "SweepEntry", "SweepResult", "TreeFit", "TreeSurrogate",
    "ball_points", "bootstrap_replicates", "bootstrap_sweep",
    "build_neighbourhood", "complexity",
    "complexity_ladder", "coverage_sweep", "default_C_grid", "derive_rng",
    "derive_seed", "deserialize", "diabetes_csv_path", "evaluate", "explain_instance",
    "fit_logistic", "fit_logistic_l1", "fit_surrogate", "fit_tree",
    "fresh_eval_set", "grid_points", "kernel_weights", "lasso_path",
    "load_csv_binary", "logistic_gradient", "logistic_loss", "make_circles",
    "make_moons", "meshgrid_predict", "pareto_frontier", "records",
    "sample_ball", "serialize", "sign_transitions", "soft_threshold",
    "summarize", "surrogate_predict", "sweep_coefficient_matrix", "train_mlp",
]
