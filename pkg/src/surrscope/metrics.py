"""Fidelity of a surrogate with respect to the black box it imitates.

The black box provides the reference labels; fidelity is ordinary binary
classification quality of the surrogate measured against them. Rates whose
denominator is empty (e.g. TPR when the black box labels nothing positive)
are reported as None rather than 0 or NaN so downstream consumers can tell
"undefined" from "bad".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import records
from .blackbox import predict as blackbox_predict
from .rng import derive_rng
from .sampling import ball_points
from .surrogates import surrogate_predict
from .types import FieldEqMixin, NeighbourhoodSpec
from .validation import check_feature_matrix

EVAL_KINDS = ("train_neighbourhood", "fresh_neighbourhood", "meshgrid")


@dataclass(frozen=True, eq=False)
class FidelityReport(FieldEqMixin):
    """Confusion counts and derived rates of surrogate vs black box."""

    accuracy: float
    tpr: float | None
    tnr: float | None
    tp: int
    fp: int
    tn: int
    fn: int
    n_eval: int
    eval_kind: str

    def __post_init__(self):
        if self.eval_kind not in EVAL_KINDS:
            raise ValueError(f"eval_kind must be one of {EVAL_KINDS}")
        if self.n_eval <= 0:
            raise ValueError("n_eval must be positive")
        if self.tp + self.fp + self.tn + self.fn != self.n_eval:
            raise ValueError("confusion counts must sum to n_eval")


def evaluate(surrogate, blackbox, X_eval, eval_kind: str) -> FidelityReport:
    """Score surrogate agreement with the black box on the given points."""
    X_eval = check_feature_matrix(X_eval)
    if X_eval.shape[0] == 0:
        raise ValueError("evaluation set must contain at least one point")
    reference = blackbox_predict(blackbox, X_eval)
    predicted = surrogate_predict(surrogate, X_eval)
    tp = int(np.sum((predicted == 1) & (reference == 1)))
    tn = int(np.sum((predicted == 0) & (reference == 0)))
    fp = int(np.sum((predicted == 1) & (reference == 0)))
    fn = int(np.sum((predicted == 0) & (reference == 1)))
    n = X_eval.shape[0]
    return FidelityReport(
        accuracy=(tp + tn) / n,
        tpr=tp / (tp + fn) if tp + fn > 0 else None,
        tnr=tn / (tn + fp) if tn + fp > 0 else None,
        tp=tp, fp=fp, tn=tn, fn=fn,
        n_eval=n,
        eval_kind=eval_kind,
    )


def fresh_eval_set(spec: NeighbourhoodSpec, eval_seed: int, n: int | None = None) -> np.ndarray:
    """Draw a held-out point cloud from the same ball, under its own seed.

    Evaluating on points the surrogate never trained on separates "fits the
    sample" from "fits the local behaviour". The draw depends only on
    (spec geometry, eval_seed), never on the training sample.
    """
    if n is None:
        n = spec.n_samples
    rng = derive_rng(eval_seed, "fresh_eval_set")
    return ball_points(spec.center.values, spec.radius, n, rng)


records.register(
    "fidelity_report",
    FidelityReport,
    lambda rep: {
        "accuracy": float(rep.accuracy),
        "tpr": None if rep.tpr is None else float(rep.tpr),
        "tnr": None if rep.tnr is None else float(rep.tnr),
        "tp": int(rep.tp),
        "fp": int(rep.fp),
        "tn": int(rep.tn),
        "fn": int(rep.fn),
        "n_eval": int(rep.n_eval),
        "eval_kind": rep.eval_kind,
    },
    lambda r: FidelityReport(
        accuracy=float(r["accuracy"]),
        tpr=None if r.get("tpr") is None else float(r["tpr"]),
        tnr=None if r.get("tnr") is None else float(r["tnr"]),
        tp=int(r["tp"]),
        fp=int(r["fp"]),
        tn=int(r["tn"]),
        fn=int(r["fn"]),
        n_eval=int(r["n_eval"]),
        eval_kind=str(r["eval_kind"]),
    ),
)
