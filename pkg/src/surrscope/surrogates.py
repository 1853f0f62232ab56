"""Interpretable surrogate model classes and their complexity measures.

Three families are supported, each as a small sklearn-style estimator:

* :class:`LogisticSurrogate` - (weighted) logistic regression fitted by
  gradient descent with backtracking line search.
* :class:`LassoLogisticSurrogate` - logistic regression with an L1 penalty
  ``(1/C) * ||w||_1`` on the coefficients (never the intercept), fitted by
  proximal gradient descent with backtracking and optional warm starts.
* :class:`TreeSurrogate` - greedy CART with Gini splitting, midpoint
  thresholds, and optional depth / leaf-count constraints (best-first growth
  when a leaf budget is set).

Complexity is the count of nonzero coefficients for linear surrogates and
(depth, number of leaves) for trees. Linear coefficients are always reported
in the original feature units, even when fitting standardizes internally.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np
from scipy.special import expit
from sklearn.base import BaseEstimator, ClassifierMixin

from . import records
from .types import FieldEqMixin, Neighbourhood, _freeze
from .validation import (
    check_binary_labels,
    check_feature_matrix,
    check_finite_float,
    check_positive_int,
    check_sample_weight,
)

FAMILIES = ("logistic", "logistic_l1", "tree")
ZERO_COEF_TOL = 1e-10
_MIN_STEP = 1e-20
_MAX_STEP = 1e10
_ARMIJO = 1e-4


@dataclass(frozen=True, eq=False)
class FitConfig(FieldEqMixin):
    """Surrogate family plus solver/constraint settings.

    ``standardize=None`` resolves to the family default: True for the lasso
    (so the penalty treats heterogeneous feature scales fairly), False for
    plain logistic regression and trees.
    """

    family: str = "logistic"
    C: float | None = None
    max_depth: int | None = None
    max_leaves: int | None = None
    tol: float = 1e-8
    max_iter: int = 10000
    standardize: bool | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.family == "logistic_l1":
            if self.C is None:
                raise ValueError("C is required for the logistic_l1 family")
            object.__setattr__(self, "C", check_finite_float(self.C, name="C", minimum=0.0, strict=True))
        elif self.C is not None:
            raise ValueError("C only applies to the logistic_l1 family")
        if self.max_depth is not None:
            object.__setattr__(self, "max_depth", check_positive_int(self.max_depth, name="max_depth", minimum=0))
        if self.max_leaves is not None:
            object.__setattr__(self, "max_leaves", check_positive_int(self.max_leaves, name="max_leaves"))
        object.__setattr__(self, "tol", check_finite_float(self.tol, name="tol", minimum=0.0, strict=True))
        object.__setattr__(self, "max_iter", check_positive_int(self.max_iter, name="max_iter"))
        if self.standardize is not None and not isinstance(self.standardize, bool):
            raise ValueError("standardize must be a bool or None")

    def resolved_standardize(self) -> bool:
        if self.standardize is not None:
            return self.standardize
        return self.family == "logistic_l1"


# -- objective helpers ---------------------------------------------------------

def _normalized_weights(sample_weight, n: int) -> np.ndarray:
    if sample_weight is None:
        return np.full(n, 1.0 / n)
    sw = check_sample_weight(sample_weight, n)
    return sw / sw.sum()


def _loss_grad(wb: np.ndarray, X1: np.ndarray, y: np.ndarray, sw: np.ndarray):
    z = X1 @ wb
    loss = float(sw @ (np.logaddexp(0.0, z) - y * z))
    grad = X1.T @ (sw * (expit(z) - y))
    return loss, grad


def logistic_loss(coef, intercept, X, y, sample_weight=None) -> float:
    """Weighted mean logistic loss of a linear model, in original units."""
    X = check_feature_matrix(X)
    y = check_binary_labels(y, n_rows=X.shape[0]).astype(np.float64)
    sw = _normalized_weights(sample_weight, X.shape[0])
    wb = np.append(np.asarray(coef, dtype=np.float64), float(intercept))
    X1 = np.column_stack([X, np.ones(X.shape[0])])
    return _loss_grad(wb, X1, y, sw)[0]


def logistic_gradient(coef, intercept, X, y, sample_weight=None):
    """Analytic gradient of :func:`logistic_loss` wrt (coef, intercept)."""
    X = check_feature_matrix(X)
    y = check_binary_labels(y, n_rows=X.shape[0]).astype(np.float64)
    sw = _normalized_weights(sample_weight, X.shape[0])
    wb = np.append(np.asarray(coef, dtype=np.float64), float(intercept))
    X1 = np.column_stack([X, np.ones(X.shape[0])])
    grad = _loss_grad(wb, X1, y, sw)[1]
    return grad[:-1], float(grad[-1])


def soft_threshold(values, threshold: float) -> np.ndarray:
    """Proximal operator of the L1 norm: shrink towards zero by threshold."""
    values = np.asarray(values, dtype=np.float64)
    return np.sign(values) * np.maximum(np.abs(values) - float(threshold), 0.0)


def _minimize_gd(X1, y, sw, tol, max_iter):
    """Plain gradient descent with Armijo backtracking on the mean loss."""
    wb = np.zeros(X1.shape[1])
    loss, grad = _loss_grad(wb, X1, y, sw)
    trace = [loss]
    step = 1.0
    n_iter = 0
    while n_iter < max_iter and float(np.max(np.abs(grad))) > tol:
        sq_norm = float(grad @ grad)
        accepted = False
        while step >= _MIN_STEP:
            cand = wb - step * grad
            cand_loss, cand_grad = _loss_grad(cand, X1, y, sw)
            if cand_loss <= loss - _ARMIJO * step * sq_norm:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break  # no representable step decreases the objective
        wb, loss, grad = cand, cand_loss, cand_grad
        trace.append(loss)
        step = min(step * 2.0, _MAX_STEP)
        n_iter += 1
    return wb, loss, n_iter, trace


def _minimize_ista(X1, y, sw, lam, tol, max_iter, wb0=None):
    """Proximal gradient with backtracking; intercept is never penalized."""
    d = X1.shape[1] - 1
    wb = np.zeros(X1.shape[1]) if wb0 is None else np.asarray(wb0, dtype=np.float64).copy()
    smooth, grad = _loss_grad(wb, X1, y, sw)
    objective = smooth + lam * float(np.abs(wb[:d]).sum())
    trace = [objective]
    step = 1.0
    n_iter = 0
    while n_iter < max_iter:
        accepted = False
        while step >= _MIN_STEP:
            shifted = wb - step * grad
            cand = shifted.copy()
            cand[:d] = soft_threshold(shifted[:d], step * lam)
            cand_smooth, cand_grad = _loss_grad(cand, X1, y, sw)
            diff = cand - wb
            if cand_smooth <= smooth + float(grad @ diff) + float(diff @ diff) / (2.0 * step):
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        gap = float(np.max(np.abs(diff))) / step  # prox-gradient mapping norm
        wb, smooth, grad = cand, cand_smooth, cand_grad
        objective = smooth + lam * float(np.abs(wb[:d]).sum())
        trace.append(objective)
        n_iter += 1
        if gap <= tol:
            break
        step = min(step * 2.0, _MAX_STEP)
    return wb, objective, n_iter, trace


def _weighted_standardize(X, sw):
    mean = sw @ X
    std = np.sqrt(sw @ (X - mean) ** 2)
    std[std == 0.0] = 1.0
    return (X - mean) / std, mean, std


class _LinearSurrogateBase(ClassifierMixin, BaseEstimator):
    def _prepare(self, X, y, sample_weight):
        X = check_feature_matrix(X)
        if X.shape[0] == 0:
            raise ValueError("cannot fit a surrogate on an empty sample")
        y = check_binary_labels(y, n_rows=X.shape[0])
        sw = _normalized_weights(sample_weight, X.shape[0])
        return X, y, sw

    def _finish_degenerate(self, X, y, sw):
        # all labels identical: constant model, intercept sign picks the class
        d = X.shape[1]
        self.coef_ = _freeze(np.zeros(d))
        self.intercept_ = 1.0 if y[0] == 1 else -1.0
        self.degenerate_ = True
        self.n_iter_ = 0
        self.objective_ = logistic_loss(self.coef_, self.intercept_, X, y)
        self.objective_trace_ = [self.objective_]
        self.n_features_in_ = d
        self.classes_ = np.array([0, 1])
        return self

    def decision_function(self, X) -> np.ndarray:
        X = check_feature_matrix(X, n_cols=self.n_features_in_)
        return X @ self.coef_ + self.intercept_

    def predict(self, X) -> np.ndarray:
        return (self.decision_function(X) > 0.0).astype(np.int64)


class LogisticSurrogate(_LinearSurrogateBase):
    """Unregularized (weighted) logistic regression via gradient descent.

    If every training label is the same class the fit degenerates to a
    constant model (zero coefficients, intercept sign matching the class)
    and ``degenerate_`` is set instead of raising, so radius sweeps that
    shrink into single-class territory keep running.
    """

    def __init__(self, tol=1e-8, max_iter=10000, standardize=False):
        self.tol = tol
        self.max_iter = max_iter
        self.standardize = standardize

    def fit(self, X, y, sample_weight=None):
        X, y, sw = self._prepare(X, y, sample_weight)
        if y.min() == y.max():
            return self._finish_degenerate(X, y, sw)
        Xf, mean, std = (X, None, None)
        if self.standardize:
            Xf, mean, std = _weighted_standardize(X, sw)
        X1 = np.column_stack([Xf, np.ones(X.shape[0])])
        wb, objective, n_iter, trace = _minimize_gd(
            X1, y.astype(np.float64), sw, float(self.tol), int(self.max_iter)
        )
        coef, intercept = wb[:-1], float(wb[-1])
        if self.standardize:
            coef = coef / std
            intercept = intercept - float(np.sum(wb[:-1] * mean / std))
        self.coef_ = _freeze(coef)
        self.intercept_ = intercept
        self.degenerate_ = False
        self.n_iter_ = n_iter
        self.objective_ = objective
        self.objective_trace_ = trace
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([0, 1])
        return self


class LassoLogisticSurrogate(_LinearSurrogateBase):
    """L1-penalized logistic regression: mean loss + (1/C) * ||w||_1.

    Solved by proximal gradient (soft-thresholding) with backtracking, so
    the penalized objective never increases across accepted steps. The
    penalty applies in the (optionally standardized) fitting space and the
    intercept is never penalized. ``warm_start=True`` reuses the previous
    solution; ``coef_init``/``intercept_init`` (original units) override it.
    """

    def __init__(self, C=1.0, tol=1e-8, max_iter=10000, standardize=True,
                 warm_start=False):
        self.C = C
        self.tol = tol
        self.max_iter = max_iter
        self.standardize = standardize
        self.warm_start = warm_start

    def fit(self, X, y, sample_weight=None, coef_init=None, intercept_init=None):
        C = check_finite_float(self.C, name="C", minimum=0.0, strict=True)
        X, y, sw = self._prepare(X, y, sample_weight)
        if y.min() == y.max():
            return self._finish_degenerate(X, y, sw)
        Xf, mean, std = (X, None, None)
        if self.standardize:
            Xf, mean, std = _weighted_standardize(X, sw)
        if coef_init is None and self.warm_start and hasattr(self, "coef_"):
            coef_init, intercept_init = self.coef_, self.intercept_
        wb0 = None
        if coef_init is not None:
            coef0 = np.asarray(coef_init, dtype=np.float64)
            b0 = 0.0 if intercept_init is None else float(intercept_init)
            if self.standardize:
                coef0 = coef0 * std
                b0 = b0 + float(np.sum(coef0 * mean / std))
            wb0 = np.append(coef0, b0)
        X1 = np.column_stack([Xf, np.ones(X.shape[0])])
        wb, objective, n_iter, trace = _minimize_ista(
            X1, y.astype(np.float64), sw, 1.0 / C,
            float(self.tol), int(self.max_iter), wb0,
        )
        coef, intercept = wb[:-1], float(wb[-1])
        if self.standardize:
            coef = coef / std
            intercept = intercept - float(np.sum(wb[:-1] * mean / std))
        self.coef_ = _freeze(coef)
        self.intercept_ = intercept
        self.degenerate_ = False
        self.n_iter_ = n_iter
        self.objective_ = objective
        self.objective_trace_ = trace
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([0, 1])
        return self


# -- decision tree --------------------------------------------------------------

def _node_best_split(X, y, w, idx):
    """Best (feature, threshold, gain) for one node, or None.

    Gain is the decrease in weight-scaled Gini impurity. Candidate thresholds
    are midpoints between consecutive distinct sorted values. Ties resolve to
    the lowest feature index, then the lowest threshold. Zero-gain splits are
    returned (needed e.g. for XOR-style nodes where any single split is
    uninformative but a second level separates perfectly).
    """
    sub_w = w[idx]
    sub_y = y[idx]
    total_w = sub_w.sum()
    total_w1 = float(sub_w[sub_y == 1].sum())
    total_w0 = total_w - total_w1
    parent = total_w - (total_w0**2 + total_w1**2) / total_w
    best = None
    for j in range(X.shape[1]):
        values = X[idx, j]
        order = np.argsort(values, kind="stable")
        sv = values[order]
        boundaries = np.nonzero(sv[1:] != sv[:-1])[0]
        if boundaries.size == 0:
            continue
        wv = sub_w[order]
        w1v = wv * (sub_y[order] == 1)
        cum_w = np.cumsum(wv)[boundaries]
        cum_w1 = np.cumsum(w1v)[boundaries]
        cum_w0 = cum_w - cum_w1
        right_w = total_w - cum_w
        right_w1 = total_w1 - cum_w1
        right_w0 = total_w0 - cum_w0
        child = (cum_w - (cum_w0**2 + cum_w1**2) / cum_w) + (
            right_w - (right_w0**2 + right_w1**2) / right_w
        )
        gains = parent - child
        k = int(np.argmax(gains))  # first max -> lowest threshold
        gain = float(gains[k])
        if best is None or gain > best[2]:
            threshold = float((sv[boundaries[k]] + sv[boundaries[k] + 1]) / 2.0)
            best = (j, threshold, gain)
    return best


def _leaf_class(y, w, idx) -> int:
    w1 = float(w[idx][y[idx] == 1].sum())
    w0 = float(w[idx].sum()) - w1
    return 1 if w1 > w0 else 0  # ties go to class 0


class TreeSurrogate(ClassifierMixin, BaseEstimator):
    """Greedy CART classifier with optional depth and leaf-count budgets.

    With ``max_leaves`` unset the tree grows depth-first; because every
    split decision is local, the depth-k tree is always a truncation of the
    depth-(k+1) tree. With ``max_leaves`` set the tree grows best-first by
    impurity decrease until the leaf budget is exhausted.
    """

    def __init__(self, max_depth=None, max_leaves=None):
        self.max_depth = max_depth
        self.max_leaves = max_leaves

    def fit(self, X, y, sample_weight=None):
        if self.max_depth is not None:
            check_positive_int(self.max_depth, name="max_depth", minimum=0)
        if self.max_leaves is not None:
            check_positive_int(self.max_leaves, name="max_leaves")
        X = check_feature_matrix(X)
        if X.shape[0] == 0:
            raise ValueError("cannot fit a surrogate on an empty sample")
        y = check_binary_labels(y, n_rows=X.shape[0])
        w = (np.full(X.shape[0], 1.0) if sample_weight is None
             else check_sample_weight(sample_weight, X.shape[0]))

        nodes: list[dict] = []
        if self.max_leaves is None:
            self._grow_depth_first(X, y, w, np.arange(X.shape[0]), 0, nodes)
        else:
            self._grow_best_first(X, y, w, nodes)

        self.nodes_ = nodes
        self.depth_, self.n_leaves_ = _tree_shape(nodes)
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([0, 1])
        return self

    def _splittable(self, y, idx, depth) -> bool:
        if self.max_depth is not None and depth >= self.max_depth:
            return False
        sub = y[idx]
        return bool(sub.min() != sub.max())

    def _grow_depth_first(self, X, y, w, idx, depth, nodes) -> int:
        node_id = len(nodes)
        nodes.append(None)
        split = _node_best_split(X, y, w, idx) if self._splittable(y, idx, depth) else None
        if split is None:
            nodes[node_id] = {"class": _leaf_class(y, w, idx)}
            return node_id
        feature, threshold, _ = split
        left_mask = X[idx, feature] <= threshold
        left = self._grow_depth_first(X, y, w, idx[left_mask], depth + 1, nodes)
        right = self._grow_depth_first(X, y, w, idx[~left_mask], depth + 1, nodes)
        nodes[node_id] = {
            "split_feature": int(feature),
            "threshold": float(threshold),
            "left": left,
            "right": right,
        }
        return node_id

    def _grow_best_first(self, X, y, w, nodes):
        nodes.append({"class": _leaf_class(y, w, np.arange(X.shape[0]))})
        frontier: list[tuple] = []
        counter = 0

        def consider(node_id, idx, depth):
            nonlocal counter
            if not self._splittable(y, idx, depth):
                return
            split = _node_best_split(X, y, w, idx)
            if split is not None:
                # FIFO tie-break via the counter keeps growth deterministic
                heapq.heappush(frontier, (-split[2], counter, node_id, idx, depth, split))
                counter += 1

        consider(0, np.arange(X.shape[0]), 0)
        n_leaves = 1
        while frontier and n_leaves < self.max_leaves:
            _, _, node_id, idx, depth, (feature, threshold, _) = heapq.heappop(frontier)
            left_mask = X[idx, feature] <= threshold
            left_idx, right_idx = idx[left_mask], idx[~left_mask]
            left_id, right_id = len(nodes), len(nodes) + 1
            nodes.append({"class": _leaf_class(y, w, left_idx)})
            nodes.append({"class": _leaf_class(y, w, right_idx)})
            nodes[node_id] = {
                "split_feature": int(feature),
                "threshold": float(threshold),
                "left": left_id,
                "right": right_id,
            }
            n_leaves += 1
            consider(left_id, left_idx, depth + 1)
            consider(right_id, right_idx, depth + 1)

    def predict(self, X) -> np.ndarray:
        X = check_feature_matrix(X, n_cols=self.n_features_in_)
        return _tree_route(self.nodes_, X)


def _tree_shape(nodes: list[dict]) -> tuple[int, int]:
    """(depth, n_leaves) recomputed from the node array."""
    def walk(i, depth):
        node = nodes[i]
        if "class" in node:
            return depth, 1
        ld, ll = walk(node["left"], depth + 1)
        rd, rl = walk(node["right"], depth + 1)
        return max(ld, rd), ll + rl

    return walk(0, 0)


def _tree_route(nodes: list[dict], X: np.ndarray) -> np.ndarray:
    out = np.empty(X.shape[0], dtype=np.int64)
    stack = [(0, np.arange(X.shape[0]))]
    while stack:
        node_id, idx = stack.pop()
        if idx.size == 0:
            continue
        node = nodes[node_id]
        if "class" in node:
            out[idx] = node["class"]
            continue
        mask = X[idx, node["split_feature"]] <= node["threshold"]
        stack.append((node["left"], idx[mask]))
        stack.append((node["right"], idx[~mask]))
    return out


# -- fitted-model summaries ------------------------------------------------------

def _check_coefficients(values) -> np.ndarray:
    v = np.ascontiguousarray(values, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] == 0:
        raise ValueError("coefficients must be a non-empty 1-D vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("coefficients contain non-finite values")
    return v


@dataclass(frozen=True, eq=False)
class LinearFit(FieldEqMixin):
    """Serializable summary of a fitted linear surrogate (original units)."""

    coefficients: np.ndarray
    intercept: float
    C: float | None
    n_iter: int
    objective: float
    degenerate: bool

    def __post_init__(self):
        coef = _check_coefficients(self.coefficients)
        object.__setattr__(self, "coefficients", _freeze(coef))
        object.__setattr__(self, "intercept", check_finite_float(self.intercept, name="intercept"))
        if self.C is not None:
            object.__setattr__(self, "C", check_finite_float(self.C, name="C", minimum=0.0, strict=True))
        object.__setattr__(self, "objective", check_finite_float(self.objective, name="objective"))


@dataclass(frozen=True, eq=False)
class TreeFit(FieldEqMixin):
    """Serializable summary of a fitted tree surrogate: full node array."""

    nodes: list
    depth: int
    n_leaves: int

    def __post_init__(self):
        depth, leaves = _tree_shape(self.nodes)
        internal = sum(1 for n in self.nodes if "class" not in n)
        if leaves != internal + 1:
            raise ValueError("node array is not a binary tree")
        if depth != self.depth or leaves != self.n_leaves:
            raise ValueError("depth/n_leaves do not match the node array")


def summarize(estimator) -> LinearFit | TreeFit:
    """Lift a fitted estimator into its serializable summary."""
    if isinstance(estimator, TreeSurrogate):
        return TreeFit(nodes=list(estimator.nodes_), depth=estimator.depth_,
                       n_leaves=estimator.n_leaves_)
    C = None
    if isinstance(estimator, LassoLogisticSurrogate) and not estimator.degenerate_:
        C = float(estimator.C)
    return LinearFit(
        coefficients=estimator.coef_,
        intercept=float(estimator.intercept_),
        C=C,
        n_iter=int(estimator.n_iter_),
        objective=float(estimator.objective_),
        degenerate=bool(estimator.degenerate_),
    )


# -- neighbourhood-level operations ----------------------------------------------

def fit_logistic(neighbourhood: Neighbourhood, config: FitConfig) -> LogisticSurrogate:
    if config.family != "logistic":
        raise ValueError("fit_logistic requires family == 'logistic'")
    est = LogisticSurrogate(tol=config.tol, max_iter=config.max_iter,
                            standardize=config.resolved_standardize())
    return est.fit(neighbourhood.points, neighbourhood.labels,
                   sample_weight=neighbourhood.weights)


def fit_logistic_l1(neighbourhood: Neighbourhood, config: FitConfig,
                    coef_init=None, intercept_init=None) -> LassoLogisticSurrogate:
    if config.family != "logistic_l1":
        raise ValueError("fit_logistic_l1 requires family == 'logistic_l1'")
    est = LassoLogisticSurrogate(C=config.C, tol=config.tol, max_iter=config.max_iter,
                                 standardize=config.resolved_standardize())
    return est.fit(neighbourhood.points, neighbourhood.labels,
                   sample_weight=neighbourhood.weights,
                   coef_init=coef_init, intercept_init=intercept_init)


def fit_tree(neighbourhood: Neighbourhood, config: FitConfig) -> TreeSurrogate:
    if config.family != "tree":
        raise ValueError("fit_tree requires family == 'tree'")
    est = TreeSurrogate(max_depth=config.max_depth, max_leaves=config.max_leaves)
    return est.fit(neighbourhood.points, neighbourhood.labels,
                   sample_weight=neighbourhood.weights)


def fit_surrogate(neighbourhood: Neighbourhood, config: FitConfig):
    if config.family == "logistic":
        return fit_logistic(neighbourhood, config)
    if config.family == "logistic_l1":
        return fit_logistic_l1(neighbourhood, config)
    return fit_tree(neighbourhood, config)


def surrogate_predict(surrogate, X) -> np.ndarray:
    """Hard labels from a fitted estimator or a serialized summary."""
    if isinstance(surrogate, LinearFit):
        X = check_feature_matrix(X, n_cols=surrogate.coefficients.shape[0])
        return (X @ surrogate.coefficients + surrogate.intercept > 0.0).astype(np.int64)
    if isinstance(surrogate, TreeFit):
        X = check_feature_matrix(X)
        return _tree_route(surrogate.nodes, X)
    return surrogate.predict(X)


def complexity(surrogate):
    """l0 coefficient count for linear surrogates, (depth, n_leaves) for trees."""
    if isinstance(surrogate, TreeFit):
        return surrogate.depth, surrogate.n_leaves
    if isinstance(surrogate, TreeSurrogate):
        return int(surrogate.depth_), int(surrogate.n_leaves_)
    coef = surrogate.coefficients if isinstance(surrogate, LinearFit) else surrogate.coef_
    return int(np.sum(np.abs(coef) > ZERO_COEF_TOL))


# -- codecs ----------------------------------------------------------------------

def _encode_linear(s: LinearFit) -> dict:
    return {
        "coefficients": records.encode_vector(s.coefficients),
        "intercept": float(s.intercept),
        "C": None if s.C is None else float(s.C),
        "n_iter": int(s.n_iter),
        "objective": float(s.objective),
        "degenerate": bool(s.degenerate),
    }


def _decode_linear(r: dict) -> LinearFit:
    return LinearFit(
        coefficients=records.decode_vector(r["coefficients"]),
        intercept=float(r["intercept"]),
        C=None if r.get("C") is None else float(r["C"]),
        n_iter=int(r["n_iter"]),
        objective=float(r["objective"]),
        degenerate=bool(r["degenerate"]),
    )


records.register("linear_surrogate", LinearFit, _encode_linear, _decode_linear)


def _encode_node(node: dict) -> dict:
    if "class" in node:
        return {"class": int(node["class"])}
    return {
        "split_feature": int(node["split_feature"]),
        "threshold": float(node["threshold"]),
        "left": int(node["left"]),
        "right": int(node["right"]),
    }


def _decode_node(node: dict) -> dict:
    if "class" in node:
        return {"class": int(node["class"])}
    return {
        "split_feature": int(node["split_feature"]),
        "threshold": float(node["threshold"]),
        "left": int(node["left"]),
        "right": int(node["right"]),
    }


records.register(
    "tree_surrogate",
    TreeFit,
    lambda s: {
        "nodes": [_encode_node(n) for n in s.nodes],
        "depth": int(s.depth),
        "n_leaves": int(s.n_leaves),
    },
    lambda r: TreeFit(
        nodes=[_decode_node(n) for n in r["nodes"]],
        depth=int(r["depth"]),
        n_leaves=int(r["n_leaves"]),
    ),
)


def _encode_fit_config(c: FitConfig) -> dict:
    return {
        "family": c.family,
        "C": None if c.C is None else float(c.C),
        "max_depth": None if c.max_depth is None else int(c.max_depth),
        "max_leaves": None if c.max_leaves is None else int(c.max_leaves),
        "tol": float(c.tol),
        "max_iter": int(c.max_iter),
        "standardize": c.standardize,
    }


def _decode_fit_config(r: dict) -> FitConfig:
    return FitConfig(
        family=str(r["family"]),
        C=None if r.get("C") is None else float(r["C"]),
        max_depth=None if r.get("max_depth") is None else int(r["max_depth"]),
        max_leaves=None if r.get("max_leaves") is None else int(r["max_leaves"]),
        tol=float(r.get("tol", 1e-8)),
        max_iter=int(r.get("max_iter", 10000)),
        standardize=r.get("standardize"),
    )


records.register("fit_config", FitConfig, _encode_fit_config, _decode_fit_config)
