"""Ridge read-out with exact leave-one-out selection of the penalty.

Features are standardised, class labels become one-vs-rest +-1 targets, and
each penalty in the grid is scored by its leave-one-out squared error, taken
in closed form from one SVD of the standardised design. The intercept is not
penalised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from chronokit.data._types import LabelKind, LabelVector, as_labels
from chronokit.exceptions import DegenerateFeatures, InvalidParameter, SchemaMismatch

__all__ = ["RidgeModel", "ridge_fit", "ridge_predict", "ridge_scores", "DEFAULT_LAMBDAS"]

DEFAULT_LAMBDAS = tuple(np.logspace(-3, 3, 10))


@dataclass(frozen=True)
class RidgeModel:
    weights: np.ndarray  # (n_outputs, n_features), on standardised features
    bias: np.ndarray  # (n_outputs,)
    lambda_selected: float
    feature_means: np.ndarray
    feature_sds: np.ndarray
    kind: LabelKind
    alphabet: tuple = ()
    loo_errors: Optional[np.ndarray] = None
    lambdas: tuple = ()

    @property
    def n_features(self) -> int:
        return self.weights.shape[1]


def _zero_variance(means, sds):
    return sds <= 1e-12 * np.maximum(1.0, np.abs(means))


def _standardize(X, means, sds):
    dead = _zero_variance(means, sds)
    Z = (X - means) / np.where(dead, 1.0, sds)
    Z[:, dead] = 0.0
    return Z


def _targets(targets: LabelVector) -> np.ndarray:
    if targets.kind is LabelKind.CLASS:
        Y = -np.ones((len(targets), targets.n_classes))
        Y[np.arange(len(targets)), targets.indices] = 1.0
        return Y
    if targets.kind is LabelKind.TARGET:
        return targets.targets[:, np.newaxis].astype(np.float64)
    raise InvalidParameter("ridge_fit needs class or target labels")


def _loo_errors(Z, Y, lambdas):
    n = Z.shape[0]
    U, s, _ = linalg.svd(Z, full_matrices=False)
    ybar = Y.mean(axis=0)
    UtY = U.T @ (Y - ybar)
    s2 = s * s
    errors = np.empty(len(lambdas))
    for k, lam in enumerate(lambdas):
        with np.errstate(divide="ignore", invalid="ignore"):
            shrink = np.where(s2 + lam > 0, s2 / (s2 + lam), 0.0)
        # hat diagonal of ridge plus an unpenalised intercept (columns of Z are centred)
        h = 1.0 / n + (U * U) @ shrink
        fitted = ybar + U @ (shrink[:, np.newaxis] * UtY)
        denom = 1.0 - h
        if np.any(denom <= 1e-10):
            errors[k] = np.inf
            continue
        loo = (Y - fitted) / denom[:, np.newaxis]
        errors[k] = float(np.mean(np.sum(loo * loo, axis=1)))
    return errors


def _solve(Z, Yc, lam):
    n, p = Z.shape
    if lam == 0:
        return np.linalg.lstsq(Z, Yc, rcond=None)[0]
    if p <= n:
        A = Z.T @ Z
        A[np.diag_indices(p)] += lam
        return linalg.cho_solve(linalg.cho_factor(A), Z.T @ Yc)
    # dual form: (Z Z^T + lam I) a = Yc, beta = Z^T a; same solution, smaller system
    K = Z @ Z.T
    K[np.diag_indices(n)] += lam
    return Z.T @ linalg.cho_solve(linalg.cho_factor(K), Yc)


def ridge_fit(features, targets, lambda_grid=None, allow_degenerate: bool = False) -> RidgeModel:
    """Fit a ridge read-out, choosing the penalty by exact leave-one-out error.

    With ``allow_degenerate`` a design whose features all have zero variance
    yields an intercept-only model instead of :class:`DegenerateFeatures`.
    """
    X = np.asarray(features, dtype=np.float64)
    if X.ndim != 2:
        raise InvalidParameter(f"features must be a 2D matrix, got {X.ndim}D")
    targets = as_labels(targets)
    n, p = X.shape
    if n < (1 if allow_degenerate else 2):
        raise InvalidParameter(f"ridge_fit needs at least 2 rows, got {n}")
    if len(targets) != n:
        raise InvalidParameter(f"{len(targets)} targets for {n} feature rows")
    lambdas = tuple(float(v) for v in (DEFAULT_LAMBDAS if lambda_grid is None else lambda_grid))
    if not lambdas:
        raise InvalidParameter("lambda grid is empty")
    floor_ok = (lambda v: v > 0) if targets.kind is LabelKind.CLASS else (lambda v: v >= 0)
    if not all(floor_ok(v) and np.isfinite(v) for v in lambdas):
        raise InvalidParameter(f"invalid lambda grid {lambdas}")

    means = X.mean(axis=0)
    sds = X.std(axis=0)
    Y = _targets(targets)
    ybar = Y.mean(axis=0)
    alphabet = targets.alphabet if targets.kind is LabelKind.CLASS else ()
    if np.all(_zero_variance(means, sds)):
        if not allow_degenerate:
            raise DegenerateFeatures("all features have zero variance")
        return RidgeModel(np.zeros((Y.shape[1], p)), ybar, lambdas[0], means, sds, targets.kind, alphabet, None, lambdas)

    Z = _standardize(X, means, sds)
    errors = _loo_errors(Z, Y, lambdas)
    best = int(np.argmin(errors)) if np.isfinite(errors).any() else 0
    lam = lambdas[best]
    beta = _solve(Z, Y - ybar, lam)
    return RidgeModel(
        weights=np.ascontiguousarray(beta.T),
        bias=ybar,
        lambda_selected=lam,
        feature_means=means,
        feature_sds=sds,
        kind=targets.kind,
        alphabet=alphabet,
        loo_errors=errors,
        lambdas=lambdas,
    )


def ridge_scores(model: RidgeModel, features) -> np.ndarray:
    """Linear scores ``(n_rows, n_outputs)`` for raw (unstandardised) features."""
    X = np.asarray(features, dtype=np.float64)
    if X.ndim == 1:
        X = X[np.newaxis, :]
    if X.shape[1] != model.n_features:
        raise SchemaMismatch(f"model has {model.n_features} features, got {X.shape[1]}")
    Z = _standardize(X, model.feature_means, model.feature_sds)
    return Z @ model.weights.T + model.bias


def ridge_predict(model: RidgeModel, features) -> LabelVector:
    scores = ridge_scores(model, features)
    if model.kind is LabelKind.CLASS:
        idx = np.argmax(scores, axis=1)  # first maximum: ties go to the smallest class index
        return LabelVector.classes([model.alphabet[k] for k in idx], model.alphabet)
    return LabelVector.regression(scores[:, 0])
