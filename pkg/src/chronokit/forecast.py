"""Forecasting a single univariate series over relative horizons.

Three families: naive strategies, a least-squares polynomial trend, and
reduction to ridge regression on sliding windows with recursive multi-step
prediction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from chronokit.data._types import as_series_array
from chronokit.exceptions import (
    DegenerateScale,
    InsufficientData,
    InvalidParameter,
    LengthMismatch,
    NotFittedError,
)
from chronokit.supervised.ridge import RidgeModel, ridge_fit, ridge_scores
from chronokit.transform import sliding_window

__all__ = [
    "ForecastHorizon",
    "Strategy",
    "TrendModel",
    "ReductionModel",
    "naive_forecast",
    "trend_fit",
    "trend_predict",
    "reduce_fit",
    "reduce_predict",
    "forecast_metrics",
    "NaiveForecaster",
    "TrendForecaster",
    "ReductionForecaster",
]


@dataclass(frozen=True)
class ForecastHorizon:
    """Steps ahead of the last training point, e.g. ``ForecastHorizon((1, 2, 3))``."""

    offsets: tuple

    def __post_init__(self):
        offsets = tuple(int(h) for h in np.atleast_1d(self.offsets))
        if any(int(h) != h for h in np.atleast_1d(self.offsets)):
            raise InvalidParameter(f"horizon offsets must be integers, got {self.offsets}")
        if not offsets:
            raise InvalidParameter("horizon is empty")
        if offsets[0] < 1 or any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise InvalidParameter(f"horizon must be strictly increasing integers >= 1, got {offsets}")
        object.__setattr__(self, "offsets", offsets)

    def __len__(self):
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    @property
    def max(self) -> int:
        return self.offsets[-1]


def as_horizon(fh) -> ForecastHorizon:
    if isinstance(fh, ForecastHorizon):
        return fh
    if np.isscalar(fh):
        return ForecastHorizon(tuple(range(1, int(fh) + 1)))
    return ForecastHorizon(tuple(fh))


def _univariate(y) -> np.ndarray:
    x = as_series_array(y)
    if x.shape[0] != 1:
        raise InvalidParameter(f"forecasting needs a univariate series, got {x.shape[0]} channels")
    if x.shape[1] < 1:
        raise InsufficientData("empty series")
    return x[0]


class Strategy(str, enum.Enum):
    LAST = "last"
    MEAN = "mean"
    SEASONAL = "seasonal"


def naive_forecast(y, fh, strategy: Union[Strategy, str] = Strategy.LAST, sp: Optional[int] = None) -> list:
    y = _univariate(y)
    fh = as_horizon(fh)
    strategy = Strategy(strategy)
    n = y.shape[0]
    if strategy is Strategy.LAST:
        return [float(y[-1])] * len(fh)
    if strategy is Strategy.MEAN:
        return [float(np.mean(y))] * len(fh)
    if sp is None or int(sp) != sp or sp < 1:
        raise InvalidParameter(f"seasonal strategy needs a positive integer sp, got {sp}")
    if n < sp:
        raise InvalidParameter(f"seasonal strategy needs at least sp={sp} points, got {n}")
    return [float(y[n - sp + (h - 1) % sp]) for h in fh]


@dataclass(frozen=True)
class TrendModel:
    degree: int
    coefficients: np.ndarray  # increasing powers: c0 + c1 t + c2 t^2 ...
    n_train: int

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coefficients)


def trend_fit(y, degree: int = 1) -> TrendModel:
    y = _univariate(y)
    if int(degree) != degree or degree < 0:
        raise InvalidParameter(f"degree must be a non-negative integer, got {degree}")
    n = y.shape[0]
    if n < degree + 1:
        raise InsufficientData(f"degree {degree} needs at least {degree + 1} points, got {n}")
    t = np.arange(n, dtype=np.float64)
    coef = np.polynomial.polynomial.polyfit(t, y, degree)
    coef.setflags(write=False)
    return TrendModel(int(degree), coef, n)


def trend_predict(model: Optional[TrendModel], fh) -> list:
    if model is None:
        raise NotFittedError("trend model is not fitted")
    fh = as_horizon(fh)
    t = np.array([model.n_train - 1 + h for h in fh], dtype=np.float64)
    return [float(v) for v in model(t)]


@dataclass(frozen=True)
class ReductionModel:
    window: int
    inner: RidgeModel
    last_window: np.ndarray


def _window_pairs(y, window):
    pairs = sliding_window(y, window + 1).to_numpy()[:, 0, :]
    return pairs[:, :window], pairs[:, window]


def reduce_fit(y, window: int, lambda_grid: Optional[Sequence[float]] = None) -> ReductionModel:
    """Fit ridge on pairs ``y[t-window:t] -> y[t]``.

    Constant series give windows with no variance; the inner model then
    falls back to predicting the mean target.
    """
    y = _univariate(y)
    if int(window) != window or window < 1:
        raise InvalidParameter(f"window must be a positive integer, got {window}")
    n = y.shape[0]
    if n < window + 1:
        raise InsufficientData(f"window {window} needs at least {window + 1} points, got {n}")
    X, targets = _window_pairs(y, window)
    inner = ridge_fit(X, targets.astype(np.float64), lambda_grid, allow_degenerate=True)
    last = np.array(y[n - window :], dtype=np.float64)
    last.setflags(write=False)
    return ReductionModel(int(window), inner, last)


def reduce_predict(model: Optional[ReductionModel], fh) -> list:
    if model is None:
        raise NotFittedError("reduction model is not fitted")
    fh = as_horizon(fh)
    buf = list(model.last_window)
    steps = []
    for _ in range(fh.max):
        nxt = float(ridge_scores(model.inner, np.array(buf[-model.window :]))[0, 0])
        steps.append(nxt)
        buf.append(nxt)
    return [steps[h - 1] for h in fh]


def forecast_metrics(actual, predicted, train=None) -> dict:
    """mae, rmse, smape and (given at least two training points) mase."""
    a = np.asarray(actual, dtype=np.float64).ravel()
    p = np.asarray(predicted, dtype=np.float64).ravel()
    if a.shape != p.shape:
        raise LengthMismatch(f"{p.size} predictions for {a.size} actual values")
    if a.size == 0:
        raise LengthMismatch("no values to compare")
    err = np.abs(a - p)
    denom = np.abs(a) + np.abs(p)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(denom == 0, 0.0, 2.0 * err / denom)
    out = {
        "mae": float(err.mean()),
        "rmse": float(np.sqrt(np.mean(err**2))),
        "smape": float(ratio.mean()),
    }
    if train is not None:
        tr = _univariate(train)
        if tr.shape[0] < 2:
            raise DegenerateScale("mase needs at least two training points")
        scale = float(np.mean(np.abs(np.diff(tr))))
        if scale == 0:
            raise DegenerateScale("training series has no one-step variation")
        out["mase"] = out["mae"] / scale
    return out


class _Forecaster:
    def fit(self, y):
        self.y_ = _univariate(y).copy()
        self._fit(self.y_)
        return self

    def predict(self, fh) -> list:
        if not hasattr(self, "y_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted")
        return self._predict(as_horizon(fh))

    def __repr__(self):
        params = ", ".join(f"{k}={v!r}" for k, v in vars(self).items() if not k.endswith("_"))
        return f"{type(self).__name__}({params})"


class NaiveForecaster(_Forecaster):
    def __init__(self, strategy="last", sp=None):
        self.strategy = strategy
        self.sp = sp

    def _fit(self, y):
        naive_forecast(y, [1], self.strategy, self.sp)  # validate early

    def _predict(self, fh):
        return naive_forecast(self.y_, fh, self.strategy, self.sp)


class TrendForecaster(_Forecaster):
    """Polynomial trend in the time index; ``degree=1`` is a straight line."""

    def __init__(self, degree=1):
        self.degree = degree

    def _fit(self, y):
        self.model_ = trend_fit(y, self.degree)

    def _predict(self, fh):
        return trend_predict(self.model_, fh)


class ReductionForecaster(_Forecaster):
    """Sliding-window ridge regression applied recursively."""

    def __init__(self, window=3, lambda_grid=None):
        self.window = window
        self.lambda_grid = lambda_grid

    def _fit(self, y):
        self.model_ = reduce_fit(y, self.window, self.lambda_grid)

    def _predict(self, fh):
        return reduce_predict(self.model_, fh)
