"""Series-to-series and series-to-features transformations.

The functions act on one series or one collection. The classes at the bottom
wrap the collection-level ones as fit/transform steps for pipelines; a step
that makes every case the same length sets ``equalizes_length``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from chronokit.core import summarize
from chronokit.data._types import Collection, Layout, Series, as_collection, as_series_array
from chronokit.exceptions import (
    CaseError,
    InvalidParameter,
    NotFittedError,
    SchemaMismatch,
    TargetTooShort,
)

__all__ = [
    "FeatureVector",
    "Fill",
    "PadPolicy",
    "znorm",
    "pad",
    "truncate",
    "summary_features",
    "fourier_features",
    "sliding_window",
    "broadcast",
    "features_matrix",
    "Padder",
    "Truncator",
    "ZNormalizer",
    "SeriesTransformer",
]

_SD_FLOOR = 1e-12


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.float64))
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.values) != len(self.names):
            raise InvalidParameter("feature values and names differ in length")
        if len(set(self.names)) != len(self.names):
            raise InvalidParameter("feature names must be unique")

    def __len__(self):
        return len(self.values)

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.values.tolist()))


class Fill(str, enum.Enum):
    ZERO = "zero"
    LAST_VALUE = "last"
    MEAN = "mean"


@dataclass(frozen=True)
class PadPolicy:
    """How to pad: fill rule and a target length (None means the longest case)."""

    fill: Fill = Fill.ZERO
    target_length: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "fill", Fill(self.fill))
        if self.target_length is not None and self.target_length < 1:
            raise InvalidParameter(f"target_length must be positive, got {self.target_length}")


def _like_input(values, x):
    # hand back a 1D array for 1D input and a Series for Series input
    if isinstance(x, Series):
        return Series(values, x.name)
    if np.ndim(x) == 1:
        return values[0]
    return values


def znorm(series):
    """Z-normalise each channel; constant channels become all zeros."""
    x = as_series_array(series)
    mean = x.mean(axis=1, keepdims=True)
    sd = x.std(axis=1, keepdims=True)
    out = np.where(sd < _SD_FLOOR, 0.0, (x - mean) / np.where(sd < _SD_FLOOR, 1.0, sd))
    return _like_input(out, series)


def pad(collection, policy: PadPolicy = PadPolicy()) -> Collection:
    """Extend every case to a common length, keeping the original values as a prefix."""
    X = as_collection(collection)
    longest = int(X.lengths.max())
    target = longest if policy.target_length is None else policy.target_length
    if target < longest:
        raise TargetTooShort(f"target length {target} is shorter than the longest case ({longest})")
    out = np.empty((X.n_cases, X.n_channels, target))
    for i, case in enumerate(X):
        n = case.shape[1]
        out[i, :, :n] = case
        if policy.fill is Fill.ZERO:
            out[i, :, n:] = 0.0
        elif policy.fill is Fill.LAST_VALUE:
            out[i, :, n:] = case[:, -1:]
        else:
            out[i, :, n:] = case.mean(axis=1, keepdims=True)
    return Collection(out, Layout.DENSE)


def truncate(collection, length: Optional[int] = None) -> Collection:
    """Cut every case to the shortest length (or to ``length``)."""
    X = as_collection(collection)
    shortest = int(X.lengths.min())
    if length is None:
        length = shortest
    if length > shortest:
        raise InvalidParameter(f"cannot truncate to {length}, shortest case has {shortest} points")
    return Collection(np.stack([case[:, :length] for case in X]), Layout.DENSE)


_STATS = ("mean", "std", "min", "max", "median", "iqr", "slope")


def summary_features(series) -> FeatureVector:
    """Per channel: mean, population sd, min, max, median, IQR and least-squares slope."""
    x = as_series_array(series)
    n = x.shape[1]
    t = np.arange(n, dtype=np.float64)
    tc = t - t.mean()
    denom = float(tc @ tc)
    values, names = [], []
    for k, ch in enumerate(x):
        q25, q50, q75 = np.percentile(ch, [25, 50, 75])
        slope = float(tc @ (ch - ch.mean()) / denom) if denom > 0 else 0.0
        values += [ch.mean(), ch.std(), ch.min(), ch.max(), q50, q75 - q25, slope]
        names += [f"ch{k}_{s}" for s in _STATS]
    return FeatureVector(np.array(values), names)


def fourier_features(series, k: int) -> FeatureVector:
    """Magnitudes of DFT coefficients 1..k per channel, scaled by 2/n."""
    x = as_series_array(series)
    n = x.shape[1]
    if int(k) != k or k < 1 or k > n // 2:
        raise InvalidParameter(f"k must be an integer in [1, {n // 2}], got {k}")
    mags = np.abs(np.fft.rfft(x, axis=1)[:, 1 : k + 1]) * (2.0 / n)
    names = [f"ch{c}_dftmag{j}" for c in range(x.shape[0]) for j in range(1, k + 1)]
    return FeatureVector(mags.reshape(-1), names)


def sliding_window(series, window: int, stride: int = 1) -> Collection:
    """Dense collection of the subseries starting at 0, stride, 2*stride, ..."""
    x = as_series_array(series)
    n = x.shape[1]
    if int(window) != window or not 1 <= window <= n:
        raise InvalidParameter(f"window must be an integer in [1, {n}], got {window}")
    if int(stride) != stride or stride < 1:
        raise InvalidParameter(f"stride must be a positive integer, got {stride}")
    starts = range(0, n - window + 1, stride)
    return Collection(np.stack([x[:, s : s + window] for s in starts]), Layout.DENSE)


def broadcast(transformer: Callable, collection) -> Collection:
    """Apply a series-to-series function to every case.

    The result is Dense when all outputs share a shape. Errors are re-raised
    as :class:`CaseError` naming the failing case.
    """
    X = as_collection(collection)
    outputs = []
    for i, case in enumerate(X):
        try:
            outputs.append(as_series_array(transformer(case)))
        except Exception as e:
            raise CaseError(i, e) from e
    return Collection.from_cases(outputs)


def features_matrix(extractor: Callable, collection) -> tuple:
    """Stack a series-to-features function over a collection: ``(matrix, names)``."""
    X = as_collection(collection)
    rows = []
    names = None
    for i, case in enumerate(X):
        try:
            fv = extractor(case)
        except Exception as e:
            raise CaseError(i, e) from e
        names = fv.names if names is None else names
        rows.append(fv.values)
    return np.vstack(rows), names


class _Step:
    equalizes_length = False

    def fit(self, X, y=None):
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform(X)


class Padder(_Step):
    """Pad to a length frozen at fit time (the longest training case by default)."""

    equalizes_length = True

    def __init__(self, fill: Union[Fill, str] = Fill.ZERO, target_length: Optional[int] = None):
        self.fill = fill
        self.target_length = target_length

    def fit(self, X, y=None):
        X = as_collection(X)
        self.fitted_meta_ = summarize(X)
        self.length_ = int(X.lengths.max()) if self.target_length is None else self.target_length
        if self.length_ < int(X.lengths.max()):
            raise TargetTooShort(f"target length {self.length_} is shorter than the longest case")
        return self

    def transform(self, X):
        if not hasattr(self, "length_"):
            raise NotFittedError("Padder is not fitted")
        X = as_collection(X)
        if int(X.lengths.max()) > self.length_:
            raise SchemaMismatch(
                f"case of length {int(X.lengths.max())} exceeds the padding length {self.length_} fixed at fit",
                fitted=self.fitted_meta_,
                new=summarize(X),
            )
        return pad(X, PadPolicy(self.fill, self.length_))


class Truncator(_Step):
    """Truncate to the shortest training length, frozen at fit time."""

    equalizes_length = True

    def fit(self, X, y=None):
        X = as_collection(X)
        self.fitted_meta_ = summarize(X)
        self.length_ = int(X.lengths.min())
        return self

    def transform(self, X):
        if not hasattr(self, "length_"):
            raise NotFittedError("Truncator is not fitted")
        X = as_collection(X)
        if int(X.lengths.min()) < self.length_:
            raise SchemaMismatch(
                f"case of length {int(X.lengths.min())} is shorter than the length {self.length_} fixed at fit",
                fitted=self.fitted_meta_,
                new=summarize(X),
            )
        return truncate(X, self.length_)


class SeriesTransformer(_Step):
    """Lift a stateless series-to-series function to a collection step."""

    def __init__(self, func: Callable):
        self.func = func

    def transform(self, X):
        return broadcast(self.func, X)


class ZNormalizer(SeriesTransformer):
    def __init__(self):
        super().__init__(znorm)
