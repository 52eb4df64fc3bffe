"""Random convolutional kernel transform with a ridge read-out.

Each random kernel is a dilated, optionally padded convolution over one
channel; it contributes two features per case, the maximum of the
convolution output and the proportion of positive values (PPV).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numba
import numpy as np
from numba import njit, prange

from chronokit.data._types import as_collection
from chronokit.exceptions import CapabilityError, InvalidParameter, SchemaMismatch, SeriesTooShort
from chronokit.core import ValidationReport, Violation
from chronokit.supervised.base import BaseClassifier, BaseRegressor
from chronokit.supervised.ridge import ridge_fit, ridge_predict

__all__ = [
    "ConvKernel",
    "RocketConfig",
    "generate_kernels",
    "rocket_transform",
    "Rocket",
    "RocketClassifier",
    "RocketRegressor",
]

_LENGTHS = (7, 9, 11)

if "NUMBA_THREADING_LAYER" not in os.environ:
    # try OpenMP before TBB; old TBB builds warn on every first parallel call
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "tbb", "workqueue"]


@dataclass(frozen=True)
class ConvKernel:
    length: int
    weights: np.ndarray
    bias: float
    dilation: int
    padding: int
    channel: int

    @property
    def span(self) -> int:
        return (self.length - 1) * self.dilation + 1


@dataclass(frozen=True)
class RocketConfig:
    n_kernels: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if int(self.n_kernels) != self.n_kernels or self.n_kernels < 1:
            raise InvalidParameter(f"n_kernels must be a positive integer, got {self.n_kernels}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise InvalidParameter(f"seed must be a non-negative integer, got {self.seed}")

    @property
    def n_features(self) -> int:
        return 2 * self.n_kernels


def _kernel(seed, i, n_channels, series_length):
    # one generator per kernel so kernels can be drawn in any order or in parallel
    rng = np.random.default_rng([seed, i])
    length = int(rng.choice(_LENGTHS))
    weights = rng.standard_normal(length)
    weights = weights - weights.mean()
    bias = float(rng.uniform(-1.0, 1.0))
    upper = max(0.0, float(np.log2((series_length - 1) / (length - 1))))
    dilation = int(2.0 ** rng.uniform(0.0, upper))
    dilation = max(1, min(dilation, max(1, (series_length - 1) // (length - 1))))
    padding = ((length - 1) * dilation) // 2 if rng.integers(2) == 1 else 0
    channel = int(rng.integers(n_channels))
    if (length - 1) * dilation + 1 > series_length + 2 * padding:
        # short series: only a padded kernel fits
        padding = ((length - 1) * dilation) // 2
    weights.setflags(write=False)
    return ConvKernel(length, weights, bias, dilation, padding, channel)


def generate_kernels(config: RocketConfig, n_channels: int, series_length: int) -> list:
    """Draw ``config.n_kernels`` random kernels for series of the given shape.

    Kernel ``i`` is drawn from a generator seeded by ``(config.seed, i)``:
    length from {7, 9, 11}; standard-normal weights, mean-centred; bias
    U(-1, 1); dilation ``floor(2**u)`` with ``u ~ U(0, log2((L-1)/(length-1)))``;
    padding 0 or half the span with equal probability; one channel uniformly.
    """
    if series_length < 7:
        raise SeriesTooShort(f"random kernels need series of at least 7 points, got {series_length}")
    if n_channels < 1:
        raise InvalidParameter(f"n_channels must be positive, got {n_channels}")
    return [_kernel(config.seed, i, n_channels, series_length) for i in range(config.n_kernels)]


def _pack(kernels):
    lengths = np.array([k.length for k in kernels], dtype=np.int64)
    offsets = np.zeros(len(kernels) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    weights = np.concatenate([k.weights for k in kernels]).astype(np.float64)
    biases = np.array([k.bias for k in kernels], dtype=np.float64)
    dilations = np.array([k.dilation for k in kernels], dtype=np.int64)
    paddings = np.array([k.padding for k in kernels], dtype=np.int64)
    channels = np.array([k.channel for k in kernels], dtype=np.int64)
    return weights, offsets, lengths, biases, dilations, paddings, channels


@njit(cache=True, nogil=True)
def _apply_kernel(x, weights, length, bias, dilation, padding):
    n = x.shape[0]
    n_out = n + 2 * padding - (length - 1) * dilation
    best = -np.inf
    positive = 0
    for t in range(n_out):
        s = bias
        for j in range(length):
            idx = t + j * dilation - padding
            if 0 <= idx < n:
                s += weights[j] * x[idx]
        if s > best:
            best = s
        if s > 0:
            positive += 1
    return best, positive / n_out


@njit(cache=True, parallel=True)
def _apply_kernels(X, weights, offsets, lengths, biases, dilations, paddings, channels):
    n_cases = X.shape[0]
    n_kernels = lengths.shape[0]
    out = np.empty((n_cases, 2 * n_kernels))
    for i in prange(n_cases):
        for k in range(n_kernels):
            w = weights[offsets[k] : offsets[k + 1]]
            mx, ppv = _apply_kernel(X[i, channels[k]], w, lengths[k], biases[k], dilations[k], paddings[k])
            out[i, 2 * k] = mx
            out[i, 2 * k + 1] = ppv
    return out


def rocket_transform(collection, kernels) -> np.ndarray:
    """Feature matrix ``(n_cases, 2 * n_kernels)`` with (max, PPV) per kernel, in kernel order."""
    X = as_collection(collection)
    if not X.is_equal_length:
        report = ValidationReport(
            (Violation("unequal_length", "the kernel transform needs equal-length cases"),)
        )
        raise CapabilityError(report, "rocket_transform")
    L = X.n_timepoints
    for i, k in enumerate(kernels):
        if k.channel >= X.n_channels:
            raise SchemaMismatch(f"kernel {i} reads channel {k.channel}, data has {X.n_channels}")
        if k.span > L + 2 * k.padding:
            raise InvalidParameter(f"kernel {i} (span {k.span}) does not fit series of length {L}")
    data = np.ascontiguousarray(X.to_numpy())
    return _apply_kernels(data, *_pack(kernels))


class Rocket:
    """Fitted random-kernel transform: kernels are drawn at fit from the training shape."""

    def __init__(self, n_kernels=10_000, seed=0):
        self.n_kernels = n_kernels
        self.seed = seed

    def fit(self, X, y=None):
        X = as_collection(X)
        self.config_ = RocketConfig(self.n_kernels, self.seed)
        self.series_length_ = X.n_timepoints
        self.kernels_ = generate_kernels(self.config_, X.n_channels, self.series_length_)
        return self

    def transform(self, X) -> np.ndarray:
        return rocket_transform(X, self.kernels_)

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).transform(X)


class _RocketMixin:
    _tags = {
        "capability:multivariate": True,
        "capability:unequal_length": False,
    }

    def _fit(self, X, y):
        self.rocket_ = Rocket(self.n_kernels, self.seed).fit(X)
        features = self.rocket_.transform(X)
        self.ridge_ = ridge_fit(features, y, self.lambda_grid)

    def _predict(self, X):
        return ridge_predict(self.ridge_, self.rocket_.transform(X))


class RocketClassifier(_RocketMixin, BaseClassifier):
    """Random convolutional kernels plus a one-vs-rest ridge classifier.

    Parameters
    ----------
    n_kernels : int
        Number of random kernels; the transform has twice as many features.
    seed : int
        Seed for kernel generation.
    lambda_grid : sequence of float, optional
        Ridge penalties searched by leave-one-out error; defaults to 10
        log-spaced values from 1e-3 to 1e3.
    """

    def __init__(self, n_kernels=10_000, seed=0, lambda_grid=None):
        self.n_kernels = n_kernels
        self.seed = seed
        self.lambda_grid = lambda_grid


class RocketRegressor(_RocketMixin, BaseRegressor):
    """Random convolutional kernels plus a ridge regressor."""

    def __init__(self, n_kernels=10_000, seed=0, lambda_grid=None):
        self.n_kernels = n_kernels
        self.seed = seed
        self.lambda_grid = lambda_grid
