"""Classifiers and extrinsic regressors: elastic k-NN and random convolutional kernels."""

from chronokit.supervised.base import BaseClassifier, BaseRegressor
from chronokit.supervised.knn import KNeighborsTimeSeriesClassifier, KNeighborsTimeSeriesRegressor
from chronokit.supervised.metrics import accuracy, mae, rmse
from chronokit.supervised.ridge import DEFAULT_LAMBDAS, RidgeModel, ridge_fit, ridge_predict, ridge_scores
from chronokit.supervised.rocket import (
    ConvKernel,
    Rocket,
    RocketClassifier,
    RocketConfig,
    RocketRegressor,
    generate_kernels,
    rocket_transform,
)

__all__ = [
    "BaseClassifier",
    "BaseRegressor",
    "KNeighborsTimeSeriesClassifier",
    "KNeighborsTimeSeriesRegressor",
    "accuracy",
    "mae",
    "rmse",
    "DEFAULT_LAMBDAS",
    "RidgeModel",
    "ridge_fit",
    "ridge_predict",
    "ridge_scores",
    "ConvKernel",
    "Rocket",
    "RocketClassifier",
    "RocketConfig",
    "RocketRegressor",
    "generate_kernels",
    "rocket_transform",
]
