"""k-nearest-neighbour estimators over elastic distances."""

import numpy as np

from chronokit.data._types import LabelVector
from chronokit.distances import as_spec, distance
from chronokit.exceptions import InvalidParameter
from chronokit.supervised.base import BaseClassifier, BaseRegressor

__all__ = ["KNeighborsTimeSeriesClassifier", "KNeighborsTimeSeriesRegressor"]

_WEIGHTINGS = ("uniform", "distance")


class _KNeighborsMixin:
    def _get_tags(self):
        tags = super()._get_tags()
        # lockstep distances cannot compare cases of different lengths
        tags["capability:unequal_length"] = not self._spec().is_lockstep
        return tags

    def _spec(self):
        return as_spec(self.distance, **(self.distance_params or {}))

    def _fit(self, X, y):
        if int(self.k) != self.k or self.k < 1:
            raise InvalidParameter(f"k must be a positive integer, got {self.k}")
        if self.k > X.n_cases:
            raise InvalidParameter(f"k={self.k} exceeds the {X.n_cases} training cases")
        if self.weighting not in _WEIGHTINGS:
            raise InvalidParameter(f"weighting must be one of {_WEIGHTINGS}, got {self.weighting!r}")
        self.spec_ = self._spec()
        self.train_ = [np.ascontiguousarray(c) for c in X]
        self.labels_ = y

    def _neighbours(self, X):
        """Indices and distances of the k nearest training cases for every test case."""
        idx = np.empty((X.n_cases, self.k), dtype=np.intp)
        dist = np.empty((X.n_cases, self.k))
        for i, case in enumerate(X):
            case = np.ascontiguousarray(case)
            d = np.array([distance(case, t, self.spec_) for t in self.train_])
            order = np.argsort(d, kind="stable")[: self.k]  # equal distances: lower training index first
            idx[i] = order
            dist[i] = d[order]
        return idx, dist

    def _vote_weights(self, dist):
        if self.weighting == "distance":
            return 1.0 / (dist + 1e-8)
        return np.ones_like(dist)

    def kneighbors(self, X):
        X = self._predict_input(X)
        return self._neighbours(X)


class KNeighborsTimeSeriesClassifier(_KNeighborsMixin, BaseClassifier):
    """Majority vote among the ``k`` nearest training cases.

    Parameters
    ----------
    k : int
        Number of neighbours.
    distance : str or DistanceSpec
        Distance kind or full spec.
    distance_params : dict, optional
        Parameters merged into the spec, e.g. ``{"window": 0.1}``.
    weighting : {"uniform", "distance"}
        ``"distance"`` weights each vote by ``1 / (d + 1e-8)``.
    """

    _tags = {"capability:multivariate": True}

    def __init__(self, k=1, distance="dtw", distance_params=None, weighting="uniform"):
        self.k = k
        self.distance = distance
        self.distance_params = distance_params
        self.weighting = weighting

    def _predict(self, X):
        idx, dist = self._neighbours(X)
        w = self._vote_weights(dist)
        train_idx = self.labels_.indices
        alphabet = self.labels_.alphabet
        votes = np.zeros((X.n_cases, len(alphabet)))
        for i in range(X.n_cases):
            np.add.at(votes[i], train_idx[idx[i]], w[i])
        winners = np.argmax(votes, axis=1)  # vote ties: smallest class index
        return LabelVector.classes([alphabet[k] for k in winners], alphabet)


class KNeighborsTimeSeriesRegressor(_KNeighborsMixin, BaseRegressor):
    """Mean (or inverse-distance weighted mean) target of the ``k`` nearest cases."""

    _tags = {"capability:multivariate": True}

    def __init__(self, k=1, distance="dtw", distance_params=None, weighting="uniform"):
        self.k = k
        self.distance = distance
        self.distance_params = distance_params
        self.weighting = weighting

    def _predict(self, X):
        idx, dist = self._neighbours(X)
        w = self._vote_weights(dist)
        targets = self.labels_.targets[idx]
        return LabelVector.regression(np.sum(w * targets, axis=1) / np.sum(w, axis=1))
