"""k-means and k-medoids clustering with elastic distances.

k-means centres are either pointwise means (equal-length data) or DTW
barycentres refined by DBA; k-medoids centres are actual cases chosen from a
precomputed pairwise distance matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from chronokit.core import BaseCollectionEstimator
from chronokit.data._types import Collection, LabelVector, as_collection, as_series_array
from chronokit.distances import DistanceKind, alignment_path, as_spec, distance, pairwise
from chronokit.exceptions import CapabilityError, InvalidParameter, InvalidSpec

__all__ = [
    "Averaging",
    "KMeansConfig",
    "ClusterResult",
    "assign",
    "dba",
    "kmeans_fit",
    "kmedoids_fit",
    "TimeSeriesKMeans",
    "TimeSeriesKMedoids",
]

_DBA_KINDS = (DistanceKind.DTW, DistanceKind.WDTW)


class Averaging(str, enum.Enum):
    ARITHMETIC = "mean"
    DBA = "dba"


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    spec: object = "dtw"
    averaging: Averaging = Averaging.DBA
    max_iter: int = 50
    tol: float = 1e-6
    dba_iter: int = 10
    init: str = "random"
    seed: int = 0
    init_centers: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "spec", as_spec(self.spec))
        object.__setattr__(self, "averaging", Averaging(self.averaging))
        if int(self.k) != self.k or self.k < 1:
            raise InvalidParameter(f"k must be a positive integer, got {self.k}")
        if self.max_iter < 1 or self.dba_iter < 1:
            raise InvalidParameter("max_iter and dba_iter must be positive")
        if self.tol < 0:
            raise InvalidParameter(f"tol must be >= 0, got {self.tol}")
        if self.init not in ("random", "provided"):
            raise InvalidParameter(f"init must be 'random' or 'provided', got {self.init!r}")
        if self.init == "provided" and self.init_centers is None:
            raise InvalidParameter("init='provided' needs init_centers")
        if self.averaging is Averaging.DBA and self.spec.kind not in _DBA_KINDS:
            raise InvalidSpec(f"DBA needs a dtw or wdtw distance, got {self.spec.kind.value}")


@dataclass
class ClusterResult:
    labels: np.ndarray
    centers: list
    inertia: float
    n_iter: int
    converged: bool
    history: list = field(default_factory=list)
    medoid_indices: Optional[np.ndarray] = None

    def __eq__(self, other):
        if not isinstance(other, ClusterResult):
            return NotImplemented
        return (
            np.array_equal(self.labels, other.labels)
            and len(self.centers) == len(other.centers)
            and all(np.array_equal(a, b) for a, b in zip(self.centers, other.centers))
            and self.inertia == other.inertia
            and self.n_iter == other.n_iter
            and self.converged == other.converged
            and self.history == other.history
        )


def _distances_to_centers(X, centers, spec):
    return np.array([[distance(case, c, spec) for c in centers] for case in X])


def assign(collection, centers, spec=None):
    """Nearest-centre labels and the inertia (sum of distances to assigned centres).

    Ties go to the lowest centre index.
    """
    X = as_collection(collection)
    spec = as_spec(spec)
    centers = [as_series_array(c) for c in centers]
    if not centers:
        raise InvalidParameter("assign needs at least one centre")
    D = _distances_to_centers(X, centers, spec)
    labels = np.argmin(D, axis=1)
    inertia = float(np.sum(D[np.arange(X.n_cases), labels]))
    return labels, inertia


def _dba_update(members, center, spec):
    """One DBA step: average member points aligned to each centre index.

    For WDTW the average is weighted by the same |i - j| weights as the cost,
    so the step minimises the weighted objective for fixed alignments.
    """
    sums = np.zeros_like(center)
    weights = np.zeros(center.shape[1])
    total = 0.0
    for m in members:
        path, d = alignment_path(m, center, spec)
        total += d
        if spec.kind is DistanceKind.WDTW:
            longest = max(m.shape[1], center.shape[1])
            for i, j in path:
                w = 1.0 / (1.0 + np.exp(-spec.g * (abs(i - j) - longest / 2.0)))
                sums[:, j] += w * m[:, i]
                weights[j] += w
        else:
            for i, j in path:
                sums[:, j] += m[:, i]
                weights[j] += 1.0
    return sums / weights, total


def _objective(members, center, spec):
    return sum(distance(m, center, spec) for m in members)


def dba(members, init_center, spec=None, iterations=10, return_objectives=False):
    """DTW barycentre averaging of ``members`` starting from ``init_center``.

    Stops after ``iterations`` updates or once the summed distance to the
    members improves by less than 1e-9. The centre keeps the initial length.
    With ``return_objectives`` also returns the summed distance before the
    first update and after each one.
    """
    spec = as_spec(spec)
    if spec.kind not in _DBA_KINDS:
        raise InvalidSpec(f"DBA needs a dtw or wdtw distance, got {spec.kind.value}")
    members = [np.ascontiguousarray(as_series_array(m)) for m in as_collection(members)]
    center = np.array(as_series_array(init_center), dtype=np.float64)
    if members[0].shape[0] != center.shape[0]:
        raise InvalidParameter("centre and members differ in channel count")
    objectives = []
    current = None
    for _ in range(iterations):
        new_center, before = _dba_update(members, center, spec)
        if current is None:
            objectives.append(before)
            current = before
        after = _objective(members, new_center, spec)
        objectives.append(after)
        center = new_center
        improvement = current - after
        current = after
        if improvement < 1e-9:
            break
    if return_objectives:
        return center, objectives
    return center


def _farthest(D_assigned, taken):
    order = np.argsort(-D_assigned, kind="stable")  # ties: lowest case index
    for i in order:
        if i not in taken:
            return int(i)
    return int(order[0])  # pragma: no cover - more empty clusters than cases


def _kmeans_update(cases, labels, centers, D, config):
    new_centers = []
    taken = set()
    assigned = D[np.arange(len(cases)), labels]
    for c in range(config.k):
        members = [cases[i] for i in np.flatnonzero(labels == c)]
        if not members:
            # empty cluster: restart from the case worst served by its current centre
            i = _farthest(assigned, taken)
            taken.add(i)
            new_centers.append(np.array(cases[i]))
        elif config.averaging is Averaging.ARITHMETIC:
            new_centers.append(np.mean(np.stack(members), axis=0))
        else:
            new_centers.append(dba(members, centers[c], config.spec, config.dba_iter))
    return new_centers


def kmeans_fit(collection, config: KMeansConfig) -> ClusterResult:
    """Lloyd-style k-means: assign, recompute centres, repeat.

    Stops when the inertia improves by less than ``tol``, the centres stop
    changing, or ``max_iter`` updates have run.
    """
    X = as_collection(collection)
    if config.k > X.n_cases:
        raise InvalidParameter(f"k={config.k} exceeds the {X.n_cases} cases")
    if config.averaging is Averaging.ARITHMETIC and not X.is_equal_length:
        from chronokit.core import ValidationReport, Violation

        report = ValidationReport((Violation("unequal_length", "arithmetic averaging needs equal-length cases"),))
        raise CapabilityError(report, "kmeans")
    cases = [np.ascontiguousarray(c) for c in X]
    spec = config.spec

    if config.init == "provided":
        centers = [np.array(as_series_array(c)) for c in config.init_centers]
        if len(centers) != config.k:
            raise InvalidParameter(f"{len(centers)} initial centres for k={config.k}")
    else:
        rng = np.random.default_rng(config.seed)
        idx = rng.choice(X.n_cases, size=config.k, replace=False)
        centers = [np.array(cases[i]) for i in idx]

    D = _distances_to_centers(X, centers, spec)
    labels = np.argmin(D, axis=1)
    inertia = float(np.sum(D[np.arange(X.n_cases), labels]))
    history = [inertia]
    converged = False
    n_iter = 0
    for _ in range(config.max_iter):
        new_centers = _kmeans_update(cases, labels, centers, D, config)
        n_iter += 1
        unchanged = all(np.array_equal(a, b) for a, b in zip(centers, new_centers))
        centers = new_centers
        D = _distances_to_centers(X, centers, spec)
        labels = np.argmin(D, axis=1)
        new_inertia = float(np.sum(D[np.arange(X.n_cases), labels]))
        improvement = inertia - new_inertia
        inertia = new_inertia
        history.append(inertia)
        if unchanged or improvement < config.tol:
            converged = True
            break
    return ClusterResult(labels, centers, inertia, n_iter, converged, history)


def _medoid_assign(D, medoids):
    sub = D[:, medoids]
    labels = np.argmin(sub, axis=1)
    return labels, float(np.sum(sub[np.arange(D.shape[0]), labels]))


def kmedoids_fit(collection, k, spec=None, max_iter=50, seed=0, D=None) -> ClusterResult:
    """Alternating k-medoids on the pairwise distance matrix.

    Each medoid moves to the member with the smallest summed distance to its
    cluster (ties to the lowest case index) until labels stop changing.
    """
    X = as_collection(collection)
    spec = as_spec(spec)
    if int(k) != k or not 1 <= k <= X.n_cases:
        raise InvalidParameter(f"k must be an integer in [1, {X.n_cases}], got {k}")
    if D is None:
        D = pairwise(X, spec)
    rng = np.random.default_rng(seed)
    medoids = [int(i) for i in rng.choice(X.n_cases, size=k, replace=False)]
    labels, inertia = _medoid_assign(D, medoids)
    history = [inertia]
    converged = False
    n_iter = 0
    for _ in range(max_iter):
        n_iter += 1
        new_medoids = [None] * k
        for c in range(k):
            members = np.flatnonzero(labels == c)
            if members.size:
                within = D[np.ix_(members, members)].sum(axis=1)
                new_medoids[c] = int(members[np.argmin(within)])
        reseeded = False
        for c in range(k):
            if new_medoids[c] is None:
                # empty cluster: the case farthest from its nearest updated medoid
                chosen = [m for m in new_medoids if m is not None]
                nearest = D[:, chosen].min(axis=1) if chosen else np.zeros(X.n_cases)
                new_medoids[c] = _farthest(nearest, set(chosen))
                reseeded = True
        medoids = new_medoids
        new_labels, inertia = _medoid_assign(D, medoids)
        history.append(inertia)
        stable = not reseeded and np.array_equal(new_labels, labels)
        labels = new_labels
        if stable:
            converged = True
            break
    centers = [np.array(X[i]) for i in medoids]
    return ClusterResult(labels, centers, inertia, n_iter, converged, history, np.array(medoids))


class _BaseClusterer(BaseCollectionEstimator):
    _tags = {"capability:multivariate": True}

    def _set_result(self, result):
        self.result_ = result
        self.labels_ = result.labels
        self.cluster_centers_ = result.centers
        self.inertia_ = result.inertia
        self.n_iter_ = result.n_iter

    def fit(self, X, y=None):
        X = self._fit_input(X)
        self._set_result(self._fit(X))
        self._commit_fit()
        return self

    def predict(self, X):
        X = self._predict_input(X)
        labels, _ = assign(X, self.cluster_centers_, self._spec())
        return labels

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_


class TimeSeriesKMeans(_BaseClusterer):
    """k-means with an elastic distance and mean or DBA centres."""

    def __init__(self, k=8, distance="dtw", distance_params=None, averaging="dba",
                 max_iter=50, tol=1e-6, dba_iter=10, seed=0):
        self.k = k
        self.distance = distance
        self.distance_params = distance_params
        self.averaging = averaging
        self.max_iter = max_iter
        self.tol = tol
        self.dba_iter = dba_iter
        self.seed = seed

    def _spec(self):
        return as_spec(self.distance, **(self.distance_params or {}))

    def _get_tags(self):
        tags = super()._get_tags()
        tags["capability:unequal_length"] = Averaging(self.averaging) is Averaging.DBA
        return tags

    def _config(self):
        return KMeansConfig(self.k, self._spec(), self.averaging, self.max_iter, self.tol, self.dba_iter, "random", self.seed)

    def _fit(self, X):
        return kmeans_fit(X, self._config())


class TimeSeriesKMedoids(_BaseClusterer):
    """k-medoids over a precomputed elastic distance matrix."""

    _tags = {"capability:unequal_length": True}

    def __init__(self, k=8, distance="dtw", distance_params=None, max_iter=50, seed=0):
        self.k = k
        self.distance = distance
        self.distance_params = distance_params
        self.max_iter = max_iter
        self.seed = seed

    def _spec(self):
        return as_spec(self.distance, **(self.distance_params or {}))

    def _get_tags(self):
        tags = super()._get_tags()
        tags["capability:unequal_length"] = not self._spec().is_lockstep
        return tags

    def _fit(self, X):
        return kmedoids_fit(X, self.k, self._spec(), self.max_iter, self.seed)
