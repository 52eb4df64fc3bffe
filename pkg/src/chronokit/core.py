"""Estimator lifecycle, capability tags and input verification.

Every collection estimator declares a small set of capability tags::

    _tags = {
        "capability:multivariate": True,
        "capability:unequal_length": True,
    }

Before fitting, the input collection is summarised and checked against
those tags; after fitting, the recorded summary is used to reject predict
inputs with a different schema.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator

from chronokit.data._types import Collection, as_collection
from chronokit.exceptions import (
    CapabilityError,
    EmptyCollection,
    NotFittedError,
    SchemaMismatch,
)

__all__ = [
    "TagSet",
    "CollectionMeta",
    "Violation",
    "ValidationReport",
    "Phase",
    "EstimatorState",
    "summarize",
    "check_capabilities",
    "fit_guard",
    "predict_guard",
    "BaseCollectionEstimator",
]

_TAG_KEYS = {
    "capability:multivariate": "multivariate",
    "capability:unequal_length": "unequal_length",
    "capability:missing_values": "missing_values",
}


@dataclass(frozen=True)
class TagSet:
    multivariate: bool = False
    unequal_length: bool = False
    missing_values: bool = False

    @classmethod
    def from_dict(cls, tags: dict) -> "TagSet":
        return cls(**{_TAG_KEYS[k]: bool(v) for k, v in tags.items() if k in _TAG_KEYS})

    def to_dict(self) -> dict:
        return {k: getattr(self, attr) for k, attr in _TAG_KEYS.items()}


@dataclass(frozen=True)
class CollectionMeta:
    n_cases: int
    n_channels: int
    length_min: int
    length_max: int
    is_equal_length: bool
    has_missing: bool


@dataclass(frozen=True)
class Violation:
    tag: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class Phase(enum.Enum):
    UNFITTED = "unfitted"
    FITTED = "fitted"


@dataclass
class EstimatorState:
    phase: Phase = Phase.UNFITTED
    fitted_metadata: Optional[CollectionMeta] = None
    extra: dict = field(default_factory=dict)


def summarize(collection) -> CollectionMeta:
    """Counts, length range and missing-value flag of a collection."""
    c = as_collection(collection)
    if c.n_cases == 0:  # pragma: no cover - Collection refuses to be empty
        raise EmptyCollection("collection has no cases")
    lengths = c.lengths
    has_missing = any(np.isnan(case).any() for case in c)
    lo, hi = int(lengths.min()), int(lengths.max())
    return CollectionMeta(
        n_cases=c.n_cases,
        n_channels=c.n_channels,
        length_min=lo,
        length_max=hi,
        is_equal_length=lo == hi,
        has_missing=bool(has_missing),
    )


def check_capabilities(tags: TagSet, meta: CollectionMeta) -> ValidationReport:
    violations = []
    if meta.n_channels > 1 and not tags.multivariate:
        violations.append(
            Violation("multivariate", f"data has {meta.n_channels} channels, estimator is univariate only")
        )
    if not meta.is_equal_length and not tags.unequal_length:
        violations.append(
            Violation(
                "unequal_length",
                f"case lengths range {meta.length_min}..{meta.length_max}, estimator needs equal length",
            )
        )
    if meta.has_missing and not tags.missing_values:
        violations.append(Violation("missing_values", "data contains NaN, estimator cannot handle missing values"))
    return ValidationReport(tuple(violations))


def fit_guard(state: EstimatorState, tags: TagSet, collection, estimator=None) -> CollectionMeta:
    """Validate ``collection`` for fitting and move ``state`` to Fitted.

    On failure the state is left untouched.
    """
    meta = summarize(collection)
    report = check_capabilities(tags, meta)
    if not report.ok:
        raise CapabilityError(report, estimator)
    state.fitted_metadata = meta
    state.phase = Phase.FITTED
    return meta


def predict_guard(state: EstimatorState, meta_new: CollectionMeta, fixed_length: bool = False) -> None:
    if state.phase is not Phase.FITTED:
        raise NotFittedError("estimator is not fitted; call fit first")
    fitted = state.fitted_metadata
    if meta_new.n_channels != fitted.n_channels:
        raise SchemaMismatch(
            f"fitted on {fitted.n_channels} channels, got {meta_new.n_channels}",
            fitted=fitted,
            new=meta_new,
        )
    if fixed_length:
        if not meta_new.is_equal_length or meta_new.length_min != fitted.length_min:
            raise SchemaMismatch(
                f"fitted on length {fitted.length_min}, got lengths "
                f"{meta_new.length_min}..{meta_new.length_max}",
                fitted=fitted,
                new=meta_new,
            )


class BaseCollectionEstimator(BaseEstimator):
    """Shared fit/predict plumbing for estimators over collections.

    Subclasses set ``_tags`` (or override :meth:`_get_tags` when tags depend on
    constructor parameters) and implement ``_fit``/``_predict`` on validated
    :class:`Collection` input.
    """

    _tags = {
        "capability:multivariate": False,
        "capability:unequal_length": False,
        "capability:missing_values": False,
    }

    def _get_tags(self) -> dict:
        tags = {}
        for klass in reversed(type(self).__mro__):
            tags.update(getattr(klass, "_tags", {}))
        return tags

    @property
    def tags(self) -> TagSet:
        return TagSet.from_dict(self._get_tags())

    def get_tag(self, name):
        return self._get_tags()[name]

    @property
    def state(self) -> EstimatorState:
        if "_state" not in self.__dict__:
            self.__dict__["_state"] = EstimatorState()
        return self.__dict__["_state"]

    @property
    def is_fitted(self) -> bool:
        return self.state.phase is Phase.FITTED

    @property
    def fitted_metadata(self) -> Optional[CollectionMeta]:
        return self.state.fitted_metadata

    def _fixed_length(self) -> bool:
        # equal-length estimators here all bake the training length into the model
        return not self.tags.unequal_length

    def _fit_input(self, X) -> Collection:
        X = as_collection(X)
        # validate on a scratch state so a failed fit leaves the estimator as it was
        scratch = EstimatorState()
        fit_guard(scratch, self.tags, X, type(self).__name__)
        self.__dict__["_pending_state"] = scratch
        return X

    def _commit_fit(self):
        self.__dict__["_state"] = self.__dict__.pop("_pending_state")

    def _predict_input(self, X) -> Collection:
        X = as_collection(X)
        meta = summarize(X)
        predict_guard(self.state, meta, fixed_length=self._fixed_length())
        report = check_capabilities(self.tags, meta)
        if not report.ok:
            raise CapabilityError(report, type(self).__name__)
        return X
