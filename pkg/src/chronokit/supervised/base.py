"""Base classes for collection classifiers and extrinsic regressors."""

import numpy as np

from chronokit.core import BaseCollectionEstimator
from chronokit.data._types import LabelKind, LabelVector, as_labels
from chronokit.exceptions import InvalidParameter, KindMismatch


class BaseClassifier(BaseCollectionEstimator):
    """Fit on a collection and class labels; predict one label per case."""

    _label_kind = LabelKind.CLASS

    def _fit_labels(self, y, n_cases) -> LabelVector:
        y = as_labels(y, kind=self._label_kind)
        if y.kind is not self._label_kind:
            raise KindMismatch(f"{type(self).__name__} needs {self._label_kind.value} labels, got {y.kind.value}")
        if len(y) != n_cases:
            raise InvalidParameter(f"{len(y)} labels for {n_cases} cases")
        return y

    def fit(self, X, y):
        X = self._fit_input(X)
        y = self._fit_labels(y, X.n_cases)
        self._fit(X, y)
        self._commit_fit()
        return self

    def predict(self, X) -> LabelVector:
        X = self._predict_input(X)
        return self._predict(X)

    def score(self, X, y) -> float:
        from chronokit.supervised.metrics import accuracy

        return accuracy(self.predict(X), as_labels(y, kind=LabelKind.CLASS))

    def _fit(self, X, y):
        raise NotImplementedError

    def _predict(self, X):
        raise NotImplementedError


class BaseRegressor(BaseClassifier):
    """Fit on a collection and real targets; predict one real per case."""

    _label_kind = LabelKind.TARGET

    def score(self, X, y) -> float:
        """Coefficient of determination R^2."""
        truth = as_labels(y, kind=LabelKind.TARGET).targets
        pred = self.predict(X).targets
        ss_res = float(np.sum((truth - pred) ** 2))
        ss_tot = float(np.sum((truth - truth.mean()) ** 2))
        return 1.0 - ss_res / ss_tot if ss_tot > 0 else float(ss_res == 0)
