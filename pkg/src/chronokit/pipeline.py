"""Transformer steps chained in front of a terminal estimator.

A length-equalising step (padding, truncation) lets the whole pipeline
accept unequal-length input even when the terminal estimator cannot.
"""

from __future__ import annotations

from chronokit.core import BaseCollectionEstimator
from chronokit.exceptions import InvalidParameter

__all__ = ["Pipeline", "make_pipeline"]


class Pipeline(BaseCollectionEstimator):
    """``steps`` is a list of ``(name, step)`` pairs; ``terminal`` does the learning.

    Steps are fitted on the training data in order and then frozen; predict
    replays them before handing the result to the terminal.
    """

    def __init__(self, steps, terminal):
        self.steps = steps
        self.terminal = terminal

    def _get_tags(self):
        tags = dict(self.terminal._get_tags())
        if any(getattr(step, "equalizes_length", False) for _, step in self.steps):
            tags["capability:unequal_length"] = True
        return tags

    def _check_steps(self):
        names = [name for name, _ in self.steps]
        if len(set(names)) != len(names):
            raise InvalidParameter(f"step names must be unique, got {names}")
        for name, step in self.steps:
            if not (hasattr(step, "fit") and hasattr(step, "transform")):
                raise InvalidParameter(f"step {name!r} has no fit/transform")

    def _transform(self, X):
        for _, step in self.steps:
            X = step.transform(X)
        return X

    def fit(self, X, y=None):
        self._check_steps()
        X = self._fit_input(X)
        for _, step in self.steps:
            X = step.fit(X, y).transform(X)
        if y is None:
            self.terminal.fit(X)
        else:
            self.terminal.fit(X, y)
        self._commit_fit()
        return self

    def predict(self, X):
        X = self._predict_input(X)
        return self.terminal.predict(self._transform(X))

    def score(self, X, y):
        X = self._predict_input(X)
        return self.terminal.score(self._transform(X), y)

    @property
    def named_steps(self) -> dict:
        return dict(self.steps)


def make_pipeline(*steps, terminal) -> Pipeline:
    """Pipeline with step names taken from the lower-cased class names."""
    named = []
    for step in steps:
        name = type(step).__name__.lower()
        k = 2
        while name in dict(named):
            name = f"{type(step).__name__.lower()}{k}"
            k += 1
        named.append((name, step))
    return Pipeline(named, terminal)
