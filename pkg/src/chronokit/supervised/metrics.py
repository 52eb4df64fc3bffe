import numpy as np

from chronokit.data._types import LabelKind, as_labels
from chronokit.exceptions import KindMismatch, LengthMismatch

__all__ = ["accuracy", "mae", "rmse"]


def _pair(predicted, truth, kind):
    p = as_labels(predicted, kind=kind)
    t = as_labels(truth, kind=kind)
    if p.kind is not t.kind:
        raise KindMismatch(f"cannot compare {p.kind.value} with {t.kind.value} labels")
    if p.kind is not kind:
        raise KindMismatch(f"expected {kind.value} labels, got {p.kind.value}")
    if len(p) != len(t):
        raise LengthMismatch(f"{len(p)} predictions for {len(t)} true labels")
    if len(p) == 0:
        raise LengthMismatch("no labels to compare")
    return p, t


def accuracy(predicted, truth) -> float:
    p, t = _pair(predicted, truth, LabelKind.CLASS)
    return float(np.mean([a == b for a, b in zip(p.class_labels, t.class_labels)]))


def mae(predicted, truth) -> float:
    p, t = _pair(predicted, truth, LabelKind.TARGET)
    return float(np.mean(np.abs(p.targets - t.targets)))


def rmse(predicted, truth) -> float:
    p, t = _pair(predicted, truth, LabelKind.TARGET)
    return float(np.sqrt(np.mean((p.targets - t.targets) ** 2)))
