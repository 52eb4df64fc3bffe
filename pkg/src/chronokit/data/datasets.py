"""Loading named classification problems stored as ``.ts`` files."""

import os
from pathlib import Path

from chronokit.data._types import Collection, LabelVector, Layout
from chronokit.data.tsfile import load_ts
from chronokit.exceptions import InvalidParameter

__all__ = ["load_classification", "list_datasets"]

_BUNDLED = Path(__file__).with_name("_bundled")


def list_datasets():
    """Names of the datasets shipped with the package."""
    return sorted({p.name.rsplit("_", 1)[0] for p in _BUNDLED.glob("*_TRAIN.ts")})


def load_classification(name, split=None, extract_path=None):
    """Load ``name`` as ``(X, y, metadata)``.

    Files are looked up as ``<extract_path>/<name>/<name>_<SPLIT>.ts`` (or
    directly in ``extract_path``), falling back to the bundled datasets.
    ``split`` is ``"train"``, ``"test"`` or None; None concatenates both.
    """
    if split is None:
        X_tr, y_tr, meta = load_classification(name, "train", extract_path)
        X_te, y_te, _ = load_classification(name, "test", extract_path)
        both_dense = X_tr.layout is Layout.DENSE and X_te.layout is Layout.DENSE
        X = Collection.from_cases(list(X_tr) + list(X_te), None if both_dense else Layout.RAGGED)
        y = LabelVector.classes(y_tr.class_labels + y_te.class_labels, y_tr.alphabet)
        return X, y, meta
    split = split.upper()
    if split not in ("TRAIN", "TEST"):
        raise InvalidParameter(f"split must be 'train', 'test' or None, got {split!r}")
    fname = f"{name}_{split}.ts"
    candidates = []
    if extract_path is not None:
        candidates += [Path(extract_path) / name / fname, Path(extract_path) / fname]
    candidates.append(_BUNDLED / fname)
    for path in candidates:
        if os.path.exists(path):
            return load_ts(path)
    raise FileNotFoundError(f"dataset {name!r} ({split}) not found in {[str(c) for c in candidates]}")
