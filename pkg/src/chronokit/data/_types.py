"""Value types for single series, collections of series and label vectors.

A collection is stored either densely, as one ``(n_cases, n_channels,
n_timepoints)`` float array, or raggedly, as a list of ``(n_channels,
n_timepoints_i)`` arrays. Both layouts expose the same case-level access.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from chronokit.exceptions import ChannelMismatch, EmptyCollection, InvalidParameter

__all__ = [
    "Series",
    "Collection",
    "Layout",
    "LabelKind",
    "LabelVector",
    "DatasetMetadata",
    "as_series_array",
    "as_collection",
    "as_labels",
]


def _frozen(a):
    a = np.array(a, dtype=np.float64, copy=True, order="C")
    a.setflags(write=False)
    return a


def as_series_array(x) -> np.ndarray:
    """Return ``x`` as a 2D ``(n_channels, n_timepoints)`` float array.

    1D input is treated as a univariate series; :class:`Series` is unwrapped.
    """
    if isinstance(x, Series):
        return x.values
    a = np.asarray(x, dtype=np.float64)
    if a.ndim == 1:
        a = a[np.newaxis, :]
    if a.ndim != 2:
        raise InvalidParameter(f"a series must be 1D or 2D, got {a.ndim}D")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidParameter(f"a series needs at least one channel and one point, got {a.shape}")
    return a


class Series:
    """A single, possibly multivariate, time series.

    ``values`` is a read-only ``(n_channels, n_timepoints)`` array.
    """

    __slots__ = ("values", "name")

    def __init__(self, values, name: Optional[str] = None):
        self.values = _frozen(as_series_array(values))
        self.name = name

    @property
    def n_channels(self) -> int:
        return self.values.shape[0]

    @property
    def n_timepoints(self) -> int:
        return self.values.shape[1]

    def __len__(self):
        return self.n_timepoints

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.name == other.name and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"Series(n_channels={self.n_channels}, n_timepoints={self.n_timepoints}, name={self.name!r})"


class Layout(str, enum.Enum):
    DENSE = "dense"
    RAGGED = "ragged"


class Collection:
    """An ordered set of cases sharing a channel count.

    Build one with :meth:`dense`, :meth:`ragged` or :meth:`from_cases`.
    Indexing and iteration yield each case as a read-only 2D array.
    """

    __slots__ = ("_layout", "_data", "_lengths")

    def __init__(self, data, layout: Layout):
        layout = Layout(layout)
        if layout is Layout.DENSE:
            arr = np.asarray(data, dtype=np.float64)
            if arr.ndim != 3:
                raise InvalidParameter(f"dense data must be 3D, got {arr.ndim}D")
            if arr.shape[0] == 0:
                raise EmptyCollection("a collection needs at least one case")
            if arr.shape[1] < 1 or arr.shape[2] < 1:
                raise InvalidParameter(f"cases need at least one channel and one point, got {arr.shape[1:]}")
            self._data = _frozen(arr)
            self._lengths = np.full(arr.shape[0], arr.shape[2], dtype=np.intp)
        else:
            cases = [_frozen(as_series_array(c)) for c in data]
            if not cases:
                raise EmptyCollection("a collection needs at least one case")
            n_channels = cases[0].shape[0]
            for i, c in enumerate(cases):
                if c.shape[0] != n_channels:
                    raise ChannelMismatch(
                        f"case {i} has {c.shape[0]} channels, case 0 has {n_channels}"
                    )
            self._data = cases
            self._lengths = np.array([c.shape[1] for c in cases], dtype=np.intp)
        self._lengths.setflags(write=False)
        self._layout = layout

    @classmethod
    def dense(cls, array) -> "Collection":
        """Wrap a ``(n_cases, n_channels, n_timepoints)`` array (2D means univariate)."""
        arr = np.asarray(array, dtype=np.float64)
        if arr.ndim == 2:
            arr = arr[:, np.newaxis, :]
        return cls(arr, Layout.DENSE)

    @classmethod
    def ragged(cls, cases) -> "Collection":
        return cls(list(cases), Layout.RAGGED)

    @classmethod
    def from_cases(cls, cases, layout=None) -> "Collection":
        """Build from a sequence of cases; Dense when all lengths agree unless told otherwise."""
        arrays = [as_series_array(c) for c in cases]
        if not arrays:
            raise EmptyCollection("a collection needs at least one case")
        if layout is None:
            same = len({a.shape for a in arrays}) == 1
            layout = Layout.DENSE if same else Layout.RAGGED
        layout = Layout(layout)
        if layout is Layout.DENSE:
            shapes = {a.shape for a in arrays}
            if len(shapes) != 1:
                raise InvalidParameter(f"dense layout needs equal case shapes, got {sorted(shapes)}")
            return cls(np.stack(arrays), Layout.DENSE)
        return cls(arrays, Layout.RAGGED)

    @property
    def layout(self) -> Layout:
        return self._layout

    @property
    def n_cases(self) -> int:
        return len(self._lengths)

    @property
    def n_channels(self) -> int:
        return self[0].shape[0]

    @property
    def lengths(self) -> np.ndarray:
        return self._lengths

    @property
    def is_equal_length(self) -> bool:
        return bool(self._lengths.min() == self._lengths.max())

    @property
    def n_timepoints(self) -> int:
        """Common length of all cases; raises for collections of unequal length."""
        if not self.is_equal_length:
            raise InvalidParameter("collection has unequal case lengths")
        return int(self._lengths[0])

    @property
    def cases(self) -> list:
        return [Series(c) for c in self]

    def to_numpy(self) -> np.ndarray:
        """The ``(n_cases, n_channels, n_timepoints)`` array of a Dense collection."""
        if self._layout is Layout.DENSE:
            return self._data
        raise InvalidParameter("a ragged collection has no 3D array form; pad or truncate it first")

    def subset(self, indices) -> "Collection":
        indices = list(indices)
        if self._layout is Layout.DENSE:
            return Collection(self._data[indices], Layout.DENSE)
        return Collection([self._data[i] for i in indices], Layout.RAGGED)

    def __len__(self):
        return self.n_cases

    def __getitem__(self, i) -> np.ndarray:
        return self._data[i]

    def __iter__(self) -> Iterator[np.ndarray]:
        for i in range(self.n_cases):
            yield self._data[i]

    def __eq__(self, other):
        if not isinstance(other, Collection):
            return NotImplemented
        if self._layout is not other._layout or self.n_cases != other.n_cases:
            return False
        return all(np.array_equal(a, b) for a, b in zip(self, other))

    def __repr__(self):
        if self.is_equal_length:
            shape = f"length={int(self._lengths[0])}"
        else:
            shape = f"lengths={int(self._lengths.min())}..{int(self._lengths.max())}"
        return (
            f"Collection({self._layout.value}, n_cases={self.n_cases}, "
            f"n_channels={self.n_channels}, {shape})"
        )


def as_collection(X) -> Collection:
    """Coerce a Collection, 3D/2D array or list of cases into a :class:`Collection`.

    Arrays become Dense. A list of per-case arrays becomes Ragged, even when
    the lengths happen to agree; use :meth:`Collection.from_cases` to detect.
    """
    if isinstance(X, Collection):
        return X
    if isinstance(X, Series):
        return Collection(X.values[np.newaxis], Layout.DENSE)
    if isinstance(X, np.ndarray):
        if X.ndim in (2, 3):
            return Collection.dense(X)
        raise InvalidParameter(f"cannot interpret a {X.ndim}D array as a collection")
    if isinstance(X, (list, tuple)):
        return Collection.ragged([as_series_array(c) for c in X])
    raise InvalidParameter(f"cannot interpret {type(X).__name__} as a collection")


class LabelKind(str, enum.Enum):
    CLASS = "class"
    TARGET = "target"
    NONE = "none"


@dataclass(frozen=True, eq=False)
class LabelVector:
    """Per-case labels: class tokens, real targets, or nothing.

    Class labels are kept as text; ``alphabet`` fixes the class order and
    ``indices`` maps each label onto its position in it.
    """

    kind: LabelKind
    class_labels: tuple = ()
    alphabet: tuple = ()
    targets: Optional[np.ndarray] = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", LabelKind(self.kind))
        if self.kind is LabelKind.CLASS:
            labels = tuple(str(v) for v in self.class_labels)
            alphabet = tuple(str(v) for v in self.alphabet) if self.alphabet else tuple(sorted(set(labels)))
            if len(set(alphabet)) != len(alphabet):
                raise InvalidParameter(f"duplicate entries in class alphabet {alphabet}")
            index = {lab: k for k, lab in enumerate(alphabet)}
            for lab in labels:
                if lab not in index:
                    raise InvalidParameter(f"label {lab!r} is not in alphabet {alphabet}")
            object.__setattr__(self, "class_labels", labels)
            object.__setattr__(self, "alphabet", alphabet)
            object.__setattr__(self, "_index", index)
        elif self.kind is LabelKind.TARGET:
            t = _frozen(np.asarray(self.targets, dtype=np.float64).reshape(-1))
            object.__setattr__(self, "targets", t)

    @classmethod
    def classes(cls, labels, alphabet=None) -> "LabelVector":
        return cls(LabelKind.CLASS, class_labels=tuple(labels), alphabet=tuple(alphabet or ()))

    @classmethod
    def regression(cls, targets) -> "LabelVector":
        return cls(LabelKind.TARGET, targets=targets)

    @classmethod
    def none(cls) -> "LabelVector":
        return cls(LabelKind.NONE)

    @property
    def indices(self) -> np.ndarray:
        if self.kind is not LabelKind.CLASS:
            raise InvalidParameter("only class labels have indices")
        return np.array([self._index[lab] for lab in self.class_labels], dtype=np.intp)

    @property
    def n_classes(self) -> int:
        return len(self.alphabet)

    def to_numpy(self) -> np.ndarray:
        if self.kind is LabelKind.CLASS:
            return np.array(self.class_labels, dtype=object)
        if self.kind is LabelKind.TARGET:
            return self.targets
        return np.empty(0)

    def subset(self, indices) -> "LabelVector":
        indices = list(indices)
        if self.kind is LabelKind.CLASS:
            return LabelVector.classes([self.class_labels[i] for i in indices], self.alphabet)
        if self.kind is LabelKind.TARGET:
            return LabelVector.regression(self.targets[indices])
        return self

    def __len__(self):
        if self.kind is LabelKind.CLASS:
            return len(self.class_labels)
        if self.kind is LabelKind.TARGET:
            return len(self.targets)
        return 0

    def __getitem__(self, i):
        return self.to_numpy()[i]

    def __iter__(self):
        return iter(self.to_numpy())

    def __eq__(self, other):
        if not isinstance(other, LabelVector):
            return NotImplemented
        if self.kind is not other.kind:
            return False
        if self.kind is LabelKind.CLASS:
            return self.class_labels == other.class_labels and self.alphabet == other.alphabet
        if self.kind is LabelKind.TARGET:
            return np.array_equal(self.targets, other.targets)
        return True


def as_labels(y, kind=None, alphabet=None) -> LabelVector:
    """Coerce array-like labels into a :class:`LabelVector`.

    Without ``kind``, float arrays become targets and everything else classes.
    """
    if isinstance(y, LabelVector):
        return y
    if y is None:
        return LabelVector.none()
    arr = np.asarray(y)
    if kind is None:
        kind = LabelKind.TARGET if arr.dtype.kind == "f" else LabelKind.CLASS
    kind = LabelKind(kind)
    if kind is LabelKind.TARGET:
        return LabelVector.regression(arr.astype(np.float64))
    if kind is LabelKind.CLASS:
        return LabelVector.classes([str(v) for v in arr.reshape(-1)], alphabet)
    return LabelVector.none()


@dataclass(frozen=True)
class DatasetMetadata:
    problem_name: str
    is_univariate: bool
    is_equal_length: bool
    series_length: Optional[int]
    label_kind: LabelKind
    class_alphabet: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "label_kind", LabelKind(self.label_kind))
        if self.class_alphabet is not None:
            object.__setattr__(self, "class_alphabet", tuple(self.class_alphabet))
        if (self.series_length is not None) != self.is_equal_length:
            raise InvalidParameter("series_length must be given exactly when is_equal_length")

    @classmethod
    def describe(cls, collection: Collection, labels: LabelVector, problem_name="unnamed") -> "DatasetMetadata":
        """Metadata consistent with an in-memory collection and its labels."""
        dense = collection.layout is Layout.DENSE
        return cls(
            problem_name=problem_name,
            is_univariate=collection.n_channels == 1,
            is_equal_length=dense,
            series_length=collection.n_timepoints if dense else None,
            label_kind=labels.kind,
            class_alphabet=labels.alphabet if labels.kind is LabelKind.CLASS else None,
        )

