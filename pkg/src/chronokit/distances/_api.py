from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from chronokit.data._types import as_collection, as_series_array
from chronokit.distances import _kernels
from chronokit.exceptions import (
    ChannelMismatch,
    InfeasibleBand,
    InvalidParameter,
    LengthMismatch,
    SeriesTooShort,
    UnsupportedKind,
)

__all__ = [
    "DistanceKind",
    "DistanceSpec",
    "CostMatrix",
    "AlignmentPath",
    "distance",
    "cost_matrix",
    "alignment_path",
    "pairwise",
    "derivative",
]


class DistanceKind(str, enum.Enum):
    EUCLIDEAN = "euclidean"
    SQUARED = "squared"
    DTW = "dtw"
    DDTW = "ddtw"
    WDTW = "wdtw"
    WDDTW = "wddtw"
    ERP = "erp"
    EDR = "edr"
    LCSS = "lcss"
    MSM = "msm"
    TWE = "twe"


_LOCKSTEP = {DistanceKind.EUCLIDEAN, DistanceKind.SQUARED}
_WARPING = {DistanceKind.DTW, DistanceKind.DDTW, DistanceKind.WDTW, DistanceKind.WDDTW}
_DERIVATIVE = {DistanceKind.DDTW, DistanceKind.WDDTW}


@dataclass(frozen=True)
class DistanceSpec:
    """A distance kind plus its parameters.

    Only the parameters used by ``kind`` are read:

    ``window``
        Sakoe-Chiba band as a fraction of the longer length; None for no band.
    ``g``
        WDTW/WDDTW weight steepness.
    ``erp_g``
        ERP gap reference value.
    ``epsilon``
        EDR/LCSS matching threshold.
    ``c``
        MSM split/merge cost.
    ``nu``, ``lmbda``
        TWE stiffness and edit penalty.
    """

    kind: DistanceKind = DistanceKind.DTW
    window: Optional[float] = None
    g: float = 0.05
    erp_g: float = 0.0
    epsilon: float = 1.0
    c: float = 1.0
    nu: float = 0.001
    lmbda: float = 1.0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", DistanceKind(str(getattr(self.kind, "value", self.kind)).lower()))
        except ValueError:
            names = ", ".join(k.value for k in DistanceKind)
            raise InvalidParameter(f"unknown distance {self.kind!r}; choose from {names}") from None
        if self.window is not None and not 0.0 <= self.window <= 1.0:
            raise InvalidParameter(f"window must lie in [0, 1] or be None, got {self.window}")
        checks = [
            ("g", self.g >= 0),
            ("epsilon", self.epsilon >= 0),
            ("c", self.c > 0),
            ("nu", self.nu >= 0),
            ("lmbda", self.lmbda >= 0),
            ("erp_g", np.isfinite(self.erp_g)),
        ]
        for name, ok in checks:
            if not ok:
                raise InvalidParameter(f"invalid {name}={getattr(self, name)} for a distance spec")

    @property
    def is_lockstep(self) -> bool:
        return self.kind in _LOCKSTEP

    @property
    def is_warping(self) -> bool:
        """True for the DTW family, which has alignment-path semantics."""
        return self.kind in _WARPING


def as_spec(spec=None, **params) -> DistanceSpec:
    if isinstance(spec, DistanceSpec):
        if params:
            return DistanceSpec(**{**spec.__dict__, **params})
        return spec
    return DistanceSpec(kind=spec if spec is not None else DistanceKind.DTW, **params)


@dataclass(frozen=True)
class CostMatrix:
    """Accumulated costs with a padded boundary row and column.

    ``entries[i][j]`` is the cost of aligning the first ``i`` points of ``x``
    with the first ``j`` of ``y``; ``entries[n][m]`` is the distance. For the
    derivative kinds, ``n`` and ``m`` are the derivative lengths.
    """

    entries: np.ndarray
    n: int
    m: int

    @property
    def distance(self) -> float:
        return float(self.entries[self.n, self.m])


@dataclass(frozen=True)
class AlignmentPath:
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def derivative(x) -> np.ndarray:
    """Derivative transform used by DDTW/WDDTW; output is 2 points shorter.

    ``d[t] = ((x[t] - x[t-1]) + (x[t+1] - x[t-1]) / 2) / 2`` for ``t`` in ``1..n-2``.
    """
    x = as_series_array(x)
    if x.shape[1] < 3:
        raise SeriesTooShort(f"derivative distances need at least 3 points, got {x.shape[1]}")
    return ((x[:, 1:-1] - x[:, :-2]) + (x[:, 2:] - x[:, :-2]) / 2.0) / 2.0


def _wdtw_weights(g, length):
    k = np.arange(length, dtype=np.float64)
    return 1.0 / (1.0 + np.exp(-g * (k - length / 2.0)))


def _band_bound(window, n, m):
    if window is None:
        return np.inf
    longest = max(n, m)
    if window * longest + 1e-9 < abs(n - m):
        raise InfeasibleBand(
            f"window {window} cannot align lengths {n} and {m}; need at least {abs(n - m) / longest:.6g}"
        )
    return window * longest * n + 1e-9 * n


def _prepare(x, y, spec):
    x = np.ascontiguousarray(as_series_array(x))
    y = np.ascontiguousarray(as_series_array(y))
    if x.shape[0] != y.shape[0]:
        raise ChannelMismatch(f"series have {x.shape[0]} and {y.shape[0]} channels")
    if spec.kind in _DERIVATIVE:
        x = np.ascontiguousarray(derivative(x))
        y = np.ascontiguousarray(derivative(y))
    return x, y


def _matrix(x, y, spec):
    n, m = x.shape[1], y.shape[1]
    bound = _band_bound(spec.window, n, m)
    kind = spec.kind
    if kind in (DistanceKind.DTW, DistanceKind.DDTW):
        return _kernels.dtw_matrix(x, y, bound, np.ones(max(n, m)))
    if kind in (DistanceKind.WDTW, DistanceKind.WDDTW):
        return _kernels.dtw_matrix(x, y, bound, _wdtw_weights(spec.g, max(n, m)))
    if kind is DistanceKind.ERP:
        return _kernels.erp_matrix(x, y, bound, float(spec.erp_g))
    if kind is DistanceKind.EDR:
        return _kernels.edr_matrix(x, y, bound, float(spec.epsilon)) / max(n, m)
    if kind is DistanceKind.LCSS:
        L = _kernels.lcss_table(x, y, bound, float(spec.epsilon))
        i = np.arange(n + 1)[:, np.newaxis]
        j = np.arange(m + 1)[np.newaxis, :]
        # fraction of the shorter prefix left unmatched; -inf (outside band) maps to +inf
        return (np.minimum(i, j) - L) / min(n, m)
    if kind is DistanceKind.MSM:
        return _kernels.msm_matrix(x, y, bound, float(spec.c))
    if kind is DistanceKind.TWE:
        return _kernels.twe_matrix(x, y, bound, float(spec.nu), float(spec.lmbda))
    raise UnsupportedKind(f"{kind.value} has no cost matrix")  # pragma: no cover


def _lockstep(x, y, spec):
    if x.shape[1] != y.shape[1]:
        raise LengthMismatch(f"{spec.kind.value} needs equal lengths, got {x.shape[1]} and {y.shape[1]}")
    s = _kernels.squared_lockstep(x, y)
    return float(np.sqrt(s)) if spec.kind is DistanceKind.EUCLIDEAN else float(s)


def _finite_or_raise(value, x, y, spec):
    if not np.isfinite(value):
        raise InfeasibleBand(
            f"no admissible alignment of lengths {x.shape[1]} and {y.shape[1]} with window {spec.window}"
        )
    return value


def distance(x, y, spec=None, **params) -> float:
    """Distance between two series.

    ``spec`` is a :class:`DistanceSpec` or a kind name; keyword arguments set
    or override spec parameters, e.g. ``distance(x, y, "dtw", window=0.1)``.
    """
    spec = as_spec(spec, **params)
    x, y = _prepare(x, y, spec)
    if spec.is_lockstep:
        return _lockstep(x, y, spec)
    D = _matrix(x, y, spec)
    return float(_finite_or_raise(D[-1, -1], x, y, spec))


def cost_matrix(x, y, spec=None, **params) -> CostMatrix:
    spec = as_spec(spec, **params)
    if spec.is_lockstep:
        raise UnsupportedKind(f"{spec.kind.value} is a lockstep distance without a cost matrix")
    x, y = _prepare(x, y, spec)
    D = _matrix(x, y, spec)
    _finite_or_raise(D[-1, -1], x, y, spec)
    D.setflags(write=False)
    return CostMatrix(D, x.shape[1], y.shape[1])


def _traceback(D):
    i, j = D.shape[0] - 1, D.shape[1] - 1
    pairs = [(i - 1, j - 1)]
    while (i, j) != (1, 1):
        # preference order on ties: diagonal, then the i-advancing step
        options = ((D[i - 1, j - 1], i - 1, j - 1), (D[i - 1, j], i - 1, j), (D[i, j - 1], i, j - 1))
        best = options[0]
        for opt in options[1:]:
            if opt[0] < best[0]:
                best = opt
        _, i, j = best
        pairs.append((i - 1, j - 1))
    pairs.reverse()
    return AlignmentPath(tuple(pairs))


def alignment_path(x, y, spec=None, **params):
    """Optimal warping path and its distance for the DTW family.

    Indices refer to the series the kernel ran on (the derivative series for
    DDTW/WDDTW).
    """
    spec = as_spec(spec, **params)
    if not spec.is_warping:
        raise UnsupportedKind(f"{spec.kind.value} has no warping-path semantics")
    x, y = _prepare(x, y, spec)
    D = _matrix(x, y, spec)
    d = float(_finite_or_raise(D[-1, -1], x, y, spec))
    return _traceback(D), d


def pairwise(collection, spec=None, n_jobs=1, **params) -> np.ndarray:
    """Symmetric matrix of distances between all cases of a collection.

    Each unordered pair is computed once and mirrored, so the result is
    exactly symmetric and independent of ``n_jobs``.
    """
    spec = as_spec(spec, **params)
    X = as_collection(collection)
    if spec.is_lockstep and not X.is_equal_length:
        raise LengthMismatch(f"{spec.kind.value} needs equal-length cases")
    cases = [np.ascontiguousarray(c) for c in X]
    n = len(cases)
    M = np.zeros((n, n))

    def row(i):
        return [distance(cases[i], cases[j], spec) for j in range(i + 1, n)]

    if n_jobs == 1:
        rows = [row(i) for i in range(n)]
    else:
        with ThreadPoolExecutor(max_workers=None if n_jobs == -1 else n_jobs) as ex:
            rows = list(ex.map(row, range(n)))
    for i, vals in enumerate(rows):
        M[i, i + 1 :] = vals
        M[i + 1 :, i] = vals
    return M
