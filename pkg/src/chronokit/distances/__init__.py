"""Elastic and lockstep distances between time series.

All functions accept univariate (1D) or multivariate ``(n_channels,
n_timepoints)`` series. Multivariate pointwise costs are taken jointly over
channels.
"""

from chronokit.distances._api import (
    AlignmentPath,
    CostMatrix,
    DistanceKind,
    DistanceSpec,
    alignment_path,
    as_spec,
    cost_matrix,
    derivative,
    distance,
    pairwise,
)

__all__ = [
    "AlignmentPath",
    "CostMatrix",
    "DistanceKind",
    "DistanceSpec",
    "alignment_path",
    "as_spec",
    "cost_matrix",
    "derivative",
    "distance",
    "pairwise",
]
