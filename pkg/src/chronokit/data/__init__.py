"""Series and collection types, the ``.ts`` format, dataset loading and generators."""

from chronokit.data._types import (
    Collection,
    DatasetMetadata,
    LabelKind,
    LabelVector,
    Layout,
    Series,
    as_collection,
    as_labels,
    as_series_array,
)
from chronokit.data.datasets import list_datasets, load_classification
from chronokit.data.generators import make_blobs, make_sine_vs_noise
from chronokit.data.tsfile import load_ts, parse_ts, save_ts, write_ts

__all__ = [
    "Collection",
    "DatasetMetadata",
    "LabelKind",
    "LabelVector",
    "Layout",
    "Series",
    "as_collection",
    "as_labels",
    "as_series_array",
    "list_datasets",
    "load_classification",
    "make_blobs",
    "make_sine_vs_noise",
    "load_ts",
    "parse_ts",
    "save_ts",
    "write_ts",
]
