"""Reader and writer for the ``.ts`` time series archive format.

A document is a header of ``@key value`` lines followed by ``@data`` and one
case per line. Channels are separated by ``:``, values within a channel by
``,``; a labelled document carries the class token or real target as the
final ``:`` field::

    @problemName toy
    @univariate true
    @equalLength true
    @seriesLength 3
    @classLabel true 0 1
    @data
    1.0,2.0,3.0:0
    4.0,5.0,6.0:1
"""

from __future__ import annotations

import io
import os
import re
from pathlib import Path
from typing import Optional

import numpy as np

from chronokit.data._types import (
    Collection,
    DatasetMetadata,
    LabelKind,
    LabelVector,
    Layout,
)
from chronokit.exceptions import ConsistencyError, ParseError

__all__ = ["parse_ts", "write_ts", "load_ts", "save_ts"]

_REAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")
_TOKEN = re.compile(r"[^\s:,]+\Z")
_BOOL = {"true": True, "false": False}


def _parse_bool(value, key, lineno):
    v = _BOOL.get(value.lower())
    if v is None:
        raise ParseError(f"@{key} expects true or false, got {value!r}", lineno)
    return v


def _parse_count(value, key, lineno):
    if not value.isdigit() or int(value) < 1:
        raise ParseError(f"@{key} expects a positive integer, got {value!r}", lineno)
    return int(value)


def _parse_real(token, lineno):
    token = token.strip()
    if token == "?":
        raise ParseError("missing values ('?') are not supported", lineno)
    if not _REAL.match(token):
        raise ParseError(f"{token!r} is not a real number", lineno)
    v = float(token)
    if not np.isfinite(v):
        raise ParseError(f"{token!r} is out of range for a float", lineno)
    return v


def _parse_header(lines):
    header = {}
    label_decls = 0
    for lineno, raw in lines:
        line = raw.strip()
        parts = line.split()
        key = parts[0][1:].lower()
        args = parts[1:]
        if key == "data":
            if args:
                raise ParseError("@data takes no arguments", lineno)
            return header, lineno
        if key in header:
            raise ParseError(f"duplicate header @{parts[0][1:]}", lineno)
        if key == "problemname":
            if len(args) != 1:
                raise ParseError("@problemName expects a single token", lineno)
            header[key] = args[0]
        elif key in ("univariate", "equallength", "timestamps", "missing"):
            if len(args) != 1:
                raise ParseError(f"@{parts[0][1:]} expects true or false", lineno)
            header[key] = _parse_bool(args[0], parts[0][1:], lineno)
            if key == "timestamps" and header[key]:
                raise ParseError("timestamped documents are not supported", lineno)
        elif key in ("dimension", "serieslength"):
            if len(args) != 1:
                raise ParseError(f"@{parts[0][1:]} expects a positive integer", lineno)
            header[key] = _parse_count(args[0], parts[0][1:], lineno)
        elif key == "classlabel":
            if not args:
                raise ParseError("@classLabel expects true or false", lineno)
            flag = _parse_bool(args[0], "classLabel", lineno)
            alphabet = tuple(args[1:])
            if flag and not alphabet:
                raise ParseError("@classLabel true needs at least one class token", lineno)
            if not flag and alphabet:
                raise ParseError("@classLabel false takes no class tokens", lineno)
            if len(set(alphabet)) != len(alphabet):
                raise ParseError("duplicate class tokens in @classLabel", lineno)
            for tok in alphabet:
                if not _TOKEN.match(tok):
                    raise ParseError(f"invalid class token {tok!r}", lineno)
            header[key] = (flag, alphabet)
            label_decls += 1
        elif key == "targetlabel":
            if len(args) != 1:
                raise ParseError("@targetLabel expects true or false", lineno)
            header[key] = _parse_bool(args[0], "targetLabel", lineno)
            label_decls += 1
        else:
            raise ParseError(f"unknown header {parts[0]!r}", lineno)
        if label_decls > 1:
            raise ParseError("only one of @classLabel and @targetLabel may appear", lineno)
    raise ParseError("missing @data marker")


def parse_ts(text):
    """Parse a ``.ts`` document into ``(collection, labels, metadata)``.

    ``text`` may be a string or a text stream. Errors carry the 1-based line
    number they were found on.
    """
    if not isinstance(text, str):
        text = text.read()
    lines = text.splitlines()

    header_lines = []
    data_start = None
    for i, raw in enumerate(lines):
        lineno = i + 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("@"):
            raise ParseError(f"expected a header line, got {line[:40]!r}", lineno)
        header_lines.append((lineno, line))
        if line.split()[0].lower() == "@data":
            data_start = i + 1
            break
    header, data_lineno = _parse_header(header_lines)

    for required, name in (("univariate", "@univariate"), ("equallength", "@equalLength")):
        if required not in header:
            raise ParseError(f"{name} header is required", data_lineno)
    if "classlabel" not in header and "targetlabel" not in header:
        raise ParseError("one of @classLabel or @targetLabel is required", data_lineno)
    univariate = header["univariate"]
    equal_length = header["equallength"]
    dimension = header.get("dimension")
    if univariate and dimension not in (None, 1):
        raise ParseError("@univariate true conflicts with @dimension > 1", data_lineno)
    if not univariate and dimension is None:
        raise ParseError("@dimension is required when @univariate is false", data_lineno)
    n_channels = 1 if univariate else dimension
    series_length = header.get("serieslength")
    if equal_length and series_length is None:
        raise ParseError("@seriesLength is required when @equalLength is true", data_lineno)
    if not equal_length and series_length is not None:
        raise ParseError("@seriesLength is only allowed when @equalLength is true", data_lineno)

    if "classlabel" in header:
        labelled, alphabet = header["classlabel"]
        kind = LabelKind.CLASS if labelled else LabelKind.NONE
    else:
        labelled, alphabet = header["targetlabel"], ()
        kind = LabelKind.TARGET if labelled else LabelKind.NONE
    alphabet_set = set(alphabet)

    cases, class_labels, targets = [], [], []
    for i in range(data_start, len(lines)):
        lineno = i + 1
        line = lines[i].strip()
        if not line:
            continue
        fields = line.split(":")
        if labelled:
            if len(fields) < 2:
                raise ParseError("labelled case has no label field", lineno)
            label = fields.pop().strip()
            if kind is LabelKind.CLASS:
                if label not in alphabet_set:
                    raise ParseError(f"class label {label!r} is not in {list(alphabet)}", lineno)
                class_labels.append(label)
            else:
                targets.append(_parse_real(label, lineno))
        if len(fields) != n_channels:
            raise ParseError(f"expected {n_channels} channel(s), got {len(fields)}", lineno)
        channels = [[_parse_real(tok, lineno) for tok in f.split(",")] for f in fields]
        length = len(channels[0])
        if any(len(ch) != length for ch in channels):
            raise ParseError("channels of one case have different lengths", lineno)
        if equal_length and length != series_length:
            raise ParseError(f"case has length {length}, @seriesLength is {series_length}", lineno)
        cases.append(np.array(channels, dtype=np.float64))

    if not cases:
        raise ParseError("document contains no cases", len(lines))

    if equal_length:
        collection = Collection(np.stack(cases), Layout.DENSE)
    else:
        collection = Collection(cases, Layout.RAGGED)
    if kind is LabelKind.CLASS:
        labels = LabelVector.classes(class_labels, alphabet)
    elif kind is LabelKind.TARGET:
        labels = LabelVector.regression(targets)
    else:
        labels = LabelVector.none()
    meta = DatasetMetadata(
        problem_name=header.get("problemname", ""),
        is_univariate=univariate,
        is_equal_length=equal_length,
        series_length=series_length,
        label_kind=kind,
        class_alphabet=alphabet if kind is LabelKind.CLASS else None,
    )
    return collection, labels, meta


def _fmt(v: float) -> str:
    # repr gives the shortest string that round-trips to the same double
    return repr(float(v))


def write_ts(collection: Collection, labels: LabelVector, meta: DatasetMetadata) -> str:
    """Render ``(collection, labels, meta)`` as a ``.ts`` document.

    The three inputs must agree with each other; ``parse_ts`` of the result
    reproduces them exactly.
    """
    n = collection.n_cases
    dense = collection.layout is Layout.DENSE
    if meta.is_equal_length != dense:
        raise ConsistencyError(
            f"metadata says equal_length={meta.is_equal_length}, collection layout is {collection.layout.value}"
        )
    if dense and meta.series_length != collection.n_timepoints:
        raise ConsistencyError(
            f"metadata series_length {meta.series_length} != collection length {collection.n_timepoints}"
        )
    if meta.is_univariate != (collection.n_channels == 1):
        raise ConsistencyError(
            f"metadata univariate={meta.is_univariate} with {collection.n_channels} channels"
        )
    if meta.label_kind is not labels.kind:
        raise ConsistencyError(f"metadata label kind {meta.label_kind.value} != labels kind {labels.kind.value}")
    if labels.kind is not LabelKind.NONE and len(labels) != n:
        raise ConsistencyError(f"{len(labels)} labels for {n} cases")
    if labels.kind is LabelKind.CLASS:
        if tuple(meta.class_alphabet or ()) != labels.alphabet:
            raise ConsistencyError(f"metadata alphabet {meta.class_alphabet} != labels alphabet {labels.alphabet}")
        for tok in labels.alphabet:
            if not _TOKEN.match(tok):
                raise ConsistencyError(f"class token {tok!r} cannot be written")
    if not meta.problem_name or not _TOKEN.match(meta.problem_name):
        raise ConsistencyError(f"problem name {meta.problem_name!r} must be a single token")
    if labels.kind is LabelKind.TARGET and not np.all(np.isfinite(labels.targets)):
        raise ConsistencyError("targets must be finite")
    if any(not np.all(np.isfinite(case)) for case in collection):
        raise ConsistencyError("series values must be finite")

    out = io.StringIO()
    out.write(f"@problemName {meta.problem_name}\n")
    out.write(f"@univariate {'true' if meta.is_univariate else 'false'}\n")
    if not meta.is_univariate:
        out.write(f"@dimension {collection.n_channels}\n")
    out.write(f"@equalLength {'true' if dense else 'false'}\n")
    if dense:
        out.write(f"@seriesLength {meta.series_length}\n")
    if labels.kind is LabelKind.CLASS:
        out.write("@classLabel true " + " ".join(labels.alphabet) + "\n")
    elif labels.kind is LabelKind.TARGET:
        out.write("@targetLabel true\n")
    else:
        out.write("@classLabel false\n")
    out.write("@data\n")
    for i, case in enumerate(collection):
        fields = [",".join(_fmt(v) for v in channel) for channel in case]
        if labels.kind is LabelKind.CLASS:
            fields.append(labels.class_labels[i])
        elif labels.kind is LabelKind.TARGET:
            fields.append(_fmt(labels.targets[i]))
        out.write(":".join(fields) + "\n")
    return out.getvalue()


def load_ts(path: os.PathLike):
    with open(path, encoding="utf-8") as f:
        return parse_ts(f.read())


def save_ts(path: os.PathLike, collection, labels, meta: Optional[DatasetMetadata] = None) -> None:
    if meta is None:
        meta = DatasetMetadata.describe(collection, labels, problem_name=Path(path).stem or "unnamed")
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_ts(collection, labels, meta))
