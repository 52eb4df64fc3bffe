"""Command-line front end: ``chronokit classify|cluster|forecast|dist``.

Each run prints one JSON object with a fixed key order. Exit codes: 0 on
success, 2 for bad arguments or unreadable input, 3 for capability and
schema errors, 4 for malformed files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment

from chronokit.cluster import KMeansConfig, kmeans_fit, kmedoids_fit
from chronokit.data import LabelKind, as_collection, load_ts, parse_ts
from chronokit.distances import DistanceSpec, distance
from chronokit.exceptions import (
    CapabilityError,
    ChronokitError,
    InvalidParameter,
    ParseError,
    SchemaMismatch,
)
from chronokit.forecast import (
    ForecastHorizon,
    forecast_metrics,
    naive_forecast,
    reduce_fit,
    reduce_predict,
    trend_fit,
    trend_predict,
)
from chronokit.pipeline import make_pipeline
from chronokit.supervised import KNeighborsTimeSeriesClassifier, RocketClassifier, accuracy
from chronokit.transform import Padder

EXIT_OK, EXIT_USAGE, EXIT_CAPABILITY, EXIT_PARSE = 0, 2, 3, 4

_METRICS = ("euclidean", "squared", "dtw", "ddtw", "wdtw", "wddtw", "erp", "edr", "lcss", "msm", "twe")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _spec_from_args(args) -> DistanceSpec:
    params = {"kind": args.metric}
    for flag, field in (("window", "window"), ("g", "g"), ("epsilon", "epsilon"), ("c", "c"),
                        ("nu", "nu"), ("lmbda", "lmbda"), ("erp_g", "erp_g")):
        value = getattr(args, flag, None)
        if value is not None:
            params[field] = value
    return DistanceSpec(**params)


def _read_plain(path):
    """Plain series: one decimal real per line, optional trailing newline."""
    text = Path(path).read_text()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("series file is empty", line=1)
    values = []
    for i, line in enumerate(lines, 1):
        try:
            v = float(line)
        except ValueError:
            raise ParseError(f"not a real number: {line!r}", line=i) from None
        if not np.isfinite(v):
            raise ParseError(f"non-finite value {line!r}", line=i)
        values.append(v)
    return np.array(values)


def _read_single(path):
    text = Path(path).read_text()
    if text.lstrip().startswith(("@", "#")):
        collection, _, _ = parse_ts(text)
        if collection.n_cases != 1:
            raise InvalidParameter(f"{path}: expected a single case, found {collection.n_cases}")
        return collection[0]
    return _read_plain(path)[np.newaxis, :]


def _best_agreement(pred, truth_idx, n_truth):
    # fraction of cases on the diagonal after the best cluster-to-class matching
    k = int(max(pred.max() + 1, n_truth))
    counts = np.zeros((k, k))
    np.add.at(counts, (pred, truth_idx), 1)
    rows, cols = linear_sum_assignment(-counts)
    return float(counts[rows, cols].sum() / pred.size)


def cmd_classify(args):
    train_X, train_y, _ = load_ts(args.train)
    test_X, test_y, _ = load_ts(args.test)
    for name, labels in (("train", train_y), ("test", test_y)):
        if labels.kind is not LabelKind.CLASS:
            raise InvalidParameter(f"{name} file has no class labels")
    if train_y.alphabet != test_y.alphabet:
        raise InvalidParameter(f"class alphabets differ: {train_y.alphabet} vs {test_y.alphabet}")
    if args.estimator == "rocket":
        params = {"n_kernels": args.kernels, "pad": args.pad}
        est = RocketClassifier(n_kernels=args.kernels, seed=args.seed)
    else:
        spec = _spec_from_args(args)
        params = {"k": args.k, "metric": spec.kind.value, "window": spec.window, "pad": args.pad}
        est = KNeighborsTimeSeriesClassifier(k=args.k, distance=spec)
    if args.pad:
        est = make_pipeline(Padder(), terminal=est)
    est.fit(train_X, train_y)
    pred = est.predict(test_X)
    metrics = {"accuracy": accuracy(pred, test_y)}
    return args.estimator, params, metrics, train_X.n_cases, test_X.n_cases


def cmd_cluster(args):
    X, labels, _ = load_ts(args.data)
    spec = _spec_from_args(args)
    params = {"algorithm": args.algorithm, "k": args.k, "metric": spec.kind.value, "window": spec.window}
    if args.algorithm == "kmeans":
        params["averaging"] = args.averaging
        config = KMeansConfig(args.k, spec, args.averaging, max_iter=args.max_iter, seed=args.seed)
        result = kmeans_fit(X, config)
    else:
        result = kmedoids_fit(X, args.k, spec, max_iter=args.max_iter, seed=args.seed)
    metrics = {
        "inertia": result.inertia,
        "n_iter": float(result.n_iter),
        "converged": float(result.converged),
    }
    if labels.kind is LabelKind.CLASS:
        metrics["agreement"] = _best_agreement(result.labels, labels.indices, labels.n_classes)
    return args.algorithm, params, metrics, X.n_cases, 0


def _parse_fh(text):
    try:
        offsets = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidParameter(f"--fh must be a comma-separated list of integers, got {text!r}") from None
    return ForecastHorizon(offsets)


def cmd_forecast(args):
    y = _read_plain(args.series)
    fh = _parse_fh(args.fh) if args.fh is not None else ForecastHorizon(tuple(range(1, (args.holdout or 1) + 1)))
    holdout = args.holdout or 0
    if holdout < 0 or holdout >= y.size:
        raise InvalidParameter(f"--holdout must be in [0, {y.size - 1}], got {holdout}")
    train = y[: y.size - holdout]
    params = {"method": args.method, "fh": list(fh.offsets), "holdout": holdout}
    if args.method == "naive":
        params.update(strategy=args.strategy, sp=args.sp)
        forecast = lambda h: naive_forecast(train, h, args.strategy, args.sp)  # noqa: E731
    elif args.method == "trend":
        params["degree"] = args.degree
        model = trend_fit(train, args.degree)
        forecast = lambda h: trend_predict(model, h)  # noqa: E731
    else:
        params["window"] = args.window
        model = reduce_fit(train, args.window)
        forecast = lambda h: reduce_predict(model, h)  # noqa: E731
    values = forecast(fh)
    metrics = {f"forecast_h{h}": v for h, v in zip(fh, values)}
    if holdout:
        actual = y[y.size - holdout :]
        scored = forecast(ForecastHorizon(tuple(range(1, holdout + 1))))
        metrics.update(forecast_metrics(actual, scored, train))
    return args.method, params, metrics, int(train.size), holdout


def cmd_dist(args):
    a = _read_single(args.a)
    b = _read_single(args.b)
    spec = _spec_from_args(args)
    params = {k: v for k, v in vars(spec).items()}
    params["kind"] = spec.kind.value
    return spec.kind.value, params, {"distance": distance(a, b, spec)}, 1, 1


def _add_distance_flags(p, default="dtw", extra=True):
    p.add_argument("--metric", choices=_METRICS, default=default)
    p.add_argument("--window", type=float)
    if extra:
        p.add_argument("--g", type=float)
        p.add_argument("--epsilon", type=float)
        p.add_argument("--c", type=float)
        p.add_argument("--nu", type=float)
        p.add_argument("--lambda", dest="lmbda", type=float)
        p.add_argument("--erp-g", dest="erp_g", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chronokit", description="Time series benchmarking commands.")
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="also write the result document to this file")
    common.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0 for byte-stable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--estimator", choices=("rocket", "knn"), required=True)
    p.add_argument("--kernels", type=int, default=10_000)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--pad", action="store_true")
    _add_distance_flags(p, extra=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cluster", parents=[common])
    p.add_argument("--data", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algorithm", choices=("kmeans", "kmedoids"), default="kmeans")
    p.add_argument("--averaging", choices=("mean", "dba"), default="dba")
    p.add_argument("--max-iter", dest="max_iter", type=int, default=50)
    _add_distance_flags(p)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("forecast", parents=[common])
    p.add_argument("--series", required=True)
    p.add_argument("--method", choices=("naive", "trend", "reduce"), required=True)
    p.add_argument("--strategy", choices=("last", "mean", "seasonal"), default="last")
    p.add_argument("--sp", type=int)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--fh")
    p.add_argument("--holdout", type=int)
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("dist", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_distance_flags(p)
    p.set_defaults(func=cmd_dist)
    return parser


def _document(command, estimator, params, metrics, n_train, n_test, seed, runtime_ms) -> str:
    doc = {
        "command": command,
        "estimator": estimator,
        "params": params,
        "metrics": metrics,
        "n_train": int(n_train),
        "n_test": int(n_test),
        "seed": int(seed),
        "runtime_ms": runtime_ms,
    }
    return json.dumps(doc, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return str(obj)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        print(f"chronokit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        estimator, params, metrics, n_train, n_test = args.func(args)
    except ParseError as e:
        print(f"chronokit: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (CapabilityError, SchemaMismatch) as e:
        print(f"chronokit: capability error: {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ChronokitError, OSError, ValueError) as e:
        print(f"chronokit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    runtime_ms = 0.0 if args.no_timing else round((time.perf_counter() - start) * 1000.0, 3)
    text = _document(args.command, estimator, params, metrics, n_train, n_test, args.seed, runtime_ms)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
