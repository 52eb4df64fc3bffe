import numpy as np
import pytest

from oracles import ridge_normal_equations
from chronokit.data import Collection, LabelVector, make_blobs, make_sine_vs_noise
from chronokit.exceptions import (
    CapabilityError,
    DegenerateFeatures,
    InvalidParameter,
    KindMismatch,
    NotFittedError,
    SchemaMismatch,
    SeriesTooShort,
)
from chronokit.supervised import (
    DEFAULT_LAMBDAS,
    ConvKernel,
    KNeighborsTimeSeriesClassifier,
    KNeighborsTimeSeriesRegressor,
    RocketClassifier,
    RocketConfig,
    RocketRegressor,
    accuracy,
    generate_kernels,
    mae,
    ridge_fit,
    ridge_predict,
    ridge_scores,
    rmse,
    rocket_transform,
)

RAGGED = Collection.ragged([np.arange(10.0)[None], np.arange(12.0)[None], np.arange(9.0)[None]])


# k-NN


def test_knn_k_larger_than_train():
    X = np.zeros((5, 1, 4))
    with pytest.raises(InvalidParameter):
        KNeighborsTimeSeriesClassifier(k=7).fit(X, list("aabbb"))


def test_knn_capability_follows_distance():
    y = ["a", "b", "a"]
    KNeighborsTimeSeriesClassifier(distance="dtw").fit(RAGGED, y)
    with pytest.raises(CapabilityError):
        KNeighborsTimeSeriesClassifier(distance="euclidean").fit(RAGGED, y)


def test_knn_self_prediction_and_blobs():
    X, y = make_blobs(10, 1, 20, [0, 10], 0.0, 0)
    clf = KNeighborsTimeSeriesClassifier(k=1).fit(X, y)
    assert clf.predict(X) == y
    assert clf.score(X, y) == 1.0


def test_knn_vote_tie_goes_to_smallest_class():
    X = np.array([[[0.0]], [[2.0]]])
    clf = KNeighborsTimeSeriesClassifier(k=2, distance="squared").fit(X, ["b", "a"])
    assert clf.predict(np.array([[[1.0]]])).class_labels == ("a",)


def test_knn_distance_tie_goes_to_lower_index():
    X = np.array([[[0.0]], [[2.0]]])
    clf = KNeighborsTimeSeriesClassifier(k=1, distance="squared").fit(X, ["b", "a"])
    assert clf.predict(np.array([[[1.0]]])).class_labels == ("b",)


def test_knn_regressor_mean_and_weighted():
    X = np.array([[[0.0]], [[1.0]], [[10.0]]])
    reg = KNeighborsTimeSeriesRegressor(k=2, distance="squared").fit(X, np.array([1.0, 3.0, 100.0]))
    assert reg.predict(np.array([[[0.4]]])).targets[0] == 2.0
    w = KNeighborsTimeSeriesRegressor(k=2, distance="squared", weighting="distance").fit(X, np.array([1.0, 3.0, 100.0]))
    assert w.predict(np.array([[[0.0]]])).targets[0] == pytest.approx(1.0, abs=1e-6)


def test_knn_guards():
    clf = KNeighborsTimeSeriesClassifier()
    with pytest.raises(NotFittedError):
        clf.predict(np.zeros((1, 1, 4)))
    clf.fit(np.zeros((2, 2, 4)), ["a", "b"])
    with pytest.raises(SchemaMismatch):
        clf.predict(np.zeros((1, 3, 4)))
    with pytest.raises(KindMismatch):
        KNeighborsTimeSeriesRegressor().fit(np.zeros((2, 1, 4)), LabelVector.classes(["a", "b"]))


# kernels


def test_generate_kernels_properties():
    kernels = generate_kernels(RocketConfig(100, seed=3), 2, 50)
    assert len(kernels) == 100
    for k in kernels:
        assert k.length in (7, 9, 11)
        assert abs(k.weights.sum()) < 1e-9
        assert -1 <= k.bias <= 1
        assert k.dilation >= 1 and k.channel in (0, 1)
        assert k.padding in (0, (k.length - 1) * k.dilation // 2)
        assert k.span <= 50 + 2 * k.padding
    again = generate_kernels(RocketConfig(100, seed=3), 2, 50)
    assert all(
        a.length == b.length and np.array_equal(a.weights, b.weights) and a.bias == b.bias
        and a.dilation == b.dilation and a.padding == b.padding and a.channel == b.channel
        for a, b in zip(kernels, again)
    )


def test_kernels_at_minimum_length():
    kernels = generate_kernels(RocketConfig(60, seed=0), 1, 7)
    assert all(k.dilation == 1 for k in kernels if k.length == 7)
    with pytest.raises(SeriesTooShort):
        generate_kernels(RocketConfig(5), 1, 6)


def test_kernel_is_per_index():
    # kernel i does not depend on how many kernels are drawn
    few = generate_kernels(RocketConfig(5, seed=1), 1, 40)
    many = generate_kernels(RocketConfig(50, seed=1), 1, 40)
    assert all(np.array_equal(a.weights, b.weights) for a, b in zip(few, many))


def test_rocket_transform_on_constant_series():
    w = np.array([1.0, -2.0, 0.5, 0.5, 1.0, -1.0, 0.0])
    for bias in (0.3, -0.3):
        k = ConvKernel(7, w, bias, 2, 6, 0)
        feats = rocket_transform(np.full((1, 1, 20), 4.0), [ConvKernel(7, w, bias, 1, 0, 0)])
        assert feats[0, 0] == pytest.approx(bias, abs=1e-12)
        assert feats[0, 1] == (1.0 if bias > 0 else 0.0)
        assert rocket_transform(np.full((1, 1, 20), 4.0), [k]).shape == (1, 2)


def test_rocket_transform_matches_direct_convolution():
    rng = np.random.default_rng(0)
    x = rng.normal(size=30)
    for k in generate_kernels(RocketConfig(20, seed=5), 1, 30):
        padded = np.concatenate([np.zeros(k.padding), x, np.zeros(k.padding)])
        taps = np.arange(k.length) * k.dilation
        z = np.array([k.bias + k.weights @ padded[t + taps] for t in range(len(padded) - taps[-1])])
        feats = rocket_transform(x[None, None], [k])[0]
        assert feats[0] == pytest.approx(z.max(), abs=1e-12)
        assert feats[1] == pytest.approx(np.mean(z > 0), abs=1e-15)


def test_rocket_transform_shape_and_ranges():
    X, _ = make_sine_vs_noise(3, 40, 0)
    kernels = generate_kernels(RocketConfig(30), 1, 40)
    F = rocket_transform(X, kernels)
    assert F.shape == (6, 60)
    assert np.all((F[:, 1::2] >= 0) & (F[:, 1::2] <= 1)) and np.all(np.isfinite(F))
    dup = Collection.dense(np.stack([X[0], X[0]]))
    np.testing.assert_array_equal(*rocket_transform(dup, kernels))


def test_rocket_rejects_ragged():
    with pytest.raises(CapabilityError) as info:
        RocketClassifier(n_kernels=10).fit(RAGGED, ["a", "b", "a"])
    assert "unequal_length" in str(info.value)


def test_rocket_classifier_blobs():
    X, y = make_blobs(10, 2, 30, [0, 10], 0.0, 0)
    clf = RocketClassifier(n_kernels=200, seed=1).fit(X, y)
    assert clf.score(X, y) == 1.0
    with pytest.raises(SchemaMismatch):
        clf.predict(np.zeros((1, 2, 31)))


def test_rocket_regressor_learns_offset():
    rng = np.random.default_rng(0)
    offsets = rng.uniform(0, 5, size=30)
    X = offsets[:, None, None] + 0.01 * rng.normal(size=(30, 1, 25))
    reg = RocketRegressor(n_kernels=100).fit(X[:20], offsets[:20])
    assert rmse(reg.predict(X[20:]), offsets[20:]) < 0.5


# ridge


def _standardize(X):
    return (X - X.mean(axis=0)) / X.std(axis=0)


@pytest.mark.parametrize("lam", DEFAULT_LAMBDAS)
def test_ridge_matches_normal_equations(lam):
    rng = np.random.default_rng(int(lam * 1000) % 97)
    X = rng.normal(size=(10, 5))
    y = rng.normal(size=10)
    model = ridge_fit(X, y, [lam])
    beta = ridge_normal_equations(_standardize(X), y - y.mean(), lam)
    assert np.max(np.abs(model.weights[0] - beta)) < 1e-8
    assert model.bias[0] == pytest.approx(y.mean())


def test_ridge_classification_targets():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(12, 4))
    labels = ["a", "b", "c"] * 4
    model = ridge_fit(X, LabelVector.classes(labels), [0.5])
    Z = _standardize(X)
    for k, cls in enumerate("abc"):
        t = np.where(np.array(labels) == cls, 1.0, -1.0)
        beta = ridge_normal_equations(Z, t - t.mean(), 0.5)
        assert np.max(np.abs(model.weights[k] - beta)) < 1e-8


def test_ridge_residual_condition():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(15, 8))
    y = rng.normal(size=15)
    model = ridge_fit(X, y)
    Z = _standardize(X)
    yc = y - y.mean()
    lhs = (Z.T @ Z + model.lambda_selected * np.eye(8)) @ model.weights[0]
    rhs = Z.T @ yc
    assert np.max(np.abs(lhs - rhs)) <= 1e-8 * (1 + np.max(np.abs(rhs)))


def test_ridge_loo_matches_refits():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(9, 3))
    y = rng.normal(size=9)
    model = ridge_fit(X, y, [0.1, 1.0, 10.0])
    Z = _standardize(X)  # leave-one-out with standardisation held fixed
    for lam, err in zip(model.lambdas, model.loo_errors):
        resid = []
        for i in range(9):
            keep = np.arange(9) != i
            ybar = y[keep].mean()
            Zk = Z[keep] - Z[keep].mean(axis=0)
            beta = ridge_normal_equations(Zk, y[keep] - ybar, lam)
            pred = ybar + (Z[i] - Z[keep].mean(axis=0)) @ beta
            resid.append(y[i] - pred)
        assert err == pytest.approx(np.mean(np.square(resid)), rel=1e-8)
    assert model.lambda_selected == model.lambdas[int(np.argmin(model.loo_errors))]


def test_ridge_small_examples():
    model = ridge_fit(np.array([[1.0], [2.0]]), np.array([1.0, 2.0]), [1e-8])
    assert ridge_predict(model, np.array([[3.0]])).targets[0] == pytest.approx(3.0, abs=1e-6)
    dup = np.repeat(np.random.default_rng(0).normal(size=(8, 1)), 3, axis=1)
    assert np.all(np.isfinite(ridge_fit(dup, np.arange(8.0), [1.0]).weights))
    with pytest.raises(DegenerateFeatures):
        ridge_fit(np.ones((4, 2)), np.arange(4.0))
    with pytest.raises(InvalidParameter):
        ridge_fit(np.ones((4, 2)), LabelVector.classes("abab"), [0.0])


def test_ridge_interpolation_recovers_labels():
    rng = np.random.default_rng(4)
    X = rng.normal(size=(6, 20))
    y = LabelVector.classes(list("abcabc"))
    model = ridge_fit(X, y, [1e-10])
    assert ridge_predict(model, X) == y


def test_ridge_mean_row_picks_largest_bias():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(10, 3))
    y = LabelVector.classes(list("aaaaabbbcc"))
    model = ridge_fit(X, y, [1.0])
    scores = ridge_scores(model, model.feature_means)
    np.testing.assert_allclose(scores[0], model.bias)
    assert ridge_predict(model, model.feature_means).class_labels == ("a",)
    scaled = ridge_scores(model, X) * 3.0
    assert np.array_equal(np.argmax(scaled, axis=1), np.argmax(ridge_scores(model, X), axis=1))
    with pytest.raises(SchemaMismatch):
        ridge_predict(model, np.zeros((1, 4)))


# metrics


def test_metrics():
    a = LabelVector.classes(["x", "y"])
    assert accuracy(a, a) == 1.0
    assert accuracy(LabelVector.classes(["x", "y"]), LabelVector.classes(["y", "x"])) == 0.0
    assert mae(np.array([1.0, 2.0]), np.array([1.0, 4.0])) == 1.0
    with pytest.raises(KindMismatch):
        accuracy(a, LabelVector.regression([1.0, 2.0]))
