import numpy as np
import pytest

from chronokit.cluster import TimeSeriesKMedoids
from chronokit.data import Collection, LabelVector, make_blobs
from chronokit.exceptions import CapabilityError, NotFittedError, SchemaMismatch
from chronokit.pipeline import Pipeline, make_pipeline
from chronokit.supervised import KNeighborsTimeSeriesClassifier, RocketClassifier
from chronokit.transform import Padder, Truncator, ZNormalizer


def _ragged(seed, n=8, lengths=(20, 30)):
    rng = np.random.default_rng(seed)
    cases, labels = [], []
    for i in range(n):
        L = int(rng.integers(*lengths))
        offset = 0.0 if i % 2 == 0 else 5.0
        cases.append(offset + 0.1 * rng.normal(size=(1, L)))
        labels.append(str(i % 2))
    return Collection.ragged(cases), LabelVector.classes(labels)


def test_effective_tags():
    assert make_pipeline(Padder(), terminal=RocketClassifier()).tags.unequal_length
    knn = KNeighborsTimeSeriesClassifier()
    assert make_pipeline(terminal=knn).tags == knn.tags
    assert not make_pipeline(ZNormalizer(), terminal=RocketClassifier()).tags.unequal_length
    assert make_pipeline(ZNormalizer(), Truncator(), terminal=RocketClassifier()).tags.unequal_length


def test_ragged_needs_padding():
    X, y = _ragged(0)
    with pytest.raises(CapabilityError):
        RocketClassifier(n_kernels=50).fit(X, y)
    with pytest.raises(CapabilityError):
        make_pipeline(ZNormalizer(), terminal=RocketClassifier(n_kernels=50)).fit(X, y)
    pipe = make_pipeline(Padder(), terminal=RocketClassifier(n_kernels=50)).fit(X, y)
    assert pipe.named_steps["padder"].length_ == max(X.lengths)
    assert len(pipe.predict(X)) == X.n_cases


def test_frozen_pad_length():
    X, y = _ragged(1, lengths=(20, 25))
    pipe = make_pipeline(Padder(), terminal=RocketClassifier(n_kernels=30)).fit(X, y)
    short = Collection.ragged([np.zeros((1, 10)), np.ones((1, 12))])
    assert len(pipe.predict(short)) == 2
    with pytest.raises(SchemaMismatch):
        pipe.predict(Collection.ragged([np.zeros((1, 40)), np.zeros((1, 12))]))


def test_composition_equals_manual():
    X, y = _ragged(2)
    test, _ = _ragged(3, lengths=(15, 20))
    pipe = make_pipeline(Padder(), ZNormalizer(), terminal=RocketClassifier(n_kernels=60, seed=4)).fit(X, y)
    pad = Padder().fit(X)
    z = ZNormalizer()
    clf = RocketClassifier(n_kernels=60, seed=4).fit(z.transform(pad.transform(X)), y)
    assert pipe.predict(test) == clf.predict(z.transform(pad.transform(test)))


def test_empty_pipeline_is_terminal():
    X, y = make_blobs(5, 1, 15, [0, 3], 0.5, 0)
    test, _ = make_blobs(3, 1, 15, [0, 3], 0.5, 1)
    alone = KNeighborsTimeSeriesClassifier().fit(X, y).predict(test)
    piped = Pipeline([], KNeighborsTimeSeriesClassifier()).fit(X, y).predict(test)
    assert alone == piped


def test_pipeline_guards():
    pipe = make_pipeline(Padder(), terminal=RocketClassifier(n_kernels=10))
    with pytest.raises(NotFittedError):
        pipe.predict(np.zeros((1, 1, 10)))


def test_clustering_terminal():
    X, _ = _ragged(4)
    pipe = make_pipeline(Truncator(), terminal=TimeSeriesKMedoids(k=2, distance="euclidean")).fit(X)
    labels = pipe.predict(X)
    assert len(set(labels[::2])) == 1 and len(set(labels[1::2])) == 1
