"""Seeded synthetic classification problems."""

import numpy as np

from chronokit.data._types import Collection, LabelVector, Layout
from chronokit.exceptions import InvalidParameter

__all__ = ["make_blobs", "make_sine_vs_noise"]


def make_blobs(n_per_class, n_channels, n_timepoints, class_offsets, noise_sd, seed):
    """Constant-offset classes with i.i.d. Gaussian noise.

    Every value of a class ``c`` case is ``class_offsets[c]`` plus
    ``N(0, noise_sd)`` noise. Cases are grouped by class in offset order and
    labelled with the class index as text.
    """
    offsets = [float(o) for o in class_offsets]
    if len(offsets) < 2:
        raise InvalidParameter("make_blobs needs at least two class offsets")
    if len(set(offsets)) != len(offsets):
        raise InvalidParameter(f"class offsets must be distinct, got {offsets}")
    if noise_sd < 0:
        raise InvalidParameter(f"noise_sd must be >= 0, got {noise_sd}")
    for name, v in (("n_per_class", n_per_class), ("n_channels", n_channels), ("n_timepoints", n_timepoints)):
        if int(v) != v or v < 1:
            raise InvalidParameter(f"{name} must be a positive integer, got {v}")

    rng = np.random.default_rng(seed)
    shape = (n_per_class, n_channels, n_timepoints)
    blocks = []
    for offset in offsets:
        block = np.full(shape, offset)
        if noise_sd > 0:
            block = block + rng.normal(0.0, noise_sd, size=shape)
        blocks.append(block)
    X = Collection(np.concatenate(blocks), Layout.DENSE)
    labels = [str(c) for c in range(len(offsets)) for _ in range(n_per_class)]
    y = LabelVector.classes(labels, [str(c) for c in range(len(offsets))])
    return X, y


def _sine_vs_noise(n_per_class, n_timepoints, seed, sine_noise_sd=0.1, period=None):
    if int(n_per_class) != n_per_class or n_per_class < 1:
        raise InvalidParameter(f"n_per_class must be a positive integer, got {n_per_class}")
    if int(n_timepoints) != n_timepoints or n_timepoints < 8:
        raise InvalidParameter(f"n_timepoints must be an integer >= 8, got {n_timepoints}")
    if period is None:
        period = n_timepoints / 4
    rng = np.random.default_rng(seed)
    t = np.arange(n_timepoints)
    phases = rng.uniform(0.0, 2 * np.pi, size=n_per_class)
    sines = np.sin(2 * np.pi * (t[np.newaxis, :] / period) + phases[:, np.newaxis])
    if sine_noise_sd > 0:
        sines = sines + rng.normal(0.0, sine_noise_sd, size=sines.shape)
    noise = rng.normal(0.0, 1.0, size=(n_per_class, n_timepoints))
    data = np.concatenate([sines, noise])[:, np.newaxis, :]
    y = LabelVector.classes(["0"] * n_per_class + ["1"] * n_per_class, ["0", "1"])
    return Collection(data, Layout.DENSE), y, phases, period


def make_sine_vs_noise(n_per_class, n_timepoints, seed):
    """Noisy unit sinusoids with random phase (class "0") against white noise (class "1").

    Sinusoids have period ``n_timepoints / 4`` and carry ``N(0, 0.1)`` noise;
    the noise class is ``N(0, 1)``.
    """
    X, y, _, _ = _sine_vs_noise(n_per_class, n_timepoints, seed)
    return X, y
