import numpy as np
import pytest

from qaudio import DigitalAudio

# 8-sample worked example used throughout: its shifted sum is exactly 4 and
# its 3-bit quantization is [0, -1, 2, 3, -2, -3, 1, 0].
WORKED_SAMPLES = [0.0, -0.3, 0.7, 1.0, -0.7, -1.0, 0.3, 0.0]
WORKED_WORDS_Q3 = [0, -1, 2, 3, -2, -3, 1, 0]


@pytest.fixture
def worked_signal():
    return DigitalAudio(WORKED_SAMPLES, 44100)


def random_samples(rng, n):
    """Random amplitudes strictly inside (-1, 1), safe for every codec."""
    return rng.uniform(-0.999, 0.999, size=n)


def assert_states_close(actual, expected, tol=1e-9):
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    assert actual.shape == expected.shape
    assert np.max(np.abs(actual - expected)) <= tol
