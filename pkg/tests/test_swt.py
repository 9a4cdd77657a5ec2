"""Tests for the stationary wavelet transform and artifact suppression."""

import numpy as np
import pytest

from cogniwear.signals import TimeSeries
from cogniwear.swt import swt_denoise, swt_forward, swt_inverse


def rel_err(a, b):
    return np.linalg.norm(a - b) / max(np.linalg.norm(b), 1e-15)


class TestSwtRoundTrip:
    @pytest.mark.parametrize("n,levels", [(64, 1), (64, 3), (100, 4), (257, 5)])
    def test_perfect_reconstruction(self, n, levels):
        rng = np.random.default_rng(n * 10 + levels)
        x = TimeSeries(rng.normal(size=n), rate_hz=4.0)
        rec = swt_inverse(swt_forward(x, levels))
        assert rel_err(rec.samples, x.samples) < 1e-9

    def test_constant_has_zero_details(self):
        x = TimeSeries(np.full(64, 3.7), rate_hz=4.0)
        dec = swt_forward(x, 3)
        for d in dec.detail_coeffs:
            assert np.allclose(d, 0.0, atol=1e-12)

    def test_step_details_localized(self):
        # hand-computed level-1 Haar: d[n] = (x[n] - x[n+1]) / sqrt(2),
        # nonzero only where the step sits
        x = np.zeros(64)
        x[32:] = 1.0
        dec = swt_forward(TimeSeries(x, 4.0), 1)
        d = dec.detail_coeffs[0]
        assert d[31] == pytest.approx(-1 / np.sqrt(2))
        assert np.allclose(np.delete(d[:63], 31), 0.0, atol=1e-12)

    def test_rejects_excess_levels(self):
        x = TimeSeries(np.ones(8), rate_hz=4.0)
        with pytest.raises(ValueError):
            swt_forward(x, 4)

    def test_rejects_zero_levels(self):
        x = TimeSeries(np.ones(8), rate_hz=4.0)
        with pytest.raises(ValueError):
            swt_forward(x, 0)


class TestSwtDenoise:
    def test_clean_ramp_nearly_untouched(self):
        n = 240  # 60 s at 4 Hz
        ramp = np.linspace(0.0, 1.0, n)
        out = swt_denoise(TimeSeries(ramp, 4.0))
        rmse = np.sqrt(np.mean((out.samples - ramp) ** 2))
        assert rmse < 0.02 * np.sqrt(np.mean(ramp**2))

    def test_spike_attenuated(self):
        n = 240
        ramp = 1.0 + np.linspace(0.0, 1.0, n)
        noisy = ramp.copy()
        noisy[120] += 5.0
        out = swt_denoise(TimeSeries(noisy, 4.0))
        residual = np.abs(out.samples - ramp)
        assert residual[120] <= 0.2 * 5.0  # >= 80% of the spike removed

    def test_zero_signal_fixpoint(self):
        out = swt_denoise(TimeSeries(np.zeros(64), 4.0))
        assert np.array_equal(out.samples, np.zeros(64))

    def test_nonnegative_input_stays_nonnegative(self):
        rng = np.random.default_rng(5)
        x = np.abs(rng.normal(1.0, 0.3, size=128))
        x[40] += 4.0
        out = swt_denoise(TimeSeries(x, 4.0))
        assert np.all(out.samples >= 0.0)

    def test_rejects_short_input(self):
        with pytest.raises(ValueError):
            swt_denoise(TimeSeries(np.ones(8), 4.0))

    def test_idempotent_within_one_percent(self):
        rng = np.random.default_rng(17)
        tonic = 2.0 + 0.5 * np.sin(np.linspace(0, 3, 400))
        noisy = tonic + rng.normal(0, 0.02, size=400)
        noisy[np.array([50, 180, 300])] += [3.0, 4.5, 2.0]
        once = swt_denoise(TimeSeries(noisy, 4.0))
        twice = swt_denoise(once)
        change = np.sqrt(np.mean((twice.samples - once.samples) ** 2))
        scale = np.sqrt(np.mean(once.samples**2))
        assert change < 0.01 * scale
