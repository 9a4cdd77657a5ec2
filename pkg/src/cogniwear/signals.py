"""Shared signal types and generic DSP primitives.

Every pipeline in the library works on uniformly sampled :class:`TimeSeries`
records. The operations here are pure functions: same input, bit-identical
output, no shared state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage, signal as sps


@dataclass(frozen=True)
class TimeSeries:
    """Uniformly sampled scalar signal with a rate and start epoch.

    Parameters
    ----------
    samples : array-like of float
        Signal values (microsiemens, g, normalized BVP, ...).
    rate_hz : float
        Sampling rate, strictly positive.
    t0 : float
        Epoch seconds of the first sample.
    """

    samples: np.ndarray
    rate_hz: float
    t0: float = 0.0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("TimeSeries needs a 1-D sample array with length >= 1")
        if not self.rate_hz > 0:
            raise ValueError(f"rate_hz must be positive, got {self.rate_hz}")
        if not np.all(np.isfinite(samples)):
            raise ValueError("TimeSeries samples must be finite (no NaN/Inf)")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "rate_hz", float(self.rate_hz))
        object.__setattr__(self, "t0", float(self.t0))

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration_s(self) -> float:
        """Duration covered by the samples, in seconds."""
        return len(self) / self.rate_hz

    @property
    def times(self) -> np.ndarray:
        """Epoch seconds of each sample."""
        return self.t0 + np.arange(len(self)) / self.rate_hz

    def with_samples(self, samples: np.ndarray) -> "TimeSeries":
        """Copy of this series with new samples, same rate and epoch."""
        return TimeSeries(samples, self.rate_hz, self.t0)

    def index_range(self, w: "Window") -> tuple[int, int]:
        """Half-open sample index range [i0, i1) covered by window ``w``.

        Raises ValueError when the window does not overlap the signal.
        """
        i0 = int(np.ceil((w.start_s - self.t0) * self.rate_hz - 1e-9))
        i1 = int(np.floor((w.end_s - self.t0) * self.rate_hz - 1e-9)) + 1
        i0 = max(i0, 0)
        i1 = min(i1, len(self))
        if i1 <= i0:
            raise ValueError(
                f"window [{w.start_s}, {w.end_s}] does not overlap signal "
                f"starting at {self.t0} with duration {self.duration_s:.3f}s"
            )
        return i0, i1


@dataclass(frozen=True)
class Window:
    """Closed time interval in epoch seconds; end must exceed start."""

    start_s: float
    end_s: float

    def __post_init__(self):
        if not self.end_s > self.start_s:
            raise ValueError(f"window end {self.end_s} must exceed start {self.start_s}")

    @property
    def duration_s(self) -> float:
        return self.end_s - self.start_s


def butterworth_lowpass(
    x: TimeSeries, cutoff_hz: float, order: int, zero_phase: bool = True
) -> TimeSeries:
    """Butterworth low-pass filter, zero-phase by default.

    Zero-phase filtering runs the second-order-section cascade forward and
    backward so peak timing is preserved (phase distortion would bias
    downstream interval estimates). ``zero_phase=False`` applies a single
    forward pass with the textbook one-pass magnitude response.
    """
    nyquist = x.rate_hz / 2.0
    if not 0 < cutoff_hz < nyquist:
        raise ValueError(
            f"cutoff {cutoff_hz} Hz must lie strictly below the Nyquist "
            f"frequency {nyquist} Hz (rate {x.rate_hz} Hz)"
        )
    if not 1 <= order <= 12:
        raise ValueError(f"order must be in 1..12, got {order}")
    sos = sps.butter(order, cutoff_hz, btype="low", fs=x.rate_hz, output="sos")
    if zero_phase:
        y = sps.sosfiltfilt(sos, x.samples)
    else:
        y = sps.sosfilt(sos, x.samples)
    return x.with_samples(np.asarray(y, dtype=float))


def hann_kernel(window_len: int) -> np.ndarray:
    """Hann window of ``window_len`` samples normalized to unit sum."""
    if window_len < 2:
        raise ValueError(f"window_len must be >= 2, got {window_len}")
    k = np.hanning(window_len)
    return k / k.sum()


def hanning_smooth(x: TimeSeries, window_len: int) -> TimeSeries:
    """Convolve with a unit-sum Hann kernel, length preserved.

    Edges are reflect-padded so short activity windows do not pick up
    boundary transients.
    """
    if window_len > len(x):
        raise ValueError(
            f"window_len {window_len} exceeds signal length {len(x)}"
        )
    k = hann_kernel(window_len)
    left = window_len // 2
    right = window_len - 1 - left
    padded = np.pad(x.samples, (left, right), mode="reflect")
    y = np.convolve(padded, k, mode="valid")
    return x.with_samples(y)


def gaussian_smooth_derivative(x: TimeSeries, sigma_s: float) -> TimeSeries:
    """First time derivative of the Gaussian-smoothed signal, in units/sec."""
    if not sigma_s > 0:
        raise ValueError(f"sigma_s must be positive, got {sigma_s}")
    sigma_samples = sigma_s * x.rate_hz
    d = ndimage.gaussian_filter1d(x.samples, sigma_samples, order=1, mode="reflect")
    return x.with_samples(d * x.rate_hz)


def zero_crossings(x: TimeSeries, level: float = 0.0) -> np.ndarray:
    """Indices where the signal crosses ``level``.

    A crossing is an index i where (x[i]-level) and (x[i+1]-level) have
    opposite signs. A sample exactly at the level counts once, at the first
    index of the run of exact hits; a run spanning the whole signal counts
    as no crossing.
    """
    s = np.sign(x.samples - level)
    n = s.size
    crossings: list[int] = []
    i = 0
    while i < n - 1:
        if s[i] == 0:
            j = i
            while j < n and s[j] == 0:
                j += 1
            # run of exact hits: one crossing unless the run is the whole signal
            if not (i == 0 and j == n):
                crossings.append(i)
            i = j
        elif s[i] * s[i + 1] < 0:
            crossings.append(i)
            i += 1
        else:
            i += 1
    return np.asarray(crossings, dtype=int)


def _plateau_local_maxima(x: np.ndarray) -> np.ndarray:
    """Indices of strict local maxima, plateaus reported at their left edge."""
    n = x.size
    maxima = []
    i = 1
    while i < n - 1:
        if x[i] > x[i - 1]:
            j = i
            while j < n - 1 and x[j + 1] == x[j]:
                j += 1
            if j < n - 1 and x[j + 1] < x[j]:
                maxima.append(i)
            i = j + 1
        else:
            i += 1
    return np.asarray(maxima, dtype=int)


def peak_prominences(x: np.ndarray, peaks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Prominences and left base indices for candidate ``peaks``.

    The prominence of a peak is its height above the higher of the two
    lowest points separating it from higher terrain on either side (the
    standard topographic definition).
    """
    if peaks.size == 0:
        return np.zeros(0), np.zeros(0, dtype=int)
    proms, _, lbases, _ = _prominence_data(x, peaks)
    return proms, lbases


def _prominence_data(x, peaks):
    prominences = np.empty(peaks.size)
    left_bases = np.empty(peaks.size, dtype=int)
    right_bases = np.empty(peaks.size, dtype=int)
    for k, p in enumerate(peaks):
        height = x[p]
        # walk left until higher terrain or the signal edge
        i = p
        left_min = height
        left_min_idx = p
        while i > 0:
            i -= 1
            if x[i] > height:
                break
            if x[i] < left_min:
                left_min = x[i]
                left_min_idx = i
        i = p
        right_min = height
        right_min_idx = p
        while i < x.size - 1:
            i += 1
            if x[i] > height:
                break
            if x[i] < right_min:
                right_min = x[i]
                right_min_idx = i
        prominences[k] = height - max(left_min, right_min)
        left_bases[k] = left_min_idx
        right_bases[k] = right_min_idx
    return prominences, peaks, left_bases, right_bases


def find_peaks(
    x: TimeSeries, min_prominence: float = 0.0, min_separation_s: float = 0.0
) -> np.ndarray:
    """Local maxima meeting prominence and separation requirements.

    Returns strictly increasing indices. When two candidates fall within
    the separation, the larger peak wins; equal heights resolve toward the
    earlier index.
    """
    if min_prominence < 0 or min_separation_s < 0:
        raise ValueError("min_prominence and min_separation_s must be >= 0")
    values = x.samples
    candidates = _plateau_local_maxima(values)
    if candidates.size == 0:
        return candidates
    proms, _ = peak_prominences(values, candidates)
    candidates = candidates[proms >= min_prominence]
    if candidates.size == 0 or min_separation_s == 0:
        return candidates
    min_gap = min_separation_s * x.rate_hz
    # greedy keep, tallest first, earlier index breaking height ties
    order = sorted(range(candidates.size), key=lambda k: (-values[candidates[k]], candidates[k]))
    keep = np.zeros(candidates.size, dtype=bool)
    kept_positions: list[int] = []
    for k in order:
        pos = candidates[k]
        if all(abs(pos - q) >= min_gap for q in kept_positions):
            keep[k] = True
            kept_positions.append(pos)
    return candidates[keep]


@dataclass
class PeakSet:
    """Peaks of a series together with prominences and onset (left base) indices."""

    indices: np.ndarray
    prominences: np.ndarray
    left_bases: np.ndarray
    times_s: np.ndarray = field(default=None)


def find_peaks_detailed(
    x: TimeSeries, min_prominence: float = 0.0, min_separation_s: float = 0.0
) -> PeakSet:
    """Like :func:`find_peaks` but also reports prominences and onsets."""
    idx = find_peaks(x, min_prominence, min_separation_s)
    proms, lbases = peak_prominences(x.samples, idx)
    return PeakSet(idx, proms, lbases, x.t0 + idx / x.rate_hz)
