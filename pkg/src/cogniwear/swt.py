"""Stationary (undecimated) Haar wavelet transform and artifact suppression.

Skin-conductance records pick up steep-rise motion artifacts. Those
transients concentrate in large detail coefficients of an undecimated Haar
transform, so clamping super-threshold coefficients removes them while the
slow tonic/phasic structure passes through untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cogniwear.signals import TimeSeries

_SQRT2 = np.sqrt(2.0)


@dataclass
class SwtDecomposition:
    """Per-level approximation/detail coefficients of a Haar SWT.

    Coefficient arrays cover the internally padded support (a multiple of
    2**levels); ``n_samples`` remembers the original length so the inverse
    can trim back. ``rate_hz``/``t0`` carry the series metadata through.
    """

    levels: int
    approx_coeffs: list[np.ndarray]
    detail_coeffs: list[np.ndarray]
    n_samples: int
    rate_hz: float
    t0: float


def _even_extension(x: np.ndarray, block: int) -> np.ndarray:
    """Mirror-extend ``x`` to a multiple of ``block``, continuous when wrapped.

    The signal is first padded symmetrically up to a multiple of ``block``
    and then concatenated with its own reversal, so the circular transform
    sees no seam discontinuities at either end.
    """
    rem = x.size % block
    if rem:
        x = np.pad(x, (0, block - rem), mode="symmetric")
    return np.concatenate([x, x[::-1]])


def swt_forward(x: TimeSeries, levels: int) -> SwtDecomposition:
    """Undecimated Haar analysis of ``x`` over ``levels`` scales.

    The input is mirror-padded to a multiple of 2**levels and treated as
    circular, which makes the transform exactly invertible.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if 2**levels > len(x):
        raise ValueError(
            f"levels {levels} too deep for a signal of {len(x)} samples"
        )
    padded = _even_extension(x.samples, 2**levels)
    approx: list[np.ndarray] = []
    detail: list[np.ndarray] = []
    a = padded.astype(float)
    for j in range(levels):
        shift = 2**j
        rolled = np.roll(a, -shift)
        approx.append((a + rolled) / _SQRT2)
        detail.append((a - rolled) / _SQRT2)
        a = approx[-1]
    return SwtDecomposition(levels, approx, detail, len(x), x.rate_hz, x.t0)


def swt_inverse(dec: SwtDecomposition) -> TimeSeries:
    """Reconstruct the signal, averaging the two shift-variant inverses."""
    a = dec.approx_coeffs[-1]
    for j in range(dec.levels - 1, -1, -1):
        d = dec.detail_coeffs[j]
        shift = 2**j
        direct = (a + d) / _SQRT2
        shifted = (np.roll(a, shift) - np.roll(d, shift)) / _SQRT2
        a = (direct + shifted) / 2.0
    return TimeSeries(a[: dec.n_samples], dec.rate_hz, dec.t0)


def default_levels(n: int, cap: int = 5) -> int:
    """Decomposition depth used across the library: min(cap, floor(log2 n))."""
    return min(cap, int(np.floor(np.log2(n))))


def swt_denoise(x: TimeSeries, levels: int | None = None) -> TimeSeries:
    """Suppress steep-rise transients via per-level coefficient clamping.

    Each detail level gets a robust threshold sigma * sqrt(2 ln N) with
    sigma = median(|detail|)/0.6745; coefficients beyond the threshold are
    clamped to it, which subtracts the reconstructed transient excess from
    the signal. Output is clamped at zero wherever the input was
    non-negative, so conductance stays physical.
    """
    if len(x) < 16:
        raise ValueError(f"signal too short to denoise: {len(x)} < 16 samples")
    if levels is None:
        levels = default_levels(len(x))
    dec = swt_forward(x, levels)
    n = len(x)
    limit = np.sqrt(2.0 * np.log(n))
    for j in range(levels):
        d = dec.detail_coeffs[j]
        sigma = np.median(np.abs(d)) / 0.6745
        threshold = sigma * limit
        dec.detail_coeffs[j] = np.clip(d, -threshold, threshold)
    y = swt_inverse(dec)
    samples = y.samples
    if np.all(x.samples >= 0):
        samples = np.maximum(samples, 0.0)
    return x.with_samples(samples)
