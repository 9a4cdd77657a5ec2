"""Wearable and ambient sensor analytics for automated cognitive health assessment.

Subpackages cover the full chain from raw sensor records to cohort-level
reports: generic DSP primitives, electrodermal activity cleaning and
tonic/phasic decomposition, photoplethysmography beat detection and
heart-rate variability, wrist-accelerometer gesture and posture recognition,
hidden-chain decoding of complex daily activities, and the statistical and
machine-learning assessment layer.
"""

from cogniwear.signals import TimeSeries, Window

__all__ = ["TimeSeries", "Window"]

__version__ = "0.1.0"
