"""Uniform time grid, scaled FFT pair, and discrete L2 / Sobolev norms.

Conventions, fixed once and used everywhere:

* samples sit at ``t_k = k dt`` with ``dt = t_max / n``;
* bin ``k`` carries the angular frequency ``xi_k = 2 pi k~ / (n dt)`` with
  ``k~ = k`` for ``k < n/2`` and ``k~ = k - n`` otherwise, so for even ``n``
  the Nyquist bin ``n/2`` sits at the most negative frequency ``-pi/dt``;
* the forward transform is ``coeffs = dt / sqrt(2 pi) * FFT(samples)``, the
  Riemann-sum approximation of the unitary continuous transform;
* quadrature weights are ``dt`` per time sample and ``dxi = 2 pi / t_max``
  per frequency bin.  With this pairing the discrete Parseval identity
  ``l2_norm(s)^2 == sum_k dxi |dft(s)_k|^2`` holds exactly (up to rounding).

Multipliers (transfer functions sampled on the bin frequencies) are applied
through :func:`apply_multiplier`, which forces a real gain on the Nyquist
bin: that bin aliases the pair ``+-pi/dt``, a real signal cannot carry phase
there, and using the modulus keeps reciprocal symbol pairs exactly inverse
to each other through a forward/backward round trip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "SymmetryError",
    "TimeGrid",
    "RealSignal",
    "Spectrum",
    "dft",
    "idft",
    "l2_norm",
    "hp_norm",
    "multiplier_values",
    "apply_multiplier",
]

# Relative size of the imaginary residue tolerated when a spectrum is
# brought back to the time domain.
_IMAG_GUARD = 1e-8


class SymmetryError(RuntimeError):
    """A spectrum expected to be Hermitian produced a complex time signal."""


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling of the window ``[0, t_max)`` with ``n`` points.

    ``n`` must be a power of two, at least 8.
    """

    n: int
    t_max: float

    def __post_init__(self) -> None:
        if self.n < 8 or (self.n & (self.n - 1)) != 0:
            raise ValueError(f"n must be a power of two >= 8, got {self.n!r}")
        if not (math.isfinite(self.t_max) and self.t_max > 0.0):
            raise ValueError(f"t_max must be a positive finite real, got {self.t_max!r}")

    @property
    def dt(self) -> float:
        return self.t_max / self.n

    @property
    def dxi(self) -> float:
        """Frequency-bin quadrature weight ``2 pi / t_max``."""
        return 2.0 * math.pi / self.t_max

    def times(self) -> np.ndarray:
        return np.arange(self.n) * self.dt

    def frequencies(self) -> np.ndarray:
        """Angular bin frequencies in FFT storage order."""
        return 2.0 * math.pi * np.fft.fftfreq(self.n, d=self.dt)

    def freq(self, k: int) -> float:
        return float(self.frequencies()[k])


@dataclass(frozen=True)
class RealSignal:
    """Real-valued samples on a :class:`TimeGrid`."""

    grid: TimeGrid
    samples: np.ndarray

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=float)
        if samples.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} samples, got shape {samples.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise ValueError("signal samples must all be finite")
        object.__setattr__(self, "samples", samples)


@dataclass(frozen=True)
class Spectrum:
    """Complex DFT coefficients in FFT storage order on a :class:`TimeGrid`.

    Spectra obtained from :func:`dft` of a :class:`RealSignal` are Hermitian,
    ``coeffs[n-k] == conj(coeffs[k])``; :func:`idft` enforces that through
    its imaginary-residue guard.
    """

    grid: TimeGrid
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} coefficients, got shape {coeffs.shape}"
            )
        if not np.all(np.isfinite(coeffs.view(float))):
            raise ValueError("spectrum coefficients must all be finite")
        object.__setattr__(self, "coeffs", coeffs)

    def frequencies(self) -> np.ndarray:
        return self.grid.frequencies()

    def freq(self, k: int) -> float:
        return self.grid.freq(k)


def dft(signal: RealSignal) -> Spectrum:
    """Forward transform, ``coeffs = dt / sqrt(2 pi) * FFT(samples)``."""
    scale = signal.grid.dt / math.sqrt(2.0 * math.pi)
    return Spectrum(signal.grid, scale * np.fft.fft(signal.samples))


def idft(spectrum: Spectrum) -> RealSignal:
    """Inverse transform back to real samples.

    Raises :class:`SymmetryError` when the largest imaginary residue of the
    inverse transform exceeds ``1e-8`` times the spectrum norm, which happens
    whenever the coefficients are not Hermitian.
    """
    scale = math.sqrt(2.0 * math.pi) / spectrum.grid.dt
    values = scale * np.fft.ifft(spectrum.coeffs)
    residual = float(np.max(np.abs(values.imag)))
    norm = math.sqrt(spectrum.grid.dxi * float(np.sum(np.abs(spectrum.coeffs) ** 2)))
    if residual > _IMAG_GUARD * norm:
        raise SymmetryError(
            f"imaginary residue {residual:.3e} exceeds {_IMAG_GUARD:g} * "
            f"spectrum norm {norm:.3e}; coefficients are not Hermitian"
        )
    return RealSignal(spectrum.grid, values.real)


def l2_norm(signal: RealSignal) -> float:
    """Rectangle-rule L2 norm, ``sqrt(dt * sum(samples^2))``."""
    return math.sqrt(signal.grid.dt * float(np.sum(signal.samples**2)))


def hp_norm(spectrum: Spectrum, p: float) -> float:
    """Discrete Sobolev norm ``sqrt(sum_k dxi |c_k|^2 (1 + xi_k^2)^p)``.

    ``p = 0`` reduces to the Parseval partner of :func:`l2_norm`.
    """
    if not (math.isfinite(p) and p >= 0.0):
        raise ValueError(f"smoothness order p must be >= 0, got {p!r}")
    xi = spectrum.frequencies()
    weights = (1.0 + xi * xi) ** p
    return math.sqrt(
        spectrum.grid.dxi * float(np.sum(weights * np.abs(spectrum.coeffs) ** 2))
    )


def multiplier_values(grid: TimeGrid, fn: Callable[[float], complex]) -> np.ndarray:
    """Sample a scalar symbol on the bin frequencies of ``grid``.

    The Nyquist bin of an even-length grid is replaced by the symbol's
    modulus there (see the module docstring for why a real gain is required).
    """
    values = np.array([fn(float(xi)) for xi in grid.frequencies()], dtype=complex)
    half = grid.n // 2
    values[half] = abs(values[half])
    return values


def apply_multiplier(spectrum: Spectrum, fn: Callable[[float], complex]) -> Spectrum:
    """Multiply a spectrum bin-wise by a sampled symbol."""
    return Spectrum(spectrum.grid, spectrum.coeffs * multiplier_values(spectrum.grid, fn))
