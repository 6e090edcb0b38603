"""Line-defect metrics in cylindrical coordinates.

Every defect is described by a metric on ``(rho, phi, z)`` (plus the fifth
coordinate ``x`` for the Kaluza-Klein dispiration):

=================  ============================================================
Disclination       dz^2 + drho^2 + alpha^2 rho^2 dphi^2
DisclinationDisk   same as Disclination with alpha = 1 + q R^2 / 2 (exterior)
ScrewDislocation   (dz + beta dphi)^2 + drho^2 + rho^2 dphi^2
Dispiration        (dz + beta dphi)^2 + drho^2 + alpha^2 rho^2 dphi^2
KKDispiration      Dispiration + (dx - B0 rho^2 / 2 dphi)^2
=================  ============================================================

The disk exterior is written in the rescaled radial coordinate
``rho' = rho**alpha / alpha``; every radius passed to this package for that
variant is the rescaled one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, InteriorDiskWarning

TWO_PI = 2.0 * math.pi


def _check_finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")


def _check_alpha(alpha):
    _check_finite(alpha=alpha)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")


@dataclass(frozen=True)
class Disclination:
    """Single wedge disclination with deficit parameter ``alpha``."""

    alpha: float = 1.0
    kind = "Disclination"

    def __post_init__(self):
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class DisclinationDisk:
    """Uniform disk of disclinations: density ``q`` of deficit angles, radius ``R``."""

    q: float
    R: float
    kind = "DisclinationDisk"

    def __post_init__(self):
        _check_finite(q=self.q, R=self.R)
        if self.R <= 0:
            raise DomainError(f"disk radius R must be positive, got {self.R!r}")
        effective_alpha(self.q, self.R)

    @property
    def alpha(self):
        return effective_alpha(self.q, self.R)


@dataclass(frozen=True)
class ScrewDislocation:
    """Screw dislocation with torsion ``beta = b / 2pi`` and core flux ``phi``.

    ``phi`` is the internal magnetic flux; negative values are allowed and
    enter every formula unchanged.
    """

    beta: float = 0.0
    phi: float = 0.0
    kind = "ScrewDislocation"

    def __post_init__(self):
        _check_finite(beta=self.beta, phi=self.phi)

    @property
    def alpha(self):
        return 1.0


@dataclass(frozen=True)
class Dispiration:
    """Disclination and screw dislocation on the same line."""

    alpha: float = 1.0
    beta: float = 0.0
    kind = "Dispiration"

    def __post_init__(self):
        _check_alpha(self.alpha)
        _check_finite(beta=self.beta)


@dataclass(frozen=True)
class KKDispiration:
    """Dispiration with the magnetic field carried by a fifth metric dimension."""

    alpha: float = 1.0
    beta: float = 0.0
    kind = "KKDispiration"

    def __post_init__(self):
        _check_alpha(self.alpha)
        _check_finite(beta=self.beta)


Defect = Union[Disclination, DisclinationDisk, ScrewDislocation, Dispiration, KKDispiration]

VARIANTS = {
    cls.kind: cls
    for cls in (Disclination, DisclinationDisk, ScrewDislocation, Dispiration, KKDispiration)
}


def effective_alpha(q, R):
    """Deficit parameter of a single disclination equivalent to a disk of them.

    Seen from outside, a disk of radius ``R`` with uniform deficit-angle
    density ``q`` looks like one disclination with ``alpha = 1 + q R^2 / 2``.

    Raises
    ------
    DomainError
        If the resulting alpha is not positive.
    """
    alpha = 1.0 + 0.5 * q * R * R
    if not alpha > 0:
        raise DomainError(f"disk (q={q!r}, R={R!r}) gives non-positive alpha={alpha!r}")
    return alpha


def angular_scale(defect):
    """The factor ``alpha`` multiplying ``rho`` in the angular line element."""
    return float(defect.alpha)


def torsion(defect):
    """Screw parameter ``beta`` (zero for pure disclinations)."""
    return float(getattr(defect, "beta", 0.0))


def core_flux(defect):
    """Internal magnetic flux carried by the defect core."""
    return float(getattr(defect, "phi", 0.0))


def twisted_momentum(l, beta, k, flux=0.0):
    """Eigenvalue of ``-i(d_phi - beta d_z) + flux / 2pi`` on ``exp(i l phi + i k z)``.

    The torsion term and the flux are combined in flux units so that a flux of
    exactly ``2 pi beta k`` (see :func:`landau_defects.spectra.cancellation_flux`)
    leaves ``l`` bit-for-bit unchanged.
    """
    return l - (TWO_PI * (beta * k) - flux) / TWO_PI


@dataclass(frozen=True)
class MetricSample:
    """Covariant metric components at one radius (or an array of radii).

    Components that vanish for a variant are stored as zeros; ``g_xx`` and
    ``g_xphi`` are only nonzero for the Kaluza-Klein dispiration.
    """

    rho: float
    g_rhorho: float
    g_phiphi: float
    g_zz: float
    g_zphi: float
    g_xx: float
    g_xphi: float
    det: float
    sqrt_g: float


def _warn_interior(defect, rho):
    if isinstance(defect, DisclinationDisk) and np.any(np.asarray(rho) < defect.R):
        warnings.warn(
            f"radius below disk radius R={defect.R}: only the exterior metric is defined",
            InteriorDiskWarning,
            stacklevel=3,
        )


def metric_at(defect, rho, B0=None):
    """Evaluate the metric of ``defect`` at radius ``rho``.

    Parameters
    ----------
    defect : Defect
        Any of the defect variants.
    rho : float or numpy.ndarray
        Radius (rescaled radius for :class:`DisclinationDisk`); must be positive.
    B0 : float, optional
        Bare magnetic field, required for :class:`KKDispiration` whose metric
        contains the gauge potential.

    Returns
    -------
    MetricSample
    """
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(~(rho_arr > 0)):
        raise DomainError(f"metric evaluated at non-positive radius {rho!r}")
    _warn_interior(defect, rho_arr)
    scalar = rho_arr.ndim == 0

    alpha = angular_scale(defect)
    beta = torsion(defect)
    one = np.ones_like(rho_arr)
    zero = np.zeros_like(rho_arr)
    if isinstance(defect, KKDispiration):
        if B0 is None:
            raise DomainError("KKDispiration metric needs the bare field B0")
        gauge = 0.5 * B0 * rho_arr**2
        has_x = one
    else:
        gauge = zero
        has_x = zero

    # orthonormal coframe in (rho, phi, z, x), lower triangular:
    #   e1 = drho, e2 = alpha rho dphi, e3 = dz + beta dphi, e4 = dx - gauge dphi
    frame = np.zeros(rho_arr.shape + (4, 4))
    frame[..., 0, 0] = 1.0
    frame[..., 1, 1] = alpha * rho_arr
    frame[..., 2, 1] = beta
    frame[..., 2, 2] = 1.0
    frame[..., 3, 1] = -gauge * has_x
    frame[..., 3, 3] = has_x
    g = np.einsum("...ai,...aj->...ij", frame, frame)
    g_rr = g[..., 0, 0]
    g_pp = g[..., 1, 1]
    g_zz = g[..., 2, 2]
    g_zphi = g[..., 1, 2]
    g_xx = g[..., 3, 3]
    g_xphi = g[..., 1, 3]
    # determinant of the (rho, phi, z[, x]) block; the frame is triangular
    diag = np.diagonal(frame, axis1=-2, axis2=-1)
    sqrt_g = np.abs(diag[..., 0] * diag[..., 1] * diag[..., 2])
    if isinstance(defect, KKDispiration):
        sqrt_g = sqrt_g * np.abs(diag[..., 3])
    det = sqrt_g**2

    fields = [rho_arr, g_rr, g_pp, g_zz, g_zphi, g_xx, g_xphi, det, sqrt_g]
    if scalar:
        fields = [float(f) for f in fields]
    return MetricSample(*fields)


def volume_weight(defect, rho):
    """Transverse measure ``sqrt(g)`` used for radial normalization."""
    # alpha rho for every variant; the KK gauge block does not change it
    return metric_at(defect, rho, B0=0.0 if isinstance(defect, KKDispiration) else None).sqrt_g


@dataclass(frozen=True)
class SingularityData:
    """Strengths of the curvature and torsion delta functions on the defect line."""

    curvature_strength: float
    torsion_strength: float
    carries_curvature: bool
    carries_torsion: bool


def classify_singularity(defect):
    """Curvature ``2pi(1-alpha)/alpha`` and torsion ``2pi beta`` carried by the core."""
    alpha = angular_scale(defect)
    beta = torsion(defect)
    return SingularityData(
        curvature_strength=TWO_PI * (1.0 - alpha) / alpha,
        torsion_strength=TWO_PI * beta,
        carries_curvature=alpha != 1.0,
        carries_torsion=beta != 0.0,
    )
