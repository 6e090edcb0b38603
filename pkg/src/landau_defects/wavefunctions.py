"""Analytic radial eigenfunctions.

Every scenario's radial factor has the form

    R(rho) = C exp(-w rho^2 / 2) rho^nu F(-n, nu + 1, w rho^2)

with ``w = omega_eff / (2 alpha)`` (``omega_eff = B0 Q`` for Kaluza-Klein)
and ``nu`` the effective angular index.  Both follow from the radial
operator of :mod:`landau_defects.oracle`: ``nu = |J|`` and ``w = sqrt(C2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import integrate

from .errors import DomainError, NumericalError
from .geometry import KKDispiration, _warn_interior, angular_scale, torsion, core_flux, twisted_momentum, volume_weight
from .special import KummerPoly, kummer_poly
from .spectra import level_scale


@dataclass(frozen=True)
class RadialProfile:
    scenario: str
    n: int
    l: int
    k: float
    Q: float
    nu: float
    w: float
    poly: KummerPoly
    defect: object
    C: float = 1.0
    normalized: bool = False

    def shape(self, rho):
        """Unnormalized profile ``exp(-w rho^2/2) rho^nu F(-n, nu+1, w rho^2)``."""
        rho = np.asarray(rho, dtype=float)
        return np.exp(-0.5 * self.w * rho**2) * rho**self.nu * self.poly(self.w * rho**2)

    def __call__(self, rho):
        return self.C * self.shape(rho)

    def weight(self, rho):
        return volume_weight(self.defect, rho)

    def density(self, rho):
        """Radial probability density ``|R|^2 sqrt(g)``."""
        return self(rho) ** 2 * self.weight(rho)

    @property
    def rho_cut(self):
        """Radius beyond which the Gaussian tail is negligible."""
        turning = math.sqrt(2.0 * (2 * self.n + self.nu + 1) / self.w)
        return max(3.0 * turning, 10.0 / math.sqrt(self.w))


def radial_eigenfunction(defect, field, n, l, k=0.0, Q=0.0):
    """Unnormalized radial eigenfunction (``C = 1``) for quantum numbers ``(n, l, k, Q)``."""
    if int(n) != n or n < 0:
        raise DomainError(f"radial index must be a non-negative integer, got {n!r}")
    alpha = angular_scale(defect)
    if isinstance(defect, KKDispiration):
        omega = level_scale(defect, field, Q) if field.B0 is not None else None
        if omega is None or not omega > 0:
            raise DomainError(f"KK configuration is not bound (B0={field.B0!r}, Q={Q!r})")
    else:
        omega = field.omega
        Q = 0.0
    mu = twisted_momentum(int(l), torsion(defect), k, core_flux(defect))
    nu = abs(mu) / alpha
    return RadialProfile(
        scenario=defect.kind,
        n=int(n),
        l=int(l),
        k=float(k),
        Q=float(Q),
        nu=nu,
        w=omega / (2.0 * alpha),
        poly=kummer_poly(int(n), nu + 1.0),
        defect=defect,
    )


def _integrate(func, profile):
    _warn_interior(profile.defect, 0.0)
    # split at the polynomial's roots so quad sees smooth pieces
    roots = np.sqrt(profile.poly.roots() / profile.w) if profile.n else np.empty(0)
    edges = [0.0, *[r for r in roots if 0 < r < profile.rho_cut], profile.rho_cut]
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(func, a, b, epsabs=0.0, epsrel=1e-13, limit=200)
        total += val
    return total


def inner_product(a, b):
    """Weighted overlap ``int R_a R_b sqrt(g) drho`` on ``(0, rho_cut]``."""
    cut = max(a.rho_cut, b.rho_cut)
    probe = a if a.rho_cut >= b.rho_cut else b
    roots = sorted(
        set(np.sqrt(a.poly.roots() / a.w)) | set(np.sqrt(b.poly.roots() / b.w))
    )
    edges = [0.0, *[r for r in roots if 0 < r < cut], cut]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(lambda r: a(r) * b(r) * probe.weight(r), lo, hi, epsabs=1e-15, epsrel=1e-12, limit=200)
        total += val
    return total


def normalize(profile):
    """Return ``profile`` with ``C > 0`` such that ``int |R|^2 sqrt(g) drho = 1``.

    Raises
    ------
    NumericalError
        If the norm integral is not finite and positive.
    """
    norm2 = _integrate(lambda r: profile(r) ** 2 * profile.weight(r), profile)
    if not (math.isfinite(norm2) and norm2 > 0):
        raise NumericalError(f"profile norm integral is {norm2!r}; not square integrable")
    return replace(profile, C=profile.C / math.sqrt(norm2), normalized=True)


def node_grid(profile, rho_min=None):
    """Sampling radii whose spacing is at most a quarter of the smallest root gap."""
    cut = profile.rho_cut
    step = cut / 2000.0
    if profile.n > 0:
        roots = np.sqrt(np.clip(profile.poly.roots(), 0.0, None) / profile.w)
        gaps = np.diff(np.concatenate([[0.0], roots]))
        if gaps.size:
            step = min(step, gaps.min() / 4.0)
    lo = step / 2 if rho_min is None else rho_min
    npts = int(math.ceil((cut - lo) / step)) + 1
    return np.linspace(lo, cut, npts)


def count_nodes(profile):
    """Strict sign changes of ``R`` on ``(rho_min, rho_cut)``."""
    values = profile(node_grid(profile))
    signs = np.sign(values)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
