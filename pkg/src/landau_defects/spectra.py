"""Closed-form Landau levels in the presence of line defects.

Natural units (hbar = m = c = 1).  Sign conventions follow the printed
formulas, which differ between scenarios:

==================  ==========================================  ===========
scenario            angular term                                hole (s=+1)
==================  ==========================================  ===========
Disclination        (|l| + s l) / alpha                         raises l>0
ScrewDislocation    |mu| - s mu,   mu = l - beta k + phi/2pi    raises mu<0
Dispiration         (|mu| - s mu) / alpha,  mu = l - beta k     raises mu<0
KKDispiration       (|mu| - mu) / alpha  (charge carried by Q)  --
==================  ==========================================  ===========

So the same physical particle has opposite ``charge_sign`` in the
disclination formula and in the screw/dispiration formulas.  Spectra taken
as sets over a symmetric ``l`` range do not depend on this.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .errors import DomainError
from .geometry import (
    TWO_PI,
    Disclination,
    DisclinationDisk,
    Dispiration,
    KKDispiration,
    ScrewDislocation,
    angular_scale,
    twisted_momentum,
)


@dataclass(frozen=True)
class FieldConfig:
    """Magnetic field data.

    ``omega`` is the cyclotron frequency; ``charge_sign`` is +1 for holes and
    -1 for electrons.  ``B0`` is the bare field of the Kaluza-Klein scenario,
    whose cyclotron frequency is ``B0 * Q``.
    """

    omega: float = 1.0
    charge_sign: int = -1
    B0: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"cyclotron frequency must be positive, got {self.omega!r}")
        if self.charge_sign not in (-1, 1):
            raise DomainError(f"charge_sign must be +1 or -1, got {self.charge_sign!r}")
        if self.B0 is not None and not math.isfinite(self.B0):
            raise DomainError(f"B0 must be finite, got {self.B0!r}")


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int
    k: float = 0.0
    Q: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"radial index n must be a non-negative integer, got {self.n!r}")
        if int(self.l) != self.l:
            raise DomainError(f"angular index l must be an integer, got {self.l!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "l", int(self.l))


@dataclass(frozen=True)
class EnergyLevel:
    E: float
    qn: QuantumNumbers
    scenario: str
    nu: float


def _require_alpha(alpha):
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")


def _twisted_energy(omega, alpha, mu, s, n):
    return (omega / alpha) * (n + (abs(mu) - s * mu) / (2 * alpha) + 0.5)


def energy_disclination(alpha, field, qn):
    """``(omega / 2 alpha)(2n + (|l| + s l) / alpha + 1) + k^2 / 2``."""
    _require_alpha(alpha)
    s = field.charge_sign
    l = qn.l
    E = (field.omega / (2 * alpha)) * (2 * qn.n + (abs(l) + s * l) / alpha + 1) + 0.5 * qn.k**2
    return EnergyLevel(E, qn, "Disclination", abs(l) / alpha)


def energy_screw(beta, phi, field, qn):
    """``omega (n + (|mu| - s mu) / 2 + 1/2) + k^2 / 2`` with ``mu = l - beta k + phi / 2pi``."""
    mu = twisted_momentum(qn.l, beta, qn.k, phi)
    E = _twisted_energy(field.omega, 1.0, mu, field.charge_sign, qn.n) + 0.5 * qn.k**2
    return EnergyLevel(E, qn, "ScrewDislocation", abs(mu))


def energy_dispiration(alpha, beta, field, qn):
    """``(omega/alpha)(n + (|mu| - s mu) / 2alpha + 1/2) + k^2 / 2`` with ``mu = l - beta k``."""
    _require_alpha(alpha)
    mu = twisted_momentum(qn.l, beta, qn.k)
    E = _twisted_energy(field.omega, alpha, mu, field.charge_sign, qn.n) + 0.5 * qn.k**2
    return EnergyLevel(E, qn, "Dispiration", abs(mu) / alpha)


def energy_kaluza_klein(alpha, beta, B0, qn):
    """Dispiration levels at ``omega = B0 Q`` (hole-sign form) plus ``Q^2 / 2``."""
    _require_alpha(alpha)
    w = B0 * qn.Q
    if not w > 0:
        raise DomainError(f"B0*Q = {w!r} is not positive: no bound radial states (B0={B0!r}, Q={qn.Q!r})")
    mu = twisted_momentum(qn.l, beta, qn.k)
    E = _twisted_energy(w, alpha, mu, 1, qn.n) + 0.5 * qn.k**2 + 0.5 * qn.Q**2
    return EnergyLevel(E, qn, "KKDispiration", abs(mu) / alpha)


def cancellation_flux(beta, k):
    """Core flux ``2 pi beta k`` that removes the torsion coupling at momentum ``k``."""
    return TWO_PI * (beta * k)


def energy(defect, field, qn):
    """Dispatch to the closed-form spectrum of ``defect``."""
    if isinstance(defect, (Disclination, DisclinationDisk)):
        level = energy_disclination(angular_scale(defect), field, qn)
    elif isinstance(defect, ScrewDislocation):
        level = energy_screw(defect.beta, defect.phi, field, qn)
    elif isinstance(defect, Dispiration):
        level = energy_dispiration(defect.alpha, defect.beta, field, qn)
    elif isinstance(defect, KKDispiration):
        if field.B0 is None:
            raise DomainError("KKDispiration needs FieldConfig.B0")
        level = energy_kaluza_klein(defect.alpha, defect.beta, field.B0, qn)
    else:
        raise DomainError(f"unknown defect {defect!r}")
    if level.scenario != defect.kind:
        level = EnergyLevel(level.E, level.qn, defect.kind, level.nu)
    return level


def level_scale(defect, field, Q=0.0):
    """Cyclotron frequency setting the level spacing (``B0 Q`` for Kaluza-Klein)."""
    if isinstance(defect, KKDispiration):
        return field.B0 * Q
    return field.omega


@dataclass
class Cluster:
    """Levels whose energies agree within the clustering tolerance."""

    energy: float
    members: list = dc_field(default_factory=list)

    @property
    def degeneracy(self):
        return len(self.members)


def enumerate_levels(defect, field, n_max, l_range, k=0.0, Q=0.0, complete=True):
    """All levels with ``0 <= n <= n_max`` and ``l`` in ``l_range`` (inclusive pair).

    With ``complete=True`` only levels lying strictly below the lowest
    ``n_max + 1`` level are returned.  Above that energy the enumeration misses
    members with larger ``n`` and degeneracies would be wrong.
    """
    l_lo, l_hi = l_range
    if n_max < 0 or l_hi < l_lo:
        raise DomainError(f"empty quantum-number range: n_max={n_max}, l in [{l_lo}, {l_hi}]")
    ls = range(int(l_lo), int(l_hi) + 1)
    levels = [
        energy(defect, field, QuantumNumbers(n, l, k, Q))
        for n in range(int(n_max) + 1)
        for l in ls
    ]
    if complete:
        ceiling = min(energy(defect, field, QuantumNumbers(n_max + 1, l, k, Q)).E for l in ls)
        slack = 1e-9 * level_scale(defect, field, Q)
        levels = [lv for lv in levels if lv.E < ceiling - slack]
    return levels


def cluster_levels(levels, tolerance):
    """Single-link grouping of sorted energies: neighbours closer than ``tolerance`` join."""
    if not tolerance > 0:
        raise DomainError(f"energy tolerance must be positive, got {tolerance!r}")
    ordered = sorted(levels, key=lambda lv: (lv.E, lv.qn.l, lv.qn.n))
    clusters = []
    last = None
    for lv in ordered:
        if last is None or lv.E - last >= tolerance:
            clusters.append(Cluster(lv.E))
        clusters[-1].members.append((lv.qn.n, lv.qn.l))
        last = lv.E
    return clusters


def degeneracy_report(defect, field, n_max, l_range, k=0.0, Q=0.0, energy_tolerance=None, complete=True):
    """Group the enumerated levels into degenerate clusters.

    Each cluster's ``energy`` is its lowest member; ``members`` lists ``(n, l)``.
    The default tolerance is ``1e-9`` times the cyclotron frequency.
    """
    if energy_tolerance is None:
        energy_tolerance = 1e-9 * level_scale(defect, field, Q)
    levels = enumerate_levels(defect, field, n_max, l_range, k, Q, complete=complete)
    return cluster_levels(levels, energy_tolerance)
