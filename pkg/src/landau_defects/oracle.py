"""Finite-difference eigensolver for the radial problem of every scenario.

With ``psi = R(rho) exp(i l phi + i k z [+ i p_x x])`` the Laplace-Beltrami
operator of each defect metric, minimally coupled to the uniform field,
reduces to

    2E R = -R'' - R'/rho + (m0 + m2 rho^2)^2 / (alpha rho)^2 R + (k^2 + Q^2) R

where ``m0`` is the twisted angular momentum and ``m2 rho^2`` the gauge
term.  Expanding the square gives the canonical form stored in
:class:`RadialProblem`: with ``u = sqrt(rho) R``,

    -u'' + [(J^2 - 1/4) / rho^2 + C2 rho^2] u = (2E - C0) u.

Nothing here uses the closed-form spectra; the module only shares the
metric data with :mod:`landau_defects.geometry`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from ._sturm import tridiagonal_eigenvalues
from .errors import DomainError, GridError
from .geometry import (
    Disclination,
    DisclinationDisk,
    KKDispiration,
    angular_scale,
    core_flux,
    metric_at,
    torsion,
    twisted_momentum,
    _warn_interior,
)


@dataclass(frozen=True)
class RadialProblem:
    """Canonical radial operator; ``J`` may be negative, only ``J**2`` and ``|J|`` matter."""

    J: float
    C0: float
    C2: float
    scenario: str
    l: int
    k: float = 0.0
    Q: float = 0.0

    def __post_init__(self):
        if not self.C2 > 0:
            raise DomainError(f"radial problem is not confining (C2={self.C2!r})")

    def turning_point(self, eigenvalue):
        """Outer classical turning point for an eigenvalue of the ``u`` operator (``2E - C0``)."""
        lam = eigenvalue
        disc = max(lam * lam - 4.0 * self.C2 * self.J**2, 0.0)
        return math.sqrt(max(lam + math.sqrt(disc), 0.0) / (2.0 * self.C2))

    def default_rho_max(self, n_max):
        """Three times the turning radius of the ``n_max`` state of the oscillator."""
        w = math.sqrt(self.C2)
        return 3.0 * math.sqrt(2.0 * (2 * n_max + abs(self.J) + 1) / w)


@dataclass(frozen=True)
class GridSpec:
    N: int = 2048
    rho_max: float = 10.0

    def __post_init__(self):
        if self.N < 64:
            raise GridError(f"grid needs at least 64 points, got N={self.N}")
        if not self.rho_max > 0:
            raise GridError(f"rho_max must be positive, got {self.rho_max!r}")

    @property
    def h(self):
        return self.rho_max / self.N

    def refined(self, factor=2):
        return GridSpec(self.N * factor, self.rho_max)


def _magnetic_coupling(defect, field, Q):
    # signed (charge x field); orientation chosen so each scenario reproduces
    # its printed sign convention (see the table in landau_defects.spectra)
    if isinstance(defect, KKDispiration):
        if field.B0 is None:
            raise DomainError("KKDispiration needs FieldConfig.B0")
        # the charge is Q and enters the metric through p_x = -Q
        return -Q * 2.0 * metric_at(defect, 1.0, B0=field.B0).g_xphi
    if isinstance(defect, (Disclination, DisclinationDisk)):
        return -field.charge_sign * field.omega
    return field.charge_sign * field.omega


def build_radial_problem(defect, field, l, k=0.0, Q=0.0):
    """Reduce the scenario's Schroedinger equation to a :class:`RadialProblem`.

    Raises
    ------
    DomainError
        When the configuration does not confine (``B0 Q <= 0`` for Kaluza-Klein).
    """
    if int(l) != l:
        raise DomainError(f"angular index must be an integer, got {l!r}")
    alpha = angular_scale(defect)
    m0 = twisted_momentum(int(l), torsion(defect), k, core_flux(defect))
    coupling = _magnetic_coupling(defect, field, Q)
    if isinstance(defect, KKDispiration) and not coupling > 0:
        raise DomainError(f"B0*Q = {coupling!r} does not bind (B0={field.B0!r}, Q={Q!r})")
    m2 = -0.5 * coupling
    extra = k * k + (Q * Q if isinstance(defect, KKDispiration) else 0.0)
    return RadialProblem(
        J=m0 / alpha,
        C0=extra + 2.0 * m0 * m2 / (alpha * alpha),
        C2=(m2 / alpha) ** 2,
        scenario=defect.kind,
        l=int(l),
        k=float(k),
        Q=float(Q) if isinstance(defect, KKDispiration) else 0.0,
    )


def grid_points(grid, scheme="factored"):
    """Radii at which the discrete solution lives."""
    if scheme == "factored":
        return (np.arange(grid.N) + 0.5) * grid.h
    if scheme == "liouville":
        h = grid.rho_max / (grid.N + 1)
        return h * np.arange(1, grid.N + 1)
    raise ValueError(f"unknown scheme {scheme!r}")


def _cell_volumes(p, rc, h):
    # int_cell rho^p drho / (h rc^p), via expm1/log1p so neither large p nor
    # thin outer cells lose digits; the first cell gives 2^p / (p + 1)
    x = 0.5 * h / rc
    with np.errstate(divide="ignore"):
        hi = np.expm1((p + 1.0) * np.log1p(x))
        lo = np.expm1((p + 1.0) * np.log1p(-x))
    return (hi - lo) / ((p + 1.0) * 2.0 * x)


def _factored_matrix(problem, grid):
    # R = rho^|J| f; -(rho^p f')'/rho^p + C2 rho^2 f with p = 2|J| + 1, cell
    # centred finite volumes with exact cell volumes, symmetrized by the
    # square root of the (diagonal) mass; weights kept as ratios so large |J|
    # does not underflow
    h = grid.h
    p = 2.0 * abs(problem.J) + 1.0
    rc = grid_points(grid, "factored")
    rf = (np.arange(grid.N) + 1.0) * h
    mass = _cell_volumes(p, rc, h)
    right = (rf / rc) ** p / mass
    left = np.zeros(grid.N)
    left[1:] = (rf[:-1] / rc[1:]) ** p / mass[1:]
    diag = (right + left) / h**2 + problem.C2 * rc**2
    diag[-1] += right[-1] / h**2  # Dirichlet at rho_max, ghost value -f_N
    off = -((rf[:-1] ** 2 / (rc[:-1] * rc[1:])) ** (0.5 * p)) / (h**2 * np.sqrt(mass[:-1] * mass[1:]))
    return diag, off, right, left


def _liouville_matrix(problem, grid):
    r = grid_points(grid, "liouville")
    h = r[0]
    diag = 2.0 / h**2 + (problem.J**2 - 0.25) / r**2 + problem.C2 * r**2
    off = np.full(grid.N - 1, -1.0 / h**2)
    return diag, off


def solve_eigenvalues(problem, count, grid, scheme="factored"):
    """Lowest ``count`` energies of ``problem`` on ``grid``.

    Parameters
    ----------
    problem : RadialProblem
    count : int
        Number of eigenvalues, at most ``grid.N // 4``.
    grid : GridSpec
    scheme : {"factored", "liouville"}
        ``"factored"`` (default) strips the regular power ``rho^|J|`` and is
        second order for every ``J``.  ``"liouville"`` is plain central
        differences on ``u = sqrt(rho) R`` with Dirichlet ends, which
        converges badly for ``|J| < 1/2``.

    Returns
    -------
    numpy.ndarray
        Energies ``E = (eigenvalue + C0) / 2`` in ascending order.

    Raises
    ------
    GridError
        If the outer turning point of the highest requested state lies
        beyond ``grid.rho_max``.
    """
    if count < 1 or count > grid.N // 4:
        raise GridError(f"count={count} must be between 1 and N/4={grid.N // 4}")
    if scheme == "factored":
        diag, off, _, _ = _factored_matrix(problem, grid)
    elif scheme == "liouville":
        diag, off = _liouville_matrix(problem, grid)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    lam = tridiagonal_eigenvalues(diag, off, 0, count)
    rho_t = problem.turning_point(lam[-1])
    if rho_t >= grid.rho_max:
        raise GridError(
            f"turning point {rho_t:.6g} of state {count - 1} lies beyond rho_max={grid.rho_max:.6g}",
            required_rho_max=3.0 * rho_t,
        )
    return 0.5 * (lam + problem.C0)


def solve_richardson(problem, count, grid, scheme="factored"):
    """Eigenvalues on ``grid`` and its doubling, extrapolated assuming O(h^2) error."""
    coarse = solve_eigenvalues(problem, count, grid, scheme)
    fine = solve_eigenvalues(problem, count, grid.refined(), scheme)
    return (4.0 * fine - coarse) / 3.0


def apply_radial_operator(problem, grid, values):
    """Discrete ``H R`` at the factored-scheme grid points for samples ``values`` of ``R``."""
    rc = grid_points(grid, "factored")
    R = np.asarray(values, dtype=float)
    a = abs(problem.J)
    f = R / rc**a
    _, _, right, left = _factored_matrix(problem, grid)
    h2 = grid.h**2
    f_next = np.append(f[1:], -f[-1])
    f_prev = np.insert(f[:-1], 0, 0.0)
    Lf = (right * (f - f_next) + left * (f - f_prev)) / h2 + problem.C2 * rc**2 * f
    return 0.5 * (rc**a * Lf + problem.C0 * R)


@dataclass(frozen=True)
class ValidationRow:
    n: int
    l: int
    k: float
    Q: float
    E_analytic: float
    E_oracle: float
    abs_dev: float
    rel_dev: float
    passed: bool
    note: str = ""


@dataclass
class ValidationReport:
    tol: float
    rows: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return bool(self.rows) and all(r.passed for r in self.rows)

    @property
    def max_abs_dev(self):
        return max((r.abs_dev for r in self.rows), default=0.0)

    @property
    def max_rel_dev(self):
        return max((r.rel_dev for r in self.rows), default=0.0)

    def summary(self):
        failed = sum(not r.passed for r in self.rows)
        return (
            f"{len(self.rows) - failed}/{len(self.rows)} rows pass at rel tol {self.tol:g}; "
            f"max |dE| = {self.max_abs_dev:.3e}, max rel = {self.max_rel_dev:.3e}"
        )


def cross_validate(
    defect,
    field,
    n_max,
    l_list,
    k=0.0,
    Q=0.0,
    tol=1e-6,
    N=2048,
    rho_max=None,
    richardson=True,
    energy_fn=None,
    scheme="factored",
):
    """Compare closed-form energies with oracle eigenvalues.

    For every ``l`` the first ``n_max + 1`` oracle eigenvalues are matched
    against ``energy_fn(defect, field, QuantumNumbers)`` (default
    :func:`landau_defects.spectra.energy`).  Failures, including grid errors,
    are recorded in the report rather than raised.
    """
    from .spectra import QuantumNumbers, energy

    energy_fn = energy if energy_fn is None else energy_fn
    report = ValidationReport(tol=tol)
    for l in l_list:
        problem = build_radial_problem(defect, field, l, k, Q)
        grid = GridSpec(N, rho_max if rho_max is not None else problem.default_rho_max(n_max))
        _warn_interior(defect, grid_points(grid, scheme)[0])
        note = ""
        try:
            if richardson:
                E_oracle = solve_richardson(problem, n_max + 1, grid, scheme)
            else:
                E_oracle = solve_eigenvalues(problem, n_max + 1, grid, scheme)
        except GridError as exc:
            E_oracle = np.full(n_max + 1, np.nan)
            note = str(exc)
        for n in range(n_max + 1):
            Ea = energy_fn(defect, field, QuantumNumbers(n, l, k, Q)).E
            Eo = float(E_oracle[n])
            if math.isfinite(Eo):
                dev = abs(Ea - Eo)
                rel = dev / max(abs(Ea), 1e-300)
            else:
                dev = rel = math.inf
            ok = bool(rel <= tol)
            report.rows.append(
                ValidationRow(n, int(l), float(k), float(Q), Ea, Eo, dev, rel, ok, note)
            )
    return report
