import math
import random

import numpy as np
import pytest

from landau_defects import (
    Disclination,
    DisclinationDisk,
    Dispiration,
    DomainError,
    FieldConfig,
    GridSpec,
    InteriorDiskWarning,
    KKDispiration,
    ScrewDislocation,
    build_radial_problem,
    count_nodes,
    normalize,
    radial_eigenfunction,
)
from landau_defects.oracle import apply_radial_operator, grid_points
from landau_defects.spectra import QuantumNumbers, energy
from landau_defects.wavefunctions import inner_product

ELECTRON = FieldConfig(1.0, -1)
HOLE = FieldConfig(1.0, 1)
KK_FIELD = FieldConfig(1.0, 1, B0=0.5)


def _random_case(rng, kind):
    s = rng.choice([-1, 1])
    alpha = rng.uniform(0.3, 2.5)
    beta = rng.uniform(-1.0, 1.0)
    k = rng.uniform(-3.0, 3.0)
    l = rng.randint(-4, 4)
    if kind == "Disclination":
        return Disclination(alpha), FieldConfig(rng.uniform(0.2, 3.0), s), l, k, 0.0
    if kind == "ScrewDislocation":
        return ScrewDislocation(beta, rng.uniform(-7.0, 7.0)), FieldConfig(rng.uniform(0.2, 3.0), s), l, k, 0.0
    if kind == "Dispiration":
        return Dispiration(alpha, beta), FieldConfig(rng.uniform(0.2, 3.0), s), l, k, 0.0
    return KKDispiration(alpha, beta), FieldConfig(1.0, 1, B0=rng.uniform(0.2, 2.0)), l, k, rng.uniform(0.3, 2.0)


def test_flat_ground_state_is_gaussian():
    p = radial_eigenfunction(Disclination(1.0), ELECTRON, 0, 0)
    assert p.nu == 0.0 and p.w == 0.5
    rho = np.linspace(0.1, 5.0, 7)
    assert np.allclose(p(rho), np.exp(-rho**2 / 4), rtol=1e-15)
    assert count_nodes(p) == 0


def test_zero_twist_dispiration_is_regular():
    p = radial_eigenfunction(Dispiration(0.5, 0.25), HOLE, 0, 1, k=4.0)
    assert p.nu == 0.0
    assert math.isfinite(p(1e-12)) and p(1e-12) > 0
    assert count_nodes(p) == 0


def test_cancelled_screw_has_three_nodes():
    p = radial_eigenfunction(ScrewDislocation(0.5, 2 * math.pi), HOLE, 3, 0, k=2.0)
    assert count_nodes(p) == 3


def test_linear_factor_has_one_node():
    p = radial_eigenfunction(Disclination(1.0), ELECTRON, 1, 2)
    assert p.nu == 2.0
    assert count_nodes(p) == 1


def test_five_nodes():
    for d, f in [(Disclination(0.7), ELECTRON), (Dispiration(1.5, 0.3), HOLE)]:
        assert count_nodes(radial_eigenfunction(d, f, 5, -2, k=1.0)) == 5


@pytest.mark.parametrize("alpha, omega", [(1.0, 1.0), (0.5, 1.0), (1.5, 2.5)])
def test_gaussian_normalization_closed_form(alpha, omega):
    p = normalize(radial_eigenfunction(Disclination(alpha), FieldConfig(omega, -1), 0, 0))
    w = omega / (2 * alpha)
    # int exp(-w rho^2) alpha rho drho = alpha / (2 w)
    assert p.C == pytest.approx(math.sqrt(2 * w / alpha), rel=1e-10)


@pytest.mark.parametrize(
    "defect, field, Q",
    [
        (Disclination(0.7), ELECTRON, 0.0),
        (ScrewDislocation(0.3, 1.0), HOLE, 0.0),
        (Dispiration(0.5, 0.25), HOLE, 0.0),
        (KKDispiration(1.5, 0.5), KK_FIELD, 2.0),
    ],
)
def test_normalization_and_idempotence(defect, field, Q):
    for n in (0, 3, 8):
        p = normalize(radial_eigenfunction(defect, field, n, 1, k=1.0, Q=Q))
        assert p.normalized
        assert inner_product(p, p) == pytest.approx(1.0, abs=1e-10)
        assert abs(normalize(p).C - p.C) <= 1e-12 * p.C


@pytest.mark.parametrize(
    "defect, field, Q",
    [
        (Disclination(0.7), ELECTRON, 0.0),
        (ScrewDislocation(0.3, 1.0), HOLE, 0.0),
        (Dispiration(0.5, 0.25), HOLE, 0.0),
        (KKDispiration(1.5, 0.5), KK_FIELD, 2.0),
    ],
)
def test_orthogonality(defect, field, Q):
    profiles = [normalize(radial_eigenfunction(defect, field, n, -1, k=0.5, Q=Q)) for n in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            assert abs(inner_product(profiles[i], profiles[j])) <= 1e-9


@pytest.mark.parametrize("kind", ["Disclination", "ScrewDislocation", "Dispiration", "KKDispiration"])
def test_node_count_random_draws(kind):
    rng = random.Random(hash(kind) % 1000)
    for _ in range(20):
        d, f, l, k, Q = _random_case(rng, kind)
        n = rng.randint(0, 12)
        assert count_nodes(radial_eigenfunction(d, f, n, l, k, Q)) == n


@pytest.mark.parametrize(
    "defect, field, n, l, k, Q",
    [
        (Disclination(0.7), ELECTRON, 2, -1, 0.0, 0.0),
        (ScrewDislocation(0.25, math.pi), HOLE, 1, 0, 1.0, 0.0),
        (Dispiration(0.5, 0.3), HOLE, 3, 2, 1.0, 0.0),
        (KKDispiration(0.7, 0.25), KK_FIELD, 1, 1, 1.0, 1.0),
    ],
)
def test_operator_residual_is_second_order(defect, field, n, l, k, Q):
    profile = radial_eigenfunction(defect, field, n, l, k, Q)
    problem = build_radial_problem(defect, field, l, k, Q)
    E = energy(defect, field, QuantumNumbers(n, l, k, Q)).E
    residuals = []
    for N in (256, 512, 1024):
        grid = GridSpec(N, profile.rho_cut)
        R = profile(grid_points(grid))
        HR = apply_radial_operator(problem, grid, R)
        residuals.append(np.linalg.norm(HR - E * R) / np.linalg.norm(R))
    assert residuals[0] / residuals[1] == pytest.approx(4.0, rel=0.15)
    assert residuals[1] / residuals[2] == pytest.approx(4.0, rel=0.15)


def test_unbound_kk_rejected():
    with pytest.raises(DomainError, match="not bound"):
        radial_eigenfunction(KKDispiration(1.0, 0.0), FieldConfig(1.0, 1, B0=1.0), 0, 0, Q=-1.0)


def test_negative_n_rejected():
    with pytest.raises(DomainError):
        radial_eigenfunction(Disclination(1.0), ELECTRON, -1, 0)


def test_disk_profile_warns_inside_disk():
    p = radial_eigenfunction(DisclinationDisk(q=1.0, R=1.0), ELECTRON, 0, 0)
    with pytest.warns(InteriorDiskWarning):
        normalize(p)


def test_density_uses_volume_weight():
    p = normalize(radial_eigenfunction(Dispiration(0.5, 0.3), HOLE, 1, 0))
    assert p.density(2.0) == pytest.approx(p(2.0) ** 2 * 0.5 * 2.0, rel=1e-15)
