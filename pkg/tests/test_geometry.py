import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau_defects import (
    Disclination,
    DisclinationDisk,
    Dispiration,
    DomainError,
    InteriorDiskWarning,
    KKDispiration,
    ScrewDislocation,
    classify_singularity,
    effective_alpha,
    metric_at,
)
from landau_defects.geometry import twisted_momentum, volume_weight
from landau_defects.spectra import cancellation_flux


@pytest.mark.parametrize("q, R, expected", [(0, 1, 1.0), (1, 1, 1.5), (-1, 1, 0.5)])
def test_effective_alpha(q, R, expected):
    assert effective_alpha(q, R) == expected


def test_effective_alpha_rejects_non_positive():
    with pytest.raises(DomainError, match="q=-2"):
        effective_alpha(-2, 1)
    with pytest.raises(DomainError):
        DisclinationDisk(q=-4, R=1)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_alpha_must_be_positive(bad):
    with pytest.raises(DomainError):
        Disclination(bad)
    with pytest.raises(DomainError):
        Dispiration(bad, 0.1)


def test_disk_radius_positive():
    with pytest.raises(DomainError):
        DisclinationDisk(q=0.1, R=0)


def test_negative_flux_is_accepted():
    assert ScrewDislocation(beta=0.1, phi=-3.0).phi == -3.0


def test_dispiration_metric_by_hand():
    m = metric_at(Dispiration(alpha=0.5, beta=0.3), 2.0)
    assert m.g_phiphi == pytest.approx(1.09, rel=1e-15)
    assert m.g_zphi == 0.3
    assert m.g_zz == 1.0 and m.g_rhorho == 1.0
    assert m.sqrt_g == pytest.approx(1.0, rel=1e-14)


def test_flat_limits():
    m = metric_at(ScrewDislocation(beta=0.0), 1.0)
    assert (m.g_phiphi, m.g_zphi, m.sqrt_g) == (1.0, 0.0, 1.0)
    m = metric_at(Disclination(1.0), 5.0)
    assert (m.g_phiphi, m.sqrt_g) == (25.0, 5.0)


def test_kk_metric_components():
    m = metric_at(KKDispiration(alpha=0.7, beta=0.2), 2.0, B0=1.5)
    a = 0.5 * 1.5 * 4.0
    assert m.g_xphi == -a
    assert m.g_xx == 1.0
    assert m.g_phiphi == pytest.approx(0.04 + 0.49 * 4 + a * a)
    assert m.sqrt_g == pytest.approx(1.4, rel=1e-13)
    with pytest.raises(DomainError):
        metric_at(KKDispiration(0.7, 0.2), 1.0)


@pytest.mark.parametrize("rho", [0.0, -1.0])
def test_metric_rejects_non_positive_radius(rho):
    with pytest.raises(DomainError):
        metric_at(Disclination(0.5), rho)


radius = st.floats(min_value=1e-6, max_value=100.0)
alphas = st.floats(min_value=0.05, max_value=5.0)
betas = st.floats(min_value=-3.0, max_value=3.0)


@given(alphas, betas, radius)
def test_dispiration_determinant_closed_form(alpha, beta, rho):
    m = metric_at(Dispiration(alpha, beta), rho)
    expected = (alpha * rho) ** 2
    assert m.det > 0
    assert abs(m.det - expected) <= 1e-12 * expected


@given(betas, radius)
def test_screw_determinant_closed_form(beta, rho):
    m = metric_at(ScrewDislocation(beta, 0.0), rho)
    assert abs(m.det - rho * rho) <= 1e-12 * rho * rho


@given(alphas, st.floats(min_value=-1, max_value=1), radius, st.floats(min_value=-2, max_value=2))
def test_kk_determinant_positive(alpha, beta, rho, B0):
    m = metric_at(KKDispiration(alpha, beta), rho, B0=B0)
    expected = (alpha * rho) ** 2
    assert m.det > 0
    assert abs(m.det - expected) <= 1e-11 * expected * (1 + (B0 * rho) ** 2)


@given(alphas, betas, st.floats(min_value=1e-3, max_value=100.0), st.floats(min_value=1e-9, max_value=1e-3))
def test_volume_weight_lipschitz(alpha, beta, rho, h):
    d = Dispiration(alpha, beta)
    step = abs(metric_at(d, rho + h).sqrt_g - metric_at(d, rho).sqrt_g)
    assert step <= 2 * alpha * h * (1 + 1e-9)


@given(st.floats(min_value=-1.9, max_value=3.0), st.floats(min_value=0.1, max_value=1.0), st.floats(min_value=1.0, max_value=50))
def test_disk_exterior_matches_single_disclination(q, R, scale):
    disk = DisclinationDisk(q=q, R=R)
    rho = R * (1.0 + scale)
    assert metric_at(disk, rho) == metric_at(Disclination(effective_alpha(q, R)), rho)


def test_disk_interior_warns():
    disk = DisclinationDisk(q=0.5, R=2.0)
    with pytest.warns(InteriorDiskWarning):
        metric_at(disk, np.array([1.0, 3.0]))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        metric_at(disk, 3.0)


def test_volume_weight_per_scenario():
    rho = np.array([0.5, 2.0])
    np.testing.assert_allclose(volume_weight(Dispiration(0.5, 0.3), rho), 0.5 * rho, rtol=1e-14)
    np.testing.assert_allclose(volume_weight(ScrewDislocation(0.3, 1.0), rho), rho, rtol=1e-14)
    np.testing.assert_allclose(volume_weight(KKDispiration(0.7, 0.3), rho), 0.7 * rho, rtol=1e-14)


def test_classify_dispiration_has_both():
    s = classify_singularity(Dispiration(0.8, 0.1))
    assert s.carries_curvature and s.carries_torsion
    assert s.curvature_strength > 0


def test_classify_screw_torsion_only():
    s = classify_singularity(ScrewDislocation(beta=0.2, phi=0.0))
    assert not s.carries_curvature and s.carries_torsion
    assert s.torsion_strength == pytest.approx(0.4 * math.pi, rel=1e-15)


def test_classify_flat():
    s = classify_singularity(Disclination(1.0))
    assert not s.carries_curvature and not s.carries_torsion
    assert s.curvature_strength == 0.0


@pytest.mark.parametrize("alpha, positive", [(0.3, True), (0.99, True), (1.0, False), (1.7, False)])
def test_curvature_sign(alpha, positive):
    assert (classify_singularity(Disclination(alpha)).curvature_strength > 0) == positive


@given(st.integers(-20, 20), betas, st.floats(min_value=-10, max_value=10))
def test_twisted_momentum_cancels_exactly(l, beta, k):
    assert twisted_momentum(l, beta, k, cancellation_flux(beta, k)) == l


@settings(max_examples=60, deadline=None)
@given(
    st.floats(0.1, 3.0),
    st.floats(-2.0, 2.0),
    st.floats(0.1, 20.0),
    st.floats(0.1, 2.0),
)
def test_kk_determinant_matches_dense_matrix(alpha, beta, rho, B0):
    m = metric_at(KKDispiration(alpha, beta), rho, B0=B0)
    g = np.array([
        [m.g_rhorho, 0.0, 0.0, 0.0],
        [0.0, m.g_phiphi, m.g_zphi, m.g_xphi],
        [0.0, m.g_zphi, m.g_zz, 0.0],
        [0.0, m.g_xphi, 0.0, m.g_xx],
    ])
    # the dense LU loses digits to g_phiphi cancellation; compare loosely
    scale = m.g_phiphi * m.g_zz * m.g_xx
    assert abs(np.linalg.det(g) - m.det) <= 1e-12 * scale
