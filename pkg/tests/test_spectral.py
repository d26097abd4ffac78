import math

import pytest

from hankel_spectra import operators as op
from hankel_spectra.spectral import (
    DiagonalizationDescriptor,
    SpectralDensityPoint,
    density_rho,
    diagonalization_of,
    multiplier_h,
)


def test_multiplier_frozen_value_and_monotonicity():
    assert multiplier_h(1.0) == pytest.approx(math.pi / math.cosh(math.pi), rel=1e-15)
    grid = [0.01, 0.1, 1.0, 4.0, 25.0]
    values = [multiplier_h(lam) for lam in grid]
    for left, right in zip(values, values[1:]):
        assert left > right
    assert all(0.0 < v < math.pi for v in values)


def test_multiplier_rejects_nonpositive_argument():
    with pytest.raises(ValueError):
        multiplier_h(0.0)
    with pytest.raises(ValueError):
        multiplier_h(-1.0)


@pytest.mark.parametrize("lam", [0.01, 0.1, 1.0, 4.0, 25.0])
def test_density_elementary_closed_forms(lam):
    root = math.sqrt(lam)
    assert density_rho(0.0, lam).rho == pytest.approx(math.sinh(math.pi * root) / math.pi, rel=1e-12)
    assert density_rho(0.5, lam).rho == pytest.approx(
        math.cosh(math.pi * root) / (math.pi * root), rel=1e-12
    )
    assert density_rho(-0.5, lam).rho == pytest.approx(
        root * math.cosh(math.pi * root) / math.pi, rel=1e-12
    )


def test_density_via_gamma_recurrence():
    # |Gamma(2-i)|^2 = 2 |Gamma(1-i)|^2 collapses rho at p = -3/2 to an
    # elementary hyperbolic expression.
    assert density_rho(-1.5, 1.0).rho == pytest.approx(2.0 * math.cosh(math.pi) / math.pi, rel=1e-13)


def test_density_times_multiplier_is_tanh():
    for lam in (0.04, 0.25, 1.0, 9.0):
        product = multiplier_h(lam) * density_rho(0.0, lam).rho
        assert product == pytest.approx(math.tanh(math.pi * math.sqrt(lam)), rel=1e-12)
        assert 0.0 < product < 1.0


def test_density_point_record():
    point = density_rho(0.5, 2.0)
    assert isinstance(point, SpectralDensityPoint)
    assert point.p == 0.5
    assert point.lam == 2.0
    assert point.rho > 0.0


def test_density_validation():
    with pytest.raises(ValueError):
        density_rho(0.75, 1.0)
    with pytest.raises(ValueError):
        density_rho(0.0, 0.0)
    with pytest.raises(ValueError):
        density_rho(0.0, -2.0)


def test_diagonalization_descriptor_examples():
    d0 = diagonalization_of(0)
    assert isinstance(d0, DiagonalizationDescriptor)
    assert [(b.sign, b.p) for b in d0.blocks] == [(1.0, 0.5), (-1.0, -0.5)]
    d1 = diagonalization_of(1)
    assert [(b.sign, b.p) for b in d1.blocks] == [(-1.0, -0.5), (1.0, -0.5)]
    d4 = diagonalization_of(4)
    assert [(b.sign, b.p) for b in d4.blocks] == [(1.0, -1.5), (-1.0, -2.5)]
    for block in d4.blocks:
        assert block.scale == pytest.approx(1.0 / math.pi, rel=1e-15)


def test_diagonalization_matches_operator_block_parameters():
    for ell in range(0, 9):
        descriptor = diagonalization_of(ell)
        assert tuple((b.sign, b.p) for b in descriptor.blocks) == op.block_parameters(ell)


def test_diagonalization_block_densities_delegate():
    descriptor = diagonalization_of(3)
    for block in descriptor.blocks:
        assert block.density(2.0) == pytest.approx(density_rho(block.p, 2.0).rho, rel=1e-15)


def test_diagonalization_validation():
    with pytest.raises(ValueError):
        diagonalization_of(9)
    with pytest.raises(ValueError):
        diagonalization_of(-1)
