import math
from fractions import Fraction

import pytest

from hankel_spectra.combinatorics import (
    alternating_factorial_identity,
    p_poly,
    sum_identity,
)
from hankel_spectra.specfun import L_MAX


def test_p_poly_low_orders_exact():
    assert p_poly(1) == [Fraction(1)]
    assert p_poly(2) == [Fraction(1), Fraction(1)]
    assert p_poly(3) == [Fraction(3, 2), Fraction(3, 2), Fraction(1, 2)]


def test_p_poly_leading_coefficient():
    for ell in range(1, L_MAX + 1):
        assert p_poly(ell)[-1] == Fraction(1, math.factorial(ell - 1))


def _convolve_with_exponential(poly):
    """Exact coefficients of q(|w|) with e^-|w| q(|w|) = (e^-|s| p(|s|)) * e^-|s|.

    Each monomial |s|^d convolved against the two-sided exponential produces
    a polynomial in |w| whose coefficients follow from integrating the two
    exponential branches: 1/(d+1) at degree d+1, d!/((d-j)! 2^(1+j)) at
    degree d-j, and d!/2^d at degree zero.
    """
    out = [Fraction(0)] * (len(poly) + 1)
    for d, c in enumerate(poly):
        if c == 0:
            continue
        out[d + 1] += c * Fraction(1, d + 1)
        for j in range(d):
            out[d - j] += c * Fraction(math.factorial(d), math.factorial(d - j) * 2 ** (1 + j))
        out[0] += c * Fraction(math.factorial(d), 2 ** d)
    return out


def test_p_poly_satisfies_convolution_recurrence():
    # Multiplying the underlying functions corresponds to convolving their
    # transforms, which forces e^-|w| p_(ell+1)(|w|) to equal the convolution
    # of e^-|s| p_ell(|s|) with e^-|s|.  That recurrence pins down every
    # coefficient exactly, starting from p_1 = 1.
    current = [Fraction(1)]
    for ell in range(1, L_MAX):
        current = _convolve_with_exponential(current)
        assert current == p_poly(ell + 1), f"recurrence broken at ell = {ell + 1}"


def test_p_poly_rejects_out_of_range():
    for bad in (0, -1, L_MAX + 1):
        with pytest.raises(ValueError):
            p_poly(bad)


@pytest.mark.parametrize("ell", range(1, 21))
def test_sum_identity_kind1_exact(ell):
    lhs, rhs = sum_identity(1, ell)
    assert lhs == rhs == 1


@pytest.mark.parametrize("ell", range(1, 21))
def test_sum_identity_kind2_exact(ell):
    lhs, rhs = sum_identity(2, ell)
    assert lhs == rhs
    residue = ell % 4
    expected = {0: 2 ** ell, 1: 0, 2: -(2 ** ell), 3: 0}[residue]
    assert rhs == expected


@pytest.mark.parametrize("ell", range(1, 21))
def test_sum_identity_kind3_exact(ell):
    lhs, rhs = sum_identity(3, ell)
    assert lhs == rhs
    residue = ell % 4
    expected = {0: 0, 1: -(2 ** ell), 2: 0, 3: 2 ** ell}[residue]
    assert rhs == expected


def test_sum_identity_validation():
    with pytest.raises(ValueError):
        sum_identity(4, 1)
    with pytest.raises(ValueError):
        sum_identity(1, 0)


def test_alternating_factorial_identity_exhaustive():
    for m in range(1, 17):
        for r in range(1, m + 1):
            lhs, rhs = alternating_factorial_identity(m, r)
            assert lhs == rhs
            assert rhs == (-1) ** r * math.factorial(r - 1)


def test_alternating_factorial_identity_validation():
    with pytest.raises(ValueError):
        alternating_factorial_identity(3, 0)
    with pytest.raises(ValueError):
        alternating_factorial_identity(3, 4)
    with pytest.raises(ValueError):
        alternating_factorial_identity(17, 1)
