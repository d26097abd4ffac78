"""Exact combinatorial identities and the polynomial coefficient family."""

import math
from fractions import Fraction

from .specfun import L_MAX


def p_poly(ell):
    """Coefficients of the degree ell-1 polynomial p_ell, ascending, exact.

    p_ell(w) = sum_{j=0}^{ell-1} 2^(-j) C(ell+j-1, ell-1) w^(ell-j-1)/(ell-j-1)!
    reindexed by degree d = ell-j-1.
    """
    if not 1 <= ell <= L_MAX:
        raise ValueError(f"p_poly: ell = {ell} outside [1, {L_MAX}]")
    return [
        Fraction(math.comb(2 * ell - 2 - d, ell - 1), 2 ** (ell - 1 - d) * math.factorial(d))
        for d in range(ell)
    ]


# cos(k pi/4) in units of sqrt(2)/2: value = table[k % 8] * sqrt(2)/2 when
# k is odd, table[k % 8]/2 * ... ; stored as (rational part, power of sqrt2)
_COS_EIGHTH = {0: 1, 1: 1, 2: 0, 3: -1, 4: -1, 5: -1, 6: 0, 7: 1}


def _kind1_term(ell, j):
    # cos((ell-j) pi/4) / 2^((ell+j-2)/2) * C(ell+j-1, ell-1), exact.
    # ell-j and ell+j-2 share parity, so the sqrt(2) factors cancel and
    # every term is rational.
    k = (ell - j) % 8
    sign = _COS_EIGHTH[k]
    if sign == 0:
        return Fraction(0)
    binom = math.comb(ell + j - 1, ell - 1)
    if (ell - j) % 2 == 0:
        # cos is 0 or +-1 and the exponent is integral
        return Fraction(sign * binom, 2 ** ((ell + j - 2) // 2))
    # cos = +-sqrt(2)/2; combined with the half-integral power of 2 this
    # leaves 2^((ell+j-1)/2) in the denominator
    return Fraction(sign * binom, 2 ** ((ell + j - 1) // 2))


def sum_identity(kind, ell):
    """Both sides of one of the three closed summation identities, exact.

    kind 1: sum_j cos((ell-j)pi/4)/2^((ell+j-2)/2) C(ell+j-1, ell-1) = 1
    kind 2: sum_n (-1)^n C(2 ell, 2n) = cos(ell pi/2) 2^ell
    kind 3: sum_n (-1)^(n+1) C(2 ell, 2n+1) = sin(-ell pi/2) 2^ell
    """
    if ell < 1:
        raise ValueError(f"sum_identity: ell = {ell} must be >= 1")
    if kind == 1:
        lhs = sum(_kind1_term(ell, j) for j in range(ell))
        return lhs, Fraction(1)
    if kind == 2:
        lhs = sum((-1) ** n * math.comb(2 * ell, 2 * n) for n in range(ell + 1))
        rhs = {0: 2**ell, 1: 0, 2: -(2**ell), 3: 0}[ell % 4]
        return lhs, rhs
    if kind == 3:
        lhs = sum((-1) ** (n + 1) * math.comb(2 * ell, 2 * n + 1) for n in range(ell))
        rhs = {0: 0, 1: -(2**ell), 2: 0, 3: 2**ell}[ell % 4]
        return lhs, rhs
    raise ValueError(f"sum_identity: kind must be 1, 2 or 3, got {kind!r}")


def alternating_factorial_identity(m, r):
    """lhs = sum_{j=r}^{m} (-1)^j C(m,j) (j-1)!/(j-r)!, rhs = (-1)^r (r-1)!."""
    if not 1 <= r <= m <= 2 * L_MAX:
        raise ValueError(
            f"alternating_factorial_identity: need 1 <= r <= m <= {2 * L_MAX}, "
            f"got m = {m}, r = {r}"
        )
    lhs = sum(
        (-1) ** j * math.comb(m, j) * math.factorial(j - 1) // math.factorial(j - r)
        for j in range(r, m + 1)
    )
    rhs = (-1) ** r * math.factorial(r - 1)
    return lhs, rhs
