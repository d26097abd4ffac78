"""The kernel family k^(l) by every available route.

Four independent evaluations coexist here. The Fourier building blocks
(fourier_xi_pow, fourier_psi_tilde) feed the convolution route k_conv;
the fully explicit route k_closed assembles exponential-integral terms
(p_term, q_term); fourier_symbol_oracle from the quadrature module is
the slow reference; and k_asymptotic is the large-x limit shape. Their
mutual agreement is the package's main correctness argument, so none of
them is allowed to call into another's machinery.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import quadrature
from .combinatorics import p_poly
from .specfun import L_MAX, e1_scaled, sinc, sinc_derivative

X_MIN_CLOSED = 1e-3

_SQRT_8_OVER_PI = math.sqrt(8.0 / math.pi)


@dataclass(frozen=True)
class KernelEvaluation:
    x: float
    value: float
    route: str  # closed | convolution | oracle
    error_estimate: float


def symbol_psi_ell(ell, t):
    """Symbol value 2 ((1+it)/(1-it))^ell on [-1, 1], zero outside."""
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"symbol_psi_ell: ell = {ell} outside [0, {L_MAX}]")
    if abs(t) > 1.0:
        return 0.0 + 0.0j
    return 2.0 * (complex(1.0, t) / complex(1.0, -t)) ** ell


@lru_cache(maxsize=None)
def _p_poly_floats(ell):
    return tuple(float(c) for c in p_poly(ell))


def _p_poly_eval(ell, u):
    coeffs = _p_poly_floats(ell)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def fourier_xi_pow(ell, w):
    """Fourier transform of (1+t^2)^(-ell): a decaying exponential times
    the positive polynomial p_ell, scaled by (1/sqrt(2 pi)) pi/2^(ell-1)."""
    if not 1 <= ell <= L_MAX:
        raise ValueError(f"fourier_xi_pow: ell = {ell} outside [1, {L_MAX}]")
    u = abs(w)
    scale = math.pi / (2.0 ** (ell - 1) * math.sqrt(2.0 * math.pi))
    return scale * math.exp(-u) * _p_poly_eval(ell, u)


def _alt_sinc_sum(ell, u):
    # sum_{n=0}^{2 ell} (-1)^n C(2 ell, n) sinc^(n)(u)
    total = 0.0
    for n in range(2 * ell + 1):
        coef = math.comb(2 * ell, n)
        if n % 2 == 1:
            coef = -coef
        total += coef * sinc_derivative(n, u)
    return total


def fourier_psi_tilde(ell, w):
    """Fourier transform of the polynomial part of the symbol: the
    alternating binomial sum of sinc derivatives times sqrt(8/pi)."""
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"fourier_psi_tilde: ell = {ell} outside [0, {L_MAX}]")
    return _SQRT_8_OVER_PI * _alt_sinc_sum(ell, w)


def exp_poly_self_convolution(ell, y):
    """Closed form of the convolution of |x|^ell e^(-|x|) with e^(-|x|).

    e^(-|y|)/(ell+1) { |y|^(ell+1) + sum_{j<ell} (ell+1)!/(ell-j)!
    |y|^(ell-j)/2^(1+j) + (ell+1)!/2^ell }, even and strictly positive.
    """
    if not 0 <= ell <= 2 * L_MAX:
        raise ValueError(f"exp_poly_self_convolution: ell = {ell} outside [0, {2 * L_MAX}]")
    u = abs(y)
    fact = math.factorial(ell + 1)
    inner = u ** (ell + 1) + fact / 2.0**ell
    for j in range(ell):
        inner += fact // math.factorial(ell - j) * u ** (ell - j) / 2.0 ** (1 + j)
    return math.exp(-u) * inner / (ell + 1)


def k_conv(ell, x, tol=1e-10):
    """Kernel value through the convolution representation.

    The alternating sinc-derivative sum is evaluated inside a single
    damped improper integral against e^(-|y|) p_ell(|y|); only y = 0 is a
    kink. Order 0 is the plain sinc formula.
    """
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"k_conv: ell = {ell} outside [0, {L_MAX}]")
    if ell == 0:
        return KernelEvaluation(
            x=x, value=2.0 / math.pi * sinc(x), route="convolution", error_estimate=0.0
        )

    def integrand(y):
        return math.exp(-abs(y)) * _p_poly_eval(ell, abs(y)) * _alt_sinc_sum(ell, x - y)

    prefactor = 1.0 / (math.pi * 2.0 ** (ell - 1))
    result = quadrature.improper_damped(integrand, tol, degree=ell - 1)
    return KernelEvaluation(
        x=x,
        value=prefactor * result.value,
        route="convolution",
        error_estimate=prefactor * result.abs_error_estimate,
    )


def _a_value(x):
    # integral over (0, inf) of e^(-y) sinc(x - y) dy
    #   = pi e^(-x) + e^(-x) Im E1(-x + ix)
    z = complex(-x, x)
    return math.pi * math.exp(-x) + (cmath.exp(complex(0.0, -x)) * e1_scaled(z)).imag


def _b_value(x):
    # integral over (0, inf) of e^(-y) sinc(x + y) dy = -e^x Im E1(x + ix)
    z = complex(x, x)
    return -(cmath.exp(complex(0.0, -x)) * e1_scaled(z)).imag


def _falling(m, j):
    # m!/(m-j)! as an exact float (tiny integers here)
    return float(math.factorial(m) // math.factorial(m - j))


def _poly_block(sign, m, n, j_max, x, ab):
    # The shared polynomial-and-trig block of the explicit terms. For the
    # minus sign: sum_j C(n,j)(-1)^(n-j) m!/(m-j)! [ A x^(m-j) +
    # sum_r (r-1)!/2^(r/2) sin(r pi/4 - x) x^(m-j-r) ], and the plus sign
    # swaps in (-1)^m B, sin(r pi/4 + x) and the factor (-1)^(m-r).
    total = 0.0
    for j in range(j_max + 1):
        weight = math.comb(n, j) * _falling(m, j)
        if sign == "-":
            if (n - j) % 2 == 1:
                weight = -weight
            inner = ab * x ** (m - j)
            for r in range(1, m - j + 1):
                inner += (
                    math.factorial(r - 1)
                    / 2.0 ** (0.5 * r)
                    * math.sin(0.25 * r * math.pi - x)
                    * x ** (m - j - r)
                )
        else:
            inner = ab * x ** (m - j)
            if m % 2 == 1:
                inner = -inner
            for r in range(1, m - j + 1):
                piece = (
                    math.factorial(r - 1)
                    / 2.0 ** (0.5 * r)
                    * math.sin(0.25 * r * math.pi + x)
                    * x ** (m - j - r)
                )
                if (m - r) % 2 == 1:
                    piece = -piece
                inner += piece
        total += weight * inner
    return total


def _check_sign(sign):
    if sign not in ("-", "+"):
        raise ValueError(f"sign must be '-' or '+', got {sign!r}")


def _p_term_with(sign, m, n, x, ab):
    return _poly_block(sign, m, n, n, x, ab)


def _q_term_with(sign, m, n, x, ab):
    if sign == "-":
        boundary = 0.0
        for s in range(n - m):
            piece = math.factorial(n - s - 1) // math.factorial(n - m - s - 1)
            if s % 2 == 1:
                piece = -piece
            boundary += piece * sinc_derivative(s, x)
        if (n - m - 1) % 2 == 1:
            boundary = -boundary
    else:
        boundary = 0.0
        for s in range(n - m):
            boundary += math.factorial(n - s - 1) // math.factorial(
                n - m - s - 1
            ) * sinc_derivative(s, x)
        if (m + 1) % 2 == 1:
            boundary = -boundary
    return boundary + _poly_block(sign, m, n, m, x, ab)


def p_term(sign, m, n, x):
    """Closed form of the integral of y^m e^(-y) sinc^(n)(x -+ y) over
    (0, inf) in the regime n <= m."""
    _check_sign(sign)
    if not 0 <= n <= m <= L_MAX - 1:
        raise ValueError(f"p_term: need 0 <= n <= m <= {L_MAX - 1}, got m={m}, n={n}")
    if x <= 0.0:
        raise ValueError(f"p_term: x = {x} must be positive")
    ab = _a_value(x) if sign == "-" else _b_value(x)
    return _p_term_with(sign, m, n, x, ab)


def q_term(sign, m, n, x):
    """Closed form of the same integral in the regime n > m, where the
    repeated integrations by parts leave extra sinc-derivative boundary
    terms at the origin."""
    _check_sign(sign)
    if not (0 <= m <= L_MAX - 1 and m < n <= 2 * L_MAX):
        raise ValueError(
            f"q_term: need 0 <= m <= {L_MAX - 1} and m < n <= {2 * L_MAX}, "
            f"got m={m}, n={n}"
        )
    if x <= 0.0:
        raise ValueError(f"q_term: x = {x} must be positive")
    ab = _a_value(x) if sign == "-" else _b_value(x)
    return _q_term_with(sign, m, n, x, ab)


@lru_cache(maxsize=None)
def _closed_weights(ell):
    # (-1)^n C(2 ell, n) (2^m/m!) C(2 ell - m - 2, ell - 1), exact, then
    # converted to float once.
    rows = []
    for m in range(ell):
        base = Fraction(2**m, math.factorial(m)) * math.comb(2 * ell - m - 2, ell - 1)
        row = []
        for n in range(2 * ell + 1):
            w = base * math.comb(2 * ell, n)
            row.append(float(-w if n % 2 == 1 else w))
        rows.append(tuple(row))
    return tuple(rows)


def k_closed(ell, x):
    """Kernel value through the explicit exponential-integral formula.

    Below X_MIN_CLOSED the logarithmic singularities of the individual
    E1 terms only cancel across the whole (m, n) sum and double precision
    loses the value; that region is k_conv's job. The error estimate is
    rounding noise scaled by the total absolute mass of the sum.
    """
    if not 1 <= ell <= L_MAX:
        raise ValueError(f"k_closed: ell = {ell} outside [1, {L_MAX}]")
    if x < X_MIN_CLOSED:
        raise ValueError(
            f"k_closed: x = {x} below X_MIN_CLOSED = {X_MIN_CLOSED}; use k_conv"
        )
    a = _a_value(x)
    b = _b_value(x)
    weights = _closed_weights(ell)
    total = 0.0
    abs_mass = 0.0
    for m in range(ell):
        for n in range(2 * ell + 1):
            if n <= m:
                term = _p_term_with("-", m, n, x, a) + _p_term_with("+", m, n, x, b)
            else:
                term = _q_term_with("-", m, n, x, a) + _q_term_with("+", m, n, x, b)
            contribution = weights[m][n] * term
            total += contribution
            abs_mass += abs(contribution)
    prefactor = 1.0 / (math.pi * 2.0 ** (2 * ell - 2))
    return KernelEvaluation(
        x=x,
        value=prefactor * total,
        route="closed",
        error_estimate=prefactor * abs_mass * 5e-16,
    )


def k_asymptotic(ell, x):
    """Leading large-x shape (2/pi) sin(x - ell pi/2)/x."""
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"k_asymptotic: ell = {ell} outside [0, {L_MAX}]")
    if x == 0.0:
        raise ValueError("k_asymptotic: undefined at x = 0")
    return 2.0 / math.pi * math.sin(x - 0.5 * ell * math.pi) / x


def evaluate(ell, x, method="auto"):
    """Route dispatcher: closed form for x >= 0.1, convolution below, the
    quadrature oracle only on demand. Order 0 is always the exact sinc
    formula."""
    if method not in ("auto", "closed", "conv", "oracle"):
        raise ValueError(f"evaluate: unknown method {method!r}")
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"evaluate: ell = {ell} outside [0, {L_MAX}]")
    if ell == 0 and method in ("auto", "closed"):
        return KernelEvaluation(
            x=x, value=2.0 / math.pi * sinc(x), route="closed", error_estimate=0.0
        )
    if method == "auto":
        method = "closed" if x >= 0.1 else "conv"
    if method == "closed":
        return k_closed(ell, x)
    if method == "conv":
        return k_conv(ell, x)
    value = quadrature.fourier_symbol_oracle(ell, x)
    return KernelEvaluation(x=x, value=value, route="oracle", error_estimate=1e-12)


def lp_diagnostic(ell, p, big_x, tol=1e-5):
    """Integral of |k^(ell)|^p over (0, X) by the best route per region.

    The convolution route covers (0, 0.1]; the closed form covers the
    rest, with panel seeds at the asymptotic zero locations so the |.|
    kinks of the p = 1 case land on panel edges as x grows.
    """
    if not 1 <= ell <= L_MAX:
        raise ValueError(f"lp_diagnostic: ell = {ell} outside [1, {L_MAX}]")
    if p < 1.0:
        raise ValueError(f"lp_diagnostic: p = {p} must be >= 1")
    if big_x <= 0.0:
        raise ValueError(f"lp_diagnostic: X = {big_x} must be positive")
    total = 0.0
    low_edge = min(big_x, 0.1)
    low = quadrature.integrate_adaptive(
        lambda x: abs(k_conv(ell, x, tol=1e-9).value) ** p, 0.0, low_edge, tol
    )
    total += low.value
    if big_x <= 0.1:
        return total
    # seed breakpoints at the asymptotic zeros x = ell pi/2 + k pi
    zeros = []
    shift = 0.5 * ell * math.pi
    k0 = math.ceil((0.1 - shift) / math.pi)
    xk = shift + k0 * math.pi
    while xk < big_x:
        if xk > 0.1:
            zeros.append(xk)
        xk += math.pi
    main = quadrature.integrate_adaptive(
        lambda x: abs(k_closed(ell, x).value) ** p,
        0.1,
        big_x,
        tol,
        breakpoints=zeros,
        max_panels=80_000,
    )
    return total + main.value
