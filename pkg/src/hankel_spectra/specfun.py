"""Special functions used by the kernel closed forms.

Everything here is scalar and pure: sinc and its derivatives, the
exponential integrals E1 / Ein on the cut plane, an overflow-safe scaled
variant exp(z)*E1(z), squared Gamma magnitudes along vertical lines, and
two families of damped integrals with elementary closed forms.
"""

import cmath
import math
from fractions import Fraction

L_MAX = 8

# Euler-Mascheroni constant, 20 significant digits.
EULER_GAMMA = 0.57721566490153286061

SINC_ORDER_MAX = 2 * L_MAX + 4

# |z| below which the Ein power series is used for E1; beyond it the
# continued fraction takes over, except close to the cut where the
# continued fraction degrades and the series stays accurate.
_SERIES_RADIUS = 12.0
_SERIES_RADIUS_POS = 4.0
_WIDE_ARG = 5.0 * math.pi / 6.0
_CF_MAX_ITER = 400
_SERIES_MAX_ITER = 2000

# The sinc-derivative Taylor series is accurate for any |x| but its terms
# peak near exp(|x|)/(2|x|), so it is capped where that stays ~1e3; the
# Leibniz closed form takes over where its own x^(-j-1) terms are tame.
_SINC_SERIES_LIMIT = 10.0


def sinc(x):
    """sin(x)/x with the removable singularity filled in."""
    if x == 0.0:
        return 1.0
    return math.sin(x) / x


def _sinc_derivative_series(n, x):
    # d^n/dx^n of sum_m (-1)^m x^(2m)/(2m+1)! term by term:
    # sum over 2m >= n of (-1)^m x^(2m-n) / ((2m-n)! (2m+1)).
    m = (n + 1) // 2
    k = 2 * m - n  # 0 or 1
    term = (-1.0) ** m * x**k / (math.factorial(k) * (2 * m + 1))
    total = 0.0
    while abs(term) >= 1e-18:
        total += term
        term *= -x * x * (2 * m + 1) / ((k + 1) * (k + 2) * (2 * m + 3))
        m += 1
        k += 2
    return total


def _sinc_derivative_leibniz(n, x):
    # d^n sinc = sum_j C(n,j) (d^j x^-1) (d^(n-j) sin)
    #          = sum_j C(n,j) (-1)^j j! x^(-j-1) sin(x + (n-j) pi/2)
    trig = (math.sin(x), math.cos(x), -math.sin(x), -math.cos(x))
    total = 0.0
    coef = 1.0  # C(n,j) (-1)^j j!
    xpow = 1.0 / x
    for j in range(n + 1):
        total += coef * xpow * trig[(n - j) % 4]
        coef *= -(n - j)
        xpow /= x
    return total


def sinc_derivative(n, x):
    """n-th derivative of sinc at x, for 0 <= n <= 2*L_MAX + 4.

    Taylor series near the origin, Leibniz closed form away from it; the
    crossover at |x| = 10 keeps both branches near machine accuracy.
    """
    if not 0 <= n <= SINC_ORDER_MAX:
        raise ValueError(
            f"sinc_derivative: order {n} outside [0, {SINC_ORDER_MAX}]"
        )
    if n == 0:
        return sinc(x)
    if abs(x) < _SINC_SERIES_LIMIT:
        return _sinc_derivative_series(n, x)
    return _sinc_derivative_leibniz(n, x)


def _on_cut(z):
    return z.imag == 0.0 and z.real <= 0.0


def _use_series(z):
    # In the right half-plane E1 decays like e^(-Re z) while the absolute
    # noise of the alternating series grows like e^|z| ulp, so the series
    # sector must stay small there; with Re z <= 0 the result is never
    # exponentially small and the series stays accurate out to radius 12.
    if abs(z) <= _SERIES_RADIUS_POS:
        return True
    if z.real <= 0.0 and abs(z) <= _SERIES_RADIUS:
        return True
    return abs(cmath.phase(z)) > _WIDE_ARG


def _ein_series(z):
    # Ein(z) = sum_{k>=1} (-1)^(k+1) z^k / (k * k!)
    if z == 0:
        return 0.0 + 0.0j
    term = complex(z)
    total = 0.0 + 0.0j
    for k in range(1, _SERIES_MAX_ITER):
        total += term
        term *= -z * k / ((k + 1) * (k + 1))
        if abs(term) <= 1e-18 * (1.0 + abs(total)):
            return total + term
    raise ArithmeticError("ein: power series failed to converge")


def _e1_cf_scaled(z):
    # Modified Lentz evaluation of
    #   e^z E1(z) = 1/(z+1 - 1/(z+3 - 4/(z+5 - 9/(z+7 - ...))))
    tiny = 1e-300
    b = z + 1.0
    f = b if b != 0 else tiny
    c = f
    d = 0.0 + 0.0j
    for k in range(1, _CF_MAX_ITER):
        a = -float(k * k)
        b = z + (2 * k + 1)
        d = b + a * d
        if d == 0:
            d = tiny
        c = b + a / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return 1.0 / f
    raise ArithmeticError(
        "e1_scaled: continued fraction failed to converge "
        f"(z = {z!r}); argument too close to the branch cut"
    )


def ein(z):
    """Entire complementary exponential integral Ein(z)."""
    z = complex(z)
    if _use_series(z):
        return _ein_series(z)
    # Off the cut and away from the origin: recover Ein from the scaled
    # continued fraction through E1 = Ein - log - gamma.
    return cmath.exp(-z) * _e1_cf_scaled(z) + cmath.log(z) + EULER_GAMMA


def e1(z):
    """Principal-branch exponential integral E1(z), z not on (-inf, 0]."""
    z = complex(z)
    if _on_cut(z):
        raise ValueError(f"e1: {z!r} lies on the branch cut (-inf, 0]")
    if _use_series(z):
        return _ein_series(z) - cmath.log(z) - EULER_GAMMA
    return cmath.exp(-z) * _e1_cf_scaled(z)


def e1_scaled(z):
    """exp(z) * E1(z) without forming exp(z), z not on (-inf, 0]."""
    z = complex(z)
    if _on_cut(z):
        raise ValueError(f"e1_scaled: {z!r} lies on the branch cut (-inf, 0]")
    if _use_series(z):
        # in the series sector either |z| <= 4 (exp bounded by e^4) or
        # Re z <= 0 (exp only shrinks the series result)
        return cmath.exp(z) * (_ein_series(z) - cmath.log(z) - EULER_GAMMA)
    return _e1_cf_scaled(z)


# Stirling series coefficients B_2k / (2k (2k-1)) for k = 1..8.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def _log_gamma_re(w):
    # Re log Gamma(w) for Re w >= 10 via the Stirling series.
    s = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2.0 * math.pi)
    winv = 1.0 / w
    w2 = winv * winv
    term = winv
    for coef in _STIRLING:
        s += coef * term
        term *= w2
    return s.real


def gamma_abs_sq(p, y):
    """|Gamma(1/2 - p - i*y)|^2 for p <= 1/2 and y > 0.

    Shifts the argument up by the recurrence |Gamma(w)|^2 =
    |Gamma(w+1)|^2 / |w|^2 until Re w >= 10, then applies the Stirling
    series for log Gamma.
    """
    if p > 0.5:
        raise ValueError(f"gamma_abs_sq: p = {p} exceeds 1/2")
    if y <= 0.0:
        raise ValueError(f"gamma_abs_sq: y = {y} must be positive")
    w = complex(0.5 - p, -y)
    shift = 1.0
    while w.real < 10.0:
        shift *= w.real * w.real + w.imag * w.imag
        w += 1.0
    return math.exp(2.0 * _log_gamma_re(w)) / shift


def damped_moment_shifted(n, a, x):
    """Closed form of the integral of y^n e^(-a y) / (x + y) over (0, inf).

    Equals (-1)^n x^n e^(a x) E1(a x) + sum_{r=1}^{n} (-1)^(n-r) (r-1)!
    a^(-r) x^(n-r); the exponentially growing factor is absorbed into
    e1_scaled. Requires Re a > 0 and x > 0.
    """
    if n < 0:
        raise ValueError(f"damped_moment_shifted: n = {n} must be >= 0")
    a = complex(a)
    if a.real <= 0.0:
        raise ValueError(f"damped_moment_shifted: Re a = {a.real} must be > 0")
    if x <= 0.0:
        raise ValueError(f"damped_moment_shifted: x = {x} must be > 0")
    total = (-1.0) ** n * x**n * e1_scaled(a * x)
    for r in range(1, n + 1):
        total += (-1.0) ** (n - r) * math.factorial(r - 1) * a ** (-r) * x ** (n - r)
    return total


def _trig_moment_coefficient(m):
    # m!/2^((m-1)/2) * cos((m+1) pi/4), exact: the residue of (m+1) mod 8
    # decides the sign and whether the half-power of 2 survives.
    r = (m + 1) % 8
    if r in (2, 6):
        return Fraction(0)
    if r in (0, 4):
        # m odd, cos = +-1, exponent (m-1)/2 integral
        sign = 1 if r == 0 else -1
        return Fraction(sign * math.factorial(m), 2 ** ((m - 1) // 2))
    # m even, cos = +-sqrt(2)/2 and 2^((m-1)/2) = 2^(m/2)/sqrt(2) cancel
    sign = 1 if r in (1, 7) else -1
    return Fraction(sign * math.factorial(m), 2 ** (m // 2))


def damped_trig_moment(m, x, kind):
    """Closed form of the integral of e^(-|y|) |y|^m trig(x - y) over R.

    The coefficient m!/2^((m-1)/2) cos((m+1) pi/4) is assembled in exact
    rational arithmetic (the sqrt(2) factors cancel case by case), so the
    only rounding is the final trig evaluation.
    """
    if not 0 <= m <= 2 * L_MAX:
        raise ValueError(f"damped_trig_moment: m = {m} outside [0, {2 * L_MAX}]")
    if kind == "sin":
        t = math.sin(x)
    elif kind == "cos":
        t = math.cos(x)
    else:
        raise ValueError(f"damped_trig_moment: kind must be 'sin' or 'cos', got {kind!r}")
    return float(_trig_moment_coefficient(m)) * t
