"""Generate Gauss-Kronrod 7-15 nodes/weights at high precision.

Gauss-7 nodes are the roots of P7 (Legendre). The 8 Kronrod nodes are the
roots of the degree-8 Stieltjes polynomial E8, defined (up to scale) by
    integral_{-1}^{1} P7(x) E8(x) x^k dx = 0   for k = 0..7.
P7 is odd, so E8 is even: E8 = x^8 + c6 x^6 + c4 x^4 + c2 x^2 + c0.
Odd k give 4 nontrivial linear equations for (c0, c2, c4, c6), with exact
rational coefficients. Weights come from the even-moment system on the 15
symmetric nodes (interpolatory rule).
"""
from fractions import Fraction
import mpmath as mp

mp.mp.dps = 60

# P7 coefficients, exact: P7(x) = (429 x^7 - 693 x^5 + 315 x^3 - 35 x)/16
P7 = {7: Fraction(429, 16), 5: Fraction(-693, 16), 3: Fraction(315, 16), 1: Fraction(-35, 16)}

def moment(n):
    # integral_{-1}^{1} x^n dx
    return Fraction(2, n + 1) if n % 2 == 0 else Fraction(0)

# Equations: for k odd in {1,3,5,7}:
#   sum_{d in P7} P7[d] * ( m(d+8+k) + c6 m(d+6+k) + c4 m(d+4+k) + c2 m(d+2+k) + c0 m(d+k) ) = 0
rows = []
rhs = []
for k in (1, 3, 5, 7):
    row = []
    for e in (0, 2, 4, 6):  # multiplies c0, c2, c4, c6
        row.append(sum(P7[d] * moment(d + e + k) for d in P7))
    rows.append(row)
    rhs.append(-sum(P7[d] * moment(d + 8 + k) for d in P7))

# Solve the 4x4 rational system by Gaussian elimination (exact).
n = 4
A = [row[:] + [r] for row, r in zip(rows, rhs)]
for i in range(n):
    piv = next(j for j in range(i, n) if A[j][i] != 0)
    A[i], A[piv] = A[piv], A[i]
    inv = A[i][i]
    A[i] = [v / inv for v in A[i]]
    for j in range(n):
        if j != i and A[j][i] != 0:
            f = A[j][i]
            A[j] = [vj - f * vi for vj, vi in zip(A[j], A[i])]
c0, c2, c4, c6 = (A[i][n] for i in range(n))
print("E8 coefficients (exact):", c0, c2, c4, c6)

# Kronrod-only nodes: roots of E8 (quartic in u = x^2)
quartic = [mp.mpf(1), mp.mpf(c6.numerator)/c6.denominator,
           mp.mpf(c4.numerator)/c4.denominator,
           mp.mpf(c2.numerator)/c2.denominator,
           mp.mpf(c0.numerator)/c0.denominator]
uroots = mp.polyroots(quartic, maxsteps=200, extraprec=200)
kron_nodes = sorted([mp.sqrt(u) for u in uroots], reverse=True)

# Gauss-7 nodes: positive roots of P7 plus 0
p7 = [mp.mpf(429)/16, 0, mp.mpf(-693)/16, 0, mp.mpf(315)/16, 0, mp.mpf(-35)/16, 0]
groots = mp.polyroots(p7, maxsteps=200, extraprec=200)
gauss_pos = sorted([r for r in groots if r > mp.mpf('1e-30')], reverse=True)

# Full positive-node list, descending (interleaved kronrod/gauss), plus 0
xgk = []
for i in range(3):
    xgk.append(kron_nodes[i])
    xgk.append(gauss_pos[i])
xgk.append(kron_nodes[3])
xgk.append(mp.mpf(0))

# Weights: interpolatory on the 15 symmetric nodes. Symmetry reduces to the
# even-moment system: for j = 0..7,
#   sum_{i=0}^{6} 2 w_i xgk[i]^(2j) + w_7 * 0^(2j) = 2/(2j+1)
M = mp.matrix(8, 8)
b = mp.matrix(8, 1)
for j in range(8):
    for i in range(8):
        if i < 7:
            M[j, i] = 2 * xgk[i] ** (2 * j)
        else:
            M[j, i] = mp.mpf(1) if j == 0 else mp.mpf(0)
    b[j] = mp.mpf(2) / (2 * j + 1)
wgk = mp.lu_solve(M, b)

# Gauss-7 weights: w = 2/((1-x^2) P7'(x)^2)
def p7prime(x):
    return (7 * 429 * x**6 - 5 * 693 * x**4 + 3 * 315 * x**2 - 35) / 16
wg = []
for x in gauss_pos + [mp.mpf(0)]:
    wg.append(2 / ((1 - x * x) * p7prime(x) ** 2))

print("\nxgk (descending, incl. 0):")
for v in xgk:
    print("   ", mp.nstr(v, 17))
print("wgk:")
for v in wgk:
    print("   ", mp.nstr(v, 17))
print("wg (for gauss nodes descending + 0):")
for v in wg:
    print("   ", mp.nstr(v, 17))

# Sanity: Kronrod rule exact through degree 22, Gauss through 13
def kron_int(f):
    s = wgk[7] * f(xgk[7])
    for i in range(7):
        s += wgk[i] * (f(xgk[i]) + f(-xgk[i]))
    return s
def gauss_int(f):
    s = wg[3] * f(mp.mpf(0))
    for i in range(3):
        s += wg[i] * (f(gauss_pos[i]) + f(-gauss_pos[i]))
    return s
for deg in (22, 24):
    err = abs(kron_int(lambda x: x**deg) - mp.mpf(2)/(deg+1))
    print(f"kronrod x^{deg} err = {mp.nstr(err, 3)}")
for deg in (12, 14):
    err = abs(gauss_int(lambda x: x**deg) - mp.mpf(2)/(deg+1))
    print(f"gauss   x^{deg} err = {mp.nstr(err, 3)}")
