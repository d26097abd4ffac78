"""Finite truncations of the Hankel family and their exact block algebra.

The matrix model lives on sequence space: entry (n, k) of the order-l
truncation is the Fourier coefficient c_{k+n+l+1}, so every identity in
this module is a finite algebraic fact and the certificates measure pure
floating-point noise, not discretization error. The eigensolver is a
hand-rolled cyclic Jacobi, compiled when the extension built, with a
pure-Python twin as fallback.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .specfun import L_MAX

try:
    from . import _jacobi as _jacobi_impl

    JACOBI_BACKEND = "compiled"
except ImportError:
    from . import _jacobi_py as _jacobi_impl

    JACOBI_BACKEND = "python"

DEFAULT_MAX_SIZE = 4096
_MAX_SIZE_ENV = "HANKEL_SPECTRA_MAX_N"
_JACOBI_MAX_SWEEPS = 50


def max_truncation_size():
    """Configured size cap for matrix construction (env-overridable)."""
    raw = os.environ.get(_MAX_SIZE_ENV, "").strip()
    if not raw:
        return DEFAULT_MAX_SIZE
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{_MAX_SIZE_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{_MAX_SIZE_ENV} must be positive, got {cap}")
    return cap


def _check_size(n):
    cap = max_truncation_size()
    if not 1 <= n:
        raise ValueError(f"size N = {n} must be a positive integer")
    if n > cap:
        raise ValueError(f"size N = {n} exceeds the configured cap {cap}")


@dataclass(frozen=True, eq=False)
class HankelTruncation:
    ell: int
    size: int
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class HilbertTypeMatrix:
    p: float
    size: int
    alternating: bool
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class BlockCertificate:
    parity: str  # even | odd
    m: int
    size: int
    max_abs_deviation: float
    cross_block_max: float


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    eigenvalues: np.ndarray
    min: float
    max: float
    containment_violation: float
    coverage_gap: float


def fourier_coefficient(k):
    """c_k = (2/(pi k)) sin(pi k/2): exactly zero for even k, alternating
    2/(pi k) for odd k."""
    if k < 1:
        raise ValueError(f"fourier_coefficient: k = {k} must be >= 1")
    if k % 2 == 0:
        return 0.0
    value = 2.0 / (math.pi * k)
    return -value if ((k - 1) // 2) % 2 else value


def hankel_truncation(ell, n):
    """The N x N compression with entry (row, col) = c_{row+col+ell+1}."""
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"hankel_truncation: ell = {ell} outside [0, {L_MAX}]")
    _check_size(n)
    top = 2 * (n - 1) + ell + 1
    coeffs = np.zeros(top + 1)
    for s in range(1, top + 1):
        coeffs[s] = fourier_coefficient(s)
    idx = np.add.outer(np.arange(n), np.arange(n)) + ell + 1
    return HankelTruncation(ell=ell, size=n, entries=coeffs[idx])


def hilbert_type(p, n, alternating):
    """Entry (row, col) = 1/(1 + row + col - p), optionally with the
    (-1)^(row+col) sign checkerboard."""
    if p > 0.5:
        raise ValueError(f"hilbert_type: p = {p} must be <= 1/2")
    _check_size(n)
    entries = 1.0 / (1.0 + np.add.outer(np.arange(n), np.arange(n)) - p)
    if alternating:
        signs = alternating_signs(n)
        entries = entries * np.outer(signs, signs)
    return HilbertTypeMatrix(p=p, size=n, alternating=bool(alternating), entries=entries)


def alternating_signs(n):
    """The vector (+1, -1, +1, ...): conjugating by its diagonal flips the
    checkerboard sign pattern (exactly, in floating point)."""
    signs = np.ones(n)
    signs[1::2] = -1.0
    return signs


def _parity_offset(parity):
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return 0 if parity == "even" else 1


def interleaving(n, parity):
    """2N x N coordinate map sending basis vector a to basis vector 2a
    (parity 'even') or 2a+1 (parity 'odd')."""
    mat = np.zeros((2 * n, n))
    offset = _parity_offset(parity)
    mat[np.arange(n) * 2 + offset, np.arange(n)] = 1.0
    return mat


def parity_projection(n, parity):
    """Diagonal projection onto the even- or odd-indexed coordinates."""
    diag = np.zeros(n)
    offset = _parity_offset(parity)
    diag[offset::2] = 1.0
    return np.diag(diag)


def sum_difference_rotation(n):
    """The 2N x 2N orthogonal block rotation (1/sqrt 2) [[I, -I], [I, I]]."""
    eye = np.eye(n)
    root = 1.0 / math.sqrt(2.0)
    return np.block([[root * eye, -root * eye], [root * eye, root * eye]])


def block_parameters(ell):
    """The (sign, p) pairs of the two diagonal blocks that the parity
    decomposition of the order-ell truncation produces (scale 1/pi each);
    the first pair belongs to the even-coordinate (or post-rotation
    first) block."""
    if not 0 <= ell <= L_MAX:
        raise ValueError(f"block_parameters: ell = {ell} outside [0, {L_MAX}]")
    m = ell // 2
    sign = 1.0 if m % 2 == 0 else -1.0
    if ell % 2 == 0:
        return ((sign, 0.5 - m), (-sign, -0.5 - m))
    return ((-sign, -0.5 - m), (sign, -0.5 - m))


def block_decompose_even(m, n):
    """Certificate for the even-order block identity.

    The order-2m truncation of size 2N splits along parity: the cross
    blocks vanish identically, and the two diagonal blocks, conjugated by
    the alternating-sign diagonal, are (-1)^m/pi and (-1)^(m+1)/pi times
    Hilbert-type matrices with parameters 1/2 - m and -1/2 - m.
    """
    if not (0 <= m and 2 * m <= L_MAX):
        raise ValueError(f"block_decompose_even: need 0 <= 2m <= {L_MAX}, got m = {m}")
    _check_size(2 * n)
    big = hankel_truncation(2 * m, 2 * n).entries
    u_even = interleaving(n, "even")
    u_odd = interleaving(n, "odd")
    even_block = u_even.T @ big @ u_even
    odd_block = u_odd.T @ big @ u_odd
    cross = max(
        np.abs(u_even.T @ big @ u_odd).max(), np.abs(u_odd.T @ big @ u_even).max()
    )
    signs = np.outer(alternating_signs(n), alternating_signs(n))
    (sign_even, p_even), (sign_odd, p_odd) = block_parameters(2 * m)
    target_even = (sign_even / math.pi) * hilbert_type(p_even, n, False).entries
    target_odd = (sign_odd / math.pi) * hilbert_type(p_odd, n, False).entries
    deviation = max(
        np.abs(even_block * signs - target_even).max(),
        np.abs(odd_block * signs - target_odd).max(),
    )
    return BlockCertificate(
        parity="even",
        m=m,
        size=n,
        max_abs_deviation=float(deviation),
        cross_block_max=float(cross),
    )


def block_decompose_odd(m, n):
    """Certificate for the odd-order block identity.

    For order 2m+1 the diagonal parity blocks vanish identically; the
    remaining off-diagonal pair, conjugated by the alternating-sign
    diagonal and the sum/difference rotation, lands on +/-(-1)^(m+1)/pi
    times the Hilbert-type matrix with parameter -1/2 - m.
    """
    if not (0 <= m and 2 * m + 1 <= L_MAX):
        raise ValueError(
            f"block_decompose_odd: need 0 <= 2m+1 <= {L_MAX}, got m = {m}"
        )
    _check_size(2 * n)
    big = hankel_truncation(2 * m + 1, 2 * n).entries
    u_even = interleaving(n, "even")
    u_odd = interleaving(n, "odd")
    cross = max(
        np.abs(u_even.T @ big @ u_even).max(), np.abs(u_odd.T @ big @ u_odd).max()
    )
    split = np.hstack([u_even, u_odd])
    mixed = split.T @ big @ split
    signs2 = np.concatenate([alternating_signs(n), alternating_signs(n)])
    mixed = mixed * np.outer(signs2, signs2)
    rot = sum_difference_rotation(n)
    final = rot.T @ mixed @ rot
    (sign_first, p_block), _ = block_parameters(2 * m + 1)
    target = (sign_first / math.pi) * hilbert_type(p_block, n, False).entries
    deviation = max(
        np.abs(final[:n, :n] - target).max(),
        np.abs(final[n:, n:] + target).max(),
        np.abs(final[:n, n:]).max(),
        np.abs(final[n:, :n]).max(),
    )
    return BlockCertificate(
        parity="odd",
        m=m,
        size=n,
        max_abs_deviation=float(deviation),
        cross_block_max=float(cross),
    )


def symm_eigen(matrix, tol):
    """All eigenvalues of a symmetric matrix, ascending.

    Cyclic Jacobi with a fixed sweep order and an off-diagonal-norm stop
    at 1e-14 times the Frobenius norm, far below any practical tol; tol
    is validated as the caller's accuracy contract.
    """
    if tol <= 0.0:
        raise ValueError(f"symm_eigen: tol = {tol} must be positive")
    a = np.array(matrix, dtype=float, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"symm_eigen: expected a square matrix, got shape {a.shape}")
    scale = np.abs(a).max()
    if scale == 0.0:
        return np.zeros(a.shape[0])
    asym = np.abs(a - a.T).max()
    if asym > 1e-12 * scale:
        raise ValueError(
            f"symm_eigen: symmetry deviation {asym:.3e} exceeds 1e-12 * {scale:.3e}"
        )
    a = (a + a.T) / 2.0
    a = np.ascontiguousarray(a)
    fro = math.sqrt(float((a * a).sum()))
    threshold = 1e-14 * fro
    values, sweeps, off = _jacobi_impl.jacobi_eigenvalues(
        a, threshold, _JACOBI_MAX_SWEEPS
    )
    if off > threshold:
        raise RuntimeError(
            f"symm_eigen: Jacobi did not converge in {_JACOBI_MAX_SWEEPS} sweeps "
            f"(off-norm {off:.3e} > {threshold:.3e})"
        )
    return values


def spectrum_report(ell, n):
    """Eigenvalues of the order-ell truncation plus two diagnostics: how
    far the spectrum pokes out of [-1, 1], and the largest eigenvalue gap
    clipped to [-0.95, 0.95]."""
    truncation = hankel_truncation(ell, n)
    eigenvalues = symm_eigen(truncation.entries, 1e-10)
    low = float(eigenvalues[0])
    high = float(eigenvalues[-1])
    violation = max(0.0, max(abs(low), abs(high)) - 1.0)
    gap = 0.0
    for left, right in zip(eigenvalues[:-1], eigenvalues[1:]):
        clipped = min(float(right), 0.95) - max(float(left), -0.95)
        if clipped > gap:
            gap = clipped
    return SpectrumReport(
        eigenvalues=eigenvalues,
        min=low,
        max=high,
        containment_violation=violation,
        coverage_gap=gap,
    )
