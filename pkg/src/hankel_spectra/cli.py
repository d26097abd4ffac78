"""Command-line surface: kernel tables, verification suites, truncation
spectra, densities and block certificates, emitted as CSV or JSON.

Exit codes: 0 success, 1 a verification check failed, 2 configuration
error, 3 numerical failure. Output for a fixed configuration is
byte-identical across runs; when --out is given the file is written
atomically (temp file then rename).
"""

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

from . import kernels, operators, quadrature, spectral
from .combinatorics import alternating_factorial_identity, sum_identity
from .specfun import L_MAX


def _format_cell(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv_text(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(cell) for cell in row])
    return buffer.getvalue()


def _json_text(payload):
    return json.dumps(payload, indent=2) + "\n"


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    descriptor, temp_path = tempfile.mkstemp(dir=directory, prefix=".partial-")
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(temp_path, path)
    except BaseException:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise


def _emit(text, out_path):
    if out_path:
        _write_atomic(out_path, text)
    else:
        sys.stdout.write(text)


def _grid(low, high, num, what):
    if low is None or high is None or num is None:
        raise ValueError(
            f"provide either --{what} or all of --{what}-min/--{what}-max/--num"
        )
    if not low < high:
        raise ValueError(f"grid needs {what}-min < {what}-max, got {low} >= {high}")
    if num < 2:
        raise ValueError(f"grid needs --num >= 2, got {num}")
    step = (high - low) / (num - 1)
    return [low + k * step for k in range(num)]


def cmd_kernel(args):
    if args.ell is None:
        raise ValueError("kernel requires --ell")
    if args.x is not None:
        points = [args.x]
    else:
        points = _grid(args.xmin, args.xmax, args.num, "x")
    rows = []
    for x in points:
        evaluation = kernels.evaluate(args.ell, x, method=args.method)
        rows.append((x, evaluation.value, evaluation.route, evaluation.error_estimate))
    fmt = args.format or "csv"
    if fmt == "csv":
        text = _csv_text(("x", "value", "route", "error_estimate"), rows)
    else:
        text = _json_text(
            {
                "command": "kernel",
                "ell": args.ell,
                "method": args.method,
                "rows": [
                    {
                        "x": x,
                        "value": value,
                        "route": route,
                        "error_estimate": err,
                    }
                    for x, value, route, err in rows
                ],
            }
        )
    _emit(text, args.out)
    return 0


def cmd_density(args):
    if args.p is None:
        raise ValueError("density requires --p")
    if args.lam is not None:
        points = [args.lam]
    else:
        points = _grid(args.lam_min, args.lam_max, args.num, "lambda")
    rows = []
    for lam in points:
        point = spectral.density_rho(args.p, lam)
        rows.append((lam, point.rho, spectral.multiplier_h(lam)))
    fmt = args.format or "csv"
    if fmt == "csv":
        text = _csv_text(("lambda", "rho", "h"), rows)
    else:
        text = _json_text(
            {
                "command": "density",
                "p": args.p,
                "rows": [
                    {"lambda": lam, "rho": rho, "h": h} for lam, rho, h in rows
                ],
            }
        )
    _emit(text, args.out)
    return 0


def cmd_spectrum(args):
    if args.ell is None or args.size is None:
        raise ValueError("spectrum requires --ell and --size")
    report = operators.spectrum_report(args.ell, args.size)
    summary = {
        "command": "spectrum",
        "ell": args.ell,
        "size": args.size,
        "min": report.min,
        "max": report.max,
        "containment_violation": report.containment_violation,
        "coverage_gap": report.coverage_gap,
        "backend": operators.JACOBI_BACKEND,
    }
    eigenvalues = [float(v) for v in report.eigenvalues]
    fmt = args.format or "csv"
    if fmt == "csv":
        table = _csv_text(
            ("index", "eigenvalue"), list(enumerate(eigenvalues))
        )
    else:
        table = _json_text(dict(summary, eigenvalues=eigenvalues))
    if args.out:
        _write_atomic(args.out, table)
        sys.stdout.write(_json_text(summary))
    elif fmt == "csv":
        sys.stdout.write(table)
        sys.stdout.write(json.dumps(summary) + "\n")
    else:
        sys.stdout.write(table)
    return 0


def cmd_blocks(args):
    if args.ell is None or args.size is None:
        raise ValueError("blocks requires --ell and --size")
    if not 0 <= args.ell <= L_MAX:
        raise ValueError(f"blocks: ell = {args.ell} outside [0, {L_MAX}]")
    m = args.ell // 2
    if args.ell % 2 == 0:
        certificate = operators.block_decompose_even(m, args.size)
    else:
        certificate = operators.block_decompose_odd(m, args.size)
    payload = {
        "command": "blocks",
        "ell": args.ell,
        "parity": certificate.parity,
        "m": certificate.m,
        "size": certificate.size,
        "max_abs_deviation": certificate.max_abs_deviation,
        "cross_block_max": certificate.cross_block_max,
    }
    fmt = args.format or "json"
    if fmt == "json":
        text = _json_text(payload)
    else:
        keys = list(payload.keys())
        text = _csv_text(keys, [tuple(payload[k] for k in keys)])
    _emit(text, args.out)
    return 0


def _check(name, statement, measured, threshold):
    return {
        "name": name,
        "statement": statement,
        "measured": measured,
        "threshold": threshold,
        "pass": measured <= threshold,
    }


def _suite_identities(tol):
    worst_sum = 0
    for kind in (1, 2, 3):
        for ell in range(1, 21):
            lhs, rhs = sum_identity(kind, ell)
            worst_sum = max(worst_sum, abs(lhs - rhs))
    worst_fact = 0
    for m in range(1, 17):
        for r in range(1, m + 1):
            lhs, rhs = alternating_factorial_identity(m, r)
            worst_fact = max(worst_fact, abs(lhs - rhs))
    return [
        _check(
            "alternating-sum-identities",
            "three exact binomial sum families (orders 1..20) in integer arithmetic",
            float(worst_sum),
            0.0,
        ),
        _check(
            "alternating-factorial-identity",
            "alternating factorial-ratio sum collapses exactly for m <= 16",
            float(worst_fact),
            0.0,
        ),
    ]


def _suite_fourier(tol):
    worst_xi = 0.0
    for ell in (1, 2, 3):
        for w in (0.0, 0.5, 1.0, 3.0):
            closed = kernels.fourier_xi_pow(ell, w)
            reference = quadrature._xi_pow_reference(ell, w)
            worst_xi = max(worst_xi, abs(closed - reference))
    worst_poly = 0.0
    for ell in (0, 1, 2, 3):
        for w in (0.0, 0.5, 1.0, 3.0):
            closed = kernels.fourier_psi_tilde(ell, w)
            reference = quadrature._poly_symbol_reference(ell, w)
            worst_poly = max(worst_poly, abs(closed - reference))
    return [
        _check(
            "exp-poly-transform-vs-quadrature",
            "closed-form transform of (1+t^2)^-ell matches direct quadrature",
            worst_xi,
            tol,
        ),
        _check(
            "sinc-sum-transform-vs-quadrature",
            "sinc-derivative sum matches quadrature of the polynomial symbol factor",
            worst_poly,
            tol,
        ),
    ]


def _suite_kernels(tol):
    worst_route = 0.0
    for ell in (1, 2, 3, 4):
        for x in (0.5, 1.0, 5.0, 20.0):
            closed = kernels.k_closed(ell, x).value
            conv = kernels.k_conv(ell, x).value
            oracle = quadrature.fourier_symbol_oracle(ell, x)
            worst_route = max(
                worst_route,
                abs(closed - conv),
                abs(closed - oracle),
                abs(conv - oracle),
            )
    worst_asym = 0.0
    for ell in (1, 2, 3, 4):
        x = 1000.0
        drift = abs(
            x * kernels.k_closed(ell, x).value
            - 2.0 / math.pi * math.sin(x - 0.5 * ell * math.pi)
        )
        worst_asym = max(worst_asym, drift)
    return [
        _check(
            "triple-route-agreement",
            "closed, convolution and oracle kernel routes agree on the sample grid",
            worst_route,
            tol,
        ),
        _check(
            "large-x-asymptotics",
            "x * kernel approaches the shifted sine wave by x = 1000",
            worst_asym,
            0.01,
        ),
    ]


def _suite_operators(tol):
    worst_cert = 0.0
    worst_cross = 0.0
    for m in range(4):
        even = operators.block_decompose_even(m, 32)
        odd = operators.block_decompose_odd(m, 32)
        worst_cert = max(worst_cert, even.max_abs_deviation, odd.max_abs_deviation)
        worst_cross = max(worst_cross, even.cross_block_max, odd.cross_block_max)
    worst_conj = 0.0
    signs = operators.alternating_signs(64)
    for p in (0.5, -0.5, -1.5):
        plain = operators.hilbert_type(p, 64, False).entries
        checker = operators.hilbert_type(p, 64, True).entries
        conjugated = checker * signs[:, None] * signs[None, :]
        worst_conj = max(worst_conj, abs(conjugated - plain).max())
    return [
        _check(
            "block-certificates",
            "parity block decompositions match scaled Hilbert-type targets",
            worst_cert,
            tol,
        ),
        _check(
            "vanishing-parity-blocks",
            "forbidden parity blocks of the truncations are exactly zero",
            worst_cross,
            0.0,
        ),
        _check(
            "checkerboard-conjugation",
            "sign-diagonal conjugation removes the checkerboard exactly",
            worst_conj,
            0.0,
        ),
    ]


def _suite_spectral(tol):
    worst_p0 = 0.0
    worst_ph = 0.0
    for lam in (0.01, 0.1, 1.0, 4.0, 25.0):
        root = math.sqrt(lam)
        rho0 = spectral.density_rho(0.0, lam).rho
        target0 = math.sinh(math.pi * root) / math.pi
        worst_p0 = max(worst_p0, abs(rho0 - target0) / target0)
        rho_half = spectral.density_rho(0.5, lam).rho
        target_half = math.cosh(math.pi * root) / (math.pi * root)
        worst_ph = max(worst_ph, abs(rho_half - target_half) / target_half)
    grid = [0.01 * 1.5**k for k in range(30)]
    values = [spectral.multiplier_h(lam) for lam in grid]
    violation = 0.0
    for left, right in zip(values[:-1], values[1:]):
        violation = max(violation, right - left)
    violation = max(violation, max(values) - math.pi, -min(values))
    worst_desc = 0.0
    for ell in range(L_MAX + 1):
        descriptor = spectral.diagonalization_of(ell)
        for block, (sign, p) in zip(descriptor.blocks, operators.block_parameters(ell)):
            worst_desc = max(
                worst_desc,
                abs(block.sign - sign),
                abs(block.p - p),
                abs(block.scale - 1.0 / math.pi),
            )
    return [
        _check(
            "density-closed-form-p0",
            "density at p=0 reduces to sinh(pi sqrt(lambda))/pi (relative)",
            worst_p0,
            tol,
        ),
        _check(
            "density-closed-form-p-half",
            "density at p=1/2 reduces to cosh(pi sqrt(lambda))/(pi sqrt(lambda)) (relative)",
            worst_ph,
            tol,
        ),
        _check(
            "multiplier-bounds",
            "multiplier stays in (0, pi) and decreases along an increasing grid",
            violation,
            0.0,
        ),
        _check(
            "descriptor-matches-blocks",
            "diagonalization descriptor carries the same sign/p data as the block certificates",
            worst_desc,
            0.0,
        ),
    ]


_SUITES = {
    "identities": _suite_identities,
    "fourier": _suite_fourier,
    "kernels": _suite_kernels,
    "operators": _suite_operators,
    "spectral": _suite_spectral,
}


def cmd_verify(args):
    if args.suite is None:
        raise ValueError("verify requires --suite")
    checks = _SUITES[args.suite](args.tol)
    all_pass = all(check["pass"] for check in checks)
    payload = {
        "command": "verify",
        "suite": args.suite,
        "tol": args.tol,
        "checks": checks,
        "all_pass": all_pass,
    }
    fmt = args.format or "json"
    if fmt == "json":
        text = _json_text(payload)
    else:
        text = _csv_text(
            ("name", "statement", "measured", "threshold", "pass"),
            [
                (
                    check["name"],
                    check["statement"],
                    check["measured"],
                    check["threshold"],
                    check["pass"],
                )
                for check in checks
            ],
        )
    _emit(text, args.out)
    return 0 if all_pass else 1


def _add_common(parser):
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--out", metavar="PATH", default=None)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hankel-spectra",
        description=(
            "Kernels, truncated matrix models and spectral data for a family "
            "of Hankel integral operators."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kernel = sub.add_parser("kernel", help="evaluate a kernel on a point or grid")
    kernel.add_argument("--ell", type=int)
    kernel.add_argument("--x", type=float)
    kernel.add_argument("--xmin", type=float)
    kernel.add_argument("--xmax", type=float)
    kernel.add_argument("--num", type=int)
    kernel.add_argument(
        "--method", choices=("auto", "closed", "conv", "oracle"), default="auto"
    )
    _add_common(kernel)
    kernel.set_defaults(func=cmd_kernel)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("--suite", choices=sorted(_SUITES))
    verify.add_argument("--tol", type=float, default=1e-8)
    _add_common(verify)
    verify.set_defaults(func=cmd_verify)

    spectrum = sub.add_parser(
        "spectrum", help="eigenvalues and diagnostics of a truncation"
    )
    spectrum.add_argument("--ell", type=int)
    spectrum.add_argument("--size", type=int)
    _add_common(spectrum)
    spectrum.set_defaults(func=cmd_spectrum)

    density = sub.add_parser(
        "density", help="spectral density and multiplier on a lambda grid"
    )
    density.add_argument("--p", type=float)
    density.add_argument("--lambda", dest="lam", type=float)
    density.add_argument("--lambda-min", dest="lam_min", type=float)
    density.add_argument("--lambda-max", dest="lam_max", type=float)
    density.add_argument("--num", type=int)
    _add_common(density)
    density.set_defaults(func=cmd_density)

    blocks = sub.add_parser("blocks", help="block decomposition certificate")
    blocks.add_argument("--ell", type=int)
    blocks.add_argument("--size", type=int)
    _add_common(blocks)
    blocks.set_defaults(func=cmd_blocks)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as error:
        print(f"{args.command}: configuration error: {error}", file=sys.stderr)
        return 2
    except (ArithmeticError, RuntimeError) as error:
        print(f"{args.command}: numerical failure: {error}", file=sys.stderr)
        return 3


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
