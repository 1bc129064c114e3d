"""Command-line front end: synthesis, sampling, reconstruction, DFT, error sweeps.

Commands emit plot-ready CSV or JSON tables with fixed formatting (17
significant digits, '.' decimal separator, '\\n' line endings), so identical
inputs always produce byte-identical outputs.  Output files are written to a
temporary name and atomically renamed; a failing command never leaves a
partial file behind.  Diagnostics (the active series-truncation tolerance,
conditioning warnings) go to stderr only.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import bandlimited as bl
from . import oracle
from . import undersampled as us
from .basis import DiskSignal, SamplingGrid, sample_signal
from .validation import (
    CONDITION_LIMIT,
    SERIES_TOL_ENV,
    as_disk_points,
    check_band_limit,
    check_twice_s,
    series_tolerance,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

_VISIBLE_COMMANDS = "{grid,synthesize,reconstruct,dft,error-analysis,critical-radius}"


def _diag(message: str) -> None:
    print(f"disksampling: {message}", file=sys.stderr)


def _echo_tolerance() -> None:
    raw = os.environ.get(SERIES_TOL_ENV)
    source = f"env {SERIES_TOL_ENV}={raw}" if raw is not None else f"env {SERIES_TOL_ENV} unset"
    _diag(f"series truncation tolerance = {series_tolerance()!r} ({source})")


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _render_table(columns: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "csv":
        out = io.StringIO()
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
        return out.getvalue()
    if fmt == "json":
        payload = {
            "columns": columns,
            "rows": [[(int(v) if isinstance(v, (bool, int, np.bool_, np.integer)) else float(v))
                      for v in row] for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(dir=directory, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def _read_signal(path: str) -> DiskSignal:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed signal JSON in {path}: {exc}") from exc
    try:
        twice_s = data["twice_s"]
        pairs = data["coefficients"]
        coeffs = np.array(
            [complex(real, imag) for real, imag in pairs], dtype=np.complex128
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"signal file {path} must hold twice_s and [re, im] pairs") from exc
    if coeffs.size == 0:
        raise ValueError(f"signal file {path} has an empty coefficient list")
    return DiskSignal(twice_s, coeffs)


def _read_table(path: str) -> tuple[list[str], list[list[str]]]:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        rows = [row for row in reader if row]
    if not rows:
        raise ValueError(f"{path} is empty")
    return [name.strip() for name in rows[0]], rows[1:]


def _read_samples(path: str, n_samples: int) -> np.ndarray:
    header, body = _read_table(path)
    try:
        k_col = header.index("k")
        re_col = header.index("re")
        im_col = header.index("im")
    except ValueError as exc:
        raise ValueError(f"sample file {path} needs columns k, re, im") from exc
    values = np.zeros(n_samples, dtype=np.complex128)
    seen = np.zeros(n_samples, dtype=bool)
    for row in body:
        k = int(row[k_col])
        if not 0 <= k < n_samples:
            raise ValueError(f"sample index {k} outside 0..{n_samples - 1}")
        values[k] = complex(float(row[re_col]), float(row[im_col]))
        seen[k] = True
    if not seen.all():
        raise ValueError(f"sample file {path} is missing indices for n={n_samples}")
    return values


def _read_points(path: str) -> np.ndarray:
    header, body = _read_table(path)
    try:
        re_col = header.index("re")
        im_col = header.index("im")
    except ValueError as exc:
        raise ValueError(f"query file {path} needs columns re, im") from exc
    pts = np.array(
        [complex(float(row[re_col]), float(row[im_col])) for row in body],
        dtype=np.complex128,
    )
    return as_disk_points(pts)


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{flag} expects a comma-separated list of numbers") from exc
    if not values:
        raise ValueError(f"{flag} must contain at least one value")
    return values


def _parse_int_list(text: str, flag: str) -> list[int]:
    return [int(v) for v in _parse_float_list(text, flag)]


def _check_conditioning(condition_number: float) -> None:
    if condition_number > CONDITION_LIMIT:
        _diag(
            f"warning: condition number {condition_number:.3e} exceeds "
            f"{CONDITION_LIMIT:.0e}; results may be inaccurate"
        )


def cmd_grid(args) -> int:
    grid = SamplingGrid(args.r, args.n)
    points = grid.points
    rows = [(k, points[k].real, points[k].imag) for k in range(grid.n_samples)]
    _write_output(args.output, _render_table(["k", "re", "im"], rows, args.format))
    return EXIT_OK


def cmd_synthesize(args) -> int:
    signal = _read_signal(args.input)
    if args.twice_s is not None and check_twice_s(args.twice_s) != signal.twice_s:
        raise ValueError(
            f"--twice-s {args.twice_s} does not match signal file twice_s {signal.twice_s}"
        )
    grid = SamplingGrid(args.r, args.n)
    values = sample_signal(signal, grid)
    rows = [(k, values[k].real, values[k].imag) for k in range(grid.n_samples)]
    _write_output(args.output, _render_table(["k", "re", "im"], rows, args.format))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    grid = SamplingGrid(args.r, args.n)
    samples = _read_samples(args.input, grid.n_samples)
    points = _read_points(args.points)
    if args.mode == "bandlimited":
        if args.band_limit is None:
            raise ValueError("bandlimited mode requires --band-limit")
        band_limit = check_band_limit(args.band_limit, n_samples=grid.n_samples)
        frame = bl.frame_matrix(args.twice_s, grid, band_limit)
        _check_conditioning(frame.condition_number)
        values = np.atleast_1d(bl.reconstruct_bandlimited(frame, samples, points))
    else:
        kernel = us.overlap_kernel(args.twice_s, grid)
        _check_conditioning(kernel.condition_number)
        values = np.atleast_1d(us.partial_reconstruct(kernel, samples, points))
        if args.n_max is not None:
            if args.output is None:
                raise ValueError("--n-max requires --output (coefficients go to a sibling file)")
            ahat = us.dft_coefficients(kernel, samples, args.n_max)
            coeff_rows = [(n, ahat[n].real, ahat[n].imag) for n in range(args.n_max + 1)]
            _write_output(
                f"{args.output}.ahat.{args.format}",
                _render_table(["n", "re", "im"], coeff_rows, args.format),
            )
    rows = [(k, values[k].real, values[k].imag) for k in range(values.size)]
    _write_output(args.output, _render_table(["k", "re", "im"], rows, args.format))
    return EXIT_OK


def cmd_dft(args) -> int:
    grid = SamplingGrid(args.r, args.n)
    samples = _read_samples(args.input, grid.n_samples)
    if args.mode == "bandlimited":
        if args.band_limit is None:
            raise ValueError("bandlimited mode requires --band-limit")
        band_limit = check_band_limit(args.band_limit, n_samples=grid.n_samples)
        frame = bl.frame_matrix(args.twice_s, grid, band_limit)
        _check_conditioning(frame.condition_number)
        coeffs = bl.fourier_coefficients(frame, samples)
        rows = [(m, coeffs[m].real, coeffs[m].imag) for m in range(band_limit + 1)]
        text = _render_table(["m", "re", "im"], rows, args.format)
    else:
        kernel = us.overlap_kernel(args.twice_s, grid)
        _check_conditioning(kernel.condition_number)
        n_max = args.n_max if args.n_max is not None else grid.n_samples - 1
        ahat = us.dft_coefficients(kernel, samples, n_max)
        idx = np.arange(n_max + 1)
        log_lam = np.asarray(kernel.spectrum.log_values(idx), dtype=np.float64)
        rescaled = ahat * np.exp(np.log(kernel.eigenvalues[idx % grid.n_samples]) - log_lam)
        rows = [
            (n, ahat[n].real, ahat[n].imag, rescaled[n].real, rescaled[n].imag)
            for n in range(n_max + 1)
        ]
        text = _render_table(
            ["n", "re", "im", "re_rescaled", "im_rescaled"], rows, args.format
        )
    _write_output(args.output, text)
    return EXIT_OK


def cmd_error_analysis(args) -> int:
    signal = _read_signal(args.input)
    if args.twice_s is not None and check_twice_s(args.twice_s) != signal.twice_s:
        raise ValueError(
            f"--twice-s {args.twice_s} does not match signal file twice_s {signal.twice_s}"
        )
    r_values = _parse_float_list(args.sweep_r, "--sweep-r") if args.sweep_r else [args.r]
    n_values = _parse_int_list(args.sweep_n, "--sweep-n") if args.sweep_n else [args.n]
    if any(v is None for v in r_values) or any(v is None for v in n_values):
        raise ValueError("provide --sweep-r/--sweep-n or single --r/--n values")
    norm_sq = signal.norm_squared
    rows = []
    for n in n_values:
        for r in r_values:
            kernel = us.overlap_kernel(signal.twice_s, SamplingGrid(r, n))
            profile = us.quasi_band_profile(signal, n - 1)
            exact = us.alias_error(kernel, signal) ** 2 / norm_sq
            bound = us.error_bound(kernel, profile, variant=args.bound_variant)
            rows.append(
                (
                    r,
                    n,
                    profile.epsilon_m,
                    exact,
                    bound.value,
                    bound.leading_order,
                    exact <= bound.value,
                )
            )
    text = _render_table(
        ["r", "n", "epsilon_m", "exact_normalized_sq", "bound", "leading_bound",
         "bound_satisfied"],
        rows,
        args.format,
    )
    _write_output(args.output, text)
    return EXIT_OK


def cmd_critical_radius(args) -> int:
    twice_s = check_twice_s(args.twice_s)
    m_values = _parse_int_list(args.m_list, "--m-list")
    r_grid = np.linspace(0.0, args.r_max, args.r_count)
    rows = []
    for m in m_values:
        r_c = us.critical_radius(twice_s, m)
        curve = np.atleast_1d(us.band_projection_curve(twice_s, m, r_grid))
        for r, p in zip(r_grid, curve):
            rows.append((m, r, p, r_c))
    text = _render_table(["m", "r", "p", "r_critical"], rows, args.format)
    _write_output(args.output, text)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    """Hidden: regenerate the oracle reference fixtures used by the test suite."""
    grid = SamplingGrid(0.5, 2)
    projector = oracle.dense_projector(2, grid, 16)
    frame = oracle.dense_frame(2, grid, 1)
    geometric = oracle.random_signal(2, decay=0.5, seed=args.seed)
    bandlimited = oracle.random_signal(2, band_limit=3, seed=args.seed)
    data = {
        "dense_frame_entry_00": [frame[0, 0].real, frame[0, 0].imag],
        "dense_projector_00": projector[0, 0].real,
        "dense_projector_02": projector[0, 2].real,
        "dense_projector_trace": float(np.trace(projector).real),
        "quadrature_norms": {
            f"s{ts}_m{m}": oracle.quadrature_norm(ts, m)
            for ts in (2, 4, 6)
            for m in (0, 1, 4)
        },
        "geometric_signal_head": [
            [c.real, c.imag] for c in geometric.coefficients[:4]
        ],
        "bandlimited_signal": [
            [c.real, c.imag] for c in bandlimited.coefficients
        ],
    }
    _write_output(args.output, json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def _add_io_flags(sub, with_input=True):
    if with_input:
        sub.add_argument("--input", required=True, help="input file path")
    sub.add_argument("--output", default=None, help="output file (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disksampling",
        description="Sampling, reconstruction and DFT for signals on the hyperbolic disk.",
    )
    sub = parser.add_subparsers(dest="command", metavar=_VISIBLE_COMMANDS, required=True)

    grid = sub.add_parser("grid", help="emit the ring sampling points")
    grid.add_argument("--r", type=float, required=True, help="ring radius in (0,1)")
    grid.add_argument("--n", type=int, required=True, help="number of samples")
    _add_io_flags(grid, with_input=False)
    grid.set_defaults(func=cmd_grid)

    synth = sub.add_parser("synthesize", help="sample a signal file on the ring")
    synth.add_argument("--twice-s", type=int, default=None, help="doubled spin index 2s")
    synth.add_argument("--r", type=float, required=True)
    synth.add_argument("--n", type=int, required=True)
    _add_io_flags(synth)
    synth.set_defaults(func=cmd_synthesize)

    rec = sub.add_parser("reconstruct", help="reconstruct from ring samples at query points")
    rec.add_argument("--twice-s", type=int, required=True)
    rec.add_argument("--r", type=float, required=True)
    rec.add_argument("--n", type=int, required=True)
    rec.add_argument("--mode", choices=("bandlimited", "undersampled"), required=True)
    rec.add_argument("--band-limit", type=int, default=None)
    rec.add_argument("--points", required=True, help="CSV of query points (re, im)")
    rec.add_argument("--n-max", type=int, default=None,
                     help="undersampled mode: also emit alias DFT coefficients 0..n_max")
    _add_io_flags(rec)
    rec.set_defaults(func=cmd_reconstruct)

    dft = sub.add_parser("dft", help="Fourier coefficients from ring samples")
    dft.add_argument("--twice-s", type=int, required=True)
    dft.add_argument("--r", type=float, required=True)
    dft.add_argument("--n", type=int, required=True)
    dft.add_argument("--mode", choices=("bandlimited", "undersampled"), required=True)
    dft.add_argument("--band-limit", type=int, default=None)
    dft.add_argument("--n-max", type=int, default=None)
    _add_io_flags(dft)
    dft.set_defaults(func=cmd_dft)

    err = sub.add_parser("error-analysis", help="exact error vs bound over (r, N) sweeps")
    err.add_argument("--twice-s", type=int, default=None)
    err.add_argument("--r", type=float, default=None)
    err.add_argument("--n", type=int, default=None)
    err.add_argument("--sweep-r", default=None, help="comma-separated radii")
    err.add_argument("--sweep-n", default=None, help="comma-separated sample counts")
    err.add_argument("--bound-variant", choices=("printed", "derived"), default="printed")
    _add_io_flags(err)
    err.set_defaults(func=cmd_error_analysis)

    crit = sub.add_parser("critical-radius", help="band projection curves and critical radii")
    crit.add_argument("--twice-s", type=int, required=True)
    crit.add_argument("--m-list", required=True, help="comma-separated band limits")
    crit.add_argument("--r-count", type=int, default=200)
    crit.add_argument("--r-max", type=float, default=0.999)
    _add_io_flags(crit, with_input=False)
    crit.set_defaults(func=cmd_critical_radius)

    fixtures = sub.add_parser("fixtures")
    fixtures.add_argument("--seed", type=int, default=20240601)
    _add_io_flags(fixtures, with_input=False)
    fixtures.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _echo_tolerance()
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        _diag(f"error: {exc}")
        return EXIT_INVALID
    except (ArithmeticError, RuntimeError) as exc:
        _diag(f"numerical failure: {exc}")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
