"""Command-line interface.

Usage examples:
  zerofield potentials --rho-min 1e-4 --rho-max 5e-3 --samples 100 --out pot.csv
  zerofield decompose --rho-min 6e-4 --rho-max 5e-3 --phases 0 1.5707963267948966
  zerofield observables --i0-ma-per-cm 158 --radius-um 5 --freq-hz 1e9
  zerofield interference-sweep --vary i0 --start 10 --stop 300 --samples 30
  zerofield verify

Exit codes: 0 success, 1 verification failure, 2 usage/config error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, specfun
from .decomposition import decompose_exterior, real_parts
from .observables import (
    NoBracketError,
    contrast_zero_search,
    cyclic_constant,
    flux,
    interference,
    s_parameter,
    static_limit_ratio,
)
from .potentials import CylPoint, PotentialError, potential
from .units import CM_PER_UM, ConfigError, SolenoidConfig, from_si, read_config_file, to_si

log = logging.getLogger("zerofield")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
WALL_NOTCH = 1e-9
DEFAULTS = {"i0_mA_per_cm": 158.0, "radius_um": 5.0, "freq_hz": 1e9, "n_mode": 0}

OBSERVABLES_SCHEMA = {
    "flux": {"re": float, "im": float, "quadrature_re": float, "quadrature_im": float},
    "omega1": {"derived": float, "as_printed": float, "contour_integral": float},
    "s_param": float,
    "contrast": float,
    "static_limit_ratio": float,
}


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x}")
        return format(x, ".17g")
    return str(x)


def _clean(obj):
    """Round-trip every float through 17 significant digits for JSON output."""
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _workers() -> int:
    raw = os.environ.get("ZEROFIELD_THREADS", "")
    try:
        n = int(raw) if raw else os.cpu_count() or 1
    except ValueError:
        n = 1
    return max(1, n)


def _pmap(fn, items):
    items = list(items)
    n = _workers()
    if n == 1 or len(items) < 256:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# -- config -------------------------------------------------------------------

def load_config(args) -> tuple[SolenoidConfig, dict]:
    values = dict(DEFAULTS)
    if args.config:
        try:
            values.update(read_config_file(args.config))
        except OSError as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
    for flag, key in (("i0_ma_per_cm", "i0_mA_per_cm"), ("radius_um", "radius_um"),
                      ("freq_hz", "freq_hz"), ("mode_n", "n_mode")):
        v = getattr(args, flag, None)
        if v is not None:
            values[key] = v
    cfg = from_si(values["i0_mA_per_cm"], values["radius_um"], values["freq_hz"], values["n_mode"])
    return cfg, values


def manifest(command: str, cfg: SolenoidConfig, si: dict) -> dict:
    return {
        "command": command,
        "config_si": si,
        "config_cgs": {"I0": cfg.I0, "R": cfg.R, "omega": cfg.omega, "n_mode": cfg.n_mode, "k": cfg.k},
        "tool_version": __version__,
        "kernel_backend": specfun.BACKEND,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }


def emit(args, text: str, command: str, cfg: SolenoidConfig, si: dict) -> None:
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return
    out = Path(args.out)
    out.write_text(text, encoding="utf-8", newline="")
    side = out.with_name(out.name + ".manifest.json")
    side.write_text(json.dumps(_clean(manifest(command, cfg, si)), indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")
    log.info("wrote %s and %s", out, side)


def rows_to_text(fmt_name: str, header: list[str], rows: list[list]) -> str:
    if fmt_name == "json":
        objs = [dict(zip(header, r)) for r in rows]
        return json.dumps(_clean(objs), allow_nan=False, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) for v in r])
    return buf.getvalue()


def rho_grid(rmin: float, rmax: float, samples: int, R: float) -> list[float]:
    if samples < 1:
        raise UsageError("--samples must be >= 1")
    if not (0 <= rmin <= rmax):
        raise UsageError("need 0 <= --rho-min <= --rho-max")
    if samples == 1:
        grid = [rmin]
    else:
        step = (rmax - rmin) / (samples - 1)
        grid = [rmin + i * step for i in range(samples)]
    kept = []
    for r in grid:
        if abs(r - R) <= WALL_NOTCH * R:
            log.warning("skipping rho=%r within the wall notch R(1 +/- %g)", r, WALL_NOTCH)
            continue
        kept.append(r)
    return kept


# -- subcommands --------------------------------------------------------------

def cmd_potentials(args) -> int:
    cfg, si = load_config(args)
    grid = rho_grid(args.rho_min, args.rho_max, args.samples, cfg.R)

    def row(r):
        ph = potential(cfg, CylPoint(r, args.alpha))
        return [r, ph.a_alpha.real, ph.a_alpha.imag, ph.a_rho.real, ph.a_rho.imag, ph.region.value]

    rows = _pmap(row, grid)
    header = ["rho_cm", "re_a_alpha", "im_a_alpha", "re_a_rho", "im_a_rho", "region"]
    emit(args, rows_to_text(args.format, header, rows), "potentials", cfg, si)
    return EXIT_OK


def cmd_decompose(args) -> int:
    cfg, si = load_config(args)
    if cfg.n_mode != 0:
        raise UsageError("decompose requires --mode-n 0")
    if cfg.omega == 0:
        raise UsageError("decompose requires --freq-hz > 0")
    if args.rho_min <= cfg.R:
        raise UsageError(f"decompose is exterior only: --rho-min must exceed R = {cfg.R} cm")
    grid = rho_grid(args.rho_min, args.rho_max, args.samples, cfg.R)
    phases = args.phases

    def rows_at(r):
        d = decompose_exterior(cfg, CylPoint(r, args.alpha))
        out = []
        for ph in phases:
            t = ph / cfg.omega
            a_f, a_0 = real_parts(d, t)
            total = d.total.at_time(cfg.omega, t)[1]
            phi0 = d.zerofield_part.at_time(cfg.omega, t)[2]
            out.append([r, ph, a_f, a_0, total, phi0])
        return out

    rows = [row for chunk in _pmap(rows_at, grid) for row in chunk]
    header = ["rho_cm", "phase", "a_alpha_field_re", "a_alpha_zerofield_re", "a_alpha_total_re",
              "phi_zerofield_alpha0"]
    emit(args, rows_to_text(args.format, header, rows), "decompose", cfg, si)
    return EXIT_OK


def observables_payload(cfg: SolenoidConfig, contour_radius: float) -> dict:
    if cfg.n_mode != 0:
        raise UsageError("observables require --mode-n 0")
    f = flux(cfg)
    cc = cyclic_constant(cfg, contour_radius)
    inter = interference(cfg)
    return {
        "flux": {"re": f.closed_form.real, "im": f.closed_form.imag,
                 "quadrature_re": f.quadrature.real, "quadrature_im": f.quadrature.imag},
        "omega1": {"derived": cc.closed_form, "as_printed": cc.as_printed,
                   "contour_integral": cc.contour_integral},
        "s_param": inter.s_param,
        "contrast": inter.contrast,
        "static_limit_ratio": static_limit_ratio(cfg),
    }


def validate_observables(doc: dict, schema: dict = OBSERVABLES_SCHEMA) -> None:
    """Raise ValueError unless ``doc`` has exactly the schema's keys and types."""
    for key, spec in schema.items():
        if key not in doc:
            raise ValueError(f"missing key {key!r}")
        if isinstance(spec, dict):
            if not isinstance(doc[key], dict):
                raise ValueError(f"{key!r} must be an object")
            validate_observables(doc[key], spec)
        elif not isinstance(doc[key], (int, float)) or isinstance(doc[key], bool):
            raise ValueError(f"{key!r} must be a number")


def cmd_observables(args) -> int:
    cfg, si = load_config(args)
    radius = cfg.R * 2.0 if args.contour_radius_um is None else args.contour_radius_um * CM_PER_UM
    doc = _clean(observables_payload(cfg, radius))
    validate_observables(doc)
    text = json.dumps(doc, allow_nan=False, indent=2, sort_keys=True) + "\n"
    emit(args, text, "observables", cfg, si)
    return EXIT_OK


SWEEP_FIELDS = {"i0": "i0_mA_per_cm", "radius": "radius_um", "freq": "freq_hz"}


def cmd_interference_sweep(args) -> int:
    cfg, si = load_config(args)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    key = SWEEP_FIELDS[args.vary]
    step = (args.stop - args.start) / (args.samples - 1)
    values = [args.start + i * step for i in range(args.samples)]

    def row(v):
        s = dict(to_si(cfg))
        s[key] = v
        c = from_si(s["i0_mA_per_cm"], s["radius_um"], s["freq_hz"], s["n_mode"])
        r = interference(c, phases=args.phases)
        return [v, r.s_param, r.j0_of_s, r.contrast]

    rows = _pmap(row, values)
    header = [key, "s_param", "j0_s", "contrast"]
    if args.format == "json":
        doc = {"rows": [dict(zip(header, r)) for r in rows]}
        if args.vary in ("i0", "radius"):
            name = "I0" if args.vary == "i0" else "R"
            lo = values[0] if values[0] > 0 else values[1]
            lo_cfg = getattr(cfg, name) * lo / si[key]
            hi_cfg = getattr(cfg, name) * values[-1] / si[key]
            try:
                zero = contrast_zero_search(cfg, name, (lo_cfg, hi_cfg))
                doc["contrast_zero"] = zero * si[key] / getattr(cfg, name)
            except NoBracketError:
                doc["contrast_zero"] = None
        text = json.dumps(_clean(doc), allow_nan=False, indent=1) + "\n"
    else:
        text = rows_to_text("csv", header, rows)
    emit(args, text, "interference-sweep", cfg, si)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import ARHO_NOTE, OMEGA1_NOTE, run_all

    results = run_all(args.tol)
    for r in results:
        print(r.line())
    print(f"NOTE {OMEGA1_NOTE}")
    print(f"NOTE {ARHO_NOTE}")
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed (kernel backend: {specfun.BACKEND})")
    return EXIT_VERIFY if failed else EXIT_OK


# -- parser -------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key = value file (i0_mA_per_cm, radius_um, freq_hz, n_mode)")
    p.add_argument("--i0-ma-per-cm", type=float, help="surface current amplitude, mA/cm")
    p.add_argument("--radius-um", type=float, help="solenoid radius, micrometres")
    p.add_argument("--freq-hz", type=float, help="drive frequency, Hz (0 = static)")
    p.add_argument("--mode-n", type=int, help="azimuthal mode index, 0..8")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--tol", type=float, help="override every residual tolerance (verify only)")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zerofield", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("potentials", help="A_alpha, A_rho phasors along a radial line")
    _common(p)
    p.add_argument("--rho-min", type=float, default=1e-4, help="cm")
    p.add_argument("--rho-max", type=float, default=5e-3, help="cm")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--alpha", type=float, default=0.0, help="azimuth, rad")
    p.set_defaults(func=cmd_potentials)

    p = sub.add_parser("decompose", help="field / zero-field split outside the solenoid")
    _common(p)
    p.add_argument("--rho-min", type=float, default=6e-4, help="cm, must exceed R")
    p.add_argument("--rho-max", type=float, default=5e-3, help="cm")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--phases", type=float, nargs="+", default=[0.0, math.pi / 2], help="omega t values, rad")
    p.add_argument("--alpha", type=float, default=1.0, help="unwrapped azimuth for phi0, rad")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("observables", help="flux, cyclic constant, S and contrast as JSON")
    _common(p)
    p.add_argument("--contour-radius-um", type=float, help="default 2R")
    p.set_defaults(func=cmd_observables, format="json")

    p = sub.add_parser("interference-sweep", help="S and contrast over a parameter range")
    _common(p)
    p.add_argument("--vary", choices=tuple(SWEEP_FIELDS), default="i0")
    p.add_argument("--start", type=float, default=10.0)
    p.add_argument("--stop", type=float, default=300.0)
    p.add_argument("--samples", type=int, default=30)
    p.add_argument("--phases", type=int, default=64)
    p.set_defaults(func=cmd_interference_sweep)

    p = sub.add_parser("verify", help="run the invariant suite; exit 1 on any failure")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # ConfigError, PotentialError and SpecfunDomainError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
