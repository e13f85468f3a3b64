"""Command-line front end.

Sub-commands::

    majconfine spectrum --m 0 --b 1 --n-max 3 --method all
    majconfine modes    --b 1 --n 2 --format csv --out mode2.csv
    majconfine validate --m 1 --b 2 --out report.jsonl
    majconfine sweep    --b-values 0.5,1,2 --n-max 4

Settings may also come from a flat ``key=value`` file given with
``--config``; explicit flags win over the file. Exit codes: 0 success,
1 validation failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
import warnings
from dataclasses import asdict, dataclass

from . import __version__, analytic, validate
from .core import Grid, PotentialParams
from .numeric import find_eigen_shooting, quadrature_norm, spectrum_fd

METHODS = ("analytic", "fd", "shooting")
DEFAULT_TOLERANCES = {"analytic": 0.0, "fd": 5e-4, "shooting": 5e-4}
SPECTRUM_COLUMNS = ("method", "n", "energy_plus", "energy_minus", "spacing_to_next", "tolerance")
MODE_COLUMNS = ("x", "r", "phi", "chi_real", "chi_imag", "psi2")
SWEEP_COLUMNS = ("b", "n", "energy", "energy_over_sqrt_b")

DEFAULTS = {
    "m": 0.0,
    "b": 1.0,
    "n_max": 6,
    "method": "analytic",
    "grid": None,
    "format": "csv",
    "out": None,
    "tol": None,
    "n": 0,
    "sign": 1,
    "b_values": None,
    "allow_narrow_grid": False,
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    m: float
    b: float
    n_max: int
    method: str
    grid: str | None
    format: str
    out: str | None
    tol: float | None
    n: int
    sign: int
    b_values: str | None
    allow_narrow_grid: bool

    @property
    def params(self) -> PotentialParams:
        return PotentialParams(self.m, self.b)

    @property
    def methods(self) -> tuple:
        return METHODS if self.method == "all" else (self.method,)

    def resolved_grid(self) -> Grid:
        if self.grid is None:
            return Grid.centered(self.params, 10.0, 4001)
        return Grid.parse(self.grid)

    def header(self, command: str) -> dict:
        return {"program": "majconfine", "version": __version__, "command": command,
                "config": asdict(self), "units": "c = hbar = 1"}


def _as_bool(v):
    if isinstance(v, bool):
        return v
    s = str(v).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {v!r}")


_CASTS = {
    "m": float, "b": float, "n_max": int, "method": str, "grid": str, "format": str,
    "out": str, "tol": float, "n": int, "sign": int, "b_values": str,
    "allow_narrow_grid": _as_bool,
}


def read_config_file(path: str) -> dict:
    """Flat ``key=value`` lines; ``#`` starts a comment; dashes in keys map to underscores."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CASTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = val
    return values


def build_config(values: dict) -> RunConfig:
    merged = dict(DEFAULTS)
    merged.update(values)
    for key, cast in _CASTS.items():
        if merged[key] is not None and not isinstance(merged[key], bool):
            try:
                merged[key] = cast(merged[key])
            except (TypeError, ValueError):
                raise ConfigError(f"invalid value for {key}: {merged[key]!r}") from None
    cfg = RunConfig(**merged)
    if not (math.isfinite(cfg.b) and cfg.b > 0):
        raise ConfigError("b must be positive")
    if not math.isfinite(cfg.m):
        raise ConfigError("m must be finite")
    if cfg.n_max < 0:
        raise ConfigError("n_max must be >= 0")
    if cfg.method not in METHODS + ("all",):
        raise ConfigError(f"method must be one of {', '.join(METHODS + ('all',))}")
    if cfg.format not in ("csv", "json"):
        raise ConfigError("format must be csv or json")
    if cfg.tol is not None and not cfg.tol >= 0:
        raise ConfigError("tol must be non-negative")
    if cfg.sign not in (1, -1):
        raise ConfigError("sign must be +1 or -1")
    if cfg.n < 0:
        raise ConfigError("n must be >= 0")
    if cfg.grid is not None:
        try:
            grid = Grid.parse(cfg.grid)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not cfg.allow_narrow_grid and not grid.covers(cfg.params):
            raise ConfigError(
                f"grid {cfg.grid} does not cover 8/sqrt(b) around x = -m/b; "
                "widen it or pass --allow-narrow-grid")
    if cfg.m < 0:
        warnings.warn("m < 0: the mass only shifts the origin, results remain valid",
                      stacklevel=2)
    return cfg


# ---------------------------------------------------------------------------
# formatting


def fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, int)) and not isinstance(v, float):
        return str(int(v))
    v = float(v) + 0.0
    return format(v, ".12g")


def render(header: dict, columns, rows, fmt_kind: str) -> str:
    buf = io.StringIO()
    if fmt_kind == "json":
        doc = {"meta": header, "columns": list(columns),
               "rows": [[c if isinstance(c, (int, str)) and not isinstance(c, bool)
                         else fmt(c) for c in row] for row in rows]}
        json.dump(doc, buf, sort_keys=True, indent=1)
        buf.write("\n")
        return buf.getvalue()
    buf.write(f"# {header['program']} {header['version']} {header['command']}\n")
    buf.write(f"# units: {header['units']}\n")
    buf.write("# config: " + json.dumps(header["config"], sort_keys=True) + "\n")
    for key, val in header.items():
        if key not in ("program", "version", "command", "units", "config"):
            buf.write(f"# {key}: {val}\n")
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(fmt(c) for c in row) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# commands


def spectrum_rows(cfg: RunConfig) -> list:
    params = cfg.params
    k = cfg.n_max + 2  # one extra level for the spacing of the last row
    rows = []
    for method in cfg.methods:
        if method == "analytic":
            levels = [analytic.energy_level(n, params.b) for n in range(k)]
        elif method == "fd":
            grid = cfg.resolved_grid()
            levels = list(spectrum_fd(params, grid, k))
        else:
            levels = [find_eigen_shooting(params, n).energy(params.b) for n in range(k)]
        tol = DEFAULT_TOLERANCES[method] if cfg.tol is None or method == "analytic" else cfg.tol
        for n in range(cfg.n_max + 1):
            e = float(levels[n])
            rows.append((method, n, e, -e + 0.0, float(levels[n + 1]) - e, tol))
    return rows


def cmd_spectrum(cfg: RunConfig) -> int:
    text = render(cfg.header("spectrum"), SPECTRUM_COLUMNS, spectrum_rows(cfg), cfg.format)
    _emit(text, cfg.out)
    return 0


def mode_rows(cfg: RunConfig):
    params = cfg.params
    grid = cfg.resolved_grid()
    radius = max(8.0, math.sqrt(2 * cfg.n + 1) + 4.0)
    if not cfg.allow_narrow_grid and not grid.covers(params, radius):
        raise ConfigError(f"grid too narrow for mode n={cfg.n}: needs half-width "
                          f"{radius:g}/sqrt(b) around x = -m/b")
    mode = analytic.build_mode(cfg.n, params, cfg.sign)
    field = analytic.mode_field(mode, grid)
    x = grid.x
    r = analytic.to_oscillator_coordinate(params, x)
    dens = field.density
    rows = [(x[i], r[i], field.phi[i].real, field.chi[i].real, field.chi[i].imag, dens[i])
            for i in range(grid.n_points)]
    return mode, quadrature_norm(field), rows


def cmd_modes(cfg: RunConfig) -> int:
    mode, norm, rows = mode_rows(cfg)
    header = cfg.header("modes")
    header["mode"] = (f"n={mode.n} sign={mode.sign:+d} energy={fmt(mode.energy)} "
                      f"norm_constant={fmt(mode.norm_constant)} quadrature_norm={fmt(norm)}")
    _emit(render(header, MODE_COLUMNS, rows, cfg.format), cfg.out)
    return 0


def cmd_validate(cfg: RunConfig) -> int:
    vcfg = validate.ValidateConfig(n_max=max(cfg.n_max, 2), tol=cfg.tol)
    reports = validate.run_all(cfg.params, vcfg)
    out = cfg.out or "validation_report.jsonl"
    _emit(validate.to_json_lines(reports), out)
    sys.stdout.write(validate.format_table(reports))
    ok = validate.all_passed(reports)
    sys.stdout.write(("all checks passed" if ok else "VALIDATION FAILED") + "\n")
    return 0 if ok else 1


def parse_b_values(raw: str | None) -> list:
    if raw is None or not raw.strip():
        raise ConfigError("b_values must list at least one value")
    try:
        vals = [float(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse b_values {raw!r}") from None
    if not vals:
        raise ConfigError("b_values must list at least one value")
    if any(not (math.isfinite(v) and v > 0) for v in vals):
        raise ConfigError("b must be positive (every entry of b_values)")
    return vals


def sweep_rows(cfg: RunConfig) -> list:
    rows = []
    for b in parse_b_values(cfg.b_values):
        for n in range(cfg.n_max + 1):
            e = analytic.energy_level(n, b)
            rows.append((b, n, e, e / math.sqrt(b)))
    return rows


def cmd_sweep(cfg: RunConfig) -> int:
    header = cfg.header("sweep")
    header["collapse"] = "energy / sqrt(b) depends on n only"
    _emit(render(header, SWEEP_COLUMNS, sweep_rows(cfg), cfg.format), cfg.out)
    return 0


COMMANDS = {"spectrum": cmd_spectrum, "modes": cmd_modes,
            "validate": cmd_validate, "sweep": cmd_sweep}


# ---------------------------------------------------------------------------
# argument parsing


def _common_parser():
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--m", type=float, help="mass (default 0)")
    p.add_argument("--b", type=float, help="potential slope, > 0 (default 1)")
    p.add_argument("--n-max", dest="n_max", type=int, help="highest level (default 6)")
    p.add_argument("--method", choices=METHODS + ("all",), help="spectrum method")
    p.add_argument("--grid", help="min:max:points, e.g. --grid=-10:10:4001")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", help="output path ('-' for stdout)")
    p.add_argument("--tol", type=float, help="tolerance override")
    p.add_argument("--config", dest="config_file", help="key=value settings file")
    p.add_argument("--allow-narrow-grid", dest="allow_narrow_grid", action="store_true",
                   help="skip the Gaussian support check on --grid")
    return p


def make_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="majconfine",
        description="Majorana fermion in a linear scalar potential (1+1 D).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="energy levels per method")
    pm = sub.add_parser("modes", parents=[common], help="sampled spinor of one mode")
    pm.add_argument("--n", type=int, default=argparse.SUPPRESS, help="quantum number")
    pm.add_argument("--sign", type=int, choices=(1, -1), default=argparse.SUPPRESS,
                    help="energy branch")
    sub.add_parser("validate", parents=[common], help="run every cross-check")
    ps = sub.add_parser("sweep", parents=[common], help="levels over several slopes")
    ps.add_argument("--b-values", dest="b_values", default=argparse.SUPPRESS,
                    help="comma-separated slopes")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    ns = vars(parser.parse_args(argv))
    command = ns.pop("command")
    try:
        values = {}
        cfg_file = ns.pop("config_file", None)
        if cfg_file:
            values.update(read_config_file(cfg_file))
        values.update(ns)
        cfg = build_config(values)
        return COMMANDS[command](cfg)
    except ValueError as exc:  # ConfigError and parameter validation
        print(f"majconfine: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
