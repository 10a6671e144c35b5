"""Command-line interface.

Usage:
    qvfo levels --tau 0.038 --nmax 6
    qvfo magic --tau 0.038 --epsilon 0 --nmax 26
    qvfo slope --tau 0.050 --epsilon 0.005 --nmax 26 --from 9
    qvfo shells --tau 0.050 --epsilon 0.0055 --nmax 25 --ncut 2008
    qvfo vmi --C 1 --theta0 1 --jmax 10
    qvfo morse --D 2 --alpha 1 --nmax 5
    qvfo vfo-derive --tau 0.038 --C 100 --nmax 4
    qvfo --golden

Exit codes: 0 success, 1 configuration error, 2 computation error,
3 golden comparison mismatch.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import click
import numpy as np

from . import __version__
from .core import QhoParams, QuantumNumbers, allowed_l, e_q
from .errors import ComputationError, ConfigError, EmptyInput, QvfoError, TooFewExtrema
from .golden import run_golden
from .orbits import CALIBRATED_SLOPE, fit_cuberoot_line
from .shells import ShellDecomposition, beat_node, shell_decomposition
from .spectrum import DEFAULT_DELTA, MagicTable, build_scheme, magic_numbers
from .variational import (
    MorseParams,
    VmiParams,
    effective_frequency,
    epsilon_from_stiffness,
    morse_spectrum,
    morse_to_vho,
    qvfo_energy,
    qvfo_frequency,
    rigid_rotor_energy,
    vho_frequency,
    vho_spectrum,
    vmi_energy,
    vmi_theta,
)

__all__ = ["RunConfig", "cli", "emit_plot_data", "format_table", "parse_table", "main"]

EXIT_CONFIG = 1
EXIT_COMPUTATION = 2
EXIT_GOLDEN = 3

# config-file keys that differ from parameter names
_CONFIG_ALIASES = {"format": "output_format", "out": "output_path", "from": "i_from", "to": "i_to"}


@dataclass
class RunConfig:
    subcommand: str
    tau: float | None = None
    epsilon: float = 0.0
    n_max: int | None = None
    delta: float = DEFAULT_DELTA
    n_cut: int | None = None
    output_format: str = "csv"
    output_path: str | None = None
    extra: dict = field(default_factory=dict)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _plain(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def format_table(
    columns: list[str],
    rows: list[tuple],
    config: RunConfig,
    output_format: str,
    footer: dict | None = None,
) -> str:
    """Render rows as CSV (canonical) or JSON (records plus metadata)."""
    if output_format == "json":
        meta = {"config": asdict(config)}
        if footer:
            meta["fit"] = {k: _plain(v) for k, v in footer.items()}
        records = [{c: _plain(v) for c, v in zip(columns, row)} for row in rows]
        return json.dumps({"metadata": meta, "records": records}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    if footer:
        buf.write("# " + ",".join(f"{k}={_fmt(v)}" for k, v in footer.items()) + "\n")
    return buf.getvalue()


def parse_table(text: str, output_format: str = "csv") -> tuple[list[dict], dict]:
    """Inverse of :func:`format_table`: ``(records, footer)`` with numeric values."""

    def num(s: str):
        try:
            return int(s)
        except ValueError:
            return float(s)

    if output_format == "json":
        data = json.loads(text)
        return data["records"], data["metadata"].get("fit", {})
    body = [line for line in text.splitlines() if line and not line.startswith("#")]
    footer = {}
    for line in text.splitlines():
        if line.startswith("# "):
            for item in line[2:].split(","):
                key, value = item.split("=", 1)
                footer[key] = num(value)
    reader = csv.DictReader(body)
    return [{k: num(v) for k, v in rec.items()} for rec in reader], footer


def emit_plot_data(table: MagicTable | ShellDecomposition) -> tuple[list[str], list[tuple]]:
    """Plot-ready columns for a magic-number table or a shell decomposition."""
    if isinstance(table, MagicTable):
        if not len(table):
            raise EmptyInput("magic-number table is empty")
        rows = [(i, n ** (1.0 / 3.0), CALIBRATED_SLOPE * i) for i, n in table.entries]
        return ["i", "N_cbrt", "reference"], rows
    if isinstance(table, ShellDecomposition):
        if not len(table.n):
            raise EmptyInput("shell decomposition has no samples")
        rows = [(int(n), float(np.cbrt(n)), float(s)) for n, s in zip(table.n, table.shell)]
        return ["N", "N_cbrt", "E_shell"], rows
    raise ConfigError(f"cannot emit plot data for {type(table).__name__}")


class FiniteFloat(click.ParamType):
    name = "float"

    def __init__(self, min: float | None = None, min_open: bool = False) -> None:
        self.min = min
        self.min_open = min_open

    def convert(self, value, param, ctx):
        try:
            x = float(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not a number", param, ctx)
        if not math.isfinite(x):
            self.fail(f"{value!r} is not finite", param, ctx)
        if self.min is not None and (x < self.min or (self.min_open and x == self.min)):
            op = ">" if self.min_open else ">="
            self.fail(f"{x} must be {op} {self.min}", param, ctx)
        return x


def _load_config(ctx: click.Context, param, value):
    if value is None:
        return None
    settings = {}
    for lineno, raw in enumerate(Path(value).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.BadParameter(f"line {lineno}: expected 'key = value'", ctx, param)
        key, val = (s.strip() for s in line.split("=", 1))
        key = _CONFIG_ALIASES.get(key, key.replace("-", "_"))
        settings[key] = val
    known = {p.name for cmd in ctx.command.commands.values() for p in cmd.params}
    unknown = sorted(set(settings) - known)
    if unknown:
        raise click.BadParameter(f"unknown keys {unknown}", ctx, param)
    ctx.default_map = {
        name: {k: v for k, v in settings.items() if k in {p.name for p in cmd.params}}
        for name, cmd in ctx.command.commands.items()
    }
    return value


def _write(ctx: click.Context, text: str, output_path: str | None) -> None:
    if output_path:
        Path(output_path).write_text(text)
    else:
        click.echo(text, nl=False)


def _output_options(f):
    f = click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None,
                     help="Write to this file instead of stdout.")(f)
    f = click.option("--format", "output_format", type=click.Choice(["csv", "json"]),
                     default="csv", show_default=True)(f)
    return f


def _model_options(f):
    f = click.option("--nmax", type=click.IntRange(min=0), required=True,
                     help="Highest shell; truncation at the (nmax, nmax) level.")(f)
    f = click.option("--epsilon", type=FiniteFloat(min=0.0), default=0.0, show_default=True)(f)
    f = click.option("--tau", type=FiniteFloat(), required=True, help="Deformation, q = exp(tau).")(f)
    return f


_delta_option = click.option("--delta", type=FiniteFloat(min=0.0, min_open=True),
                             default=DEFAULT_DELTA, show_default=True, help="Gap threshold.")


@click.group(invoke_without_command=True)
@click.version_option(__version__)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), callback=_load_config,
              is_eager=True, expose_value=False, help="key = value file; flags override it.")
@click.option("--golden", is_flag=True, help="Compare against the stored reference tables.")
@click.pass_context
def cli(ctx: click.Context, golden: bool) -> None:
    """Shell structure of the q-deformed oscillator and its variable frequency extension."""
    if golden:
        failed = 0
        for label, problems in run_golden():
            status = "PASS" if not problems else "FAIL"
            failed += bool(problems)
            click.echo(f"{status} {label}" + (": " + "; ".join(problems) if problems else ""))
        ctx.exit(EXIT_GOLDEN if failed else 0)
    elif ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command()
@_model_options
@_output_options
def levels(tau, epsilon, nmax, output_format, output_path):
    """Sorted, truncated level scheme."""
    cfg = RunConfig("levels", tau, epsilon, nmax, output_format=output_format, output_path=output_path)
    scheme = build_scheme(QhoParams(tau, epsilon), nmax)
    rows, filled = [], 0
    for lv in scheme.levels:
        filled += lv.capacity
        rows.append((lv.n, lv.l, lv.energy, lv.capacity, filled))
    text = format_table(["n", "l", "energy", "capacity", "filled"], rows, cfg, output_format)
    _write(click.get_current_context(), text, output_path)


@cli.command()
@_model_options
@_delta_option
@click.option("--plot", is_flag=True, help="Emit (i, N^(1/3), reference line) instead.")
@_output_options
def magic(tau, epsilon, nmax, delta, plot, output_format, output_path):
    """Magic numbers from gaps larger than delta."""
    cfg = RunConfig("magic", tau, epsilon, nmax, delta, output_format=output_format,
                    output_path=output_path, extra={"plot": plot})
    table = magic_numbers(build_scheme(QhoParams(tau, epsilon), nmax), delta)
    if plot:
        columns, rows = emit_plot_data(table)
    else:
        columns, rows = ["i", "N"], table.entries
    _write(click.get_current_context(), format_table(columns, rows, cfg, output_format), output_path)


@cli.command()
@_model_options
@_delta_option
@click.option("--from", "i_from", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--to", "i_to", type=click.IntRange(min=1), default=None,
              help="Last index (default: whole table).")
@_output_options
def slope(tau, epsilon, nmax, delta, i_from, i_to, output_format, output_path):
    """Straight-line fit of N_i^(1/3) against i."""
    cfg = RunConfig("slope", tau, epsilon, nmax, delta, output_format=output_format,
                    output_path=output_path, extra={"i_from": i_from, "i_to": i_to})
    table = magic_numbers(build_scheme(QhoParams(tau, epsilon), nmax), delta)
    fit = fit_cuberoot_line(table, i_from, i_to)
    lo, hi = fit.i_range
    rows = [
        (i, table[i], table[i] ** (1.0 / 3.0), float(fit.predict(i)), CALIBRATED_SLOPE * i)
        for i in range(lo, hi + 1)
    ]
    footer = {"slope": fit.slope, "intercept": fit.intercept, "rms": fit.rms,
              "i_from": lo, "i_to": hi}
    text = format_table(["i", "N", "N_cbrt", "fit", "reference"], rows, cfg, output_format, footer)
    _write(click.get_current_context(), text, output_path)


@cli.command()
@_model_options
@click.option("--ncut", type=click.IntRange(min=1), required=True,
              help="Last sample abscissa of the liquid-drop fit.")
@click.option("--plot", is_flag=True, help="Emit (N, N^(1/3), E_shell) instead.")
@_output_options
def shells(tau, epsilon, nmax, ncut, plot, output_format, output_path):
    """Windowed total energy split into liquid-drop and shell parts."""
    cfg = RunConfig("shells", tau, epsilon, nmax, n_cut=ncut, output_format=output_format,
                    output_path=output_path, extra={"plot": plot})
    dec = shell_decomposition(build_scheme(QhoParams(tau, epsilon), nmax), ncut)
    fit = dec.fit
    footer = {f"a{k}": c for k, c in enumerate(fit.coefficients, start=1)}
    footer.update(sigma=fit.sigma, n_points=fit.n_points, n_cut=fit.n_cut)
    try:
        footer["beat_node"] = beat_node(dec)
    except TooFewExtrema:
        pass
    if plot:
        columns, rows = emit_plot_data(dec)
    else:
        columns, rows = ["N", "E", "E_av", "E_shell"], dec.samples
    text = format_table(columns, rows, cfg, output_format, footer)
    _write(click.get_current_context(), text, output_path)


@cli.command()
@click.option("--C", "C", type=FiniteFloat(min=0.0, min_open=True), required=True, help="Stiffness.")
@click.option("--theta0", type=FiniteFloat(min=0.0), required=True)
@click.option("--jmax", type=click.IntRange(min=0), default=20, show_default=True)
@click.option("--jstep", type=click.IntRange(min=1), default=2, show_default=True)
@_output_options
def vmi(C, theta0, jmax, jstep, output_format, output_path):
    """Variable moment of inertia levels."""
    cfg = RunConfig("vmi", output_format=output_format, output_path=output_path,
                    extra={"C": C, "theta0": theta0, "jmax": jmax, "jstep": jstep})
    p = VmiParams(C, theta0)
    rows = []
    for J in range(0, jmax + 1, jstep):
        rigid = rigid_rotor_energy(J, theta0) if theta0 > 0 else (0.0 if J == 0 else math.inf)
        rows.append((J, vmi_theta(J, p), vmi_energy(J, p), rigid))
    text = format_table(["J", "theta", "energy", "rigid_energy"], rows, cfg, output_format)
    _write(click.get_current_context(), text, output_path)


@cli.command()
@click.option("--D", "D", type=FiniteFloat(min=0.0, min_open=True), required=True, help="Well depth.")
@click.option("--alpha", type=FiniteFloat(min=0.0, min_open=True), required=True)
@click.option("--mass", type=FiniteFloat(min=0.0, min_open=True), default=1.0, show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=10, show_default=True)
@_output_options
def morse(D, alpha, mass, nmax, output_format, output_path):
    """Morse levels next to the equivalent variable frequency oscillator."""
    p = MorseParams(D, alpha, mass)
    C, omega0 = morse_to_vho(p)
    cfg = RunConfig("morse", n_max=nmax, output_format=output_format, output_path=output_path,
                    extra={"D": D, "alpha": alpha, "mass": mass, "C": C, "omega0": omega0})
    rows = [(n, morse_spectrum(n, p), vho_spectrum(n, C, omega0), vho_frequency(n, C, omega0))
            for n in range(nmax + 1)]
    text = format_table(["n", "morse_energy", "vho_energy", "frequency"], rows, cfg, output_format)
    _write(click.get_current_context(), text, output_path)


@cli.command("vfo-derive")
@click.option("--tau", type=FiniteFloat(), required=True)
@click.option("--C", "C", type=FiniteFloat(min=0.0, min_open=True), required=True)
@click.option("--omega0", type=FiniteFloat(min=0.0, min_open=True), default=1.0, show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=6, show_default=True)
@_output_options
def vfo_derive(tau, C, omega0, nmax, output_format, output_path):
    """Variationally derived q-oscillator levels against E - epsilon E^2."""
    eps = epsilon_from_stiffness(C, omega0)
    p = QhoParams(tau, eps, omega0)
    cfg = RunConfig("vfo-derive", tau, eps, nmax, output_format=output_format,
                    output_path=output_path, extra={"C": C, "omega0": omega0})
    rows = []
    for n in range(nmax + 1):
        for l in allowed_l(n):
            qn = QuantumNumbers(n, l)
            e = e_q(qn, tau)
            bare = omega0 * e
            rows.append((n, l, e, qvfo_frequency(qn, tau, C, omega0), effective_frequency(qn, p),
                         qvfo_energy(qn, tau, C, omega0), bare - eps * bare * bare))
    columns = ["n", "l", "e_q", "omega_stationary", "omega_effective", "energy_variational", "energy_vfo"]
    text = format_table(columns, rows, cfg, output_format, {"epsilon": eps})
    _write(click.get_current_context(), text, output_path)


def _error_record(code: str, message: str, exit_code: int) -> None:
    record = {"error": code, "message": message, "exit_code": exit_code}
    click.echo(json.dumps(record), err=True)


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="qvfo", standalone_mode=False)
    except click.exceptions.Abort:
        _error_record("Aborted", "aborted", EXIT_CONFIG)
        return EXIT_CONFIG
    except click.ClickException as exc:
        _error_record("ConfigError", exc.format_message(), EXIT_CONFIG)
        return EXIT_CONFIG
    except ConfigError as exc:
        _error_record(exc.code, str(exc), EXIT_CONFIG)
        return EXIT_CONFIG
    except (ComputationError, QvfoError) as exc:
        _error_record(exc.code, str(exc), EXIT_COMPUTATION)
        return EXIT_COMPUTATION
    except OSError as exc:
        _error_record("ConfigError", str(exc), EXIT_CONFIG)
        return EXIT_CONFIG
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
