"""Command-line front end emitting plot-ready data files.

Subcommands:
  surface      survival-functional grid over measurement angles
  evolve       <sigma_mu>(t) with and without frequent measurements
  zeno         repeated-measurement survival curves (exact, limit laws, MC)
  intelligent  jump-operator eigensystem and uncertainty-saturation report

Configuration is a single flat JSON file; individual keys can be
overridden with --set key=value. All output is deterministic given the
config (including the seed). Exit codes: 0 success, 2 config error,
3 numeric contract violation, 4 I/O error.
"""

import argparse
import json
import sys

import numpy as np

from . import (
    BathParams,
    Direction,
    MeasurementSchedule,
    SqueezedZenoError,
    TimeGrid,
    bloch_to_matrix,
    eigenstates_mu,
    evolve_free,
    evolve_measured,
    maximal_m,
    monte_carlo_survival,
    pure_state_matrix,
    repeated_measurement_survival,
    s_eigensystem,
    second_order_rate,
    sigma_mu,
    survival_functional_grid,
    survival_rate,
    uncertainty_product,
    zeno_directions,
    zeno_states,
)
from .bath import lindblad_s_operator
from .errors import ParameterError
from .intelligent import SqueezeFrame, j_minus_alpha

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

COMMON_KEYS = {"gamma", "N", "M", "psi", "out", "format", "seed"}
ALLOWED_KEYS = {
    "surface": COMMON_KEYS | {"n_theta", "n_phi"},
    "evolve": COMMON_KEYS | {"state", "measure", "observable", "t_end", "n_steps"},
    "zeno": COMMON_KEYS | {"state", "dt", "count", "n_traj"},
    "intelligent": COMMON_KEYS,
}

DEFAULTS = {
    "gamma": 1.0,
    "N": 1.0,
    "M": "maximal",
    "psi": 0.0,
    "format": "csv",
    "seed": 0,
    "n_theta": 256,
    "n_phi": 256,
    "state": "zeno-plus",
    "measure": "mu1",
    "t_end": 5.0,
    "n_steps": 200,
    "dt": 0.01,
    "count": 500,
    "n_traj": 0,
}


class ConfigError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def load_config(path: str | None, overrides, command: str) -> dict:
    config = {}
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}")
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}")
    if not isinstance(config, dict):
        raise ConfigError("config root must be a JSON object")
    for item in overrides or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, _, raw = item.partition("=")
        try:
            config[key] = json.loads(raw)
        except json.JSONDecodeError:
            config[key] = raw
    unknown = set(config) - ALLOWED_KEYS[command]
    if unknown:
        raise ConfigError(
            f"unknown config key(s) for {command}: {', '.join(sorted(unknown))}"
        )
    merged = {k: DEFAULTS[k] for k in ALLOWED_KEYS[command] if k in DEFAULTS}
    merged.update(config)
    return merged


def bath_from_config(config: dict) -> BathParams:
    n = float(config["N"])
    m_raw = config["M"]
    m = maximal_m(n) if m_raw == "maximal" else float(m_raw)
    try:
        return BathParams(
            gamma=float(config["gamma"]), n=n, m=m, psi=float(config["psi"])
        )
    except (ParameterError, ValueError) as exc:
        raise ConfigError(f"invalid bath parameters: {exc}")


def resolve_direction(spec, bath: BathParams) -> Direction:
    named = {
        "mu1": lambda: zeno_directions(bath).mu1,
        "mu2": lambda: zeno_directions(bath).mu2,
        "z": lambda: Direction(0.0, 0.0),
        "-z": lambda: Direction(np.pi, 0.0),
        "x": lambda: Direction(np.pi / 2, 0.0),
        "y": lambda: Direction(np.pi / 2, np.pi / 2),
    }
    if isinstance(spec, str):
        if spec in named:
            return named[spec]()
        raise ConfigError(f"unknown direction {spec!r}")
    if isinstance(spec, (list, tuple)) and len(spec) == 2:
        return Direction(float(spec[0]), float(spec[1]))
    raise ConfigError(f"direction must be a name or [theta, phi], got {spec!r}")


def resolve_state(spec, bath: BathParams) -> np.ndarray:
    """Initial density matrix from a named state or an explicit Bloch vector."""
    if isinstance(spec, str):
        if spec == "excited":
            return bloch_to_matrix([0.0, 0.0, 1.0])
        if spec == "ground":
            return bloch_to_matrix([0.0, 0.0, -1.0])
        if spec == "zeno-plus":
            return pure_state_matrix(zeno_states(bath)[0])
        if spec == "zeno-minus":
            _, minus = eigenstates_mu(zeno_directions(bath).mu1)
            return pure_state_matrix(minus)
        raise ConfigError(f"unknown state {spec!r}")
    if isinstance(spec, (list, tuple)) and len(spec) == 3:
        return bloch_to_matrix([float(x) for x in spec])
    raise ConfigError(f"state must be a name or [x, y, z], got {spec!r}")


def resolve_pure_state(spec, bath: BathParams) -> np.ndarray:
    """Initial pure state (amplitudes) for survival experiments."""
    if isinstance(spec, str):
        if spec == "excited":
            return np.array([1.0, 0.0], dtype=complex)
        if spec == "ground":
            return np.array([0.0, 1.0], dtype=complex)
        if spec == "zeno-plus":
            return zeno_states(bath)[0]
        if spec == "zeno-minus":
            return eigenstates_mu(zeno_directions(bath).mu1)[1]
        raise ConfigError(f"unknown state {spec!r}")
    raise ConfigError("zeno requires a named pure initial state")


def write_table(path: str | None, columns, rows, fmt: str):
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_fmt(x) for x in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "columns": list(columns),
            "rows": [[float(x) for x in row] for row in rows],
        }
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    _write_text(path, text)


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}")


def cmd_surface(config: dict) -> int:
    bath = bath_from_config(config)
    n_theta, n_phi = int(config["n_theta"]), int(config["n_phi"])
    thetas, phis, f = survival_functional_grid(bath, n_theta, n_phi)
    rows = [
        (thetas[i], phis[j], f[i, j])
        for i in range(n_theta)
        for j in range(n_phi)
    ]
    out = config.get("out")
    write_table(out, ["theta", "phi", "F"], rows, config["format"])
    zd = zeno_directions(bath)
    sidecar = {
        "cos_theta_max": float(np.cos(zd.theta)),
        "phi1": zd.mu1.phi,
        "phi2": zd.mu2.phi,
        "theta": zd.theta,
    }
    sidecar_text = json.dumps(sidecar, sort_keys=True, indent=2) + "\n"
    if out is not None:
        _write_text(str(out) + ".maxima.json", sidecar_text)
    else:
        sys.stdout.write(sidecar_text)
    return EXIT_OK


def cmd_evolve(config: dict) -> int:
    bath = bath_from_config(config)
    rho0 = resolve_state(config["state"], bath)
    measure = config["measure"]
    observable = config.get("observable")
    if observable is None:
        observable = measure if measure != "none" else "mu1"
    d_obs = resolve_direction(observable, bath)
    grid = TimeGrid(0.0, float(config["t_end"]), int(config["n_steps"]))

    free = evolve_free(bath, rho0, grid)
    mu = d_obs.unit_vector
    free_vals = free.values @ mu

    if measure == "none":
        rows = list(zip(grid.times, free_vals))
        write_table(config.get("out"), ["t", "sigma_mu_free"], rows, config["format"])
        return EXIT_OK

    d_meas = resolve_direction(measure, bath)
    if not np.allclose(d_meas.unit_vector, mu, atol=1e-12):
        raise ConfigError(
            "observable must coincide with the measured direction "
            "(the monitored dynamics closes only on the measured component)"
        )
    measured, _ = evolve_measured(bath, d_meas, rho0, grid)
    rows = list(zip(grid.times, free_vals, measured.values))
    write_table(
        config.get("out"),
        ["t", "sigma_mu_free", "sigma_mu_measured"],
        rows,
        config["format"],
    )
    return EXIT_OK


def cmd_zeno(config: dict) -> int:
    bath = bath_from_config(config)
    state = resolve_pure_state(config["state"], bath)
    sched = MeasurementSchedule(float(config["dt"]), int(config["count"]))
    n_traj = int(config["n_traj"])

    exact = repeated_measurement_survival(bath, state, sched)
    times = exact.times
    rate1 = survival_rate(bath, state)
    p_first = np.exp(rate1 * times)
    if abs(rate1) <= 1e-10 * bath.gamma:
        rate2 = second_order_rate(bath, state, sched.dt)
        p_second = np.exp(rate2 * times)
    else:
        p_second = np.full_like(times, np.nan)

    columns = ["t", "P_exact", "P_first_order", "P_second_order"]
    cols = [times, exact.probabilities, p_first, p_second]
    if n_traj > 0:
        mc = monte_carlo_survival(bath, state, sched, n_traj, int(config["seed"]))
        columns += ["P_mc", "P_mc_stderr"]
        cols += [mc.probabilities, mc.stderr]
    rows = list(zip(*cols))
    write_table(config.get("out"), columns, rows, config["format"])
    return EXIT_OK


def cmd_intelligent(config: dict) -> int:
    bath = bath_from_config(config)
    report: dict = {"N": bath.n, "M": bath.m, "gamma": bath.gamma, "psi": bath.psi}
    eig = s_eigensystem(bath)
    report["degenerate"] = eig.degenerate
    if eig.degenerate:
        report["warning"] = "N=0: jump operator is nilpotent, single eigenvector"
    report["lambda_plus"] = [eig.lambda_plus.real, eig.lambda_plus.imag]
    report["lambda_minus"] = [eig.lambda_minus.real, eig.lambda_minus.imag]
    for name, vec in (("state_plus", eig.state_plus), ("state_minus", eig.state_minus)):
        report[name] = [[a.real, a.imag] for a in vec]
    gaps = {}
    for name, vec in (("plus", eig.state_plus), ("minus", eig.state_minus)):
        var1, var2, bound, gap = uncertainty_product(vec, bath.psi)
        gaps[name] = {
            "var_j1": var1,
            "var_j2": var2,
            "bound": bound,
            "saturation_gap": gap,
        }
    report["uncertainty"] = gaps
    if not eig.degenerate:
        frame = SqueezeFrame.from_bath(bath)
        s = lindblad_s_operator(bath)
        residual = np.max(
            np.abs(s - 2.0 * eig.lambda_plus * j_minus_alpha(bath.psi, frame.alpha_ratio))
        )
        report["factorization_residual"] = float(residual)
        report["alpha_ratio"] = frame.alpha_ratio
        report["squeeze_amplitude"] = frame.r
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    _write_text(config.get("out"), text)
    return EXIT_OK


COMMANDS = {
    "surface": cmd_surface,
    "evolve": cmd_evolve,
    "zeno": cmd_zeno,
    "intelligent": cmd_intelligent,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squeezed-zeno",
        description="Two-level atom in a squeezed vacuum: frozen observables, "
        "survival laws, intelligent states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="flat JSON config file")
        p.add_argument(
            "--set",
            dest="overrides",
            action="append",
            metavar="KEY=VALUE",
            help="override a config key (value parsed as JSON when possible)",
        )
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=["csv", "json"])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, args.overrides, args.command)
        if args.out is not None:
            config["out"] = args.out
        if args.format is not None:
            config["format"] = args.format
        if config.get("format") not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {config.get('format')!r}")
        return COMMANDS[args.command](config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IOError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SqueezedZenoError as exc:
        print(f"numeric contract violation: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
