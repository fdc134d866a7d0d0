"""``cgp`` command line front end.

Results go to standard output as JSON; tabular data (histograms, scans,
sample dumps) is written as CSV to the ``--out``/``--dump`` paths.
Exit codes: 0 success, 1 numerical failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import fixtures
from .asymmetry import HamiltonianSpectrum, agp, agp_monte_carlo
from .cgp import cgp_channel, cgp_unitary, is_mub_pair, mixture_scan
from .channels import KrausChannel
from .ensembles import default_workers
from .matrix_core import MatrixFormatError, matrix_from_json, matrix_to_json
from .protocol import monte_carlo_cgp, simulate_protocol_channel, simulate_protocol_unitary
from .statistics import (
    histogram,
    ks_test_d2,
    levy_bound,
    moments_summary,
    sample_normalized_cgp,
    variance_scaling_fit,
)

COMMANDS = ("unitary", "channel", "protocol", "sample", "scaling", "moments", "scan", "agp", "fixtures")


class InputError(ValueError):
    """Bad user input; maps to exit code 2."""


@dataclass
class RunConfig:
    command: str
    dim: int | None = None
    samples: int | None = None
    seed: int = 0
    bins: int = 100
    input_path: str | None = None
    output_path: str | None = None
    format: str = "json"
    threads: int | None = None
    steps: int = 10
    dims: list = field(default_factory=list)
    spectrum: list = field(default_factory=list)
    fixture: str | None = None
    rowswap: tuple | None = None
    mc: bool = False
    dump_path: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command '{self.command}'")
        needs_dim = {"sample", "moments"}
        if self.command in needs_dim and self.dim is None:
            raise InputError(f"{self.command}: --dim is required")
        if self.fixture and self.dim is None:
            raise InputError("fixture flags need --dim")
        if self.dim is not None and self.dim < 1:
            raise InputError("--dim must be positive")
        if self.samples is not None and self.samples < 1:
            raise InputError("--samples must be positive")
        if self.command in ("unitary", "protocol") and not (self.input_path or self.fixture):
            raise InputError(f"{self.command}: give --in or a fixture flag")
        if self.command in ("channel", "scan") and not self.input_path:
            raise InputError(f"{self.command}: --in is required")
        if self.command == "agp":
            if not (self.input_path or self.fixture):
                raise InputError("agp: give --in or a fixture flag")
            if not self.spectrum:
                raise InputError("agp: --spectrum is required")
        if self.command == "scaling" and len(set(self.dims)) < 3:
            raise InputError("scaling: --dims needs at least 3 distinct dimensions")
        if self.seed < 0:
            raise InputError("--seed must be nonnegative")


# -- input helpers --------------------------------------------------------------

def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read '{path}': {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"'{path}' is not valid JSON: {exc.msg}") from None


def _matrix_list(obj, key: str) -> list:
    if isinstance(obj, list):
        items = obj
    elif isinstance(obj, dict) and key in obj:
        items = obj[key]
    else:
        raise MatrixFormatError(f"missing field '{key}'")
    if not isinstance(items, list) or not items:
        raise MatrixFormatError(f"field '{key}' must be a nonempty list of matrix objects")
    mats = [matrix_from_json(m, f"{key}[{k}]") for k, m in enumerate(items)]
    d = obj.get("d") if isinstance(obj, dict) else None
    if d is not None and (not isinstance(d, int) or isinstance(d, bool) or d < 1):
        raise MatrixFormatError("field 'd' must be a positive integer")
    for k, m in enumerate(mats):
        if m.shape[0] != m.shape[1]:
            raise MatrixFormatError(f"{key}[{k}]: matrix is not square")
        if d is not None and m.shape[0] != d:
            raise MatrixFormatError(f"{key}[{k}]: dimension {m.shape[0]} does not match field 'd' = {d}")
    return mats


def _load_operator(cfg: RunConfig):
    """Return a unitary matrix (fixture or matrix JSON) or a KrausChannel (Kraus JSON)."""
    if cfg.fixture:
        return _fixture_matrix(cfg)
    obj = _load(cfg.input_path)
    if isinstance(obj, dict) and "kraus" in obj:
        return KrausChannel(_matrix_list(obj, "kraus"))
    u = matrix_from_json(obj)
    if u.shape[0] != u.shape[1]:
        raise MatrixFormatError("matrix: d_rows must equal d_cols")
    return u


def _fixture_matrix(cfg: RunConfig) -> np.ndarray:
    d = cfg.dim
    if cfg.fixture == "fourier-rowswap":
        i, j = cfg.rowswap
        if not (0 <= i < d and 0 <= j < d):
            raise InputError("--rowswap indices must lie in [0, dim)")
        return fixtures.fourier_rowswap(d, i, j)
    if cfg.fixture in ("random-haar", "random-permutation-phase"):
        return fixtures.make(cfg.fixture, d, seed=cfg.seed)
    return fixtures.make(cfg.fixture, d)


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'") from None


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


# -- commands --------------------------------------------------------------------------

def _cmd_unitary(cfg):
    u = _load_operator(cfg)
    if isinstance(u, KrausChannel):
        raise InputError("unitary: got Kraus JSON; use the 'channel' command")
    res = cgp_unitary(u)
    _emit({**res.as_dict(), "mub": is_mub_pair(u)})


def _cmd_channel(cfg):
    op = _load_operator(cfg)
    chan = op if isinstance(op, KrausChannel) else KrausChannel.from_unitary(op)
    _emit({**cgp_channel(chan).as_dict(), "n_kraus": len(chan)})


def _cmd_protocol(cfg):
    op = _load_operator(cfg)
    if isinstance(op, KrausChannel):
        trace = simulate_protocol_channel(op)
    else:
        trace = simulate_protocol_unitary(op)
    out = {
        "s_omega": trace.s_expectation_omega,
        "s_omega_tilde": trace.s_expectation_omega_tilde,
        "cgp": trace.cgp_value,
    }
    if cfg.mc:
        est = monte_carlo_cgp(op, n=cfg.samples or 100_000, seed=cfg.seed, workers=cfg.threads)
        out.update(mc_mean=est.mean, mc_se=est.std_error, mc_samples=est.n_samples, seed=cfg.seed)
    _emit(out)


def _cmd_sample(cfg):
    n = cfg.samples or 100_000
    values = sample_normalized_cgp(cfg.dim, n, cfg.seed, cfg.threads)
    hist = histogram(values, cfg.bins)
    mean, var, skew, kurt = moments_summary(values) if n > 1 else (float(values[0]), 0.0, float("nan"), float("nan"))
    summary = {
        "dim": cfg.dim,
        "n_samples": n,
        "seed": cfg.seed,
        "mean": mean,
        "variance": var,
        "std_error": float(np.sqrt(var / n)),
        "analytic_mean": cfg.dim / (cfg.dim + 1.0),
        "bins": cfg.bins,
    }
    if cfg.dim == 2:
        summary["ks_statistic"] = ks_test_d2(values)
    if cfg.output_path:
        _write_csv(cfg.output_path, ["bin_left", "bin_right", "density"], hist)
        summary["histogram_csv"] = cfg.output_path
    elif cfg.format == "json":
        summary["histogram"] = hist
    if cfg.dump_path:
        _write_csv(cfg.dump_path, ["sample_index", "value"], ((i, repr(float(v))) for i, v in enumerate(values)))
        summary["samples_csv"] = cfg.dump_path
    _emit(summary)


def _cmd_scaling(cfg):
    fit = variance_scaling_fit(cfg.dims, cfg.samples or 10_000, cfg.seed, cfg.threads)
    _emit({**fit.as_dict(), "seed": cfg.seed, "n_per_dim": cfg.samples or 10_000})


def _cmd_moments(cfg):
    n = cfg.samples or 10_000
    values = sample_normalized_cgp(cfg.dim, n, cfg.seed, cfg.threads)
    mean, var, skew, kurt = moments_summary(values)
    threshold, bound = levy_bound(cfg.dim)
    _emit({
        "dim": cfg.dim,
        "n_samples": n,
        "seed": cfg.seed,
        "mean": mean,
        "variance": var,
        "skewness": skew,
        "excess_kurtosis": kurt,
        "levy_threshold": threshold,
        "levy_bound": bound,
        "fraction_above_threshold": float(np.mean(values >= threshold)),
    })


def _cmd_scan(cfg):
    us = _matrix_list(_load(cfg.input_path), "unitaries")
    if len(us) != 3:
        raise InputError(f"scan: expected 3 unitaries, got {len(us)}")
    rows = mixture_scan(us, cfg.steps)
    header = ["p1", "p2", "p3", "normalized_cgp"]
    if cfg.output_path:
        _write_csv(cfg.output_path, header, rows)
        _emit({"steps": cfg.steps, "points": len(rows), "csv": cfg.output_path})
    elif cfg.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(rows)
    else:
        _emit({"steps": cfg.steps, "rows": [dict(zip(header, r)) for r in rows]})


def _cmd_agp(cfg):
    op = _load_operator(cfg)
    h = HamiltonianSpectrum(cfg.spectrum)
    res = agp(op, h)
    out = res.as_dict()
    if cfg.mc:
        est = agp_monte_carlo(op, h, n=cfg.samples or 100_000, seed=cfg.seed, workers=cfg.threads)
        out.update(mc_mean=est.mean, mc_se=est.std_error, mc_samples=est.n_samples, seed=cfg.seed)
    _emit(out)


def _cmd_fixtures(cfg):
    if not cfg.fixture:
        _emit({"generators": sorted(fixtures.GENERATORS)})
        return
    _emit(matrix_to_json(_fixture_matrix(cfg)))


HANDLERS = {
    "unitary": _cmd_unitary,
    "channel": _cmd_channel,
    "protocol": _cmd_protocol,
    "sample": _cmd_sample,
    "scaling": _cmd_scaling,
    "moments": _cmd_moments,
    "scan": _cmd_scan,
    "agp": _cmd_agp,
    "fixtures": _cmd_fixtures,
}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        HANDLERS[cfg.command](cfg)
    except (np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"cgp: numerical failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"cgp: invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bins", type=int, default=100)
    common.add_argument("--steps", type=int, default=10)
    common.add_argument("--dims", type=_parse_ints, default=[6, 10, 20, 40])
    common.add_argument("--spectrum", type=_parse_floats, default=[])
    common.add_argument("--in", dest="input_path")
    common.add_argument("--out", dest="output_path")
    common.add_argument("--dump", dest="dump_path", help="write raw samples as sample_index,value CSV")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    common.add_argument("--mc", action="store_true", help="add a Monte Carlo estimate")
    fx = common.add_mutually_exclusive_group()
    fx.add_argument("--fourier", dest="fixture", action="store_const", const="fourier")
    fx.add_argument("--identity", dest="fixture", action="store_const", const="identity")
    fx.add_argument("--hadamard", dest="fixture", action="store_const", const="hadamard")
    fx.add_argument("--random-haar", dest="fixture", action="store_const", const="random-haar")
    fx.add_argument("--random-incoherent", dest="fixture", action="store_const", const="random-permutation-phase")
    fx.add_argument("--rowswap", nargs=2, type=int, metavar=("I", "J"), help="Fourier matrix with rows I and J swapped")

    parser = argparse.ArgumentParser(prog="cgp", description="Coherence generating power toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fixture = ns.fixture
    if ns.rowswap is not None:
        fixture = "fourier-rowswap"
    return RunConfig(
        command=ns.command,
        dim=ns.dim,
        samples=ns.samples,
        seed=ns.seed,
        bins=ns.bins,
        input_path=ns.input_path,
        output_path=ns.output_path,
        format=ns.format,
        threads=ns.threads if ns.threads is not None else default_workers(),
        steps=ns.steps,
        dims=ns.dims,
        spectrum=ns.spectrum,
        fixture=fixture,
        rowswap=tuple(ns.rowswap) if ns.rowswap else None,
        mc=ns.mc,
        dump_path=ns.dump_path,
    )


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
