"""``symtele`` command line: dimension audits, protocol traces and verification sweeps.

Exit status is 0 when every check passes, 1 when a check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import report as rep

COMMANDS = ("dims", "teleport-distinguishable", "teleport-identical", "sweep", "verify", "impossibility")
FORMATS = {"text": rep.to_text, "json": rep.to_json, "csv": rep.to_csv}


@dataclass
class RunConfig:
    command: str
    alpha: Optional[complex] = None
    beta: Optional[complex] = None
    trials: int = 100
    seed: int = 42
    output_format: str = "text"
    output_path: Optional[str] = None


def _complex_arg(text: str) -> complex:
    try:
        return rep.parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r} (use e.g. 0.6+0.0i)")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtele",
        description="Teleportation with distinguishable qubits and identical photons: traces and checks.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--alpha", type=_complex_arg, help="H/|0> amplitude, e.g. 0.6+0.0i")
    parser.add_argument("--beta", type=_complex_arg, help="V/|1> amplitude, e.g. 0.0+0.8i")
    parser.add_argument("--trials", type=_positive_int, default=100)
    parser.add_argument("--seed", type=_seed, default=42)
    parser.add_argument("--format", dest="output_format", choices=tuple(FORMATS), default="text")
    parser.add_argument("--out", dest="output_path", help="write the report here instead of stdout")
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if (args.alpha is None) != (args.beta is None):
        parser.error("--alpha and --beta must be given together")
    if args.alpha is not None and abs(args.alpha) == 0 and abs(args.beta) == 0:
        parser.error("--alpha and --beta cannot both be zero")
    return RunConfig(**vars(args))


def _input_amplitudes(config: RunConfig) -> tuple:
    if config.alpha is not None:
        return config.alpha, config.beta
    return rep.haar_states(1, config.seed)[0]


def build_report(config: RunConfig) -> rep.TeleportReport:
    command = config.command
    if command == "dims":
        return rep.dims_report()
    if command == "impossibility":
        return rep.impossibility_report()
    if command == "teleport-distinguishable":
        return rep.teleport_distinguishable_report(*_input_amplitudes(config))
    if command == "teleport-identical":
        return rep.teleport_identical_report(*_input_amplitudes(config))
    if command == "sweep":
        return rep.sweep(config.trials, config.seed)
    if command == "verify":
        return rep.verify_report(config.trials, config.seed)
    raise ValueError(f"unknown command {command!r}")


def run(config: RunConfig) -> int:
    report = build_report(config)
    text = FORMATS[config.output_format](report)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.passed:
        return 0
    for check in report.failures():
        print(
            f"check failed: {check.name} residual {check.residual!r} > tolerance {check.tolerance!r}",
            file=sys.stderr,
        )
    return 1


def main(argv=None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
