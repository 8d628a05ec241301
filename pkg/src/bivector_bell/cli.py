"""Command-line entry point: ``bivector-bell {verify,simulate,chsh}``.

Exit codes: 0 when every check is confirmed (or a simulation succeeds), 1 when
any check is refuted or errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__, bell, checks
from .model import MODELS

SEED_ENV = "BIVECTOR_BELL_SEED"
DEFAULT_SEED = 42
EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class ReportDocument:
    tool_version: str
    seed: int
    config: dict
    verdicts: list[checks.Verdict]
    timing: dict | None = None

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "seed": self.seed,
            "config": self.config,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ReportDocument:
        return cls(
            tool_version=data["tool_version"],
            seed=data["seed"],
            config=data["config"],
            verdicts=[checks.Verdict(**v) for v in data["verdicts"]],
            timing=data.get("timing"),
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- argument parsing ---------------------------------------------------------

_PI_TERM = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_angle(text: str) -> float:
    """Float, or a multiple of pi such as ``pi``, ``-pi/2``, ``3*pi/4``, ``0.5pi``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_TERM.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}")
    coef = m.group(1)
    if coef in ("", "+"):
        k = 1.0
    elif coef == "-":
        k = -1.0
    else:
        k = float(coef)
    denom = float(m.group(2)) if m.group(2) else 1.0
    if denom == 0:
        raise argparse.ArgumentTypeError(f"division by zero in {text!r}")
    return k * math.pi / denom


def parse_sweep(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep must be start:end:count")
    start, end = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep count {parts[2]!r}") from None
    if count < 1:
        raise argparse.ArgumentTypeError("sweep count must be >= 1")
    if count == 1:
        return [start]
    step = (end - start) / (count - 1)
    return [start + i * step for i in range(count - 1)] + [end]


def parse_angle_config(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("angles must be a,a',b,b'")
    return tuple(parse_angle(p) for p in parts)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def seed_int(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer seed: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bivector-bell", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats, default_format, trials_default):
        p.add_argument("--seed", type=seed_int, default=None,
                       help=f"RNG seed (falls back to ${SEED_ENV}, then {DEFAULT_SEED})")
        p.add_argument("--trials", type=positive_int, default=trials_default)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--workers", type=positive_int, default=1)

    v = sub.add_parser("verify", help="run the verification checks")
    v.add_argument("--filter", default=None, help="glob over check ids, e.g. 'error1*'")
    v.add_argument("--timing", action="store_true", help="record wall-clock time in the report")
    v.add_argument("--list", action="store_true", help="list check ids and exit")
    common(v, ("text", "json"), "text", 1_000_000)

    s = sub.add_parser("simulate", help="sweep E(theta) for a local outcome model")
    s.add_argument("--model", choices=sorted(MODELS), default="local-sign")
    s.add_argument("--sweep", type=parse_sweep, default=parse_sweep("0:pi:17"), metavar="START:END:COUNT")
    common(s, ("csv", "json", "text"), "csv", 100_000)

    c = sub.add_parser("chsh", help="estimate the CHSH combination S")
    c.add_argument("--model", choices=sorted(MODELS), default="local-sign")
    c.add_argument("--angles", type=parse_angle_config, default=bell.CANONICAL_ANGLES,
                   metavar="A,A',B,B'", help="planar analyzer angles (default 0,pi/2,pi/4,3pi/4)")
    common(c, ("text", "json"), "text", 1_000_000)
    return parser


def resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    if env is None or env == "":
        return DEFAULT_SEED
    try:
        return seed_int(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"bad {SEED_ENV}: {exc}") from None


# --- commands -----------------------------------------------------------------


def cmd_verify(args, seed: int, out) -> int:
    selected = checks.select(args.filter)
    if args.list:
        for c in selected:
            out.write(f"{c.check_id}\t{c.claim}\n")
        return EXIT_OK
    if not selected:
        raise UsageError(f"no check matches {args.filter!r}")
    ctx = checks.CheckContext(seed=seed, trials=args.trials)
    started = time.perf_counter()
    verdicts = checks.run_checks(selected, ctx, workers=args.workers)
    elapsed = time.perf_counter() - started

    report = ReportDocument(
        tool_version=__version__,
        seed=seed,
        config={"command": "verify", "filter": args.filter, "trials": args.trials},
        verdicts=verdicts,
        timing={"wall_seconds": round(elapsed, 3)} if args.timing else None,
    )
    if args.format == "json":
        out.write(report.to_json())
    else:
        width = max(len(v.check_id) for v in verdicts)
        for v in verdicts:
            out.write(f"{v.status:<9} {v.check_id:<{width}}  {v.computed}\n")
        n_ok = sum(v.status == checks.CONFIRMED for v in verdicts)
        out.write(f"{n_ok}/{len(verdicts)} confirmed\n")
    return EXIT_OK if all(v.status == checks.CONFIRMED for v in verdicts) else EXIT_REFUTED


def _num(x: float) -> str:
    return repr(float(x))


def simulate_rows(model_name: str, thetas: Sequence[float], trials: int, seed: int, workers: int = 1) -> list[dict]:
    model = MODELS[model_name]()
    pairs = bell.sweep_pairs(thetas)
    cfg = bell.ExperimentConfig(model, pairs, trials, seed)
    rows = []
    for i, (theta, (a, b)) in enumerate(zip(thetas, pairs)):
        est = bell.estimate_correlation(cfg, i, workers=workers)
        rows.append({
            "theta_radians": float(theta),
            "mean": est.mean,
            "stderr": est.stderr,
            "trials": est.trials,
            "quantum_prediction": bell.quantum_prediction(a, b),
        })
    return rows


CSV_COLUMNS = ("theta_radians", "mean", "stderr", "trials", "quantum_prediction")


def cmd_simulate(args, seed: int, out) -> int:
    rows = simulate_rows(args.model, args.sweep, args.trials, seed, args.workers)
    if args.format == "json":
        out.write(dumps({
            "tool_version": __version__,
            "seed": seed,
            "config": {"command": "simulate", "model": args.model, "trials": args.trials,
                       "sweep": [float(t) for t in args.sweep]},
            "rows": rows,
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow([_num(r["theta_radians"]), _num(r["mean"]), _num(r["stderr"]), r["trials"],
                             _num(r["quantum_prediction"])])
        out.write(buf.getvalue())
    else:
        out.write(f"{'theta':>10} {'mean':>10} {'stderr':>10} {'quantum':>10}\n")
        for r in rows:
            out.write(f"{r['theta_radians']:>10.6f} {r['mean']:>10.6f} {r['stderr']:>10.6f} "
                      f"{r['quantum_prediction']:>10.6f}\n")
    return EXIT_OK


def cmd_chsh(args, seed: int, out) -> int:
    model = MODELS[args.model]()
    cfg = bell.ExperimentConfig(model, bell.canonical_pairs(*args.angles), args.trials, seed)
    result = bell.chsh(cfg, workers=args.workers)
    labels = ("E(a,b)", "E(a,b')", "E(a',b)", "E(a',b')")
    if args.format == "json":
        out.write(dumps({
            "tool_version": __version__,
            "seed": seed,
            "config": {"command": "chsh", "model": args.model, "trials": args.trials,
                       "angles": [float(t) for t in args.angles]},
            "correlations": {k: {"mean": e.mean, "stderr": e.stderr, "trials": e.trials}
                             for k, e in zip(labels, result.estimates)},
            "S": result.s,
            "S_stderr": result.stderr,
            "classical_bound": result.classical_bound,
            "quantum_S": result.quantum_value,
        }))
    else:
        for label, e, (a, b) in zip(labels, result.estimates, cfg.angle_pairs):
            q = bell.quantum_prediction(a, b)
            out.write(f"{label:<9} {e.mean:+.6f} +/- {e.stderr:.6f}   quantum {q:+.6f}\n")
        out.write(f"S         {result.s:+.6f} +/- {result.stderr:.6f}\n")
        out.write(f"classical bound |S| <= {result.classical_bound:g}\n")
        out.write(f"quantum S {result.quantum_value:+.6f}\n")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "simulate": cmd_simulate, "chsh": cmd_chsh}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        seed = resolve_seed(args.seed)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    try:
        if args.out:
            buf = io.StringIO()
            code = COMMANDS[args.command](args, seed, buf)
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(buf.getvalue())
        else:
            code = COMMANDS[args.command](args, seed, sys.stdout)
    except UsageError as exc:
        print(f"bivector-bell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
