"""Command-line front end: build oracles, simulate, sweep depths, export QASM.

Exit codes: 0 success, 2 validation error, 3 I/O error. The default
output directory is taken from MODORACLE_OUTDIR (falling back to the
working directory). Identical flags and seed produce byte-identical
output files.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .circuit import Circuit
from .grover import GroverPlan, grover_circuit, predicted_probability
from .oracles import OracleSpec, composed_oracle, remainder_oracle
from .qasm import to_qasm
from .simulate import distribution_csv, phase_signature, probabilities, sample, simulate
from .transpile import depth_sweep, linear_fit, transpile_basis


@dataclass
class RunConfig:
    command: str
    k: int = 0
    r: int = 0
    n: int = 1
    repetitions: int = 1
    inner: tuple | None = None
    shots: int = 20000
    seed: int = 0
    out: Path = Path(".")
    fmt: str = "csv"


def _parse_inner(text: str) -> tuple:
    kind, _, bounds = text.partition(":")
    try:
        vals = tuple(int(b) for b in bounds.split(":")) if bounds else ()
    except ValueError:
        raise ValueError(f"bad inner bounds in {text!r}")
    if kind == "less-than" and len(vals) == 1:
        return ("less-than", vals[0])
    if kind == "range" and len(vals) == 2:
        return ("range", vals[0], vals[1])
    raise ValueError(f"bad inner spec {text!r}; use less-than:M or range:A:B")


def _parse_ints(text: str) -> list[int]:
    """Comma list and/or A..B spans: '3,5,6' or '4..12' or '3,8..10'."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _build_oracle(cfg: RunConfig) -> tuple[OracleSpec, Circuit]:
    spec = OracleSpec(cfg.k, cfg.r, cfg.n, cfg.inner)
    oracle = composed_oracle(spec) if spec.inner else remainder_oracle(spec)
    return spec, oracle


def _cmd_simulate(cfg: RunConfig) -> int:
    spec, oracle = _build_oracle(cfg)
    signature, leakage = phase_signature(oracle, cfg.n)
    marked = [x for x, s in enumerate(signature) if s < 0]
    if not marked:
        raise ValueError(f"oracle marks no states below 2^{cfg.n}; nothing to amplify")
    plan = GroverPlan(oracle, cfg.n, cfg.repetitions)
    state = simulate(grover_circuit(plan))
    dist = probabilities(state, oracle.registers[0][0])
    total = 1 << cfg.n
    exact = float(sum(dist[x] for x in marked))
    predicted = predicted_probability(len(marked), total, cfg.repetitions)
    factor = exact / len(marked) * total
    hist = sample(dist, cfg.shots, cfg.seed)
    sampled = sum(c for v, c in hist.counts.items() if v in set(marked)) / cfg.shots

    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / "distribution.csv").write_text(distribution_csv(dist))
    if cfg.fmt == "json":
        (cfg.out / "histogram.json").write_text(hist.to_json())
    else:
        (cfg.out / "histogram.csv").write_text(hist.to_csv())
    print(
        f"{spec.to_kv()} reps={cfg.repetitions} marked={marked} "
        f"exact={exact:.4f} predicted={predicted:.4f} factor={factor:.2f} "
        f"sampled={sampled:.4f} leakage={leakage:.2e}"
    )
    return 0


def _cmd_depth(cfg: RunConfig, ks: list[int], ns: list[int], out_file: Path) -> int:
    report = depth_sweep(ks, ns)
    out_file.parent.mkdir(parents=True, exist_ok=True)
    out_file.write_text(report.to_csv())
    for k in sorted(set(ks)):
        if sum(1 for r in report.rows if r.k == k) >= 3:
            fit = linear_fit(report, k)
            print(f"k={k} depth-vs-n fit: slope={fit.slope:.2f} "
                  f"intercept={fit.intercept:.2f} r2={fit.r2:.5f}")
    print(f"wrote {len(report.rows)} rows to {out_file}")
    return 0


def _cmd_export(cfg: RunConfig, out_file: Path) -> int:
    _, oracle = _build_oracle(cfg)
    out_file.parent.mkdir(parents=True, exist_ok=True)
    out_file.write_text(to_qasm(transpile_basis(oracle)))
    print(f"wrote {out_file}")
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modoracle",
        description="Build, simulate and analyze modular-arithmetic phase oracles.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_inner=True):
        p.add_argument("--k", type=int, required=True, help="modulus (>= 2)")
        p.add_argument("--r", type=int, default=0, help="remainder (default 0: multiples)")
        p.add_argument("--n", type=int, required=True, help="input register width in qubits")
        if with_inner:
            p.add_argument("--inner", type=str, default=None,
                           help="inner comparator: less-than:M or range:A:B")
        p.add_argument("-o", "--out", type=str, default=None, help="output path")

    ps = sub.add_parser("simulate", help="run the oracle through Grover and sample it")
    common(ps)
    ps.add_argument("--reps", type=int, default=1, help="Grover iterations (default 1)")
    ps.add_argument("--shots", type=int, default=20000, help="sample count (default 20000)")
    ps.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    ps.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="histogram format (default csv)")

    pd = sub.add_parser("depth", help="transpiled-depth sweep over k and n grids")
    pd.add_argument("--k", type=str, required=True, help="moduli, e.g. 3,5,6,9,14")
    pd.add_argument("--n", type=str, required=True, help="input widths, e.g. 4..12")
    pd.add_argument("-o", "--out", type=str, default=None, help="output CSV path")

    pe = sub.add_parser("export", help="write the transpiled oracle as OpenQASM 2.0")
    common(pe)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    outdir = Path(os.environ.get("MODORACLE_OUTDIR", "."))
    try:
        if args.command == "simulate":
            cfg = RunConfig(
                "simulate", k=args.k, r=args.r, n=args.n, repetitions=args.reps,
                inner=_parse_inner(args.inner) if args.inner else None,
                shots=args.shots, seed=args.seed,
                out=Path(args.out) if args.out else outdir, fmt=args.format,
            )
            if cfg.shots < 1:
                raise ValueError("shots must be >= 1")
            return _cmd_simulate(cfg)
        if args.command == "depth":
            ks, ns = _parse_ints(args.k), _parse_ints(args.n)
            out_file = Path(args.out) if args.out else outdir / "depth.csv"
            return _cmd_depth(RunConfig("depth"), ks, ns, out_file)
        if args.command == "export":
            cfg = RunConfig(
                "export", k=args.k, r=args.r, n=args.n,
                inner=_parse_inner(args.inner) if args.inner else None,
            )
            out_file = Path(args.out) if args.out else outdir / "oracle.qasm"
            return _cmd_export(cfg, out_file)
        raise ValueError(f"unknown command {args.command!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
