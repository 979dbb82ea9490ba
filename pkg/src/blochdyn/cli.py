"""Command-line front end: rotate, sweep, check, halting-demo.

Exit codes: 0 success/consistent, 1 property violation (check), 2 usage error.
All angles are radians. Numeric output uses 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .engine import Picture, QubitFrame, check_picture_consistency, evolve_frame
from .pauli import Unitary2, pauli, rotation
from .halting import run_consistent_scenario, run_contradiction_sweep

SWEEP_COLUMNS = ["alpha", "sx", "sy", "sz", "hx", "hy", "hz",
                 "divergence", "halted_s", "halted_h"]


def _fmt(x):
    """12-significant-digit rendering shared by all output formats."""
    return f"{x:.12g}"


def _vector_flag(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"vector must be three comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vector component in {text!r}: {exc}")


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {value}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"steps must be >= 1, got {value}")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="blochdyn",
        description="Single-qubit Bloch dynamics in both pictures; angles in radians.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rot = sub.add_parser("rotate", help="evolve a (state, basis) pair by one rotation")
    p_rot.add_argument("--axis", choices=["x", "y", "z"], default="y")
    p_rot.add_argument("--angle", type=float, required=True, help="rotation angle in radians")
    p_rot.add_argument("--vector", type=_vector_flag, default="0,0,1",
                       help="state Bloch vector as x,y,z (default 0,0,1)")
    p_rot.add_argument("--basis", type=_vector_flag, default=None,
                       help="basis Bloch vector as x,y,z (default 0,0,1)")
    p_rot.add_argument("--picture", choices=["schrodinger", "heisenberg"],
                       default="schrodinger")

    p_sweep = sub.add_parser("sweep",
                             help="basis-input contradiction sweep over [0, 2*pi)")
    p_sweep.add_argument("--steps", type=_positive_int, default=360,
                         help="number of evenly spaced alpha grid points")
    p_sweep.add_argument("--format", dest="output_format",
                         choices=["csv", "json", "text"], default="csv")
    p_sweep.add_argument("--output", default=None, help="write to file instead of stdout")

    p_check = sub.add_parser("check",
                             help="random picture-consistency trials (expect exit 0)")
    p_check.add_argument("--seed", type=int, default=0,
                         help="seed for numpy default_rng (PCG64)")
    p_check.add_argument("--steps", type=_nonneg_int, default=1000,
                         help="number of random trials")
    p_check.add_argument("--tolerance", type=_positive_float, default=1e-10)

    p_demo = sub.add_parser("halting-demo",
                            help="state-input vs basis-input halting machine at one angle")
    p_demo.add_argument("--angle", type=float, required=True, help="alpha in radians")
    p_demo.add_argument("--tolerance", type=_positive_float, default=1e-9)

    return parser


def cmd_rotate(args):
    if not math.isfinite(args.angle):
        print(f"error: angle must be finite, got {args.angle}", file=sys.stderr)
        return 2
    basis = args.basis if args.basis is not None else np.array([0.0, 0.0, 1.0])
    try:
        frame = QubitFrame(args.vector, basis)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    u = rotation(args.axis, args.angle)
    out = evolve_frame(frame, u, Picture(args.picture))
    print(f"picture      {args.picture}")
    print(f"state        {_fmt(out.state[0])},{_fmt(out.state[1])},{_fmt(out.state[2])}")
    print(f"basis        {_fmt(out.basis[0])},{_fmt(out.basis[1])},{_fmt(out.basis[2])}")
    print(f"expectation  {_fmt(out.expectation())}")
    return 0


def _sweep_rows(steps):
    alphas = np.linspace(0.0, 2.0 * math.pi, steps, endpoint=False)
    rows = []
    for rec in run_contradiction_sweep(alphas):
        s = rec.schrodinger_output
        h = rec.heisenberg_output
        rows.append({
            "alpha": float(_fmt(rec.alpha)),
            "sx": float(_fmt(s[0])), "sy": float(_fmt(s[1])), "sz": float(_fmt(s[2])),
            "hx": float(_fmt(h[0])), "hy": float(_fmt(h[1])), "hz": float(_fmt(h[2])),
            "divergence": float(_fmt(rec.divergence_angle)),
            "halted_s": rec.halted_schrodinger,
            "halted_h": rec.halted_heisenberg,
        })
    return rows


def _render_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return _fmt(value)


def cmd_sweep(args):
    rows = _sweep_rows(args.steps)
    if args.output_format == "csv":
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(_render_cell(row[c]) for c in SWEEP_COLUMNS) for row in rows]
        text = "\n".join(lines) + "\n"
    elif args.output_format == "json":
        payload = {"config": {"command": "sweep", "steps": args.steps},
                   "records": rows}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"{'alpha':>14} {'divergence':>14} {'halted_s':>8} {'halted_h':>8}"]
        for row in rows:
            lines.append(f"{_fmt(row['alpha']):>14} {_fmt(row['divergence']):>14} "
                         f"{_render_cell(row['halted_s']):>8} {_render_cell(row['halted_h']):>8}")
        text = "\n".join(lines) + "\n"

    if args.output is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    return 0


def _random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _random_unitary(rng):
    axis = _random_unit(rng)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    sig = axis[0] * pauli("x") + axis[1] * pauli("y") + axis[2] * pauli("z")
    m = math.cos(angle / 2) * np.eye(2) - 1j * math.sin(angle / 2) * sig
    return Unitary2(phase * m)


def cmd_check(args):
    if args.steps == 0:
        print("warning: 0 trials requested; vacuous pass")
        return 0
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(args.steps):
        frame = QubitFrame(_random_unit(rng), _random_unit(rng))
        report = check_picture_consistency(frame, [_random_unitary(rng)], args.tolerance)
        worst = max(worst, report.deviation)
    ok = worst <= args.tolerance
    print(f"trials           {args.steps}")
    print(f"seed             {args.seed}")
    print(f"max deviation    {_fmt(worst)}")
    print(f"tolerance        {_fmt(args.tolerance)}")
    print("result           " + ("consistent" if ok else "VIOLATION"))
    return 0 if ok else 1


def cmd_halting_demo(args):
    if not math.isfinite(args.angle):
        print(f"error: angle must be finite, got {args.angle}", file=sys.stderr)
        return 2
    alpha = args.angle
    consistent = run_consistent_scenario(alpha)
    (record,) = run_contradiction_sweep([alpha])

    print(f"alpha = {_fmt(alpha)} rad")
    print()
    print("state input (legal machine run):")
    print(f"  expectation, Schrodinger picture  {_fmt(consistent.schrodinger_expectation)}")
    print(f"  expectation, Heisenberg picture   {_fmt(consistent.heisenberg_expectation)}")
    print(f"  halt qubit flipped in both pictures: {consistent.both_halted}")
    print()
    print("basis input (the observable's vector fed in as the thing to rotate):")
    s = record.schrodinger_output
    h = record.heisenberg_output
    print(f"  Schrodinger output  ({_fmt(s[0])}, {_fmt(s[1])}, {_fmt(s[2])})")
    print(f"  Heisenberg output   ({_fmt(h[0])}, {_fmt(h[1])}, {_fmt(h[2])})")
    print(f"  divergence angle    {_fmt(record.divergence_angle)} rad")
    print(f"  halt qubit flipped in both pictures: "
          f"{record.halted_schrodinger and record.halted_heisenberg}")
    print()
    contradiction = (record.divergence_angle > args.tolerance
                     and record.halted_schrodinger and record.halted_heisenberg)
    if contradiction:
        print("CONTRADICTION: both pictures report a completed run, "
              "but the outputs differ.")
    else:
        print("No contradiction at this angle: the two pictures agree on the output.")
    return 0


_DISPATCH = {
    "rotate": cmd_rotate,
    "sweep": cmd_sweep,
    "check": cmd_check,
    "halting-demo": cmd_halting_demo,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return _DISPATCH[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
