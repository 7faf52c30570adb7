"""Command-line front end.

Subcommands: generate | optimize | verify | oracle | render.
Exit codes: 0 success, 1 usage, 2 generation/claim failure, 3 invalid input,
4 verification failure.
"""

import argparse
import json
import math
import sys
from pathlib import Path

from . import fileio, mantaray, oracle, svg
from .errors import (
    CannotPlace,
    CapExceeded,
    ClaimViolated,
    InvalidParams,
    InvalidTriangulation,
    MinMaxTriError,
    PerturbationBreaksClaim,
    TooLarge,
)
from .insertion import edge_insertion_algorithm
from .triangulation import DEFAULT_TIE_TOL, PointSet, Triangulation

EXIT_USAGE = 1
EXIT_GENERATION = 2
EXIT_INPUT = 3
EXIT_VERDICT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_angle(text: str) -> float:
    """Accepts plain radians ("2.45") or multiples of pi ("0.78pi")."""
    s = text.strip().lower()
    if s.endswith("pi"):
        head = s[:-2].strip()
        factor = 1.0 if head in ("", "+") else -1.0 if head == "-" else float(head)
        return factor * math.pi
    return float(s)


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values or any(v < 0 for v in values):
        raise ValueError(f"bad n range {text!r}")
    return values


def _load_input(path: str) -> tuple[Triangulation | None, PointSet | None, dict | None]:
    """Returns (triangulation, points, labels); triangulation JSON gives the
    first, point-set text the second."""
    raw = Path(path).read_text(encoding="utf-8")
    stripped = raw.lstrip()
    if stripped.startswith("{"):
        tri, labels = fileio.triangulation_from_json(raw)
        return tri, None, labels
    return None, fileio.points_from_text(raw), None


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _report_json(report: mantaray.PropositionReport) -> str:
    margins = ", ".join(fileio.fmt_float(m) for m in report.claim_margins)
    improving = ", ".join(
        f'["{a}", "{b}"]' for a, b in report.improving_insertions
    )
    fields = [
        f'"n": {report.n}',
        f'"edge_count": {report.edge_count}',
        f'"expected_edge_count": {report.expected_edge_count}',
        f'"diameter": {report.diameter}',
        f'"expected_diameter": {report.expected_diameter}',
        f'"op_crossings": {report.op_crossings}',
        f'"expected_op_crossings": {report.expected_op_crossings}',
        f'"op_distance": {report.op_distance}',
        f'"improving_insertions": [{improving}]',
        f'"claim_margins": [{margins}]',
        f'"verdict": {"true" if report.verdict else "false"}',
    ]
    return "{" + ", ".join(fields) + "}\n"


def _cmd_generate(args) -> int:
    try:
        params = mantaray.MantaRayParams(
            n=args.n,
            omega=parse_angle(args.omega),
            theta="auto" if args.theta == "auto" else parse_angle(args.theta),
            p_distance="auto" if args.p_distance == "auto" else float(args.p_distance),
            base_length=args.base_length,
        )
        inst = mantaray.generate(params)
        if args.perturb:
            inst = mantaray.perturb_general_position(inst, args.perturb, args.seed)
    except (InvalidParams, ClaimViolated, CannotPlace, PerturbationBreaksClaim) as exc:
        return _fail(EXIT_GENERATION, str(exc))
    text = fileio.triangulation_to_json(inst.triangulation, inst.labels)
    Path(args.out).write_text(text, encoding="utf-8")
    print(
        f"instance n={inst.n}: {len(inst.triangulation.point_set)} points, "
        f"{len(inst.triangulation.edges)} edges -> {args.out}"
    )
    return 0


def _cmd_optimize(args) -> int:
    try:
        tri, points, _labels = _load_input(args.input)
    except (OSError, ValueError, json.JSONDecodeError, MinMaxTriError) as exc:
        return _fail(EXIT_INPUT, f"cannot read {args.input}: {exc}")
    try:
        if tri is not None:
            final, trace = edge_insertion_algorithm(
                tri, tie_tol=args.tie_tol, scan_mode=args.scan_mode
            )
            before = tri.measure(args.tie_tol).max_angle
        else:
            final, trace = edge_insertion_algorithm(
                points, "arbitrary", tie_tol=args.tie_tol, scan_mode=args.scan_mode
            )
            before = None
    except MinMaxTriError as exc:
        return _fail(EXIT_INPUT, str(exc))

    out_prefix = Path(args.out)
    tri_path = out_prefix.with_suffix(".json")
    trace_path = out_prefix.parent / (out_prefix.stem + ".trace.json")
    tri_path.write_text(fileio.triangulation_to_json(final), encoding="utf-8")
    trace_path.write_text(fileio.trace_to_json(trace), encoding="utf-8")

    after = final.measure(args.tie_tol).max_angle
    if before is not None:
        print(
            f"measure before: {before:.12f} rad ({math.degrees(before):.6f} deg)"
        )
    print(f"measure after:  {after:.12f} rad ({math.degrees(after):.6f} deg)")
    print(f"accepted insertions: {len(trace)} -> {tri_path}, {trace_path}")
    return 0


def _cmd_verify(args) -> int:
    try:
        ns = _parse_n_range(args.n)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    any_false = False
    for n in ns:
        try:
            params = mantaray.MantaRayParams(
                n=n,
                omega=parse_angle(args.omega),
                theta="auto" if args.theta == "auto" else parse_angle(args.theta),
            )
            inst = mantaray.generate(params)
            if args.perturb:
                inst = mantaray.perturb_general_position(inst, args.perturb, args.seed)
        except (InvalidParams, ClaimViolated, CannotPlace, PerturbationBreaksClaim) as exc:
            return _fail(EXIT_GENERATION, f"n={n}: {exc}")
        report = mantaray.verify_proposition(inst, args.tie_tol)
        (out_dir / f"report_n{n}.json").write_text(
            _report_json(report), encoding="utf-8"
        )
        rows.append(report)
        any_false = any_false or not report.verdict

    if args.format == "json":
        print("[" + ", ".join(_report_json(r).strip() for r in rows) + "]")
    else:
        print(
            f"{'n':>3} {'edges':>6} {'diam':>5} {'cross':>6} "
            f"{'improving':>12} {'min margin':>12} verdict"
        )
        for r in rows:
            ins = ",".join(f"{a}-{b}" for a, b in r.improving_insertions)
            print(
                f"{r.n:>3} {r.edge_count:>6} {r.diameter:>5} {r.op_crossings:>6} "
                f"{ins:>12} {min(r.claim_margins):>12.3e} "
                f"{'true' if r.verdict else 'FALSE'}"
            )
    return EXIT_VERDICT if any_false else 0


def _cmd_oracle(args) -> int:
    try:
        tri, points, _labels = _load_input(args.input)
    except (OSError, ValueError, json.JSONDecodeError, MinMaxTriError) as exc:
        return _fail(EXIT_INPUT, f"cannot read {args.input}: {exc}")
    ps = points if points is not None else tri.point_set
    try:
        count = len(oracle.enumerate_triangulations(ps))
        best = oracle.brute_force_optimum(ps)
    except (TooLarge, CapExceeded, InvalidParams) as exc:
        return _fail(EXIT_INPUT, str(exc))
    m = best.measure(args.tie_tol).max_angle
    print(f"triangulations: {count}")
    print(f"optimal measure: {m:.12f} rad ({math.degrees(m):.6f} deg)")
    if args.out:
        Path(args.out).write_text(
            fileio.triangulation_to_json(best), encoding="utf-8"
        )
        print(f"optimal triangulation -> {args.out}")
    return 0


def _cmd_render(args) -> int:
    try:
        tri, points, labels = _load_input(args.input)
    except (OSError, ValueError, json.JSONDecodeError, MinMaxTriError) as exc:
        return _fail(EXIT_INPUT, f"cannot read {args.input}: {exc}")
    if tri is None:
        return _fail(EXIT_INPUT, "render needs a triangulation JSON file")
    highlight = None
    if args.highlight:
        a, b = args.highlight.split(",", 1)
        a, b = a.strip(), b.strip()

        def to_id(token: str) -> int:
            if labels and token in labels:
                return labels[token]
            return int(token)

        try:
            highlight = (to_id(a), to_id(b))
        except (KeyError, ValueError):
            return _fail(EXIT_INPUT, f"bad highlight pair {args.highlight!r}")
    text = svg.render_svg(
        tri,
        highlight=highlight,
        labels=labels,
        show_labels=args.labels,
        shade_channel=args.shade,
    )
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"svg -> {args.out}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="minmaxtri", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate an adversarial instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--omega", default="0.78pi")
    p.add_argument("--theta", default="auto")
    p.add_argument("--p-distance", dest="p_distance", default="auto")
    p.add_argument("--base-length", dest="base_length", type=float, default=1.0)
    p.add_argument("--perturb", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="instance.json")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("optimize", help="run the insertion local search")
    p.add_argument("input")
    p.add_argument("--out", default="optimized.json")
    p.add_argument("--tie-tol", dest="tie_tol", type=float, default=DEFAULT_TIE_TOL)
    p.add_argument("--scan-mode", dest="scan_mode", choices=("serial", "parallel"), default="serial")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("verify", help="verify instances over a range of n")
    p.add_argument("--n", required=True, help="single value or range like 1..10")
    p.add_argument("--omega", default="0.78pi")
    p.add_argument("--theta", default="auto")
    p.add_argument("--perturb", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tie-tol", dest="tie_tol", type=float, default=DEFAULT_TIE_TOL)
    p.add_argument("--out", default="reports")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="enumerate all triangulations of a small point set")
    p.add_argument("input")
    p.add_argument("--out", default="")
    p.add_argument("--tie-tol", dest="tie_tol", type=float, default=DEFAULT_TIE_TOL)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("render", help="render a triangulation to SVG")
    p.add_argument("input")
    p.add_argument("--out", default="out.svg")
    p.add_argument("--highlight", default="", help="pair like O,P or 0,11")
    p.add_argument("--shade", action="store_true")
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
