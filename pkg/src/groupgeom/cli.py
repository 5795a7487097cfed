"""Command-line interface.

Exit codes: 0 for success (EQUAL / PASS), 1 for a definite negative
(NOT-EQUAL / FAIL / counterexample found), 2 for Unknown or a usage
error.  Usage and parse errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bench import WordSource, run_bench
from .cayley import build_ball
from .dehn import dehn_reduce, verify_dehn_presentation
from .hplane import THINNESS_BOUND, verify_thinness_bound
from .isoperimetry import AreaCaps, area, dehn_function, fit_growth
from .oracle import OracleBudget, Tristate, canonical_form, words_equal
from .qi import compare_metrics
from .thinness import delta_estimate
from .words import (
    ParseError,
    Presentation,
    format_presentation,
    format_word,
    parse_presentation,
    parse_word,
    standard_presentation,
    symmetrize,
)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="groupgeom",
        description="Word problems and coarse geometry for finitely presented groups.",
    )
    top.add_argument("--version", action="version", version=f"groupgeom {__version__}")
    top.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; results never depend on this setting",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def with_pres(p):
        p.add_argument("--pres", required=True, metavar="FILE", help="presentation file")
        return p

    p = with_pres(sub.add_parser("reduce", help="greedy relator rewriting of a word"))
    p.add_argument("word")

    p = with_pres(sub.add_parser("equal", help="decide whether two words agree"))
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--max-area", type=int, default=8)
    p.add_argument("--max-len", type=int, default=32)

    p = with_pres(sub.add_parser("normal-form", help="canonical spelling of a word"))
    p.add_argument("word")
    p.add_argument("--max-radius", type=int, default=6)

    p = with_pres(
        sub.add_parser("verify-dehn", help="does greedy rewriting solve this presentation?")
    )
    p.add_argument("--insertions", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)

    p = with_pres(sub.add_parser("ball", help="Cayley ball as JSON"))
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--out", metavar="FILE.json")

    p = with_pres(sub.add_parser("delta", help="triangle thinness over a ball"))
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")

    p = with_pres(sub.add_parser("area", help="minimal relator applications to kill a word"))
    p.add_argument("word")
    p.add_argument("--max-area", type=int, default=16)
    p.add_argument("--max-len", type=int)

    p = with_pres(sub.add_parser("dehn-function", help="filling areas by word length (CSV)"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-area", type=int, default=16)
    p.add_argument("--max-len", type=int)

    p = sub.add_parser("fit", help="classify growth of a CSV table (n,value)")
    p.add_argument("csv", nargs="?", help="CSV path; stdin when omitted")

    p = with_pres(sub.add_parser("qi", help="fit quasi-isometry constants for two generating sets"))
    p.add_argument("--gens-b", required=True, help="comma-separated words, e.g. a,b,ab")
    p.add_argument("--gens-a", help="defaults to the presentation's generators")
    p.add_argument("--radius", type=int, required=True)

    hp = sub.add_parser("hplane", help="hyperbolic plane checks")
    hsub = hp.add_subparsers(dest="hplane_command", required=True)
    p = hsub.add_parser("verify", help="sampled triangles against the thinness bound")
    p.add_argument("--triangles", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--diameter", type=float, default=25.0)
    p.add_argument("--samples", type=int, default=48)

    p = with_pres(sub.add_parser("bench", help="step counts of a solver by input size (CSV)"))
    p.add_argument("--solver", choices=["dehn", "zz-nf"], required=True)
    p.add_argument("--sizes", required=True, help="comma-separated lengths, e.g. 4,8,12")
    p.add_argument("--source", choices=["worst", "random", "trivial"], required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--insertions", type=int, default=3)

    p = sub.add_parser("pres", help="write a standard presentation file")
    p.add_argument("--family", choices=["free", "zz", "surface"], required=True)
    p.add_argument("--param", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    return top


def _load_presentation(path: str) -> Presentation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_presentation(text)


def _ball_payload(pres, ball) -> dict:
    return {
        "radius": ball.radius,
        "vertices": [format_word(w, pres) for w in ball.vertices],
        "edges": [[u, format_word((letter,), pres), v] for u, letter, v in ball.edges],
        "dist": list(ball.dist),
    }


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "reduce":
        pres = _load_presentation(args.pres)
        word = parse_word(args.word, pres)
        reduced, trace = dehn_reduce(pres, word)
        print(f"{format_word(reduced, pres)} steps={trace.step_count}")
        return 0

    if cmd == "equal":
        pres = _load_presentation(args.pres)
        u = parse_word(args.u, pres)
        v = parse_word(args.v, pres)
        budget = OracleBudget(args.max_area, args.max_len)
        answer = words_equal(pres, u, v, budget)
        if answer is Tristate.EQUAL:
            print("EQUAL")
            return 0
        if answer is Tristate.NOT_EQUAL:
            print("NOT-EQUAL")
            return 1
        print("UNKNOWN")
        return 2

    if cmd == "normal-form":
        pres = _load_presentation(args.pres)
        word = parse_word(args.word, pres)
        print(format_word(canonical_form(pres, word, args.max_radius), pres))
        return 0

    if cmd == "verify-dehn":
        pres = _load_presentation(args.pres)
        verdict = verify_dehn_presentation(pres, args.insertions, args.max_len)
        if verdict.holds:
            print(f"PASS words-checked={verdict.words_checked}")
            return 0
        print(f"FAIL {format_word(verdict.counterexample, pres)}")
        return 1

    if cmd == "ball":
        pres = _load_presentation(args.pres)
        ball = build_ball(pres, args.radius)
        text = json.dumps(_ball_payload(pres, ball)) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    if cmd == "delta":
        pres = _load_presentation(args.pres)
        if args.sample is not None and args.seed is None:
            raise ValueError("--sample needs an explicit --seed")
        ball = build_ball(pres, args.radius)
        report = delta_estimate(ball, sample_count=args.sample, seed=args.seed)
        if args.json:
            wit = report.witness
            payload = {
                "delta": report.delta,
                "trianglesExamined": report.triangles_examined,
                "samplingPolicy": report.sampling_policy,
                "witness": None
                if wit is None
                else {
                    "triangle": [format_word(ball.vertices[i], pres) for i in wit.triangle],
                    "point": format_word(ball.vertices[wit.point], pres),
                    "nearest": format_word(ball.vertices[wit.nearest], pres),
                    "distance": wit.distance,
                },
            }
            print(json.dumps(payload))
        else:
            line = f"delta={report.delta} triangles={report.triangles_examined}"
            if report.witness is not None:
                wit = report.witness
                tri = ",".join(format_word(ball.vertices[i], pres) for i in wit.triangle)
                line += (
                    f" witness-triangle=({tri})"
                    f" p={format_word(ball.vertices[wit.point], pres)}"
                    f" q={format_word(ball.vertices[wit.nearest], pres)}"
                )
            print(line)
        return 0

    if cmd == "area":
        pres = _load_presentation(args.pres)
        word = parse_word(args.word, pres)
        max_len = args.max_len
        if max_len is None:
            max_len = 2 * len(word) + symmetrize(pres).max_length
        result = area(pres, word, AreaCaps(args.max_area, max_len))
        if result.value is None:
            print("UNKNOWN")
            return 2
        print(result.value)
        return 0

    if cmd == "dehn-function":
        pres = _load_presentation(args.pres)
        max_len = args.max_len
        if max_len is None:
            max_len = 2 * args.n + symmetrize(pres).max_length
        table = dehn_function(pres, args.n, AreaCaps(args.max_area, max_len))
        print("n,maxArea,argmax")
        for row in table.rows:
            print(f"{row.n},{row.max_area},{format_word(row.argmax, pres)}")
        return 0

    if cmd == "fit":
        if args.csv:
            lines = Path(args.csv).read_text().splitlines()
        else:
            lines = sys.stdin.read().splitlines()
        rows = []
        for line in lines:
            parts = [p.strip() for p in line.split(",")]
            if len(parts) < 2:
                continue
            try:
                rows.append((int(parts[0]), float(parts[1])))
            except ValueError:
                continue  # header or annotation line
        growth = fit_growth(rows)
        print(
            f"{growth.kind} exponent={_fmt(growth.exponent)} residual={_fmt(growth.residual)}"
        )
        return 0

    if cmd == "qi":
        pres = _load_presentation(args.pres)
        gens_b = [parse_word(w.strip(), pres) for w in args.gens_b.split(",") if w.strip()]
        gens_a = None
        if args.gens_a:
            gens_a = [parse_word(w.strip(), pres) for w in args.gens_a.split(",") if w.strip()]
        report = compare_metrics(pres, gens_a, gens_b, args.radius)
        print(f"lambda={_fmt(report.lam)} c={report.c} elements={report.element_count}")
        return 0

    if cmd == "hplane":
        survey = verify_thinness_bound(
            args.triangles, args.seed, args.diameter, args.samples
        )
        status = "PASS" if survey.passed else "FAIL"
        print(
            f"max-thinness={_fmt(survey.max_thinness)} bound={_fmt(THINNESS_BOUND)} {status}"
        )
        return 0 if survey.passed else 1

    if cmd == "bench":
        pres = _load_presentation(args.pres)
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        source = WordSource(args.source, seed=args.seed, insertions=args.insertions)
        table = run_bench(pres, args.solver, sizes, source)
        print("n,steps,wallNanos,trials")
        for row in table.rows:
            print(f"{row.n},{row.steps},{row.wall_nanos},{row.trials}")
        return 0

    if cmd == "pres":
        pres = standard_presentation(args.family, args.param)
        text = format_presentation(pres)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    raise ValueError(f"unhandled command {cmd!r}")


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
