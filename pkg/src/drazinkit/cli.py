"""Command-line front end.

Exit codes: 0 success, 1 hypothesis violated, 2 parse or shape error,
3 internal inconsistency (a formula disagreed with the oracle or failed
the Drazin axioms), 4 instance generation exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .additive import ADDITIVE_FORMULAS, check_hypotheses
from .additive import FORMULAS as ADDITIVE_FNS
from .block import BLOCK_FORMULAS, applicability_report, assemble, check_block_hypotheses
from .block import FORMULAS as BLOCK_FNS
from .core import drazin_oracle
from .errors import (
    GenerationExhausted,
    HypothesisViolated,
    InvariantViolation,
    SeriesNotValidated,
    ShapeError,
)
from .fileio import (
    FormatError,
    blocks_from_doc,
    blocks_to_doc,
    dumps,
    matrix_from_doc,
    matrix_to_doc,
    pair_from_doc,
    pair_to_doc,
    read_document,
)
from .generate import CASES, GenSpec, derive_seeds, generate
from .matrix import Matrix, block as block_matrix, identity, zeros
from .scalar import format_scalar

EXIT_OK, EXIT_HYPOTHESIS, EXIT_PARSE, EXIT_INTERNAL, EXIT_EXHAUSTED = 0, 1, 2, 3, 4

FORMULA_IDS = ADDITIVE_FORMULAS + BLOCK_FORMULAS
# alternative spelling accepted on the command line
FORMULA_ALIASES = {"thm-pqq0": "pqq0"}


def _formula_id(text: str) -> str:
    fid = FORMULA_ALIASES.get(text, text)
    if fid not in FORMULA_IDS:
        raise argparse.ArgumentTypeError(f"unknown formula {text!r}; choose from {', '.join(FORMULA_IDS)}")
    return fid


class _Input:
    """A parsed input file for one formula id."""

    def __init__(self, formula: str, path):
        doc = read_document(path)
        self.formula = formula
        if formula in BLOCK_FORMULAS:
            self.blocks = blocks_from_doc(doc)
            self.pair = None
        else:
            self.pair = pair_from_doc(doc)
            self.blocks = None

    def report(self):
        if self.blocks is not None:
            return check_block_hypotheses(self.formula, self.blocks)
        return check_hypotheses(self.formula, *self.pair)

    def apply(self) -> Matrix:
        if self.blocks is not None:
            return BLOCK_FNS[self.formula](self.blocks)
        return ADDITIVE_FNS[self.formula](*self.pair)

    def target(self) -> Matrix:
        if self.blocks is not None:
            return assemble(self.blocks)
        p, q = self.pair
        if self.formula == "antitri":
            return block_matrix([[p, identity(p.rows)], [q, zeros(p.rows)]])
        return p + q


def _emit(args, human: str, payload: dict) -> None:
    if args.json:
        sys.stdout.write(dumps(payload))
    else:
        print(human)


def _report_payload(report) -> dict:
    return {
        "formula": report.formula,
        "conditions": [
            {"label": label, "holds": ok,
             "witness": matrix_to_doc(report.witnesses[label]) if label in report.witnesses else None}
            for label, ok in zip(report.condition_labels, report.holds)
        ],
        "flags": dict(report.flags),
        "all_hold": report.all_hold,
    }


def _report_text(report) -> str:
    lines = [f"formula {report.formula}"]
    for label, ok in zip(report.condition_labels, report.holds):
        lines.append(f"  {label}: {'holds' if ok else 'VIOLATED'}")
        if not ok:
            lines.extend("    " + row for row in str(report.witnesses[label]).splitlines())
    for name, value in report.flags.items():
        lines.append(f"  flag {name}: {value}")
    return "\n".join(lines)


def cmd_drazin(args) -> int:
    a = matrix_from_doc(read_document(args.path))
    if not a.is_square:
        raise ShapeError(f"matrix is {a.rows}x{a.cols}, not square")
    res = drazin_oracle(a)
    human = f"drazin:\n{res.drazin}\nindex: {res.index}\neigenprojection:\n{res.eigenprojection}"
    _emit(args, human, {"drazin": matrix_to_doc(res.drazin), "index": res.index,
                        "eigenprojection": matrix_to_doc(res.eigenprojection)})
    return EXIT_OK


def cmd_check(args) -> int:
    inp = _Input(args.formula, args.path)
    report = inp.report()
    if inp.blocks is not None:
        report.flags.update(applicability_report(inp.blocks)[args.formula].flags)
    _emit(args, _report_text(report), _report_payload(report))
    return EXIT_OK if report.all_hold else EXIT_HYPOTHESIS


def cmd_apply(args) -> int:
    out = _Input(args.formula, args.path).apply()
    _emit(args, str(out), {"formula": args.formula, "drazin": matrix_to_doc(out)})
    return EXIT_OK


def _first_difference(x: Matrix, y: Matrix):
    for i in range(x.rows):
        for j in range(x.cols):
            if x[i, j] != y[i, j]:
                return i, j
    return None


def cmd_verify(args) -> int:
    inp = _Input(args.formula, args.path)
    report = inp.report()
    if not report.all_hold:
        raise HypothesisViolated(report)
    formula_out = inp.apply()
    oracle_out = drazin_oracle(inp.target()).drazin
    equal = formula_out == oracle_out
    payload = {"formula": args.formula, "equal": equal,
               "formula_result": matrix_to_doc(formula_out), "oracle_result": matrix_to_doc(oracle_out)}
    if equal:
        human = "EQUAL"
    else:
        i, j = _first_difference(formula_out, oracle_out)
        payload["first_difference"] = [i, j]
        human = (f"DIFFER at ({i}, {j}): formula {format_scalar(formula_out[i, j])}, "
                 f"oracle {format_scalar(oracle_out[i, j])}")
    _emit(args, human, payload)
    return EXIT_OK if equal else EXIT_INTERNAL


def cmd_gen(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    seeds = [args.seed] if args.count == 1 else derive_seeds(args.case, args.seed, args.count)
    written = []
    for i, seed in enumerate(seeds):
        inst = generate(GenSpec(args.case, seed, args.m, args.n, args.bound))
        if inst.blocks is not None:
            doc = blocks_to_doc(inst.blocks)
        elif args.case == "antitri":
            doc = pair_to_doc(*inst.pair, names=("E", "F"))
        else:
            doc = pair_to_doc(*inst.pair)
        doc["case"] = args.case
        doc["seed"] = seed
        path = out_dir / f"{args.case}-{args.seed}-{i}.json"
        path.write_text(dumps(doc))
        written.append(str(path))
    _emit(args, "\n".join(written), {"case": args.case, "files": written})
    return EXIT_OK


def cmd_stats(args) -> int:
    from .generate import nonvacuity_stats

    stats = nonvacuity_stats(args.case, args.count, args.seed)
    human = "\n".join([f"case {args.case}: {args.count} instances"]
                      + [f"  {k}: {v:.3f}" for k, v in stats["fractions"].items()])
    _emit(args, human, stats)
    return EXIT_OK


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drazinkit", description="Exact Drazin inverses and their representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("drazin", cmd_drazin, "Drazin inverse, index and eigenprojection of a matrix file")
    p.add_argument("path")
    for name, func, help_ in (
        ("check", cmd_check, "report the hypotheses of a formula"),
        ("apply", cmd_apply, "evaluate a representation formula"),
        ("verify", cmd_verify, "compare a formula against the oracle"),
    ):
        p = add(name, func, help_)
        p.add_argument("path")
        p.add_argument("--formula", required=True, type=_formula_id, help=", ".join(FORMULA_IDS))
    p = add("gen", cmd_gen, "write generated instances")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--seed", required=True, type=_u64)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--bound", type=int, default=2, help="entry bound for drawn Gaussian integers")
    p.add_argument("--out", default=".", help="output directory")
    p = add("stats", cmd_stats, "nonvacuity statistics for a generated batch")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=_u64, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolated as exc:
        if args.json:
            sys.stdout.write(dumps({"error": "hypothesis", **_report_payload(exc.report)}))
        else:
            print(_report_text(exc.report))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (SeriesNotValidated, InvariantViolation) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GenerationExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (FormatError, ShapeError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
