"""Command-line front end.

Exit codes: 0 proved / check passed, 1 refuted / check failed,
2 resource limit hit, 3 input or usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .algebra import (AlgebraClass, AlgebraFormatError, ExpandError, MissingOperation,
                      algebra_to_json, check_class, classify_negation, dump_algebra,
                      example1, expand, load_algebra, no_unit_witness)
from .checker import first_failure
from .corpus import CorpusFormatError, builtin_corpus, load_corpus, run_corpus
from .enumeration import countermodel
from .prover import Prover, SearchConfig, SearchLimit
from .rules import RuleSet
from .serialize import (SchemaError, derivation_from_json, derivation_to_json, dumps,
                        formula_to_json)
from .syntax import ParseError, parse_formula, parse_sequent, parse_simple_sequent, print_formula, print_sequent
from .systems import TranslationError, decide_g, decide_qg, ko

PROVED, REFUTED, EXCEEDED, INPUT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--sugar", action="store_true", help="print a -> bot as ~a")
    p.add_argument("--time-budget", type=float, default=10.0, metavar="SECONDS",
                   help="search time per sequent (default 10)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="incrl", description="Proof search and finite algebras "
                     "for involutive residuated logics without unit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prove", parents=[common], help="search for a cut-free derivation")
    p.add_argument("sequent")
    p.add_argument("--system", choices=["gb", "qgc"], default="gb")
    p.add_argument("--max-size", type=int, default=None,
                   help="bound on the symbol size of sequents in the search")

    p = sub.add_parser("decide", parents=[common], help="decide a sequent")
    p.add_argument("sequent")
    p.add_argument("--system", choices=["g", "qg", "gb"], default="gb")
    p.add_argument("--trace", action="store_true", help="show the translated sequent")

    p = sub.add_parser("translate", parents=[common], help="double-negation translation")
    p.add_argument("formula")

    p = sub.add_parser("check-proof", parents=[common], help="check a derivation file")
    p.add_argument("file", help="derivation JSON, or - for stdin")
    p.add_argument("--system", choices=[r.value for r in RuleSet], default="gb")
    p.add_argument("--allow-cut", action="store_true")

    p = sub.add_parser("check-algebra", parents=[common], help="check the laws of a class")
    p.add_argument("file", help="algebra file; the name example1 selects the built-in one")
    p.add_argument("--class", dest="cls", default="IncRL-",
                   help="lattice, cRL-, qIncRL-, IncRL-, mncRL-, dncRL- or cbRL-")

    p = sub.add_parser("expand", parents=[common], help="add star, arrow and bounds")
    p.add_argument("file")

    p = sub.add_parser("countermodel", parents=[common], help="search small algebras")
    p.add_argument("sequent")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--full", action="store_true",
                   help="search every bi-residuated algebra, not only expansions")

    p = sub.add_parser("corpus", parents=[common], help="run a regression corpus")
    p.add_argument("file", nargs="?", help="corpus file (default: the built-in corpus)")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_algebra(path: str):
    if path == "example1" and not os.path.exists(path):
        return example1()
    return load_algebra(_read(path))


def _emit(args, obj, text: str):
    print(dumps(obj) if args.json else text)


def _cmd_prove(args) -> int:
    goal = parse_sequent(args.sequent)
    cfg = SearchConfig(max_symbol_size=args.max_size, time_budget=args.time_budget,
                       rule_set=RuleSet(args.system))
    out = Prover(cfg).prove(goal)
    seq = print_sequent(goal, args.sugar)
    obj = {"outcome": out.kind, "sequent": seq, "system": args.system}
    if out.kind == "proved":
        obj["derivation"] = derivation_to_json(out.derivation, args.sugar)
        text = out.derivation.pretty(args.sugar)
    elif out.kind == "refuted":
        text = f"refuted: {seq}"
    else:
        obj["reason"] = out.reason
        text = f"resource exceeded ({out.reason}): {seq}"
    _emit(args, obj, text)
    return {"proved": PROVED, "refuted": REFUTED}.get(out.kind, EXCEEDED)


def _cmd_decide(args) -> int:
    system = RuleSet(args.system)
    cfg = SearchConfig(time_budget=args.time_budget)
    obj = {"system": system.value}
    if system is RuleSet.GB:
        goal = parse_sequent(args.sequent)
        ok = Prover(cfg).provable(goal)
        obj["sequent"] = print_sequent(goal, args.sugar)
    else:
        goal = parse_simple_sequent(args.sequent)
        a, b = goal.antecedent, goal.succedent
        obj["sequent"] = print_sequent(goal, args.sugar)
        if system is RuleSet.G:
            if args.trace:
                obj["translated"] = f"{print_formula(ko(a), args.sugar)} => {print_formula(ko(b), args.sugar)}"
            ok = decide_g(a, b, cfg=cfg)
        else:
            ok = decide_qg(a, b, cfg=cfg)
    obj["outcome"] = "proved" if ok else "refuted"
    lines = []
    if "translated" in obj:
        lines.append(f"translated: {obj['translated']}")
    lines.append(f"{obj['outcome']}: {obj['sequent']}")
    _emit(args, obj, "\n".join(lines))
    return PROVED if ok else REFUTED


def _cmd_translate(args) -> int:
    f = parse_formula(args.formula)
    t = ko(f)
    obj = {"input": print_formula(f, args.sugar), "output": print_formula(t, args.sugar),
           "formula": formula_to_json(t)}
    _emit(args, obj, obj["output"])
    return 0


def _cmd_check_proof(args) -> int:
    system = RuleSet(args.system)
    try:
        data = json.loads(_read(args.file))
    except json.JSONDecodeError as e:
        raise SchemaError(f"bad JSON: {e}") from None
    d = derivation_from_json(data, simple=not system.structured)
    failure = first_failure(d, system, allow_cut=args.allow_cut)
    obj = {"system": system.value, "valid": failure is None, "nodes": d.size}
    if failure is None:
        text = f"valid {system.value} derivation ({d.size} nodes)"
    else:
        obj["failure"] = {"rule": failure.node.rule.value,
                          "sequent": print_sequent(failure.node.conclusion, args.sugar),
                          "message": failure.message}
        text = f"invalid: {failure}"
    _emit(args, obj, text)
    return 0 if failure is None else 1


def _cmd_check_algebra(args) -> int:
    m = _load_algebra(args.file)
    cls = AlgebraClass.parse(args.cls)
    report = check_class(m, cls)
    obj = {"class": cls.value, "passed": report.passed,
           "laws": [{"law": r.law, "passed": r.passed, "checked": r.checked,
                     "witness": list(r.witness) if r.witness else None}
                    for r in report.results]}
    lines = [report.describe()]
    if m.neg is not None and m.dot is not None and report.results[0].passed:
        obj["negation_class"] = classify_negation(m).value
        obj["no_unit_witness"] = no_unit_witness(m)
        lines.append(f"negation: {obj['negation_class']}")
        lines.append(f"no unit witness: {str(obj['no_unit_witness']).lower()}")
    _emit(args, obj, "\n".join(lines))
    return 0 if report.passed else 1


def _cmd_expand(args) -> int:
    m = _load_algebra(args.file)
    try:
        e = expand(m)
    except ExpandError as err:
        print(f"cannot expand: {err}", file=sys.stderr)
        return 1
    _emit(args, algebra_to_json(e), dump_algebra(e).rstrip("\n"))
    return 0


def _cmd_countermodel(args) -> int:
    goal = parse_sequent(args.sequent)
    found = countermodel(goal, args.max_size, full=args.full)
    if found is None:
        obj = {"found": False, "max_size": args.max_size}
        text = f"no countermodel up to size {args.max_size}"
        _emit(args, obj, text)
        return 1
    m, mu = found
    obj = {"found": True, "algebra": algebra_to_json(m), "assignment": mu}
    assign = ", ".join(f"{k} = {v}" for k, v in sorted(mu.items()))
    text = f"countermodel with {assign}\n{dump_algebra(m).rstrip()}"
    _emit(args, obj, text)
    return 0


def _cmd_corpus(args) -> int:
    entries = load_corpus(args.file) if args.file else builtin_corpus()
    report = run_corpus(entries, args.time_budget, args.workers)
    _emit(args, report.to_json(), report.describe())
    return 0 if report.ok else 1


_COMMANDS = {
    "prove": _cmd_prove, "decide": _cmd_decide, "translate": _cmd_translate,
    "check-proof": _cmd_check_proof, "check-algebra": _cmd_check_algebra,
    "expand": _cmd_expand, "countermodel": _cmd_countermodel, "corpus": _cmd_corpus,
}


def run(argv: Optional[list] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return INPUT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except SearchLimit as e:
        print(f"resource exceeded: {e}", file=sys.stderr)
        return EXCEEDED
    except (ParseError, TranslationError, AlgebraFormatError, MissingOperation, SchemaError,
            CorpusFormatError, OSError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())
