"""Regression corpora of sequents with expected outcomes.

One entry per line, ``name | system | sequent | expected | source``, where
system is one of g, qg, gb, qgc and expected is ``proved`` or ``refuted``.
Blank lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .prover import Prover, SearchConfig, SearchLimit
from .rules import RuleSet
from .syntax import ParseError, parse_sequent, parse_simple_sequent
from .systems import TranslationError, decide_g, decide_qg

EXPECTED = ("proved", "refuted")
SYSTEMS = (RuleSet.G, RuleSet.QG, RuleSet.GB, RuleSet.QGC)


class CorpusFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    system: RuleSet
    sequent: str
    expected: str
    source: str = ""

    def goal(self):
        if self.system in (RuleSet.G, RuleSet.QG):
            return parse_simple_sequent(self.sequent)
        return parse_sequent(self.sequent)


def parse_corpus(text: str) -> list[CorpusEntry]:
    out = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 5:
            raise CorpusFormatError(f"line {lineno}: expected 5 '|'-separated fields")
        name, system, sequent, expected, source = parts
        try:
            rs = RuleSet(system.lower())
        except ValueError:
            rs = None
        if rs not in SYSTEMS:
            raise CorpusFormatError(f"line {lineno}: unknown system {system!r}")
        if expected.lower() not in EXPECTED:
            raise CorpusFormatError(f"line {lineno}: expected must be proved or refuted")
        if name in names:
            raise CorpusFormatError(f"line {lineno}: duplicate entry name {name!r}")
        names.add(name)
        entry = CorpusEntry(name, rs, sequent, expected.lower(), source)
        try:
            entry.goal()
        except ParseError as e:
            raise CorpusFormatError(f"line {lineno}: {e}") from None
        out.append(entry)
    return out


def load_corpus(path: str) -> list[CorpusEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh.read())


def builtin_corpus() -> list[CorpusEntry]:
    text = resources.files("incrl").joinpath("data/corpus.txt").read_text(encoding="utf-8")
    return parse_corpus(text)


@dataclass
class EntryResult:
    entry: CorpusEntry
    outcome: str          # proved, refuted, resource_exceeded or error
    seconds: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.outcome == self.entry.expected

    def to_json(self) -> dict:
        return {"name": self.entry.name, "system": self.entry.system.value,
                "sequent": self.entry.sequent, "expected": self.entry.expected,
                "outcome": self.outcome, "passed": self.passed}


def run_entry(entry: CorpusEntry, time_budget: float = 10.0) -> EntryResult:
    start = time.perf_counter()
    cfg = SearchConfig(time_budget=time_budget)
    detail = ""
    try:
        goal = entry.goal()
        if entry.system is RuleSet.G:
            outcome = "proved" if decide_g(goal.antecedent, goal.succedent, cfg=cfg) else "refuted"
        elif entry.system is RuleSet.QG:
            outcome = "proved" if decide_qg(goal.antecedent, goal.succedent, cfg=cfg) else "refuted"
        else:
            cfg.rule_set = entry.system
            outcome = Prover(cfg).prove(goal).kind
    except SearchLimit as e:
        outcome, detail = "resource_exceeded", str(e)
    except (ParseError, TranslationError) as e:
        outcome, detail = "error", str(e)
    return EntryResult(entry, outcome, time.perf_counter() - start, detail)


def _run_one(args):
    return run_entry(*args)


@dataclass
class CorpusReport:
    results: list
    seconds: float

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def mismatches(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {"entries": [r.to_json() for r in self.results],
                "total": len(self.results),
                "passed": sum(r.passed for r in self.results),
                "ok": self.ok}

    def describe(self) -> str:
        lines = []
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            note = "" if r.passed else f"  (expected {r.entry.expected}, got {r.outcome})"
            lines.append(f"{mark} {r.entry.name:<28} {r.entry.system.value:<4} "
                         f"{r.seconds:7.3f}s  {r.entry.sequent}{note}")
        n = len(self.results)
        lines.append(f"{n - len(self.mismatches)}/{n} passed in {self.seconds:.2f}s")
        return "\n".join(lines)


def run_corpus(entries: list, time_budget: float = 10.0,
               workers: Optional[int] = None) -> CorpusReport:
    """Run every entry; results keep the corpus order whatever the worker count."""
    start = time.perf_counter()
    jobs = [(e, time_budget) for e in entries]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return CorpusReport(results, time.perf_counter() - start)
