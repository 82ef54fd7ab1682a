"""JSON encodings.

Formula::

    {"op": "atom", "name": "p"}
    {"op": "bot"}
    {"op": "fuse" | "under" | "meet" | "join" | "star" | "arrow",
     "left": <formula>, "right": <formula>}

Structure::

    {"leaf": <formula>}
    {"comma": [<structure>, ...]}     children in canonical order
    {"semi": [<structure>, <structure>]}

Sequent: ``{"antecedent": <structure>, "succedent": <formula>}``; a simple
sequent has a formula as its antecedent.

Derivation: ``{"rule": "DotR", "sequent": "p , q => p . q", "premises": [...]}``
with the sequent in the text syntax.

All dumps use sorted keys, so equal values give byte-identical text.
"""
from __future__ import annotations

import json

from .formula import BOT, Arrow, Atom, Formula, Fuse, Join, Meet, Star, Under
from .rules import Derivation, Rule
from .structure import Comma, Leaf, Semi, Sequent, SimpleSequent, Structure, comma, leaf, semi
from .syntax import parse_sequent, parse_simple_sequent, print_sequent

_OPS = {Fuse: "fuse", Under: "under", Meet: "meet", Join: "join", Star: "star", Arrow: "arrow"}
_BY_NAME = {v: k for k, v in _OPS.items()}


class SchemaError(ValueError):
    pass


def formula_to_json(f: Formula) -> dict:
    if type(f) is Atom:
        return {"op": "atom", "name": f.name}
    if f is BOT:
        return {"op": "bot"}
    return {"op": _OPS[type(f)], "left": formula_to_json(f.left),
            "right": formula_to_json(f.right)}


def formula_from_json(obj) -> Formula:
    try:
        op = obj["op"]
        if op == "atom":
            return Atom(obj["name"])
        if op == "bot":
            return BOT
        return _BY_NAME[op](formula_from_json(obj["left"]), formula_from_json(obj["right"]))
    except (KeyError, TypeError) as e:
        raise SchemaError(f"bad formula object: {e}") from None


def structure_to_json(s: Structure) -> dict:
    if type(s) is Leaf:
        return {"leaf": formula_to_json(s.formula)}
    if type(s) is Semi:
        return {"semi": [structure_to_json(s.left), structure_to_json(s.right)]}
    if type(s) is Comma:
        return {"comma": [structure_to_json(c) for c in s.children]}
    raise SchemaError("holes have no JSON form")


def structure_from_json(obj) -> Structure:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError("a structure object has exactly one key")
    (k, v), = obj.items()
    if k == "leaf":
        return leaf(formula_from_json(v))
    if k == "semi" and isinstance(v, list) and len(v) == 2:
        return semi(*(structure_from_json(x) for x in v))
    if k == "comma" and isinstance(v, list) and len(v) >= 2:
        return comma(*(structure_from_json(x) for x in v))
    raise SchemaError(f"bad structure object with key {k!r}")


def sequent_to_json(s) -> dict:
    if isinstance(s, Sequent):
        ant = structure_to_json(s.antecedent)
    else:
        ant = formula_to_json(s.antecedent)
    return {"antecedent": ant, "succedent": formula_to_json(s.succedent)}


def sequent_from_json(obj):
    try:
        ant, succ = obj["antecedent"], obj["succedent"]
    except (KeyError, TypeError):
        raise SchemaError("a sequent has 'antecedent' and 'succedent'") from None
    if isinstance(ant, dict) and "op" in ant:
        return SimpleSequent(formula_from_json(ant), formula_from_json(succ))
    return Sequent(structure_from_json(ant), formula_from_json(succ))


def derivation_to_json(d: Derivation, sugar: bool = True) -> dict:
    return {"rule": d.rule.value, "sequent": print_sequent(d.conclusion, sugar),
            "premises": [derivation_to_json(p, sugar) for p in d.premises]}


def derivation_from_json(obj, simple: bool = False) -> Derivation:
    """Read a derivation; ``simple`` selects single-formula antecedents."""
    parse = parse_simple_sequent if simple else parse_sequent
    try:
        rule = Rule(obj["rule"])
        text = obj["sequent"]
        premises = obj.get("premises", [])
    except (KeyError, TypeError, AttributeError):
        raise SchemaError("a derivation has 'rule', 'sequent' and 'premises'") from None
    except ValueError:
        raise SchemaError(f"unknown rule {obj['rule']!r}") from None
    if not isinstance(premises, list):
        raise SchemaError("'premises' must be a list")
    return Derivation(parse(text), rule, tuple(derivation_from_json(p, simple) for p in premises))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
