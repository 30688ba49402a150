"""Text syntax for cross-marked Satake diagrams.

::

    spec    := form , [ "cross" , set ] ;
    form    := NAME "(" args ")"
             | "custom" TYPE RANK [ "black" set ] [ "arrows" pairset ] ;
    set     := "{" INT { "," INT } "}" | "{}" ;
    pairset := "{" pair { "," pair } "}" ;   pair := "(" INT "," INT ")" ;

``NAME`` is one of the catalog families (``su``, ``sl_r``, ``sl_h``, ``so``,
``so_star``, ``sp_r``, ``sp``, ``compact``, ``complex``, ``ex``).  ``TYPE``
is a Cartan letter with ``RANK`` (``custom A 3``) or a sum of simple types
with its total rank (``custom A3+A1 4``).  A JSON object as produced by
:func:`crsatake.render.to_json` is accepted as well.
"""

from __future__ import annotations

import json
import re

from .parabolic import CrossedDiagram
from .rootcore import DynkinGraph
from .satake import FAMILIES, UnknownForm, catalog_lookup, make_diagram

__all__ = ["ParseError", "parse_spec", "parse_set"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(expected)
        hint = f" (expected {' or '.join(expected)})" if expected else ""
        super().__init__(f"{message} at position {position}{hint}")


_TOKEN = re.compile(
    r"\s*(?:(?P<type>[A-Ga-g]\d+(?:\+[A-Ga-g]\d+)+)"
    r"|(?P<int>-?\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[(){},]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None, expected=()):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = expected or ((repr(value),) if value is not None else (kind,))
            got = tok[1] or "end of input"
            raise ParseError(f"unexpected {got!r}", tok[2], want)
        self.i += 1
        return tok

    def int_(self) -> int:
        return int(self.take("int", expected=("integer",))[1])

    def set_(self) -> list[int]:
        self.take("punct", "{")
        out = []
        if self.peek()[1] == "}":
            self.take()
            return out
        out.append(self.int_())
        while self.peek()[1] == ",":
            self.take()
            out.append(self.int_())
        self.take("punct", "}", expected=("','", "'}'"))
        return out

    def pairset(self) -> list[tuple[int, int]]:
        self.take("punct", "{")
        out = []
        if self.peek()[1] == "}":
            self.take()
            return out
        while True:
            self.take("punct", "(")
            a = self.int_()
            self.take("punct", ",")
            b = self.int_()
            self.take("punct", ")")
            out.append((a, b))
            if self.peek()[1] != ",":
                break
            self.take()
        self.take("punct", "}", expected=("','", "'}'"))
        return out

    def spec(self) -> CrossedDiagram:
        kind, word, pos = self.peek()
        if kind != "name":
            raise ParseError(f"unexpected {word or 'end of input'!r}", pos, ("form name", "'custom'"))
        if word == "custom":
            diagram = self.custom()
        else:
            diagram = self.named()
        crosses = []
        if self.peek()[1] == "cross":
            self.take()
            crosses = self.set_()
        self.take("end", expected=("'cross'", "end of input"))
        return CrossedDiagram(diagram, frozenset(crosses))

    def named(self):
        _, name, pos = self.take("name")
        if name not in FAMILIES:
            raise UnknownForm(f"unknown real form {name!r} at position {pos}; known: {', '.join(FAMILIES)}")
        self.take("punct", "(")
        args = []
        if self.peek()[1] != ")":
            args.append(self.arg())
            while self.peek()[1] == ",":
                self.take()
                args.append(self.arg())
        self.take("punct", ")", expected=("','", "')'"))
        return catalog_lookup(name, args)

    def arg(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return int(value)
        if kind in ("name", "type"):
            self.take()
            return value
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos, ("argument",))

    def custom(self):
        self.take("name", "custom")
        kind, type_string, pos = self.peek()
        if kind not in ("name", "type"):
            raise ParseError(f"unexpected {type_string or 'end of input'!r}", pos, ("Cartan type",))
        self.take()
        rank = self.int_()
        black, arrows = [], []
        if self.peek()[1] == "black":
            self.take()
            black = self.set_()
        if self.peek()[1] == "arrows":
            self.take()
            arrows = self.pairset()
        graph = DynkinGraph.from_type(type_string, rank)
        return make_diagram(graph, black, arrows)


def parse_set(text: str) -> frozenset:
    """Parse a bare node set such as ``"{1,2}"``."""
    p = _Parser(text)
    out = p.set_()
    p.take("end", expected=("end of input",))
    return frozenset(out)


def _from_json(text: str) -> CrossedDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from None
    if "diagram" in obj and isinstance(obj["diagram"], dict):
        obj = obj["diagram"]
    for key in ("type", "rank"):
        if key not in obj:
            raise ParseError(f"JSON diagram lacks {key!r}", 0)
    if obj.get("rank") == 0:
        graph = DynkinGraph((), ())
    elif "cartan" in obj:
        graph = DynkinGraph(tuple(tuple(r) for r in obj["cartan"]), tuple(obj.get("labels", range(1, obj["rank"] + 1))))
    else:
        graph = DynkinGraph.from_type(obj["type"], obj["rank"])
    d = make_diagram(graph, obj.get("black", []), [tuple(a) for a in obj.get("arrows", [])])
    return CrossedDiagram(d, frozenset(obj.get("cross", [])))


def parse_spec(text: str) -> CrossedDiagram:
    """Parse a diagram spec (DSL or JSON) into a validated :class:`CrossedDiagram`.

    >>> cd = parse_spec("su(1,3) cross {1,2}")
    >>> sorted(cd.crosses), sorted(cd.satake.black)
    ([1, 2], [2])
    """
    if text.lstrip().startswith("{"):
        return _from_json(text)
    return _Parser(text).spec()
