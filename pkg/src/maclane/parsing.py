"""Text input: the polynomial grammar and JSON scenario configs.

Grammar accepted by parse_poly: integer and a/b rational literals,
variable identifiers, the operators + - * ^, and parentheses, with
insignificant whitespace.  A scenario config is a JSON object describing
the valued base field, an optional extension tower, the coefficient ring
A, and the polynomial f.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import InvalidInput, ParseError, UnsupportedRing
from .fields import PrimeField, QQ
from .poly import Poly
from .ratfunc import FunctionField
from .value import INFINITY, Value, finite
from .valued_fields import ExtensionField, OrderBase, PAdicBase, ValuedField


class Token(NamedTuple):
    kind: str     # 'num', 'name', 'op', 'end'
    text: str
    pos: int


_OPS = set("+-*^()/")


def _tokenize(text: str):
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("num", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("name", text[i:j], i))
            i = j
            continue
        if c in _OPS:
            out.append(Token("op", c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r at position %d" % (c, i), i)
    out.append(Token("end", "", n))
    return out


class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, text, field, var, env):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field
        self.var = var
        self.env = env

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t.kind != "op" or t.text != op:
            raise ParseError(
                "expected %r at position %d, got %r" % (op, t.pos, t.text), t.pos
            )

    def parse(self) -> Poly:
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(
                "unexpected %r at position %d" % (t.text, t.pos), t.pos
            )
        return p

    def expr(self) -> Poly:
        p = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                q = self.term()
                p = p + q if t.text == "+" else p - q
            else:
                return p

    def term(self) -> Poly:
        p = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                p = p * self.unary()
            else:
                return p

    def unary(self) -> Poly:
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        p = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e = self.take()
            if e.kind != "num":
                raise ParseError(
                    "exponent must be a nonnegative integer at position %d" % e.pos,
                    e.pos,
                )
            return p ** int(e.text)
        return p

    def atom(self) -> Poly:
        t = self.take()
        if t.kind == "num":
            num = int(t.text)
            den = 1
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.take()
                d = self.take()
                if d.kind != "num" or int(d.text) == 0:
                    raise ParseError(
                        "rational literal needs a nonzero integer denominator "
                        "at position %d" % d.pos,
                        d.pos,
                    )
                den = int(d.text)
            return Poly.constant(self.field, self._const(num, den), self.var)
        if t.kind == "name":
            if t.text == self.var:
                return Poly.gen(self.field, self.var)
            if t.text in self.env:
                return Poly.constant(self.field, self.env[t.text], self.var)
            raise ParseError(
                "unknown variable %r at position %d" % (t.text, t.pos), t.pos
            )
        if t.kind == "op" and t.text == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(
            "unexpected %r at position %d" % (t.text or "end of input", t.pos),
            t.pos,
        )

    def _const(self, num, den):
        c = self.field.coerce(num)
        if den != 1:
            c = c / self.field.coerce(den)
        return c


def field_environment(field):
    """Names of the tower variables of a (nested) function field."""
    env = {}
    level = field
    while isinstance(level, FunctionField):
        env.setdefault(level.var, field.coerce(level.gen()))
        level = level.base
    return env


def parse_poly(text: str, field, var: str = "x", env=None) -> Poly:
    """Parse a polynomial in var over the given coefficient field.

    Identifiers other than var must be tower variables of the field (or
    appear in the optional extra environment).
    """
    environment = field_environment(field)
    if env:
        environment.update(env)
    return _Parser(text, field, var, environment).parse()


def parse_value(text) -> Value:
    if isinstance(text, Value):
        return text
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        return finite(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad value literal %r: %s" % (text, exc))


class Scenario(NamedTuple):
    """A parsed scenario config: field, coefficient ring, and f."""

    field: ValuedField
    ring: Optional[object]
    f: Poly
    var: str
    options: dict


def _parse_constants(desc):
    if desc in (None, "Q", "QQ"):
        return QQ
    if isinstance(desc, str) and desc.startswith("F") and desc[1:].isdigit():
        return PrimeField(int(desc[1:]))
    if isinstance(desc, dict) and "prime" in desc:
        return PrimeField(int(desc["prime"]))
    raise ParseError("unknown constant field descriptor %r" % (desc,))


def _parse_base(desc) -> ValuedField:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ParseError("base descriptor must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "padic":
        return PAdicBase(int(desc["p"]))
    if kind == "order":
        return OrderBase(_parse_constants(desc.get("constants")), desc["variable"])
    raise ParseError("unknown base field kind %r" % (kind,))


def _parse_extension(base: ValuedField, desc) -> ValuedField:
    var = desc["variable"]
    stages = []
    for entry in desc["stages"]:
        if isinstance(entry, dict):
            key_text, val_text = entry["key"], entry["value"]
        else:
            key_text, val_text = entry
        key = parse_poly(key_text, base.field, var)
        stages.append((key, parse_value(val_text)))
    return ExtensionField(base, var, stages)


def _parse_ring(desc, field: ValuedField):
    from .descent import IntegersLocalizedAt, PolyLocalized

    if desc is None:
        return None
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ParseError("ring descriptor must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "integers-localized":
        return IntegersLocalizedAt(int(desc["p"]))
    if kind == "poly-localized":
        constants = _parse_constants(desc.get("constants"))
        variables = tuple(desc["variables"])
        return PolyLocalized(constants, variables)
    raise UnsupportedRing("unknown ring kind %r" % (kind,))


def scenario_from_dict(cfg: dict) -> Scenario:
    if not isinstance(cfg, dict):
        raise ParseError("scenario config must be a JSON object")
    field = _parse_base(cfg.get("base"))
    for ext in cfg.get("extensions", ()):
        field = _parse_extension(field, ext)
    ring = _parse_ring(cfg.get("ring"), field)
    var = cfg.get("variable", "x")
    if "f" not in cfg:
        raise ParseError("scenario config is missing 'f'")
    f = parse_poly(cfg["f"], field.field, var)
    if not f or not f.is_monic():
        raise InvalidInput("f must be monic, got %r" % (f,))
    options = dict(cfg.get("options", {}))
    return Scenario(field, ring, f, var, options)


def load_scenario(path: str) -> Scenario:
    with open(path) as handle:
        try:
            cfg = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON in %s: %s" % (path, exc))
    return scenario_from_dict(cfg)
