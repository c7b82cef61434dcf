"""The element expression language used on the command line.

Grammar (``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | INT "/" INT | "(" expr ")"
            | "M" "[" parts "]" | "m" "[" parts "]" | "x"

``M[...]`` is only valid for the ``qsym`` instance, ``m[...]`` for
``lambda`` and ``x`` for ``poly``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .compositions import Composition
from .hopf import HopfPresentation
from .lincomb import LinComb
from .rings import IntegerRing, ModularRing

SYMBOLS = {"qsym": "M", "lambda": "m", "poly": "x"}


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.message = message
        self.pos = pos
        self.src = src
        super().__init__(f"{message} (at position {pos})")

    def pretty(self) -> str:
        if not self.src:
            return str(self)
        return f"{self}\n  {self.src}\n  {' ' * self.pos}^"


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Basis:
    symbol: str
    parts: tuple = ()


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_PREC = {"+": 1, "-": 1, "*": 2}


def to_text(e) -> str:
    """Print an AST with the fewest parentheses that reparse to the same tree."""

    def prec(node) -> int:
        if isinstance(node, BinOp):
            return _PREC[node.op]
        if isinstance(node, Neg):
            return 3
        if isinstance(node, Pow):
            return 4
        if isinstance(node, Num) and node.value.denominator != 1:
            return 2  # prints as p/q, reads as one token
        return 5

    def wrap(node, need: int) -> str:
        s = to_text(node)
        return f"({s})" if prec(node) < need else s

    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Basis):
        if e.symbol == "x":
            return "x"
        return e.symbol + "[" + ",".join(map(str, e.parts)) + "]"
    if isinstance(e, Neg):
        return "-" + wrap(e.operand, 3)
    if isinstance(e, Pow):
        return f"{wrap(e.base, 5)}^{e.exponent}"
    p = _PREC[e.op]
    # left-associative: the right operand of an equal-precedence op needs parens
    return f"{wrap(e.left, p)} {e.op} {wrap(e.right, p + 1)}"


# -- tokenizer -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()\[\],]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            bad = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {src[bad]!r}", bad, src)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, instance: str):
        if instance not in SYMBOLS:
            raise ValueError(f"unknown instance {instance!r}")
        self.src = src
        self.instance = instance
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, pos: int | None = None):
        raise ExprSyntaxError(msg, self.peek()[2] if pos is None else pos, self.src)

    def expect(self, text: str):
        kind, val, pos = self.take()
        if val != text or kind not in ("op",):
            self.error(f"expected {text!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        e = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            left = BinOp("*", left, self.unary())
        return left

    def unary(self):
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                self.error("exponent must be a nonnegative integer literal", pos)
            return Pow(base, int(val))
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(Fraction(int(val)))
        if kind == "rat":
            p, q = val.split("/")
            if int(q) == 0:
                self.error("division by zero", pos)
            return Num(Fraction(int(p), int(q)))
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "name":
            sym = SYMBOLS[self.instance]
            if val != sym:
                self.error(f"unknown symbol {val!r} for instance {self.instance} (use {sym!r})", pos)
            if sym == "x":
                return Basis("x")
            return Basis(sym, self.parts(sym))
        if kind == "end":
            self.error("unexpected end of expression", pos)
        self.error(f"unexpected {val!r}", pos)

    def parts(self, sym: str) -> tuple:
        kind, val, pos = self.take()
        if val != "[":
            self.error(f"expected '[' after {sym}", pos)
        parts = []
        if self.peek()[1] == "]":
            self.take()
            return ()
        while True:
            neg = False
            start = self.peek()[2]
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, val, pos = self.take()
            if kind != "int":
                self.error("malformed composition literal", pos)
            n = -int(val) if neg else int(val)
            if n < 1:
                self.error("parts must be ≥ 1", start)
            parts.append(n)
            kind, val, pos = self.take()
            if val == "]":
                break
            if val != ",":
                self.error("malformed composition literal", pos)
        if sym == "m" and any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            self.error("m[...] needs a weakly decreasing partition", start)
        return tuple(parts)


def parse(src: str, instance: str = "qsym"):
    """Parse ``src`` into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(src, instance).parse()


# -- evaluation ----------------------------------------------------------------------

def _scalar(H: HopfPresentation, value: Fraction):
    ring = H.ring
    if value.denominator == 1:
        return ring.normalize(value.numerator)
    if isinstance(ring, IntegerRing):
        raise ValueError(f"rational literal {value} needs --ring rat")
    if isinstance(ring, ModularRing):
        return ring.normalize(value.numerator * ring.inverse(value.denominator))
    return ring.normalize(value)


def evaluate(e, H: HopfPresentation) -> LinComb:
    if isinstance(e, Num):
        return H.one().scale(_scalar(H, e.value))
    if isinstance(e, Basis):
        if e.symbol == "x":
            return H.elem(1)
        return H.elem(Composition(e.parts))
    if isinstance(e, Neg):
        return -evaluate(e.operand, H)
    if isinstance(e, Pow):
        return H.power(evaluate(e.base, H), e.exponent)
    left, right = evaluate(e.left, H), evaluate(e.right, H)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    return H.mul(left, right)


def parse_element(src: str, H: HopfPresentation) -> LinComb:
    return evaluate(parse(src, H.name), H)


# -- printing ---------------------------------------------------------------------------

def format_coeff(ring, c) -> str:
    c = ring.normalize(c)
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_lincomb(f: LinComb, fmt_key: Callable, unit_keys: tuple = ()) -> str:
    """Canonical text of an element: key order, unit coefficient shown bare."""
    if not f:
        return "0"
    ring = f.ring
    pieces = []
    for k, c in f.items():
        c = ring.normalize(c)
        negative = c < 0 and not isinstance(ring, ModularRing)
        mag = -c if negative else c
        if k in unit_keys:
            body = format_coeff(ring, mag)
        elif mag == 1:
            body = fmt_key(k)
        else:
            body = f"{format_coeff(ring, mag)}*{fmt_key(k)}"
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def format_element(H: HopfPresentation, f: LinComb) -> str:
    units = (H.unit_key,) if H.format_key(H.unit_key) == "1" else ()
    return format_lincomb(f, H.format_key, units)


def format_tensor(f: LinComb, *fmts: Callable) -> str:
    """Text for tensor elements; the ``i``-th leg uses ``fmts[i]``."""
    return format_lincomb(f, lambda key: " ⊗ ".join(fm(k) for fm, k in zip(fmts, key)))
