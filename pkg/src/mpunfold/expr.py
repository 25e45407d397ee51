"""Boolean expression trees and the .bnet expression grammar.

Expressions are immutable trees over component indices.  The parser works on
a single rule's right-hand side; file-level structure (targets, comments,
header) is handled in network.py.

Grammar:
    expr := conj {"|" conj}
    conj := lit {"&" lit}
    lit  := "!" lit | "(" expr ")" | ident | "0" | "1"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    operand: "BooleanExpr"


@dataclass(frozen=True)
class And:
    left: "BooleanExpr"
    right: "BooleanExpr"


@dataclass(frozen=True)
class Or:
    left: "BooleanExpr"
    right: "BooleanExpr"


BooleanExpr = Union[Var, Const, Not, And, Or]

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class BnetParseError(ValueError):
    """Parse failure with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def evaluate(expr: BooleanExpr, bits) -> int:
    """Evaluate over a sequence of 0/1 values indexed by component."""
    if isinstance(expr, Var):
        return bits[expr.index]
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return 1 - evaluate(expr.operand, bits)
    if isinstance(expr, And):
        return evaluate(expr.left, bits) and evaluate(expr.right, bits)
    if isinstance(expr, Or):
        return evaluate(expr.left, bits) or evaluate(expr.right, bits)
    raise TypeError(f"not a BooleanExpr: {expr!r}")


def variables(expr: BooleanExpr) -> set[int]:
    """Indices occurring syntactically (may exceed the semantic support)."""
    if isinstance(expr, Var):
        return {expr.index}
    if isinstance(expr, Const):
        return set()
    if isinstance(expr, Not):
        return variables(expr.operand)
    if isinstance(expr, (And, Or)):
        return variables(expr.left) | variables(expr.right)
    raise TypeError(f"not a BooleanExpr: {expr!r}")


def to_nnf(expr: BooleanExpr, negate: bool = False) -> BooleanExpr:
    """Negation normal form: Not only applies to Var."""
    if isinstance(expr, Var):
        return Not(expr) if negate else expr
    if isinstance(expr, Const):
        return Const(1 - expr.value) if negate else expr
    if isinstance(expr, Not):
        return to_nnf(expr.operand, not negate)
    if isinstance(expr, And):
        a, b = to_nnf(expr.left, negate), to_nnf(expr.right, negate)
        return Or(a, b) if negate else And(a, b)
    if isinstance(expr, Or):
        a, b = to_nnf(expr.left, negate), to_nnf(expr.right, negate)
        return And(a, b) if negate else Or(a, b)
    raise TypeError(f"not a BooleanExpr: {expr!r}")


def format_expr(expr: BooleanExpr, names) -> str:
    """Render with minimal parentheses under the grammar's precedence."""

    def go(e, parent):
        if isinstance(e, Var):
            return names[e.index]
        if isinstance(e, Const):
            return str(e.value)
        if isinstance(e, Not):
            return "!" + go(e.operand, "not")
        if isinstance(e, And):
            s = go(e.left, "and") + " & " + go(e.right, "and")
            return f"({s})" if parent == "not" else s
        if isinstance(e, Or):
            s = go(e.left, "or") + " | " + go(e.right, "or")
            return f"({s})" if parent in ("and", "not") else s
        raise TypeError(f"not a BooleanExpr: {e!r}")

    return go(expr, None)


# tokens: (kind, text, col)
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<const>[01])"
    r"|(?P<op>[&|!()]))"
)


def _tokenize(text: str, line: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise BnetParseError(f"unexpected character {stripped[0]!r}", line, col)
        if m.group("ident"):
            tokens.append(("ident", m.group("ident"), m.start("ident") + 1))
        elif m.group("const"):
            tokens.append(("const", m.group("const"), m.start("const") + 1))
        else:
            tokens.append((m.group("op"), m.group("op"), m.start("op") + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


def parse_expression(text: str, name_to_index: dict[str, int], line: int = 1) -> BooleanExpr:
    """Parse one rule body; identifiers resolve through name_to_index."""
    tokens = _tokenize(text, line)
    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect(kind):
        tok = take()
        if tok[0] != kind:
            what = f"{tok[1]!r}" if tok[0] != "end" else "end of line"
            raise BnetParseError(f"expected {kind!r}, found {what}", line, tok[2])
        return tok

    def parse_or():
        e = parse_and()
        while peek()[0] == "|":
            take()
            e = Or(e, parse_and())
        return e

    def parse_and():
        e = parse_lit()
        while peek()[0] == "&":
            take()
            e = And(e, parse_lit())
        return e

    def parse_lit():
        kind, value, col = take()
        if kind == "!":
            return Not(parse_lit())
        if kind == "(":
            e = parse_or()
            expect(")")
            return e
        if kind == "ident":
            if value not in name_to_index:
                raise BnetParseError(f"undeclared identifier {value!r}", line, col)
            return Var(name_to_index[value])
        if kind == "const":
            return Const(int(value))
        what = f"{value!r}" if kind != "end" else "end of line"
        raise BnetParseError(f"expected a literal, found {what}", line, col)

    e = parse_or()
    kind, value, col = peek()
    if kind != "end":
        raise BnetParseError(f"trailing input {value!r}", line, col)
    return e
