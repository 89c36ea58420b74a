"""A small expression language for bundle arithmetic.

Grammar (whitespace insensitive, integers may be negative):

    expr  := sum
    sum   := prod { "++" prod }            direct sum, left associative
    prod  := unary { "*" unary }           tensor product, left associative
    unary := atom { "(" int ")" }          postfix twist
    atom  := "bundle(" int "," int "," int ["," int] ")"
           | "o(" int ")"                  line bundle O(n)
           | "dual(" expr ")"
           | "cat(" int "," int ")"        catalog reference
           | "(" expr ")"

Bundle literals are validated while parsing (a rank-2 literal with c3 != 0 is
rejected, and cat() must name a catalog pair).  Errors carry a 1-based column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from .bundles import BundleDescriptor, dual as dual_bundle, direct_sum, tensor, twist
from .catalog import lookup
from .chowring import Hypersurface

__all__ = [
    "Expression",
    "BundleLit",
    "LineBundle",
    "CatRef",
    "Dual",
    "Twist",
    "Tensor",
    "Sum",
    "ExpressionError",
    "parse",
    "to_text",
    "evaluate",
]


class ExpressionError(ValueError):
    """Parse or validation failure, with a 1-based column position."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column


@dataclass(frozen=True)
class BundleLit:
    rank: int
    c1: int
    c2: int
    c3: int = 0


@dataclass(frozen=True)
class LineBundle:
    n: int


@dataclass(frozen=True)
class CatRef:
    c1: int
    c2: int


@dataclass(frozen=True)
class Dual:
    inner: "Expression"


@dataclass(frozen=True)
class Twist:
    inner: "Expression"
    n: int


@dataclass(frozen=True)
class Tensor:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Sum:
    left: "Expression"
    right: "Expression"


Expression = Union[BundleLit, LineBundle, CatRef, Dual, Twist, Tensor, Sum]


class Token(NamedTuple):
    kind: str  # "name" | "int" | "++" | "(" | ")" | "," | "*" | "end"
    text: str
    column: int


_TOKEN_RE = re.compile(
    r"""(?P<space>\s+)
      | (?P<name>[A-Za-z_]+)
      | (?P<int>-?\d+)
      | (?P<pp>\+\+)
      | (?P<sym>[(),*])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos + 1)
        if match.lastgroup == "name":
            tokens.append(Token("name", match.group(), pos + 1))
        elif match.lastgroup == "int":
            tokens.append(Token("int", match.group(), pos + 1))
        elif match.lastgroup == "pp":
            tokens.append(Token("++", "++", pos + 1))
        elif match.lastgroup == "sym":
            tokens.append(Token(match.group(), match.group(), pos + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            shown = token.text or "end of input"
            raise ExpressionError(f"expected {kind!r}, found {shown!r}", token.column)
        return self.advance()

    def int_value(self) -> int:
        return int(self.expect("int").text)

    def parse(self) -> Expression:
        expr = self.sum()
        tail = self.peek()
        if tail.kind != "end":
            raise ExpressionError(f"unexpected trailing {tail.text!r}", tail.column)
        return expr

    def sum(self) -> Expression:
        node = self.prod()
        while self.peek().kind == "++":
            self.advance()
            node = Sum(node, self.prod())
        return node

    def prod(self) -> Expression:
        node = self.unary()
        while self.peek().kind == "*":
            self.advance()
            node = Tensor(node, self.unary())
        return node

    def unary(self) -> Expression:
        node = self.atom()
        while self.peek().kind == "(":
            self.advance()
            n = self.int_value()
            self.expect(")")
            node = Twist(node, n)
        return node

    def atom(self) -> Expression:
        token = self.peek()
        if token.kind == "(":
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        if token.kind == "name":
            self.advance()
            if token.text == "bundle":
                return self.bundle_literal(token.column)
            if token.text == "o":
                self.expect("(")
                n = self.int_value()
                self.expect(")")
                return LineBundle(n)
            if token.text == "dual":
                self.expect("(")
                inner = self.sum()
                self.expect(")")
                return Dual(inner)
            if token.text == "cat":
                self.expect("(")
                c1 = self.int_value()
                self.expect(",")
                c2 = self.int_value()
                self.expect(")")
                if lookup(c1, c2) is None:
                    raise ExpressionError(
                        f"unknown catalog pair ({c1},{c2})", token.column
                    )
                return CatRef(c1, c2)
            raise ExpressionError(f"unknown name {token.text!r}", token.column)
        shown = token.text or "end of input"
        raise ExpressionError(f"expected an expression, found {shown!r}", token.column)

    def bundle_literal(self, column: int) -> BundleLit:
        self.expect("(")
        values = [self.int_value()]
        while self.peek().kind == ",":
            self.advance()
            values.append(self.int_value())
        self.expect(")")
        if len(values) not in (3, 4):
            raise ExpressionError(
                f"bundle() takes rank, c1, c2 and optional c3; got {len(values)} values",
                column,
            )
        rank, c1, c2 = values[:3]
        c3 = values[3] if len(values) == 4 else 0
        try:
            BundleDescriptor(rank, c1, c2, c3)
        except ValueError as exc:
            raise ExpressionError(f"invalid bundle literal: {exc}", column) from exc
        return BundleLit(rank, c1, c2, c3)


def parse(text: str) -> Expression:
    """Parse an expression; raises ExpressionError with a column on failure."""
    return _Parser(text).parse()


def to_text(expr: Expression) -> str:
    """Canonical printer; parse(to_text(e)) == e for every expression e."""
    if isinstance(expr, BundleLit):
        if expr.c3:
            return f"bundle({expr.rank},{expr.c1},{expr.c2},{expr.c3})"
        return f"bundle({expr.rank},{expr.c1},{expr.c2})"
    if isinstance(expr, LineBundle):
        return f"o({expr.n})"
    if isinstance(expr, CatRef):
        return f"cat({expr.c1},{expr.c2})"
    if isinstance(expr, Dual):
        return f"dual({to_text(expr.inner)})"
    if isinstance(expr, Twist):
        inner = to_text(expr.inner)
        if isinstance(expr.inner, (Sum, Tensor)):
            inner = f"({inner})"
        return f"{inner}({expr.n})"
    if isinstance(expr, Tensor):
        left = to_text(expr.left)
        if isinstance(expr.left, Sum):
            left = f"({left})"
        right = to_text(expr.right)
        if isinstance(expr.right, (Sum, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(expr, Sum):
        right = to_text(expr.right)
        if isinstance(expr.right, Sum):
            right = f"({right})"
        return f"{to_text(expr.left)} ++ {right}"
    raise TypeError(f"not an expression: {expr!r}")


def evaluate(expr: Expression, X: Hypersurface) -> BundleDescriptor:
    """Evaluate an expression to a bundle descriptor on X."""
    if isinstance(expr, BundleLit):
        return BundleDescriptor(expr.rank, expr.c1, expr.c2, expr.c3)
    if isinstance(expr, LineBundle):
        return BundleDescriptor(1, expr.n, 0, 0, b=expr.n, acm=True)
    if isinstance(expr, CatRef):
        entry = lookup(expr.c1, expr.c2)
        assert entry is not None  # checked at parse time
        return entry.descriptor()
    if isinstance(expr, Dual):
        return dual_bundle(evaluate(expr.inner, X))
    if isinstance(expr, Twist):
        return twist(evaluate(expr.inner, X), expr.n, X)
    if isinstance(expr, Tensor):
        return tensor(evaluate(expr.left, X), evaluate(expr.right, X), X)
    if isinstance(expr, Sum):
        return direct_sum(evaluate(expr.left, X), evaluate(expr.right, X), X)
    raise TypeError(f"not an expression: {expr!r}")
