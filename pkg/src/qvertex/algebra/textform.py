"""Canonical text form for polynomials and rational functions.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Division is only exact: by a nonzero constant for polynomials, by any nonzero
expression when parsing a rational function.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .laurent import AlgebraError, LaurentPolynomial, VariableTable


class ParseError(AlgebraError):
    pass


def _format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: LaurentPolynomial) -> str:
    if not p.terms:
        return "0"
    names = p.table.names
    out: List[str] = []
    for exps, c in p.sorted_terms():
        mono = format_monomial(names, exps)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_rational(num: LaurentPolynomial, den: LaurentPolynomial) -> str:
    if den == 1:
        return format_polynomial(num)
    top = format_polynomial(num)
    if len(num.terms) > 1:
        top = f"({top})"
    return f"{top}/({format_polynomial(den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        if m.group(1) is not None:
            toks.append(("int", m.group(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r} at offset {m.start(3)}")
            toks.append(("op", ch))
        pos = m.end()
    return toks


class _Parser:
    """Recursive descent producing (numerator, denominator) pairs."""

    def __init__(self, text: str, table: VariableTable, allow_division: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.table = table
        self.allow_division = allow_division
        self.text = text

    def peek(self) -> Optional[Tuple[str, str]]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> Tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.i += 1
        return tok

    def expect(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise ParseError(f"expected {op!r}, got {tok[1]!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return val

    def expr(self):
        n, d = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            n2, d2 = self.term()
            if d == d2:
                n = n + n2 if op == "+" else n - n2
            else:
                n = n * d2 + n2 * d if op == "+" else n * d2 - n2 * d
                d = d * d2
        return n, d

    def term(self):
        n, d = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            n2, d2 = self.factor()
            if op == "*":
                n, d = n * n2, d * d2
            else:
                if n2.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                n, d = n * d2, d * n2
        return n, d

    def factor(self):
        tok = self.peek()
        if tok in (("op", "-"), ("op", "+")):
            self.take()
            n, d = self.factor()
            return (-n if tok[1] == "-" else n), d
        n, d = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            k = sign * int(val)
            if k >= 0:
                n, d = n**k, d**k
            else:
                if n.is_zero():
                    raise ParseError("zero raised to a negative power")
                n, d = d ** (-k), n ** (-k)
        return n, d

    def atom(self):
        kind, val = self.take()
        one = LaurentPolynomial.one(self.table)
        if kind == "int":
            return LaurentPolynomial.constant(self.table, int(val)), one
        if kind == "name":
            if val not in self.table:
                raise ParseError(f"unknown variable {val!r} (table has {list(self.table.names)})")
            return LaurentPolynomial.var(self.table, val), one
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_pair(text: str, table: VariableTable):
    """Parse into an unnormalized (numerator, denominator) pair."""
    return _Parser(text, table, True).parse()


def parse_polynomial(text: str, table: VariableTable) -> LaurentPolynomial:
    n, d = parse_pair(text, table)
    if d.is_monomial():
        (e, c), = d.terms.items()
        return n.shift(tuple(-x for x in e), Fraction(1, 1) / c)
    q = n.divide_exact(d)
    if q is None:
        raise ParseError(f"{text!r} is not a Laurent polynomial")
    return q


def variables_in(text: str) -> List[str]:
    """Variable names mentioned in an expression, in order of first appearance."""
    seen: List[str] = []
    for kind, val in _tokenize(text):
        if kind == "name" and val not in seen:
            seen.append(val)
    return seen
