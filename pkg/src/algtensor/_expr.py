"""Tiny safe evaluator for polynomial-style expressions.

Strings such as ``"3/2 + 2*a^2"`` are parsed with :mod:`ast` and folded
into whatever ring the caller supplies through ``lookup`` (a mapping from
symbol name to ring element) and ``const`` (embedding of a Fraction).
"""

from __future__ import annotations

import ast
from fractions import Fraction

from .errors import ParseError


class UnknownSymbol(ParseError):
    def __init__(self, name, where=None):
        super().__init__(f"unknown symbol {name!r}", where=where)
        self.name = name


MAX_EXPONENT = 1000


def evaluate(text, lookup, const, where=None):
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty expression", where=where)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}", where=where) from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"only integer literals are allowed, got {node.value!r}", where=where)
            return const(Fraction(node.value))
        if isinstance(node, ast.Name):
            if node.id not in lookup:
                raise UnknownSymbol(node.id, where=where)
            return lookup[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int):
                    raise ParseError("exponents must be integer literals", where=where)
                if exp.value > MAX_EXPONENT:
                    raise ParseError(f"exponent {exp.value} exceeds {MAX_EXPONENT}", where=where)
                base = walk(node.left)
                try:
                    return base ** (sign * exp.value)
                except (TypeError, ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"cannot raise to the power {sign * exp.value} in {text!r}: {exc}",
                                     where=where) from None
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                try:
                    return left / right
                except (TypeError, ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"cannot divide in {text!r}: {exc}", where=where) from None
        raise ParseError(f"unsupported syntax in {text!r}", where=where)

    return walk(tree)
