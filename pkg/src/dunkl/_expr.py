"""Tiny arithmetic-expression reader shared by the scalar and polynomial parsers.

Python's own ``ast`` module does the tokenising and precedence work; this file
only whitelists the node types we accept and folds them with caller supplied
constructors.
"""
import ast
from fractions import Fraction

from .errors import ParseError


def parse_expression(text, make_name, make_number):
    """Evaluate ``text`` using ``make_name(str)`` and ``make_number(Fraction)``.

    Accepted syntax: numbers (integers, decimals), names, parentheses,
    unary +/-, binary + - * /, and ``^`` or ``**`` with a non-negative integer
    literal exponent.
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _fold(tree.body, src, make_name, make_number)


def _literal(node, src):
    seg = ast.get_source_segment(src, node)
    if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
        raise ParseError(f"unsupported literal {seg!r}")
    try:
        return Fraction(seg)
    except (ValueError, TypeError):
        raise ParseError(f"bad number {seg!r}") from None


def _exponent(node, src):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        if node.value < 0:
            raise ParseError("negative exponents are not supported")
        return node.value
    raise ParseError("exponent must be a non-negative integer literal")


def _fold(node, src, make_name, make_number):
    if isinstance(node, ast.Constant):
        return make_number(_literal(node, src))
    if isinstance(node, ast.Name):
        return make_name(node.id)
    if isinstance(node, ast.UnaryOp):
        val = _fold(node.operand, src, make_name, make_number)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _fold(node.left, src, make_name, make_number)
            return base ** _exponent(node.right, src)
        left = _fold(node.left, src, make_name, make_number)
        right = _fold(node.right, src, make_name, make_number)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            try:
                return left / right
            except ZeroDivisionError:
                raise ParseError("division by zero") from None
    raise ParseError(f"unsupported syntax: {ast.dump(node)[:60]}")
