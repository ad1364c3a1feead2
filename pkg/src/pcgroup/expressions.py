"""
Evaluation of the integer expressions used by presentations and catalog formulas.

Expressions use Python syntax with ``^`` read as a power, so ``p^(m+1)`` and
``p^3+2*p^2-p`` both work. Only arithmetic, comparisons, boolean logic,
conditionals, list displays and a fixed set of calls are accepted; nothing is
handed to ``eval``.
"""
import ast
import math
import operator
from functools import lru_cache

from src.fp import (PrimeField, cubic_coset_representatives, legendre,
                    smallest_conic_point, smallest_nonresidue, smallest_primitive_root)
from src.pcgroup.errors import ExpressionError, UnboundName


def _exact_div(a, b):
    if b == 0 or a % b:
        raise ExpressionError(f"{a}/{b} is not an exact division")
    return a // b


def _checked_pow(a, b):
    if b < 0:
        raise ExpressionError(f"negative exponent {b}; use inv() for inverses mod p")
    return a ** b


_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Pow: _checked_pow,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
    ast.Div: _exact_div,
}

_COMPARE = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.In: lambda a, b: a in b,
    ast.NotIn: lambda a, b: a not in b,
}


@lru_cache(maxsize=8192)
def parse_expression(text):
    source = str(text).strip().replace("^", "**")
    try:
        return ast.parse(source, mode="eval").body
    except SyntaxError as e:
        raise ExpressionError(f"cannot parse '{text}': {e.msg}")


@lru_cache(maxsize=None)
def _functions(p):
    F = PrimeField(p)
    return {
        "inv": F.inv,
        "legendre": lambda a: legendre(a, F),
        "is_square": F.is_square,
        "nonres": lambda: smallest_nonresidue(p),
        "proot": lambda: smallest_primitive_root(p),
        "cubic_reps": lambda: list(cubic_coset_representatives(p)),
        "conic_point": lambda r, nu: list(smallest_conic_point(r, nu, F)),
        "units": F.units,
        "squares": F.squares,
        "range": lambda *args: list(range(*args)),
        "min": min,
        "max": max,
        "abs": abs,
        "gcd": math.gcd,
        "binom": math.comb,
    }


def evaluate(text, env):
    """Value of an expression under ``env`` (which must bind ``p`` for field calls)."""
    if isinstance(text, bool) or isinstance(text, int):
        return text
    if isinstance(text, list):
        return [evaluate(item, env) for item in text]
    functions = _functions(env["p"]) if "p" in env else {}
    return _eval(parse_expression(text), env, functions)


def evaluate_int(text, env):
    value = evaluate(text, env)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ExpressionError(f"'{text}' does not evaluate to an integer")
    return value


def free_names(text):
    """Names an expression reads, excluding called functions."""
    if not isinstance(text, str):
        return set()
    node = parse_expression(text)
    called = {n.func.id for n in ast.walk(node)
              if isinstance(n, ast.Call) and isinstance(n.func, ast.Name)}
    return {n.id for n in ast.walk(node) if isinstance(n, ast.Name)} - called


def _eval(node, env, functions):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, (int, bool)):
            return node.value
        raise ExpressionError(f"unsupported literal {node.value!r}")
    if isinstance(node, ast.Name):
        if node.id in env:
            return env[node.id]
        raise UnboundName(node.id)
    if isinstance(node, ast.BinOp):
        op = _BINARY.get(type(node.op))
        if op is None:
            raise ExpressionError(f"unsupported operator {type(node.op).__name__}")
        return op(_eval(node.left, env, functions), _eval(node.right, env, functions))
    if isinstance(node, ast.UnaryOp):
        value = _eval(node.operand, env, functions)
        if isinstance(node.op, ast.USub):
            return -value
        if isinstance(node.op, ast.UAdd):
            return value
        if isinstance(node.op, ast.Not):
            return not value
        raise ExpressionError(f"unsupported unary {type(node.op).__name__}")
    if isinstance(node, ast.BoolOp):
        if isinstance(node.op, ast.And):
            for value in node.values:
                if not _eval(value, env, functions):
                    return False
            return True
        for value in node.values:
            if _eval(value, env, functions):
                return True
        return False
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env, functions)
        for op, right_node in zip(node.ops, node.comparators):
            right = _eval(right_node, env, functions)
            compare = _COMPARE.get(type(op))
            if compare is None:
                raise ExpressionError(f"unsupported comparison {type(op).__name__}")
            if not compare(left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.IfExp):
        if _eval(node.test, env, functions):
            return _eval(node.body, env, functions)
        return _eval(node.orelse, env, functions)
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.keywords:
            raise ExpressionError("only plain calls of known functions are allowed")
        func = functions.get(node.func.id)
        if func is None:
            raise ExpressionError(f"unknown function '{node.func.id}'")
        return func(*[_eval(arg, env, functions) for arg in node.args])
    if isinstance(node, ast.Subscript):
        container = _eval(node.value, env, functions)
        return container[_eval(node.slice, env, functions)]
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_eval(item, env, functions) for item in node.elts]
    raise ExpressionError(f"unsupported syntax {type(node).__name__}")
