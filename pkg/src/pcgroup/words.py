"""
Group words as written in presentations.

A word is a product of factors separated by ``*`` or blanks. A factor is a
generator name, ``1``, a left-normed commutator ``[w1,w2,...]`` or a bracketed
``(w)``, followed by any number of exponents. An exponent is an integer, a
bracketed integer expression ``(expr)`` or ``{expr}``, or a name: a generator
name conjugates, any other name is a parameter.

    [c,a]          a^(p^2)*c^-1          b^a          [a,b,b]^(nu*p)
"""
import re
from dataclasses import dataclass
from typing import Tuple

from src.pcgroup.errors import UnresolvedWord
from src.pcgroup.expressions import evaluate_int

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_']*")
_INT = re.compile(r"\d+")
_CLOSING = {"(": ")", "{": "}"}
# a bare "=", not part of "==", "!=", "<=" or ">=" inside an exponent
_EQUALS = re.compile(r"(?<![=!<>])=(?!=)")


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Conjugate:
    base: object
    by: object


@dataclass(frozen=True)
class Commutator:
    items: Tuple[object, ...]


@dataclass(frozen=True)
class Product:
    factors: Tuple[object, ...]


class _WordParser:
    def __init__(self, text, generators, env):
        self.text = text
        self.generators = generators
        self.env = env
        self.pos = 0

    def error(self, message):
        return UnresolvedWord(f"{message} at position {self.pos} in '{self.text}'")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            raise self.error(f"expected '{char}'")
        self.pos += 1

    def parse(self):
        node = self.word()
        if self.peek():
            raise self.error(f"unexpected '{self.peek()}'")
        return node

    def word(self):
        factors = []
        while True:
            char = self.peek()
            if char == "*":
                self.pos += 1
                continue
            if char in ("", ",", "]", ")"):
                break
            factors.append(self.factor())
        if not factors:
            return Identity()
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def factor(self):
        node = self.atom()
        while self.peek() == "^":
            self.pos += 1
            node = self.exponent(node)
        return node

    def atom(self):
        char = self.peek()
        if char == "[":
            self.pos += 1
            items = [self.word()]
            while self.peek() == ",":
                self.pos += 1
                items.append(self.word())
            self.expect("]")
            if len(items) < 2:
                raise self.error("a commutator needs at least two entries")
            return Commutator(tuple(items))
        if char == "(":
            self.pos += 1
            node = self.word()
            self.expect(")")
            return node
        match = _INT.match(self.text, self.pos)
        if match:
            if match.group() != "1":
                raise self.error(f"'{match.group()}' is not a group element")
            self.pos = match.end()
            return Identity()
        match = _IDENT.match(self.text, self.pos)
        if match:
            name = match.group()
            if name not in self.generators:
                raise self.error(f"'{name}' is not a generator")
            self.pos = match.end()
            return Gen(name)
        raise self.error("expected a generator, commutator or bracket")

    def exponent(self, base):
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        char = self.peek()
        if char in _CLOSING:
            end = self._matching(char)
            value = evaluate_int(self.text[self.pos + 1:end], self.env)
            self.pos = end + 1
            return Power(base, sign * value)
        match = _INT.match(self.text, self.pos)
        if match:
            self.pos = match.end()
            return Power(base, sign * int(match.group()))
        match = _IDENT.match(self.text, self.pos)
        if match:
            name = match.group()
            self.pos = match.end()
            if name in self.generators:
                node = Conjugate(base, Gen(name))
                return Power(node, -1) if sign < 0 else node
            return Power(base, sign * evaluate_int(name, self.env))
        raise self.error("expected an exponent")

    def _matching(self, opening):
        depth = 0
        for index in range(self.pos, len(self.text)):
            if self.text[index] == opening:
                depth += 1
            elif self.text[index] == _CLOSING[opening]:
                depth -= 1
                if depth == 0:
                    return index
        raise self.error(f"unbalanced '{opening}'")


def parse_word(text, generators, env):
    """Parse ``text`` over the generator names in ``generators``."""
    return _WordParser(str(text), set(generators), env).parse()


def parse_relation(text, generators, env):
    """Split ``lhs = mid = ... = rhs`` into parsed sides."""
    sides = [side.strip() for side in _EQUALS.split(str(text))]
    if len(sides) < 2 or not all(sides):
        raise UnresolvedWord(f"'{text}' is not a relation")
    return [parse_word(side, generators, env) for side in sides]


def evaluate_word(node, group, lookup):
    """Element of ``group`` a parsed word stands for; ``lookup`` maps names to elements."""
    if isinstance(node, Identity):
        return 0
    if isinstance(node, Gen):
        if node.name not in lookup:
            raise UnresolvedWord(f"generator '{node.name}' is not available here")
        return int(lookup[node.name])
    if isinstance(node, Power):
        return int(group.power(evaluate_word(node.base, group, lookup), node.exponent))
    if isinstance(node, Conjugate):
        return int(group.conjugate(evaluate_word(node.base, group, lookup),
                                   evaluate_word(node.by, group, lookup)))
    if isinstance(node, Commutator):
        value = evaluate_word(node.items[0], group, lookup)
        for item in node.items[1:]:
            value = int(group.commutator(value, evaluate_word(item, group, lookup)))
        return value
    if isinstance(node, Product):
        value = 0
        for factor in node.factors:
            value = int(group.mul(value, evaluate_word(factor, group, lookup)))
        return value
    raise UnresolvedWord(f"unknown word node {node!r}")


def word_generators(node):
    """Generator names a parsed word mentions."""
    if isinstance(node, Gen):
        return {node.name}
    if isinstance(node, Power):
        return word_generators(node.base)
    if isinstance(node, Conjugate):
        return word_generators(node.base) | word_generators(node.by)
    if isinstance(node, (Commutator, Product)):
        items = node.items if isinstance(node, Commutator) else node.factors
        names = set()
        for item in items:
            names |= word_generators(item)
        return names
    return set()


def rename(node, mapping):
    if isinstance(node, Gen):
        return Gen(mapping.get(node.name, node.name))
    if isinstance(node, Power):
        return Power(rename(node.base, mapping), node.exponent)
    if isinstance(node, Conjugate):
        return Conjugate(rename(node.base, mapping), rename(node.by, mapping))
    if isinstance(node, Commutator):
        return Commutator(tuple(rename(item, mapping) for item in node.items))
    if isinstance(node, Product):
        return Product(tuple(rename(item, mapping) for item in node.factors))
    return node


def format_word(node):
    if isinstance(node, Identity):
        return "1"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Power):
        base = format_word(node.base)
        if not isinstance(node.base, (Gen, Commutator)):
            base = f"({base})"
        return f"{base}^{node.exponent}" if node.exponent >= 0 else f"{base}^({node.exponent})"
    if isinstance(node, Conjugate):
        base = format_word(node.base)
        if not isinstance(node.base, (Gen, Commutator)):
            base = f"({base})"
        return f"{base}^{format_word(node.by)}"
    if isinstance(node, Commutator):
        return "[" + ",".join(format_word(item) for item in node.items) + "]"
    return "*".join(format_word(item) for item in node.factors) or "1"


def normal_word(names, exponents):
    """The word ``g1^e1 * g2^e2 * ...`` skipping zero exponents."""
    factors = tuple(Power(Gen(name), int(e)) if e != 1 else Gen(name)
                    for name, e in zip(names, exponents) if e)
    if not factors:
        return Identity()
    return factors[0] if len(factors) == 1 else Product(factors)
