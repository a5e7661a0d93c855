#!/usr/bin/env python3
"""
Kernel and functional expression parser

Kernel grammar:
    szego[(d)] | drury_arveson(d) | dirichlet[(d)] | bergman[(d)]
    | coeffs([r0, r1, ...]) | power(expr, p) | schur(expr, expr) | tensor(expr, expr)

Functional grammar:
    point([v1, ...]) | counterexample | table(path) | tensor_point([y...], [t...])
    | boundary_limit_ones[(d)] | boundary_limit([xi...]) | tensor(expr, expr)

Numbers are integers, decimals or rationals num/den; complex values are
written a+bi (e.g. 1/4+1/4i, -3/10i). Decimals are read exactly.
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Union

from ..errors import ParseError
from ..functionals.functional import (
    Functional, TensorFunctional, boundary_limit, boundary_limit_ones, counterexample_functional,
    point_functional, tensor_functional, tensor_point,
)
from ..kernels.kernel import (
    Kernel, TensorKernel, bergman, dirichlet, drury_arveson, from_coeffs, kernel_power,
    schur_product, szego,
)
from ..series.multi_index import MultiIndex
from ..series.scalars import GaussianRational, normalize

_IDENT = re.compile(r'[A-Za-z_][A-Za-z_0-9]*')
_NUMBER = re.compile(r'(\d+(?:\.\d+)?|\.\d+)(?:/(\d+))?(i?)')


class _Parser:
    """Recursive descent over the raw text, tracking the position for errors"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def accept(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str) -> None:
        if not self.accept(char):
            found = self.peek() or 'end of input'
            raise self.error(f"Expected '{char}', found '{found}'")

    def ident(self) -> str:
        self.skip()
        match = _IDENT.match(self.text, self.pos)
        if not match:
            raise self.error("Expected a name")
        self.pos = match.end()
        return match.group(0)

    def end(self) -> None:
        if self.peek():
            raise self.error(f"Unexpected trailing input '{self.text[self.pos:]}'")

    # Numbers ---------------------------------------------------------------

    def _unsigned(self):
        """Returns (value, is_imaginary)"""
        self.skip()
        if self.text.startswith('i', self.pos) and not _IDENT.match(self.text, self.pos + 1):
            self.pos += 1
            return Fraction(1), True
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            raise self.error("Expected a number")
        self.pos = match.end()
        value = Fraction(match.group(1))
        if match.group(2):
            if int(match.group(2)) == 0:
                raise self.error("Zero denominator")
            value = value / int(match.group(2))
        return value, bool(match.group(3))

    def _signed(self):
        sign = -1 if self.accept('-') else 1
        if sign == 1:
            self.accept('+')
        value, imaginary = self._unsigned()
        return sign * value, imaginary

    def scalar(self):
        real, imag = Fraction(0), Fraction(0)
        value, imaginary = self._signed()
        if imaginary:
            imag = value
        else:
            real = value
            if self.peek() in ('+', '-'):
                second, second_imaginary = self._signed()
                if not second_imaginary:
                    raise self.error("Expected an imaginary part")
                imag = second
        return normalize(GaussianRational(real, imag))

    def integer(self) -> int:
        value = self.scalar()
        if not isinstance(value, Fraction) or value.denominator != 1:
            raise self.error(f"Expected an integer, found {value}")
        return int(value)

    def vector(self) -> List:
        self.expect('[')
        values = []
        if not self.accept(']'):
            values.append(self.scalar())
            while self.accept(','):
                values.append(self.scalar())
            self.expect(']')
        return values

    def raw_argument(self) -> str:
        """Everything up to the closing parenthesis, e.g. a file path"""
        self.expect('(')
        start = self.pos
        close = self.text.find(')', start)
        if close < 0:
            raise self.error("Unclosed '('")
        self.pos = close + 1
        argument = self.text[start:close].strip()
        if not argument:
            raise ParseError("Empty argument", start, self.text)
        return argument.strip('"\'')


# Kernels ---------------------------------------------------------------------

def _kernel(parser: _Parser, degree: int) -> Union[Kernel, TensorKernel]:
    start = parser.pos
    name = parser.ident()

    def optional_dimension(default: int = 1) -> int:
        if parser.accept('('):
            d = parser.integer()
            parser.expect(')')
            return d
        return default

    def plain(kernel):
        if isinstance(kernel, TensorKernel):
            raise ParseError(f"A tensor kernel cannot be an argument of {name}", start, parser.text)
        return kernel

    if name == 'szego':
        return szego(optional_dimension(), degree)
    if name == 'dirichlet':
        return dirichlet(optional_dimension(), degree)
    if name == 'bergman':
        return bergman(optional_dimension(), degree)
    if name == 'drury_arveson':
        parser.expect('(')
        d = parser.integer()
        parser.expect(')')
        return drury_arveson(d, degree)
    if name == 'coeffs':
        parser.expect('(')
        values = parser.vector()
        parser.expect(')')
        if not values or any(not isinstance(v, Fraction) for v in values):
            raise ParseError("coeffs needs a non-empty list of rationals", start, parser.text)
        kernel = from_coeffs(values)
        if kernel.degree < degree:
            raise ParseError(f"coeffs lists {len(values)} coefficients; truncation degree {degree} "
                             f"needs {degree + 1}", start, parser.text)
        return kernel if kernel.degree == degree else from_coeffs(values[:degree + 1])
    if name in ('power', 'schur', 'tensor'):
        parser.expect('(')
        first = _kernel(parser, degree)
        parser.expect(',')
        if name == 'power':
            p = parser.integer()
            parser.expect(')')
            return kernel_power(plain(first), p)
        second = _kernel(parser, degree)
        parser.expect(')')
        if name == 'schur':
            return schur_product(plain(first), plain(second))
        return TensorKernel(plain(first), plain(second))
    raise ParseError(f"Unknown kernel '{name}'", start, parser.text)


def parse_kernel_expr(text: str, degree: int = 24) -> Union[Kernel, TensorKernel]:
    """Parse a kernel expression at truncation degree `degree`"""
    parser = _Parser(text)
    kernel = _kernel(parser, degree)
    parser.end()
    return kernel


# Functionals -----------------------------------------------------------------

def parse_value(raw) -> object:
    """Table value: "p/q", a number, or a [re, im] pair"""
    if isinstance(raw, list):
        if len(raw) != 2:
            raise ParseError(f"Complex value must be [re, im], got {raw!r}")
        real, imag = parse_value(raw[0]), parse_value(raw[1])
        if not isinstance(real, Fraction) or not isinstance(imag, Fraction):
            raise ParseError(f"Complex value parts must be real, got {raw!r}")
        return normalize(GaussianRational(real, imag))
    if isinstance(raw, bool):
        raise ParseError(f"Invalid value {raw!r}")
    if isinstance(raw, (int, float)):
        return Fraction(repr(raw)) if isinstance(raw, float) else Fraction(raw)
    parser = _Parser(str(raw))
    value = parser.scalar()
    parser.end()
    return value


def load_table(path: Path, degree: int) -> Functional:
    """Functional from a JSON table; missing entries are zero"""
    with open(path, 'r', encoding='utf-8') as handle:
        document = json.load(handle)
    try:
        dimension = int(document['dimension'])
        entries = document['values']
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"Table {path} needs 'dimension' and 'values': {exc}")
    values = {}
    for entry in entries:
        alpha = MultiIndex(tuple(entry['alpha']))
        values[alpha] = parse_value(entry['value'])
    label = document.get('label') or f"table({Path(path).name})"
    return Functional.from_values(dimension, degree, values, label)


def _functional(parser: _Parser, degree: int, base_dir: Optional[Path]):
    start = parser.pos
    name = parser.ident()
    if name == 'point':
        parser.expect('(')
        v = parser.vector()
        parser.expect(')')
        return point_functional(v, degree)
    if name == 'counterexample':
        return counterexample_functional(degree)
    if name == 'boundary_limit_ones':
        d = 1
        if parser.accept('('):
            d = parser.integer()
            parser.expect(')')
        return boundary_limit_ones(d, degree)
    if name == 'boundary_limit':
        parser.expect('(')
        xi = parser.vector()
        parser.expect(')')
        return boundary_limit(xi, degree)
    if name == 'table':
        path = Path(parser.raw_argument())
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_table(path, degree)
    if name == 'tensor_point':
        parser.expect('(')
        y = parser.vector()
        parser.expect(',')
        t = parser.vector()
        parser.expect(')')
        return tensor_point(y, t, degree)
    if name == 'tensor':
        parser.expect('(')
        left = _functional(parser, degree, base_dir)
        parser.expect(',')
        right = _functional(parser, degree, base_dir)
        parser.expect(')')
        if isinstance(left, TensorFunctional) or isinstance(right, TensorFunctional):
            raise ParseError("tensor() takes two plain functionals", start, parser.text)
        return tensor_functional(left, right, degree)
    raise ParseError(f"Unknown functional '{name}'", start, parser.text)


def parse_functional_expr(text: str, degree: int = 24,
                          base_dir: Optional[Path] = None) -> Union[Functional, TensorFunctional]:
    """Parse a functional expression; table paths resolve against base_dir"""
    parser = _Parser(text)
    functional = _functional(parser, degree, base_dir)
    parser.end()
    return functional


def parse_point(text: str) -> List:
    """A sample point written as [v1, ...]"""
    parser = _Parser(text)
    point = parser.vector()
    parser.end()
    return point
