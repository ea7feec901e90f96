"""Exact Laurent polynomials in z with polynomial fiber variables u_1..u_n.

A monomial ``z^k u_1^{i_1} ... u_n^{i_n}`` is stored as the key
``(k, (i_1, ..., i_n))``.  The u-degree ``i_1 + ... + i_n`` is the
infinitesimal level of the term.  Coefficients are ``Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import PolynomialSyntaxError, VariableOutOfRange

Monomial = tuple  # (z_exp, u_exps)


def u_degree(mono: Monomial) -> int:
    return sum(mono[1])


def _sort_key(mono: Monomial):
    return (sum(mono[1]), mono[1], mono[0])


class LaurentPoly:
    """Immutable Laurent polynomial over Q.

    Zero coefficients are never stored, so two equal polynomials have equal
    term maps.  Negative u-exponents are accepted (they occur for sections
    away from the zero section) but the parser never produces them.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        if n < 0:
            raise ValueError("number of fiber variables must be >= 0")
        self.n = n
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            z, us = mono
            us = tuple(int(e) for e in us)
            if len(us) != n:
                raise ValueError(f"monomial {mono!r} does not have {n} u-exponents")
            key = (int(z), us)
            acc[key] = acc.get(key, 0) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def constant(cls, c, n: int) -> "LaurentPoly":
        return cls(n, {(0, (0,) * n): c})

    @classmethod
    def monomial(cls, z_exp: int, u_exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(len(u_exps), {(z_exp, tuple(u_exps)): coeff})

    @classmethod
    def z_power(cls, k: int, n: int) -> "LaurentPoly":
        return cls(n, {(k, (0,) * n): 1})

    # mapping-ish access

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator:
        for mono in sorted(self._terms, key=_sort_key):
            yield mono, self._terms[mono]

    def coeff(self, z_exp: int, u_exps: Sequence[int]) -> Fraction:
        return self._terms.get((z_exp, tuple(u_exps)), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError("fiber-variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return LaurentPoly(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for (z1, u1), c1 in self._terms.items():
            for (z2, u2), c2 in other._terms.items():
                key = (z1 + z2, tuple(a + b for a, b in zip(u1, u2)))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.constant(1, self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self.items())))
        return self._hash

    # degree data

    def u_degrees(self) -> set:
        return {u_degree(m) for m in self._terms}

    def max_u_degree(self) -> int:
        return max(self.u_degrees(), default=0)

    def min_u_degree(self) -> int:
        return min(self.u_degrees(), default=0)

    def z_exponents(self) -> list:
        return sorted({m[0] for m in self._terms})

    def min_z(self) -> int:
        return min((m[0] for m in self._terms), default=0)

    def max_z(self) -> int:
        return max((m[0] for m in self._terms), default=0)

    def z_span(self) -> int:
        if not self._terms:
            return 0
        return self.max_z() - self.min_z()

    # structural operations

    def truncate_u(self, m: int) -> "LaurentPoly":
        """Drop all terms of u-degree greater than ``m``."""
        if m < 0:
            raise ValueError("level must be >= 0")
        return LaurentPoly(self.n, {k: v for k, v in self._terms.items() if u_degree(k) <= m})

    def chart_substitute(self, twists: Sequence[int]) -> "LaurentPoly":
        """Apply ``z -> 1/z`` and ``u_k -> z^{b_k} u_k``."""
        if len(twists) != self.n:
            raise ValueError("twist vector length must equal n")
        out = {}
        for (z, us), c in self._terms.items():
            shift = sum(b * e for b, e in zip(twists, us))
            out[(-z + shift, us)] = c
        return LaurentPoly(self.n, out)

    def restrict(self, keep: Sequence[int]) -> "LaurentPoly":
        """Set the fiber variables not listed in ``keep`` (0-based) to zero."""
        keep = list(keep)
        drop = [k for k in range(self.n) if k not in keep]
        out = {}
        for (z, us), c in self._terms.items():
            if any(us[k] for k in drop):
                continue
            out[(z, tuple(us[k] for k in keep))] = c
        return LaurentPoly(len(keep), out)

    def at_zero_section(self) -> "LaurentPoly":
        """The u-degree 0 part, i.e. the restriction to Z."""
        return self.truncate_u(0)

    def shift(self, z_exp: int = 0, u_exps: Sequence[int] | None = None) -> "LaurentPoly":
        """Multiply by the monomial ``z^z_exp u^u_exps``."""
        u_exps = tuple(u_exps) if u_exps is not None else (0,) * self.n
        out = {}
        for (z, us), c in self._terms.items():
            out[(z + z_exp, tuple(a + b for a, b in zip(us, u_exps)))] = c
        return LaurentPoly(self.n, out)

    # printing

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.items():
            body = _mono_str(mono)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not body:
                text = _frac_str(a)
            elif a == 1:
                text = body
            else:
                text = f"{_frac_str(a)}*{body}"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"LaurentPoly(n={self.n}, {str(self)!r})"


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _mono_str(mono: Monomial) -> str:
    z, us = mono
    parts = []
    if z == 1:
        parts.append("z")
    elif z != 0:
        parts.append(f"z^{z}")
    for k, e in enumerate(us, start=1):
        if e == 1:
            parts.append(f"u{k}")
        elif e != 0:
            parts.append(f"u{k}^{e}")
    return "*".join(parts)


class LaurentVector(tuple):
    """A rank-r column of Laurent polynomials."""

    def __new__(cls, components: Iterable[LaurentPoly]):
        comps = tuple(components)
        if not comps:
            raise ValueError("rank must be positive")
        n = comps[0].n
        if any(c.n != n for c in comps):
            raise ValueError("components use different fiber-variable counts")
        return super().__new__(cls, comps)

    @property
    def rank(self) -> int:
        return len(self)

    def truncate_u(self, m: int) -> "LaurentVector":
        return LaurentVector(c.truncate_u(m) for c in self)


def truncate_u(p: LaurentPoly, m: int) -> LaurentPoly:
    return p.truncate_u(m)


def chart_substitute(p: LaurentPoly, twists: Sequence[int]) -> LaurentPoly:
    return p.chart_substitute(twists)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(u_?(\d+))|(z)|([-+*/^()]))")


def _tokenize(text: str) -> list:
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at position {pos}: {text[pos:]!r}")
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("u", int(m.group(3))))
        elif m.group(4) is not None:
            toks.append(("z", None))
        else:
            toks.append((m.group(5), None))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks, n):
        self.toks = toks
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise PolynomialSyntaxError("unexpected end of input")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def signed_int(self) -> int:
        if self.peek() == "(":
            self.take("(")
            v = self.signed_int()
            self.take(")")
            return v
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take()[0] == "-" else 1
        return sign * self.take("int")[1]

    def poly(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = acc + self.term() * sign
        if self.peek() is not None:
            raise PolynomialSyntaxError(f"unexpected token {self.peek()!r}")
        return acc

    def term(self) -> LaurentPoly:
        coeff = Fraction(1)
        z = 0
        us = [0] * self.n
        seen = False
        if self.peek() == "int":
            num = self.take()[1]
            den = 1
            if self.peek() == "/":
                self.take("/")
                den = self.take("int")[1]
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator")
            coeff = Fraction(num, den)
            if self.peek() != "*":
                return LaurentPoly.constant(coeff, self.n)
            self.take("*")
        while True:
            kind = self.peek()
            if kind == "z":
                self.take()
                e = 1
                if self.peek() == "^":
                    self.take("^")
                    e = self.signed_int()
                z += e
            elif kind == "u":
                k = self.take()[1]
                if k < 1 or k > self.n:
                    raise VariableOutOfRange(f"u{k} used with only {self.n} fiber variables")
                e = 1
                if self.peek() == "^":
                    self.take("^")
                    e = self.take("int")[1]
                us[k - 1] += e
            else:
                raise PolynomialSyntaxError(f"expected a factor, found {kind!r}")
            seen = True
            if self.peek() != "*":
                break
            self.take("*")
        assert seen
        return LaurentPoly(self.n, {(z, tuple(us)): coeff})


def parse_poly(text: str, n: int) -> LaurentPoly:
    """Parse ``text`` such as ``"z^-2*u1^2 + 1/2*u_2"`` into a polynomial."""
    toks = _tokenize(text)
    if not toks:
        raise PolynomialSyntaxError("empty polynomial")
    return _Parser(toks, n).poly()
