"""Exact sparse polynomials over Q in jet variables x_i^(j).

Variables are :class:`JetVar` instances ordered by ``(base, order)``; the
smaller JetVar is the *larger* variable for monomial orderings, so
``x1_0 > x1_1 > ... > x2_0 > ...``.  Polynomials are immutable and hashable.

Text form (also the golden-file format)::

    variable := "x" int "_" int          x3_2 is x_3^(2)
    term     := [rational "*"] variable ["^" int] ("*" variable ["^" int])*
    poly     := term (("+" | "-") term)*
    rational := int ["/" int]
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Coefficient = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class JetVar:
    base: int
    order: int

    def __post_init__(self) -> None:
        if self.base < 1:
            raise ValueError(f"JetVar base must be >= 1, got {self.base}")
        if self.order < 0:
            raise ValueError(f"JetVar order must be >= 0, got {self.order}")

    def __str__(self) -> str:
        return f"x{self.base}_{self.order}"

    def __repr__(self) -> str:
        return f"JetVar({self.base}, {self.order})"


class Monomial:
    """A power product of JetVars; the empty product is 1."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[JetVar, int] | Iterable[tuple[JetVar, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[JetVar, int] = {}
        for var, e in items:
            if e < 0:
                raise ValueError(f"negative exponent {e} on {var}")
            if e:
                merged[var] = merged.get(var, 0) + e
        self._exps: tuple[tuple[JetVar, int], ...] = tuple(sorted(merged.items()))
        self._hash = hash(self._exps)

    @classmethod
    def of(cls, *vars_: JetVar) -> Monomial:
        return cls((v, 1) for v in vars_)

    @property
    def exponents(self) -> dict[JetVar, int]:
        return dict(self._exps)

    def items(self) -> tuple[tuple[JetVar, int], ...]:
        return self._exps

    def variables(self) -> tuple[JetVar, ...]:
        return tuple(v for v, _ in self._exps)

    def degree_in(self, var: JetVar) -> int:
        for v, e in self._exps:
            if v == var:
                return e
        return 0

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def jet_weight(self) -> int:
        return sum(v.order * e for v, e in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self._exps + other._exps)

    def divides(self, other: Monomial) -> bool:
        theirs = dict(other._exps)
        return all(theirs.get(v, 0) >= e for v, e in self._exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


ONE = Monomial()


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    mono: Monomial

    def __post_init__(self) -> None:
        if self.coeff == 0:
            raise ValueError("a Term must have a nonzero coefficient")


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonomialOrdering:
    """Global monomial ordering over the fixed JetVar order.

    ``kind`` is ``"degrevlex"`` or ``"lex"``.
    """

    kind: str = "degrevlex"

    def __post_init__(self) -> None:
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial ordering {self.kind!r}")

    def compare(self, u: Monomial, v: Monomial) -> Cmp:
        a, b = dict(u.items()), dict(v.items())
        if self.kind == "degrevlex":
            du, dv = u.total_degree, v.total_degree
            if du != dv:
                return Cmp.GT if du > dv else Cmp.LT
            # last (smallest) variable where they differ decides; fewer wins
            for var in sorted(a.keys() | b.keys(), reverse=True):
                ea, eb = a.get(var, 0), b.get(var, 0)
                if ea != eb:
                    return Cmp.GT if ea < eb else Cmp.LT
            return Cmp.EQ
        for var in sorted(a.keys() | b.keys()):
            ea, eb = a.get(var, 0), b.get(var, 0)
            if ea != eb:
                return Cmp.GT if ea > eb else Cmp.LT
        return Cmp.EQ

    def sort_key(self):
        return functools.cmp_to_key(self.compare)


DEGREVLEX = MonomialOrdering("degrevlex")
LEX = MonomialOrdering("lex")


def compare_monomials(ordering: MonomialOrdering, u: Monomial, v: Monomial) -> Cmp:
    return ordering.compare(u, v)


def _as_fraction(c: Coefficient) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | Iterable[tuple[Monomial, Coefficient]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            c = _as_fraction(c)
            if c:
                s = acc.get(mono, 0) + c
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        self._terms = acc
        self._hash: int | None = None

    @classmethod
    def _raw(cls, acc: dict[Monomial, Fraction]) -> Polynomial:
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = acc
        p._hash = None
        return p

    @classmethod
    def var(cls, v: JetVar, coeff: Coefficient = 1) -> Polynomial:
        return cls({Monomial.of(v): coeff})

    @classmethod
    def const(cls, c: Coefficient) -> Polynomial:
        return cls({ONE: c})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Coefficient = 1) -> Polynomial:
        return cls({mono: coeff})

    # -- inspection -------------------------------------------------------

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def terms(self, ordering: MonomialOrdering = DEGREVLEX) -> list[Term]:
        """Terms in decreasing order under ``ordering``."""
        key = ordering.sort_key()
        return [Term(self._terms[mo], mo) for mo in sorted(self._terms, key=key, reverse=True)]

    def variables(self) -> set[JetVar]:
        return {v for mo in self._terms for v in mo.variables()}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mo.is_one() for mo in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def total_degree(self) -> int:
        return max((mo.total_degree for mo in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mo.total_degree for mo in self._terms}) <= 1

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for mo, c in other._terms.items():
            s = acc.get(mo, 0) + c
            if s:
                acc[mo] = s
            else:
                acc.pop(mo, None)
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({mo: -c for mo, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mo = m1 * m2
                s = acc.get(mo, 0) + c1 * c2
                if s:
                    acc[mo] = s
                else:
                    acc.pop(mo, None)
        return Polynomial._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Coefficient) -> Polynomial:
        c = _as_fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._raw({mo: c * v for mo, v in self._terms.items()})

    def substitute(self, assignment: Mapping[JetVar, Polynomial | Coefficient]) -> Polynomial:
        """Apply the ring map fixing unassigned variables; substitution is simultaneous."""
        images = {v: p if isinstance(p, Polynomial) else Polynomial.const(p) for v, p in assignment.items()}
        result = Polynomial()
        power_cache: dict[tuple[JetVar, int], Polynomial] = {}
        for mo, c in self._terms.items():
            kept: list[tuple[JetVar, int]] = []
            factor = Polynomial.const(c)
            for v, e in mo.items():
                if v in images:
                    key = (v, e)
                    if key not in power_cache:
                        power_cache[key] = images[v] ** e
                    factor = factor * power_cache[key]
                    if not factor:
                        break
                else:
                    kept.append((v, e))
            if factor:
                result = result + factor * Polynomial.monomial(Monomial(kept))
        return result

    def leading_term(self, ordering: MonomialOrdering = DEGREVLEX) -> Term:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        key = ordering.sort_key()
        mo = max(self._terms, key=key)
        return Term(self._terms[mo], mo)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Polynomial({serialize(self)!r})"


def var(base: int, order: int) -> Polynomial:
    """Shorthand for the polynomial x_base^(order)."""
    return Polynomial.var(JetVar(base, order))


# -- text form ----------------------------------------------------------------


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize(p: Polynomial) -> str:
    """Canonical string: terms in decreasing degrevlex order, unit coefficients omitted."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, term in enumerate(p.terms(DEGREVLEX)):
        c = term.coeff
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if term.mono.is_one():
            body = _format_rational(mag)
        elif mag == 1:
            body = str(term.mono)
        else:
            body = f"{_format_rational(mag)}*{term.mono}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class ParseError(ValueError):
    """Malformed polynomial text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<var>x(?P<vb>\d+)_(?P<vo>\d+))|(?P<int>\d+)|(?P<op>[-+*/^])"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", *_line_col(src, pos))
        kind = m.lastgroup if m.lastgroup not in ("vb", "vo") else "var"
        if m.group("var") is not None:
            kind = "var"
        if kind != "ws":
            tokens.append((kind, m.group(0), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def _line_col(src: str, pos: int) -> tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, pos: int | None = None):
        if pos is None:
            pos = self.peek()[2]
        raise ParseError(message, *_line_col(self.src, pos))

    def expect(self, kind: str, text: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (text is not None and tok[1] != text):
            want = text or kind
            got = tok[1] or "end of input"
            self.fail(f"expected {want}, found {got!r}")
        return self.next()

    def poly(self) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.next()[1] == "-" else 1
        while True:
            c, mono = self.term()
            acc[mono] = acc.get(mono, Fraction(0)) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[:2] in (("op", "+"), ("op", "-")):
                self.next()
                sign = -1 if tok[1] == "-" else 1
                continue
            self.fail(f"expected '+', '-' or end of input, found {tok[1]!r}")
        return Polynomial(acc)

    def rational(self) -> Fraction:
        num = int(self.expect("int")[1])
        if self.peek()[:2] == ("op", "/"):
            self.next()
            tok = self.expect("int")
            den = int(tok[1])
            if den == 0:
                self.fail("zero denominator", tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> tuple[JetVar, int]:
        tok = self.expect("var")
        m = _TOKEN.match(tok[1])
        base, order = int(m.group("vb")), int(m.group("vo"))
        if base < 1:
            self.fail("variable base index must be >= 1", tok[2])
        exp = 1
        if self.peek()[:2] == ("op", "^"):
            self.next()
            etok = self.expect("int")
            exp = int(etok[1])
            if exp < 1:
                self.fail("exponent must be >= 1", etok[2])
        return JetVar(base, order), exp

    def term(self) -> tuple[Fraction, Monomial]:
        coeff = Fraction(1)
        factors: list[tuple[JetVar, int]] = []
        if self.peek()[0] == "int":
            coeff = self.rational()
            if self.peek()[:2] != ("op", "*"):
                return coeff, ONE
            self.next()
        factors.append(self.factor())
        while self.peek()[:2] == ("op", "*"):
            self.next()
            factors.append(self.factor())
        return coeff, Monomial(factors)


def parse_polynomial(src: str) -> Polynomial:
    """Parse the text form; raises :class:`ParseError` with line/column on bad input."""
    if not src.strip():
        raise ParseError("empty polynomial", 1, 1)
    return _Parser(src).poly()


def iter_vars(polys: Iterable[Polynomial]) -> Iterator[JetVar]:
    seen: set[JetVar] = set()
    for p in polys:
        seen |= p.variables()
    yield from sorted(seen)
