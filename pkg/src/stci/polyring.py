"""Exact sparse multivariate polynomials over Q and GF(p).

A :class:`PolyRing` bundles the variable set, the coefficient field and the
monomial order.  Polynomials keep their terms as a tuple of
``(monomial, coefficient)`` pairs sorted in descending order, so equality is
structural and the text form is reproducible.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ContextError, DomainError, ParseError

MAX_EXPONENT = 2**32 - 1

Monomial = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# variables, fields, orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable set needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def numbered(cls, count: int, prefix: str = "X") -> "VariableSet":
        return cls(tuple(f"{prefix}{i}" for i in range(1, count + 1)))

    @property
    def count(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ContextError(f"unknown variable {name!r}") from None

    def __len__(self):
        return len(self.names)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(None)
        m = re.fullmatch(r"(?:gf|f|zz)[:/(]?(\d+)\)?", text)
        if not m:
            raise ValueError(f"cannot parse field {text!r}; use 'q' or 'gf:<p>'")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def coerce(self, c):
        if self.p is None:
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
            return Fraction(c)
        if isinstance(c, Fraction):
            return (c.numerator * pow(c.denominator, -1, self.p)) % self.p
        if not isinstance(c, int):
            raise TypeError(f"cannot coerce {c!r} into {self}")
        return c % self.p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(c)
        return pow(c, -1, self.p)

    def normalize(self, c):
        """Bring a raw arithmetic result back into canonical field form."""
        return c if self.p is None else c % self.p

    def format(self, c) -> str:
        if self.p is None:
            c = Fraction(c)
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return str(c)


QQ = FieldSpec(None)


def _degrevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _degrevlex_neg(m):
    return (-sum(m), tuple(reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``degrevlex`` or an elimination order for ``block``.

    The elimination order compares the total degree in the block variables
    first and breaks ties with degrevlex on all variables.
    """

    kind: str = "degrevlex"
    block: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "elimination"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "block", tuple(sorted(set(self.block))))
        if self.kind == "elimination" and not self.block:
            raise ValueError("an elimination order needs a nonempty block")

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        if text in ("grevlex", "drl"):
            text = "degrevlex"
        return cls(text)

    def key(self, m: Monomial):
        """Sort key; larger key means larger monomial."""
        if self.kind == "degrevlex":
            return _degrevlex_key(m)
        if self.kind == "lex":
            return m
        return (sum(m[i] for i in self.block), _degrevlex_key(m))

    def neg_key(self, m: Monomial):
        """Sort key whose ascending order is the descending monomial order."""
        if self.kind == "degrevlex":
            return _degrevlex_neg(m)
        if self.kind == "lex":
            return tuple(-e for e in m)
        return (-sum(m[i] for i in self.block), _degrevlex_neg(m))

    def __str__(self):
        if self.kind == "elimination":
            return f"elimination{list(self.block)}"
        return self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def check_exponents(m: Monomial) -> Monomial:
    if max(m, default=0) > MAX_EXPONENT:
        raise OverflowError(f"exponent exceeds the 32-bit cap in {m}")
    return m


def binomial_coefficient(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"binomial_coefficient needs non-negative arguments, got ({n}, {k})")
    if k > n:
        raise DomainError(f"binomial_coefficient({n}, {k}): k > n")
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# ring and polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    variables: VariableSet
    field: FieldSpec = QQ
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        if not isinstance(self.variables, VariableSet):
            object.__setattr__(self, "variables", VariableSet(tuple(self.variables)))

    @classmethod
    def make(cls, names: Sequence[str] | int, field: FieldSpec | str = QQ,
             order: MonomialOrder | str = DEGREVLEX) -> "PolyRing":
        variables = VariableSet.numbered(names) if isinstance(names, int) else VariableSet(tuple(names))
        if isinstance(field, str):
            field = FieldSpec.parse(field)
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        return cls(variables, field, order)

    @property
    def nvars(self) -> int:
        return self.variables.count

    @property
    def names(self) -> tuple[str, ...]:
        return self.variables.names

    def with_order(self, order: MonomialOrder | str) -> "PolyRing":
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        return PolyRing(self.variables, self.field, order)

    def with_field(self, fld: FieldSpec | str) -> "PolyRing":
        if isinstance(fld, str):
            fld = FieldSpec.parse(fld)
        return PolyRing(self.variables, fld, self.order)

    def extended(self, name: str) -> "PolyRing":
        """Ring with one extra variable appended after the existing ones."""
        base = name
        k = 0
        while name in self.names:
            k += 1
            name = f"{base}{k}"
        return PolyRing(VariableSet(self.names + (name,)), self.field, self.order)

    # constructors -----------------------------------------------------------

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        fld = self.field
        clean = {}
        n = self.nvars
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise ContextError(f"monomial {m} has length {len(m)}, ring has {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = fld.coerce(c)
            if c:
                clean[check_exponents(m)] = c
        return Polynomial._from_clean(self, clean)

    def from_terms(self, terms: Iterable[tuple[object, Monomial]]) -> "Polynomial":
        acc: dict = {}
        for c, m in terms:
            m = tuple(m)
            acc[m] = acc.get(m, 0) + self.field.coerce(c)
        return self.from_dict(acc)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return self.from_dict({(0,) * self.nvars: c})

    def monomial(self, m: Monomial, c=1) -> "Polynomial":
        return self.from_dict({tuple(m): c})

    def gen(self, i: int) -> "Polynomial":
        m = [0] * self.nvars
        m[i] = 1
        return self.monomial(tuple(m))

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.variables.index(name))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}] ({self.order})"


class Polynomial:
    """Immutable polynomial; terms sorted descending under the ring order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def _from_clean(cls, ring: PolyRing, d: Mapping) -> "Polynomial":
        key = ring.order.key
        terms = tuple(sorted(d.items(), key=lambda t: key(t[0]), reverse=True))
        return cls(ring, terms)

    # basic accessors ------------------------------------------------------

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def coefficients(self) -> list:
        return [c for _, c in self.terms]

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_constant(self) -> bool:
        return len(self.terms) == 1 and not any(self.terms[0][0]) or not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def support(self) -> frozenset[int]:
        """Indices of the variables occurring in the polynomial."""
        s: set[int] = set()
        for m, _ in self.terms:
            s.update(i for i, e in enumerate(m) if e)
        return frozenset(s)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def primitive(self) -> "Polynomial":
        """Integer-coefficient representative with content 1 and positive lead (QQ only)."""
        if not self.terms or not self.ring.field.is_rational:
            return self.monic()
        den = math.lcm(*(c.denominator for _, c in self.terms))
        nums = [c.numerator * (den // c.denominator) for _, c in self.terms]
        g = math.gcd(*nums)
        if nums[0] < 0:
            g = -g
        return Polynomial(self.ring, tuple((m, Fraction(n // g)) for (m, _), n in zip(self.terms, nums)))

    # ring context ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring.variables != other.ring.variables or self.ring.field != other.ring.field:
            raise ContextError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-express in a ring with the same variables and field (e.g. another order)."""
        if ring.variables != self.ring.variables or ring.field != self.ring.field:
            if ring.variables == self.ring.variables:
                return ring.from_dict({m: _field_transfer(c, self.ring.field, ring.field) for m, c in self.terms})
            raise ContextError(f"cannot move {self} from {self.ring} to {ring}")
        if ring == self.ring:
            return self
        return Polynomial._from_clean(ring, dict(self.terms))

    def embed(self, ring: PolyRing) -> "Polynomial":
        """Image in a ring whose variables extend this one's (trailing variables)."""
        n, N = self.ring.nvars, ring.nvars
        if ring.names[:n] != self.ring.names or ring.field != self.ring.field:
            raise ContextError(f"{ring} does not extend {self.ring}")
        pad = (0,) * (N - n)
        return Polynomial._from_clean(ring, {m + pad: c for m, c in self.terms})

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p is None:
            return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))
        return Polynomial(self.ring, tuple((m, (-c) % p) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        fld = self.ring.field
        c = fld.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, fld.normalize(a * c)) for m, a in self.terms))

    def mul_term(self, c, m: Monomial) -> "Polynomial":
        fld = self.ring.field
        c = fld.coerce(c)
        if not c:
            return self.ring.zero()
        # multiplying by a monomial preserves the order
        return Polynomial(self.ring, tuple((check_exponents(mono_mul(a, m)), fld.normalize(b * c))
                                           for a, b in self.terms))

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return poly_eval(self, point)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.ring.variables == other.ring.variables
                    and self.ring.field == other.ring.field
                    and dict(self.terms) == dict(other.terms))
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms))
        return self._hash

    # text -----------------------------------------------------------------

    def to_str(self, names: Sequence[str] | None = None) -> str:
        return format_terms(self.terms, names or self.ring.names, self.ring.field)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _field_transfer(c, src: FieldSpec, dst: FieldSpec):
    if dst.is_rational and not src.is_rational:
        raise ContextError("cannot lift GF(p) coefficients to QQ")
    return dst.coerce(c)


def format_terms(terms, names: Sequence[str], fld: FieldSpec) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(terms):
        neg = False
        if fld.is_rational and c < 0:
            neg, c = True, -c
        mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
        cs = fld.format(c)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _merge(ring: PolyRing, a: Mapping, b_terms) -> "Polynomial":
    fld = ring.field
    p = fld.p
    d = dict(a)
    for m, c in b_terms:
        if m in d:
            s = d[m] + c
            if p is not None:
                s %= p
            if s:
                d[m] = s
            else:
                del d[m]
        else:
            d[m] = c
    return Polynomial._from_clean(ring, d)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if f.ring.order != g.ring.order:
        raise ContextError(f"order mismatch: {f.ring.order} vs {g.ring.order}")
    return _merge(f.ring, dict(f.terms), g.terms)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if f.ring.order != g.ring.order:
        raise ContextError(f"order mismatch: {f.ring.order} vs {g.ring.order}")
    p = f.ring.field.p
    d: dict = {}
    for ma, ca in f.terms:
        for mb, cb in g.terms:
            m = tuple(x + y for x, y in zip(ma, mb))
            d[m] = d.get(m, 0) + ca * cb
    out = {}
    for m, c in d.items():
        if p is not None:
            c %= p
        if c:
            out[check_exponents(m)] = c
    return Polynomial._from_clean(f.ring, out)


def poly_eval(f: Polynomial, point: Sequence):
    """Evaluate ``f`` at ``point`` exactly, returning a field element."""
    ring = f.ring
    if len(point) != ring.nvars:
        raise ContextError(f"point has {len(point)} coordinates, ring has {ring.nvars} variables")
    fld = ring.field
    x = [fld.coerce(v) for v in point]
    p = fld.p
    total = 0
    for m, c in f.terms:
        t = c
        for xi, e in zip(x, m):
            if e:
                t = t * (pow(xi, e, p) if p is not None else xi ** e)
                if p is not None:
                    t %= p
        total += t
    return fld.normalize(total) if p is not None else Fraction(total)


# ---------------------------------------------------------------------------
# text parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for ``+ - * / ^`` expressions with parentheses.

    ``/`` is accepted only between integer literals (rational coefficients).
    """

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos} in {text!r}")
            num, name, op = m.groups()
            if num is not None:
                tokens.append(("num", int(num)))
            elif name is not None:
                tokens.append(("name", name))
            else:
                tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial text")
        result = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r} at token {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> Polynomial:
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            # unary sign, also after a binary one as in "a + -b"
            self.take()
            t = self.term()
            return -t if val == "-" else t
        result = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.power()
            elif kind in ("name", "num") or (kind == "op" and val == "("):
                # implicit multiplication, e.g. 2X1 or (a)(b)
                result = result * self.power()
            else:
                return result

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            return base ** e
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            nk, nv = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv = self.take()
                if dk != "num" or dv == 0:
                    raise ParseError(f"bad rational coefficient in {self.text!r}")
                return self.ring.const(Fraction(val, dv))
            return self.ring.const(val)
        if kind == "name":
            try:
                return self.ring.var(val)
            except ContextError:
                raise ParseError(f"unknown variable {val!r} in {self.text!r}") from None
        if kind == "op" and val == "(":
            inner = self.expr()
            k, v = self.take()
            if (k, v) != ("op", ")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_polys(ring: PolyRing, texts: Iterable[str]) -> list[Polynomial]:
    return [ring.parse(t) for t in texts]
