"""Exponent arithmetic for binomials of a monomial parametrization.

A binomial ``x^a - x^b`` lies in the toric ideal of the parametrization
exactly when both monomials map to the same parameter monomial, i.e. when
``E^T a == E^T b`` for the exponent matrix ``E`` (rows = coordinates,
columns = parameters).  Exponents are Python ints, so values such as
534*22 need no special care.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import ContextError, ParseError


@dataclass(frozen=True)
class MonomialParametrization:
    coordinates: tuple[str, ...]
    parameters: tuple[str, ...]
    exponent_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        coords = tuple(self.coordinates)
        params = tuple(self.parameters)
        rows = tuple(tuple(int(e) for e in row) for row in self.exponent_matrix)
        if len(rows) != len(coords):
            raise ContextError(f"{len(rows)} exponent rows for {len(coords)} coordinates")
        for name, row in zip(coords, rows):
            if len(row) != len(params):
                raise ContextError(f"row of {name} has {len(row)} entries, expected {len(params)}")
            if any(e < 0 for e in row):
                raise ValueError(f"negative exponent in the row of {name}")
            if not any(row):
                raise ValueError(f"{name} is a constant coordinate")
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "parameters", params)
        object.__setattr__(self, "exponent_matrix", rows)

    def image(self, exponents: Sequence[int]) -> tuple[int, ...]:
        """Parameter exponents of the image of a coordinate monomial."""
        if len(exponents) != len(self.coordinates):
            raise ContextError(f"monomial has {len(exponents)} exponents, expected {len(self.coordinates)}")
        return tuple(sum(a * row[j] for a, row in zip(exponents, self.exponent_matrix))
                     for j in range(len(self.parameters)))

    def is_homogeneous(self) -> bool:
        return len({sum(row) for row in self.exponent_matrix}) == 1

    def single_parameter_rows(self) -> list[str]:
        """Coordinates parametrized by a pure power of one parameter."""
        return [c for c, row in zip(self.coordinates, self.exponent_matrix)
                if sum(1 for e in row if e) == 1]


@dataclass(frozen=True)
class Binomial:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.names) or len(self.minus) != len(self.names):
            raise ContextError("binomial exponent vectors do not match its coordinates")
        if any(e < 0 for e in self.plus + self.minus):
            raise ValueError("negative exponent in binomial")

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "Binomial":
        names = tuple(names)
        parts = [s.strip() for s in re.split(r"(?<![\^*])\s*-\s*", text.strip(), maxsplit=1)]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"binomial must read 'monomial - monomial': {text!r}")
        return cls(_parse_monomial(parts[0], names), _parse_monomial(parts[1], names), names)

    def swapped(self) -> "Binomial":
        return Binomial(self.minus, self.plus, self.names)

    def __str__(self):
        return f"{_format_monomial(self.plus, self.names)} - {_format_monomial(self.minus, self.names)}"


def _parse_monomial(text: str, names: tuple[str, ...]) -> tuple[int, ...]:
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?", factor)
        if not m:
            raise ParseError(f"bad monomial factor {factor!r}")
        if m.group(1) not in names:
            raise ParseError(f"unknown coordinate {m.group(1)!r}")
        exps[names.index(m.group(1))] += int(m.group(2) or 1)
    return tuple(exps)


def _format_monomial(exps, names) -> str:
    s = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
    return s or "1"


def _check(P: MonomialParametrization, b: Binomial):
    if b.names != P.coordinates:
        raise ContextError(f"binomial over {b.names}, parametrization over {P.coordinates}")


def binomial_in_toric(P: MonomialParametrization, b: Binomial) -> bool:
    """Whether substituting the parametrization kills ``b``."""
    _check(P, b)
    return P.image(b.plus) == P.image(b.minus)


def homogeneity_check(P: MonomialParametrization, b: Binomial) -> bool:
    """Whether both sides have the same total parameter degree."""
    _check(P, b)
    return sum(P.image(b.plus)) == sum(P.image(b.minus))


def binomial_degrees(P: MonomialParametrization, b: Binomial) -> dict:
    _check(P, b)
    plus, minus = P.image(b.plus), P.image(b.minus)
    return {"plus": dict(zip(P.parameters, plus)), "minus": dict(zip(P.parameters, minus)),
            "total": [sum(plus), sum(minus)]}


@dataclass(frozen=True)
class CurveFixture:
    parametrization: MonomialParametrization
    binomials: tuple[tuple[str, Binomial], ...]

    @classmethod
    def from_dict(cls, d: Mapping) -> "CurveFixture":
        for key in ("coordinates", "parameters", "exponents", "binomials"):
            if key not in d:
                raise ParseError(f"toric fixture: missing field {key!r}")
        P = MonomialParametrization(tuple(d["coordinates"]), tuple(d["parameters"]),
                                    tuple(tuple(r) for r in d["exponents"]))
        bins = d["binomials"]
        items = bins.items() if isinstance(bins, Mapping) else ((f"P{k + 1}", t) for k, t in enumerate(bins))
        return cls(P, tuple((name, Binomial.parse(t, P.coordinates)) for name, t in items))

    @classmethod
    def load(cls, path) -> "CurveFixture":
        try:
            d = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"toric fixture: invalid JSON at line {exc.lineno}: {exc.msg}") from None
        return cls.from_dict(d)
