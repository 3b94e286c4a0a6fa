"""Bundled example inputs (matrices, hand-built systems, the monomial curve)."""

from __future__ import annotations

from importlib import resources

from .groebner import IdealGens
from .monomial_curve import CurveFixture
from .polyring import FieldSpec, PolyRing
from .schmitt_vogel import SVSystem
from .scroll import BarredMatrix
from .varieties import parse_ideal_text

MATRICES = {
    "ex1": "ex1_matrix.json",
    "ex4": "ex4_T_matrix.json",
    "ex4prime": "ex4prime_matrix.json",
    "ex5": "ex5_matrix.json",
}

SYSTEMS = {
    "ex4prime": "ex4prime_system.txt",
    "ex5": "ex5_equations.txt",
}


def data_path(name: str):
    return resources.files("stci") / "data" / name


def load_matrix(name: str) -> BarredMatrix:
    return BarredMatrix.from_json(data_path(MATRICES[name]).read_text())


def load_system(name: str, field: FieldSpec | str = "q") -> IdealGens:
    ideal = parse_ideal_text(data_path(SYSTEMS[name]).read_text(), field)
    return IdealGens(ideal.ring, ideal.gens, name)


def load_curve() -> CurveFixture:
    return CurveFixture.load(data_path("ex4_curve.json"))


def load_partition(ring: PolyRing | None = None) -> SVSystem:
    return SVSystem.load(data_path("ex3_partition.json"), ring)
