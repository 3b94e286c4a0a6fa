import itertools

import pytest

from stci import fixtures
from stci.errors import BudgetExceeded
from stci.groebner import IdealGens
from stci.polyring import PolyRing, poly_eval
from stci.scroll import ideal_J
from stci.varieties import enumerate_points, parse_ideal_text, same_vanishing_set


def brute_force(I, p):
    """Plain itertools oracle, independent of the vectorised scan."""
    gens = [g.to_ring(I.ring.with_field(f"gf:{p}")) for g in I.gens]
    return sorted(pt for pt in itertools.product(range(p), repeat=I.ring.nvars)
                  if all(poly_eval(g, pt) == 0 for g in gens))


def test_single_quadric_over_gf2():
    R = PolyRing.make(["X3", "X4", "X5"])
    I = IdealGens.parse(R, ["X3*X5 - X4^2"])
    pts = enumerate_points(I, 2)
    assert list(pts) == brute_force(I, 2)
    assert list(pts) == [(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 1, 1)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_matches_brute_force(p):
    R = PolyRing.make(["a", "b", "c", "d"])
    I = IdealGens.parse(R, ["a*d - b*c", "a^2 + b - 1", "c*d^2 - a"])
    pts = enumerate_points(I, p)
    assert list(pts) == brute_force(I, p)
    assert pts.reverify(I)


def test_chunk_boundaries():
    # 3^11 spans several vectorised chunks
    M = fixtures.load_matrix("ex1")
    J = ideal_J(M)
    pts = enumerate_points(J, 3)
    assert all(poly_eval(g.to_ring(J.ring.with_field("gf:3")), pt) == 0 for pt in pts for g in J.gens)
    assert len(pts) == len(set(pts.points))


def test_budget():
    R = PolyRing.make(["x", "y", "z"])
    I = IdealGens.parse(R, ["x"])
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_points(I, 5, budget=100)
    assert exc.value.required == 125


def test_mismatch_names_witness():
    R = PolyRing.make(["x", "y"])
    A = IdealGens.parse(R, ["x*y"], "A")
    B = IdealGens.parse(R, ["x"], "B")
    rep = same_vanishing_set(A, B, 3)
    assert rep.verdict is False
    assert rep.kind == "consistency check"
    assert rep.details["witness_side"] == "in V(A) only"
    pt = rep.details["witness"]
    assert pt[0] != 0 and pt[1] == 0
    assert rep.details["violated_generator"] == "x"


def test_radical_equal_ideals_agree():
    R = PolyRing.make(["x", "y"])
    A = IdealGens.parse(R, ["x^2", "y^3"])
    B = IdealGens.parse(R, ["x", "y"])
    rep = same_vanishing_set(A, B, 5)
    assert rep.verdict is True and rep.details["points_A"] == 1


def test_empty_ideal_is_everything():
    R = PolyRing.make(["x", "y"])
    assert len(enumerate_points(IdealGens(R, ()), 3)) == 9


def test_ideal_text_and_dump(tmp_path):
    I = parse_ideal_text("# vars: X1 X2 X3\n\n# a comment\nX1*X3 - X2^2\n")
    assert I.ring.names == ("X1", "X2", "X3")
    J = parse_ideal_text("X10 - X2\nX2*X3\n")
    assert J.ring.names == ("X2", "X3", "X10")
    pts = enumerate_points(I, 2)
    path = tmp_path / "pts.txt"
    pts.dump(path)
    assert path.read_text().splitlines()[0] == "0,0,0"
    assert len(path.read_text().splitlines()) == len(pts)
