import random

import pytest

from stci import fixtures
from stci.errors import DomainError, ParseError, ValidationError
from stci.groebner import ideal_contains
from stci.polyring import LEX
from stci.scroll import (BarredMatrix, corner_sums, cross_products, ideal_J, minors, random_simple_matrix,
                         scroll_block, scroll_F, stci_system, sv_partition, validate)


def test_validate_examples():
    for name in fixtures.MATRICES:
        assert validate(fixtures.load_matrix(name)).verdict is True


@pytest.mark.parametrize("blocks,fragment", [
    ([[[0]]], "at least 2 entries"),
    ([[[0, 1]], [[2, 1]]], "shared"),
    ([[[0, 0, 1]]], "repeats"),
    ([[[0, 1], [1, 2]]], "small blocks"),
    ([[[0, 1]], [[2, 3]], [[1, 4]], [[1, 5]]], "big blocks [1, 3, 4]"),
])
def test_validate_rejects(blocks, fragment):
    M = BarredMatrix.from_lists(blocks, [f"X{i}" for i in range(1, 7)])
    rep = validate(M)
    assert rep.verdict is False
    assert fragment in rep.details["violation"]


def test_corner_sharing_is_allowed_once():
    M = BarredMatrix.simple([[0, 1], [1, 2, 3]])
    assert validate(M).verdict is True
    with pytest.raises(ValidationError):
        ideal_J(BarredMatrix.simple([[0, 1], [2, 1]], ["a", "b", "c"]))


def test_index_out_of_range():
    M = BarredMatrix.from_lists([[[0, 5]]], ["a", "b"])
    assert "out of range" in validate(M).details["violation"]


def test_minors_and_products_ex4():
    M = fixtures.load_matrix("ex4")
    R = M.ring(order=LEX)
    J = ideal_J(M, R)
    assert len(minors(M, R)) == 1 and len(cross_products(M, R)) == 5
    expected = ["T3*T5 - T4^2", "T1*T4", "T1*T5", "T1*T6", "T3*T6", "T4*T6"]
    assert [str(g) for g in J.gens] == expected


def test_generalized_matrices():
    J = ideal_J(fixtures.load_matrix("ex4prime"), None)
    assert len(J) == 3
    R = J.ring.with_order(LEX)
    assert sorted(str(g.to_ring(R)) for g in J.gens) == ["X1*X4 - X2*X3", "X1*X5", "X3*X5"]
    J5 = ideal_J(fixtures.load_matrix("ex5"), fixtures.load_matrix("ex5").ring(order=LEX))
    assert sorted(map(str, J5.gens)) == sorted(["X1*X4 - X2*X3", "X3*X6 - X4*X5", "X1*X6 - X2*X5",
                                                "X1*X7", "X3*X7", "X5*X7"])
    with pytest.raises(DomainError):
        stci_system(fixtures.load_matrix("ex5"))


def test_scroll_F_formula():
    M = scroll_block(4)
    R = M.ring(order=LEX)
    assert str(scroll_F(M, 1, 1, R)) == "X1*X3 - X2^2"
    assert str(scroll_F(M, 1, 2, R)) == "X1*X4^2 - 2*X2*X3*X4 + X3^3"
    assert str(scroll_F(M, 1, 3, R)) == "X1*X5^3 - 3*X2*X4*X5^2 + 3*X3*X4^2*X5 - X4^4"
    with pytest.raises(DomainError):
        scroll_F(M, 1, 4)
    with pytest.raises(DomainError):
        scroll_F(M, 2, 1)


@pytest.mark.parametrize("c", [2, 3, 4, 5])
def test_scroll_F_in_minor_ideal(c):
    M = scroll_block(c)
    J = ideal_J(M)
    for j in range(1, c):
        assert ideal_contains(J, scroll_F(M, 1, j))


def test_generalized_J_specialises_to_simple():
    # a big block with one small block gives the same J as the simple constructor
    simple = BarredMatrix.simple([[0, 1, 2], [2, 3]])
    general = BarredMatrix.from_lists([[[0, 1, 2]], [[2, 3]]])
    assert ideal_J(simple).gens == ideal_J(general).gens


def test_random_matrices_are_valid_and_count():
    rng = random.Random(3)
    for _ in range(50):
        M = random_simple_matrix(rng)
        assert validate(M).verdict is True
        S = stci_system(M)
        assert len(S) == sum(M.widths) - 1
        assert len(corner_sums(M)) == M.r - 1
        J = ideal_J(M)
        for G in corner_sums(M):
            assert ideal_contains(J, G)


def test_sv_partition_layers():
    M = fixtures.load_matrix("ex1")
    layers = sv_partition(M)
    assert [[str(p) for p in layer] for layer in layers] == [
        ["X1*X11"], ["X1*X8", "X3*X11"], ["X1*X5", "X3*X8", "X5*X11"]]
    with pytest.raises(DomainError):
        sv_partition(scroll_block(2))


def test_json_round_trip(tmp_path):
    for name in fixtures.MATRICES:
        M = fixtures.load_matrix(name)
        path = tmp_path / f"{name}.json"
        M.dump(path)
        M2 = BarredMatrix.load(path)
        assert M2 == M
        assert ideal_J(M2).gens == ideal_J(M).gens


def test_parse_errors_name_the_field():
    with pytest.raises(ParseError, match="big_blocks"):
        BarredMatrix.from_dict({"variables": ["a"], "big_blocks": [[["a", "zz"]]]})
    with pytest.raises(ParseError, match="missing field"):
        BarredMatrix.from_dict({"variables": ["a"]})
    with pytest.raises(ParseError, match="line"):
        BarredMatrix.from_json("{\n  oops")


def test_display():
    text = fixtures.load_matrix("ex4").display()
    assert "T1" in text and "||" in text
