import random

import numpy as np
import pytest
import sympy
from sklearn.utils.validation import check_is_fitted

from stci.errors import CapExceeded, BudgetExceeded
from stci.groebner import (GroebnerBasis, IdealGens, audit_basis, buchberger, certify_radical_equal, divide,
                           ideal_contains, ideal_power_contained, min_power_in_ideal, radical_contains,
                           radical_equal)
from stci.polyring import LEX, PolyRing


def ideal(names, texts, field="q", order="degrevlex", label=""):
    return IdealGens.parse(PolyRing.make(names, field, order), texts, label)


def sympy_basis(I: IdealGens, order: str):
    syms = sympy.symbols(I.ring.names)
    exprs = [sympy.sympify(str(g).replace("^", "**"), dict(zip(I.ring.names, syms))) for g in I.gens]
    kw = {"modulus": I.ring.field.p} if I.ring.field.p else {}
    G = sympy.groebner(exprs, *syms, order=order, **kw)
    return {str(sympy.Poly(g, *syms).monic().as_expr()) for g in G.exprs}


def ours_as_sympy(G: GroebnerBasis):
    syms = sympy.symbols(G.ring_.names)
    loc = dict(zip(G.ring_.names, syms))
    out = set()
    for g in G.basis:
        e = sympy.sympify(str(g).replace("^", "**"), loc)
        if G.ring_.field.p:
            e = sympy.Poly(e, *syms, modulus=G.ring_.field.p).as_expr()
        out.add(str(sympy.Poly(e, *syms).monic().as_expr()))
    return out


CASES = [
    (["x", "y"], ["x^2 + y", "x*y - 1"]),
    (["x", "y", "z"], ["x*z - y^2", "x^3 - z^2"]),
    (["x", "y", "z"], ["x^2 + y^2 + z^2 - 1", "x - y", "y*z - 2"]),
    (["a", "b", "c", "d"], ["a*d - b*c", "a*c - b^2", "b*d - c^2"]),
]


@pytest.mark.parametrize("names,texts", CASES)
@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_matches_sympy(names, texts, order):
    I = ideal(names, texts, order="degrevlex" if order == "grevlex" else "lex")
    G = GroebnerBasis().fit(I)
    assert ours_as_sympy(G) == sympy_basis(I, order)
    audit = audit_basis(G)
    assert audit["groebner"] and audit["reduced"] and audit["monic"]


@pytest.mark.parametrize("names,texts", CASES)
def test_matches_sympy_mod_p(names, texts):
    I = ideal(names, texts, field="gf:32003")
    assert ours_as_sympy(GroebnerBasis().fit(I)) == sympy_basis(I, "grevlex")


def test_twisted_cubic_basis():
    I = ideal(["x", "y", "z", "w"], ["x*z - y^2", "y*w - z^2", "x*w - y*z"])
    G = buchberger(I)
    assert len(G) == 3
    assert sorted(map(str, G.display_basis())) == ["y*z - x*w", "y^2 - x*z", "z^2 - y*w"]


def test_unit_ideal():
    G = buchberger(ideal(["x", "y"], ["x*y - 1", "x"]))
    assert G.is_unit() and [str(g) for g in G.basis] == ["1"]


def test_estimator_api():
    I = ideal(["x", "y"], ["x^2 - y", "x*y - 1"])
    est = GroebnerBasis(order="lex", max_spairs=50)
    assert est.get_params()["order"] == "lex"
    with pytest.raises(Exception):
        check_is_fitted(est)
    est.fit(I)
    check_is_fitted(est)
    assert est.monomial_order == LEX
    R = est.ring_
    preds = est.predict([R.parse("x^3 - 1"), R.parse("x + y")])
    assert isinstance(preds, np.ndarray) and preds.tolist() == [True, False]
    assert est.transform([R.parse("x^2")])[0] == est.normal_form(R.parse("y"))
    assert est.stats_["spairs"] >= 1


def test_membership_soundness_random_combinations():
    rng = random.Random(7)
    I = ideal(["x", "y", "z"], ["x*y - z^2", "y^3 - x*z", "x^2 - y*z + 1"])
    R = I.ring
    G = buchberger(I)
    mons = ["x", "y", "z", "x*y", "z^2", "1", "y*z"]
    for _ in range(25):
        f = R.zero()
        for g in I.gens:
            coeff = R.parse(" + ".join(f"{rng.randint(-3, 3)}*{m}" for m in rng.sample(mons, 3)))
            f = f + coeff * g
        assert G.contains(f)
        # perturbing by a monomial outside the basis' initial ideal breaks membership
        nf = G.normal_form(f + R.parse("x"))
        assert not nf.is_zero()


def test_division_remainder_agrees_with_normal_form():
    I = ideal(["x", "y", "z"], ["x*z - y^2", "x^3 - z^2"])
    G = buchberger(I)
    f = I.ring.parse("x^4*y + z^3 - x*y*z")
    q, r = divide(f, G.basis)
    assert r == G.normal_form(f)
    assert sum((qi * gi for qi, gi in zip(q, G.basis)), I.ring.zero()) + r == f


def test_order_independence_of_membership():
    I = ideal(["x", "y", "z"], ["x*z - y^2", "x^3 - z^2"])
    f = I.ring.parse("(x*z - y^2)*(x + z) - y*(x^3 - z^2)")
    assert ideal_contains(I, f)
    assert ideal_contains(I, f, order="lex")
    assert not ideal_contains(I, I.ring.parse("x*y"), order="lex")


def test_radical_membership():
    I = ideal(["x", "y"], ["x^3", "y^2"])
    assert radical_contains(I, I.ring.parse("x + y"))
    assert not radical_contains(I, I.ring.parse("x + 1"))
    assert min_power_in_ideal(I.ring.parse("x + y"), I, 10) == 4
    assert min_power_in_ideal(I.ring.parse("x"), I, 2) is None


def test_radical_equal_reports_witness():
    R = PolyRing.make(["x", "y"])
    A = IdealGens.parse(R, ["x*y"], "A")
    B = IdealGens.parse(R, ["x^2*y", "x*y^3"], "B")
    rep = radical_equal(A, B)
    assert rep.verdict is True
    C = IdealGens.parse(R, ["x"], "C")
    rep = radical_equal(A, C, method="rabinowitsch")
    assert rep.verdict is False
    assert rep.details["witness"]
    assert any(row["result"] is False for row in rep.per_generator)


def test_certify_records_precheck():
    R = PolyRing.make(["x", "y"])
    A = IdealGens.parse(R, ["x*y", "x^2"])
    B = IdealGens.parse(R, ["x"])
    rep = certify_radical_equal(A, B)
    assert rep.verdict is True
    assert rep.details["certified_by"] == "QQ"
    assert rep.details["precheck"]["field"] == "GF(32003)"


def test_caps_raise():
    I = ideal(["x", "y", "z"], ["x^5 + y^4 + z^3 - 1", "x^3 + y^3 + z^2 - 1", "x*y*z - 2"])
    with pytest.raises(CapExceeded) as exc:
        GroebnerBasis(max_spairs=2).fit(I)
    assert exc.value.stats["spairs"] >= 2
    with pytest.raises(CapExceeded):
        GroebnerBasis(max_degree=4).fit(I)
    K = IdealGens(I.ring, (I.gens[0] * I.gens[1], I.gens[2]), "K")
    rep = radical_equal(I, K, max_spairs=1, method="rabinowitsch")
    assert rep.verdict is None


def test_power_containment_budget():
    J = ideal(["x", "y"], ["x", "y"])
    I = ideal(["x", "y"], ["x^2", "x*y", "y^2"])
    assert ideal_power_contained(J, I, 2).verdict is True
    assert ideal_power_contained(J, I, 1).verdict is False
    with pytest.raises(BudgetExceeded) as exc:
        ideal_power_contained(J, I, 2, product_cap=2)
    assert exc.value.required == 3


def test_empty_ideal():
    R = PolyRing.make(["x"])
    E = IdealGens(R, (), "E")
    G = buchberger(E)
    assert len(G) == 0 and not G.contains(R.parse("x"))
    assert radical_equal(E, E).verdict is True
