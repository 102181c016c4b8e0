"""Groebner engine checked against sympy's implementation as an oracle."""

import os
import random

import pytest
import sympy

from mvfusion.groebner import ResourceBudgetExceeded, buchberger, default_budget, normal_form
from mvfusion.idealkit import Ideal
from mvfusion.polyring import DEGREVLEX, LEX, QQ, Ring, parse_polynomial


def _random_poly(ring, rng, nterms=3, maxdeg=3):
    p = ring.zero
    for _ in range(nterms):
        exps = [rng.randint(0, maxdeg) for _ in ring.names]
        while sum(exps) > maxdeg:
            exps[rng.randrange(len(exps))] -= 1
            exps = [max(e, 0) for e in exps]
        p = p + ring.monomial(exps, QQ(rng.randint(-4, 4) or 1, rng.randint(1, 3)))
    return p


def _to_sympy(p, syms):
    out = 0
    for exps, c in p.terms():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(syms, exps):
            term *= s ** e
        out += term
    return out


def _from_sympy(poly, ring):
    out = ring.zero
    for exps, c in poly.terms():
        out = out + ring.monomial(exps, QQ(int(c.p), int(c.q)))
    return out


@pytest.mark.parametrize("order,sym_order", [(LEX, "lex"), (DEGREVLEX, "grevlex")])
def test_matches_sympy_on_random_ideals(order, sym_order):
    rng = random.Random(7)
    ring = Ring(["x", "y", "z"])
    syms = sympy.symbols("x y z")
    for _ in range(15):
        polys = [_random_poly(ring, rng) for _ in range(rng.randint(2, 3))]
        polys = [p for p in polys if p]
        ours = Ideal(ring, polys).groebner(order)
        theirs = sympy.groebner([_to_sympy(p, syms) for p in polys], *syms, order=sym_order)
        expected = sorted((_from_sympy(sympy.Poly(g, *syms), ring).monic(order) for g in theirs.exprs),
                          key=str)
        assert sorted(ours, key=str) == expected


def test_textbook_basis():
    ring = Ring(["x", "y"])
    I = Ideal.parse(ring, ["x^2 + 2*x*y^2", "x*y + 2*y^3 - 1"])
    assert list(I.groebner(LEX)) == [ring.parse("x"), ring.parse("y^3 - 1/2")]


def test_spec_lex_example():
    ring = Ring(["x", "y"])
    gb = Ideal.parse(ring, ["x^2 - y^2", "x - y", "2*y^2 - 1"]).groebner(LEX)
    assert set(gb) == {ring.parse("x - y"), ring.parse("y^2 - 1/2")}


def test_unit_and_zero_ideals():
    ring = Ring(["x", "y"])
    assert Ideal.parse(ring, ["x", "x + 1"]).groebner() == (ring.one,)
    assert Ideal(ring, []).groebner() == ()


def test_normal_form_reduces_fully():
    ring = Ring(["x", "y"])
    gb = Ideal.parse(ring, ["x^2 - y", "y^2 - 1"]).groebner()
    r = normal_form(ring.parse("x^5 + y^3"), gb, DEGREVLEX)
    assert r == ring.parse("x + y")


def test_budget(monkeypatch):
    ring = Ring(["x", "y", "z"])
    polys = [parse_polynomial(t, ring) for t in ["x^2*y - z^2", "x*y^2 - x", "y*z^2 - x*y"]]
    with pytest.raises(ResourceBudgetExceeded):
        buchberger(polys, DEGREVLEX, ring, budget=1)
    monkeypatch.setenv("MVFUSION_BUDGET", "17")
    assert default_budget() == 17
    monkeypatch.delenv("MVFUSION_BUDGET")
    assert default_budget() > 1000
