import json

import pytest

from mvfusion.fusion import (
    FusionResult,
    RankBound,
    TheoryViolation,
    column_count,
    family_ideal,
    flatness_degrees,
    fuse,
    fuse_data,
    generic_jordan_type,
    govar,
    govar_ideal,
    make_problem,
    numeric_rank,
    random_point,
    rank_bounds,
    rank_ideal,
    zero_fiber,
)
from mvfusion.idealkit import Ideal, dimension, saturate
from mvfusion.slice import build_U, submatrix
from mvfusion.tableaux import Tableau, gt_pattern


def T(text, m):
    return Tableau.parse(text, m)


def test_rank_bounds():
    assert column_count((2, 1), 1) == 2 and column_count((2, 1), 2) == 3
    assert rank_bounds(3, "0", (2, 1)) == [RankBound(3, "0", 1, 1), RankBound(3, "0", 2, 0)]
    assert rank_bounds(3, "s", ()) == []
    with pytest.raises(ValueError):
        rank_bounds(2, "0", (2, 1))


def test_rank_ideal_example_one_minor():
    U = build_U((0, 1, 0), (1, 0, 1))
    R = U.ring
    gens = rank_ideal(U.matrix, "s", (1, 1))
    assert any(g == R.parse("A[1,2,1]*A[2,3,1] + s*A[1,3,1]") or
               g == -R.parse("A[1,2,1]*A[2,3,1] + s*A[1,3,1]") for g in gens)


def test_nilpotent_cube_vanishes():
    U = build_U((1, 1, 1), (0, 0, 0), nilpotent=True)
    assert rank_ideal(U.matrix, "0", (3,)) == []


def test_govar_ideals():
    I = govar_ideal(T("13/2/4", 4))
    R = I.ring
    assert I == Ideal.parse(R, ["A[1,2,1]", "A[3,4,1]", "A[1,3,1]*A[2,4,1] - A[2,3,1]*A[1,4,1]"])
    res = govar(T("13/2/4", 4))
    assert res.dimension == 3 and dimension(res.ideal) == 3
    assert not res.unverified
    P = govar_ideal(T("1123/23", 3))
    assert P == Ideal.parse(P.ring, ["A[1,2,1]", "A[2,3,1]"])


def test_generic_jordan_type_recovers_gt_pattern():
    tau = T("1123/23", 3)
    P = govar_ideal(tau)
    U = build_U(tau.weight, (0, 0, 0), nilpotent=True)
    bounds = (4, 6)
    for i, lam_i in enumerate(gt_pattern(tau)[1:], start=2):
        A = submatrix(U, bounds[i - 2])
        assert generic_jordan_type(P, A) == tuple(x for x in lam_i if x)


def test_random_point_lies_on_variety():
    P = govar_ideal(T("13/2/4", 4))
    pt = random_point(P, seed=5)
    assert pt is not None
    assert all(g.evaluate(pt) == 0 for g in P.gens)
    assert numeric_rank([[1, 2], [2, 4]]) == 1


def test_fuse_section_6_1():
    r = fuse(T("22", 3), T("11/33", 3))
    assert r.products() == {"33": 1, "22/33": 1, "23/3": 2}
    assert r.summary() == "33:1  22/33:1  23/3:2"
    assert r.degree_sum() == r.degree_J == 4
    assert flatness_degrees(r) == (4, 4)


def test_fuse_example_one_and_json():
    r = fuse(T("2", 4), T("1/3", 4))
    assert r.products() == {"3": 1, "2/3": 1}
    d = json.loads(r.to_json())
    assert d == r.to_dict()
    assert d["input"] == ["2", "1/3"] and d["mode"] == "paper"
    assert [c["multiplicity"] for c in d["components"]] == [1, 1]
    assert r.to_json() == fuse(T("2", 4), T("1/3", 4)).to_json()


def test_unit_law():
    for text in ["22", "2/3", "13/2/4"]:
        r = fuse(T(text, 4), T("-", 4))
        assert list(r.products().values()) == [1]
    assert fuse(T("-", 3), T("-", 3)).products() == {"-": 1}


def test_modes_agree_on_small_case():
    a = fuse(T("2", 4), T("1/3", 4), mode="paper")
    b = fuse(T("2", 4), T("1/3", 4), mode="strict")
    assert a.products() == b.products()
    assert a.F == b.F
    with pytest.raises(ValueError):
        fuse(T("2", 4), T("1/3", 4), mode="other")


def test_family_and_zero_fiber():
    problem = make_problem(T("2", 4), T("1/3", 4))
    I0, F = family_ideal(problem)
    s = F.ring.gen("s")
    assert saturate(I0, s) <= F
    J = zero_fiber(F)
    assert J == F + s


def test_fuse_data_uses_sigma():
    r = fuse_data((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), 4)
    assert isinstance(r, FusionResult)
    assert r.problem.given == (T("12", 4), T("13/2", 4))


def test_theory_violation_carries_diagnostics():
    exc = TheoryViolation("boom", ["a", "b"])
    assert exc.diagnostics == ["a", "b"] and str(exc) == "boom"


@pytest.mark.parametrize("t1,t2,m", [("22", "11/33", 3), ("2", "1/3", 4), ("11/23/4", "2/3", 4)])
def test_pivoted_and_literal_rank_conditions_agree(t1, t2, m):
    from mvfusion.fusion import prefix_conditions
    from mvfusion.slice import BlockLayout

    problem = make_problem(T(t1, m), T(t2, m))
    I0, _ = family_ideal(problem)
    U = build_U(problem.mu1, problem.mu2)
    lay = BlockLayout(problem.mu)
    literal = []
    for shapes, e in ((gt_pattern(problem.t1), "0"), (gt_pattern(problem.t2), "s")):
        for i, _bounds in prefix_conditions(problem.mu, shapes, e):
            A = submatrix(U, lay.bounds[i - 1])
            literal += rank_ideal(A, e, shapes[i - 1])
    s = U.ring.gen("s")
    assert saturate(Ideal(U.ring, literal), s) == saturate(I0, s)


@pytest.mark.parametrize("t1,t2", [("11/23/4", "2/3"), ("2", "1/3"), ("11/23/34", "2/4")])
def test_generic_witness_matches_exact_minor_saturation(t1, t2):
    """Saturating by a random combination of minors equals saturating by the
    whole ideal of minors."""
    from mvfusion.fusion import _rect_minors, _shifted_power, prefix_conditions
    from mvfusion.slice import BlockLayout

    problem = make_problem(T(t1, 4), T(t2, 4))
    I0, F = family_ideal(problem)
    U = build_U(problem.mu1, problem.mu2)
    lay = BlockLayout(problem.mu)
    G = saturate(I0, U.ring.gen("s"))
    for shapes, e in ((gt_pattern(problem.t1), "0"), (gt_pattern(problem.t2), "s")):
        for i, bounds in prefix_conditions(problem.mu, shapes, e):
            A = submatrix(U, lay.bounds[i - 1])
            for b in bounds:
                if b.rank <= 0:
                    continue
                M = _shifted_power(A, e, b.power)
                H = Ideal(U.ring, [g for g in _rect_minors(M.rows, U.ring, b.rank) if g])
                if H.is_unit():
                    continue
                assert not G.contains(H)
                G = saturate(G, H)
    assert G == F
