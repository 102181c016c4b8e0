import random

import pytest

from mvfusion.polyring import QQ, determinant
from mvfusion.slice import (
    BlockLayout,
    SliceError,
    build_T,
    build_U,
    char_matrix,
    companion,
    g_of_A,
    root_power_coeffs,
    submatrix,
    t_ring,
)

T32 = [
    ["0", "1", "0", "0", "0"],
    ["0", "0", "1", "0", "0"],
    ["A[1,1,1]", "A[1,1,2]", "A[1,1,3]", "A[1,2,1]", "A[1,2,2]"],
    ["0", "0", "0", "0", "1"],
    ["A[2,1,1]", "A[2,1,2]", "0", "A[2,2,1]", "A[2,2,2]"],
]

U_110_211 = [
    ["0", "1", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0"],
    ["0", "-s^2", "2*s", "A[1,2,1]", "A[1,2,2]", "A[1,3,1]"],
    ["0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "s", "A[2,3,1]"],
    ["0", "0", "0", "0", "0", "s"],
]


def test_layout():
    lay = BlockLayout((3, 2, 1))
    assert lay.N == 6 and lay.bounds == (3, 5, 6)
    assert lay.start(2) == 3 and lay.last_row(2) == 4


def test_T_display():
    A = build_T((3, 2))
    assert A.to_rows() == T32
    assert A.variant == "T_mu"
    assert build_T((1,)).to_rows() == [["A[1,1,1]"]]
    assert all(c.startswith("A[") for row in build_T((1, 1)).to_rows() for c in row)


def test_U_display():
    U = build_U((1, 1, 0), (2, 1, 1))
    assert U.to_rows() == U_110_211
    # sum over i < j of min(mu_i, mu_j), plus the parameter s
    assert len(U.variables()) == 2 + 1 + 1
    assert U.ring.ngens == 5


def test_U_example_one_diagonal():
    U = build_U((0, 1, 0), (1, 0, 1))
    rows = U.to_rows()
    assert [rows[i][i] for i in range(3)] == ["s", "0", "s"]


def test_companion():
    R = build_U((1,), (2,)).ring
    s = R.gen("s")
    M = companion(root_power_coeffs(R, 1, 2), R)
    assert [list(r) for r in M.rows] == [[0, 1, 0], [0, 0, 1], [0, -s * s, 2 * s]]
    assert [list(r) for r in companion([R.zero, R.one], R).rows] == [[R.zero]]
    assert [list(r) for r in companion([-s, R.one], R).rows] == [[s]]
    with pytest.raises(SliceError):
        companion([R.one, 2 * R.one], R)


def test_g_of_A_display():
    A = build_T((3, 2))
    G = g_of_A(A)
    R = G.ring
    expected = [
        ["t^3 - A[1,1,3]*t^2 - A[1,1,2]*t - A[1,1,1]", "-A[2,1,2]*t - A[2,1,1]"],
        ["-A[1,2,2]*t - A[1,2,1]", "t^2 - A[2,2,2]*t - A[2,2,1]"],
    ]
    assert [[G[i, j] for j in range(2)] for i in range(2)] == \
        [[R.parse(e) for e in row] for row in expected]


def test_g_of_A_at_origin_is_diagonal():
    A = build_T((3, 2, 2))
    G = g_of_A(A)
    t = G.ring.gen("t")
    zero = {v: 0 for v in A.ring.names}
    vals = [[G[i, j].subs(zero) for j in range(3)] for i in range(3)]
    assert vals == [[t ** 3, 0, 0], [0, t ** 2, 0], [0, 0, t ** 2]]


def test_det_g_equals_characteristic_polynomial():
    rng = random.Random(3)
    for mu in [(2, 1), (3, 2), (2, 2, 1)]:
        A = build_T(mu)
        R = t_ring(A.ring)
        dg, dc = determinant(g_of_A(A)), determinant(char_matrix(A))
        pt = {v: QQ(rng.randint(-5, 5), rng.randint(1, 3)) for v in A.ring.names}
        assert dg.subs(pt) == dc.subs(pt)
        assert dg.map_to(R) == dc.map_to(R)


def test_submatrix():
    U = build_U((1, 1, 0), (2, 1, 1))
    assert submatrix(U, 6) == U.matrix
    assert submatrix(U, 0).dim == 0
    assert submatrix(U, 3, require_invariant=True).dim == 3
    with pytest.raises(SliceError):
        submatrix(U, 4, require_invariant=True)


def test_bad_mu():
    with pytest.raises(SliceError):
        build_T((1, 2))
    with pytest.raises(SliceError):
        build_U((0, 1), (0, 1))
