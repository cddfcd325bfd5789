"""Independent oracles used by the test-suite.

These recompute expected values by routes that share nothing with the library
paths under test (adjugate identities, Kalman rank tests, brute-force spans).
"""

from fbinv.linalg import RatMatrix
from fbinv.poly import UniPoly, uni_mat_adjugate, uni_mat_det, uni_mat_mul
from fbinv.polymatrix import maximal_minors, poly_gcd_list
from fbinv.realization import MFD, StateSpace, to_hom_ar


def char_matrix(ss: StateSpace) -> list[list[UniPoly]]:
    """sI - A as a grid of univariate polynomials."""
    s = UniPoly.s_power(1)
    return [
        [
            (s if i == j else UniPoly.zero()) - UniPoly.constant(ss.A.entries[i][j])
            for j in range(ss.n)
        ]
        for i in range(ss.n)
    ]


def cleared_denominator_identity_holds(ss: StateSpace, mfd: MFD) -> bool:
    """Check D (C adj(sI-A) B + chi_A D) = N chi_A entry by entry."""
    si_a = char_matrix(ss)
    chi = uni_mat_det(si_a)
    adj = uni_mat_adjugate(si_a)
    c_grid = [[UniPoly.constant(x) for x in row] for row in ss.C.entries]
    b_grid = [[UniPoly.constant(x) for x in row] for row in ss.B.entries]
    if ss.n:
        cab = uni_mat_mul(uni_mat_mul(c_grid, adj), b_grid)
    else:
        cab = [[UniPoly.zero() for _ in range(ss.m)] for _ in range(ss.p)]
    rhs_inner = [
        [cab[i][j] + chi * UniPoly.constant(ss.D.entries[i][j]) for j in range(ss.m)]
        for i in range(ss.p)
    ]
    lhs = uni_mat_mul([list(r) for r in mfd.Dmat], rhs_inner)
    for i in range(ss.p):
        for j in range(ss.m):
            if not (lhs[i][j] - mfd.Nmat[i][j] * chi).is_zero():
                return False
    return True


def mfd_is_left_coprime(mfd: MFD) -> bool:
    ar = to_hom_ar(mfd)
    return poly_gcd_list(maximal_minors(ar.P, ar.p)).degree == 0


def kalman_controllable(A: RatMatrix, B: RatMatrix) -> bool:
    n = A.rows
    if n == 0:
        return True
    blocks = B
    power = B
    for _ in range(n - 1):
        power = A @ power
        blocks = blocks.hstack(power)
    return blocks.rank() == n
