"""Tests for the genus-2 representation: basis, couplings, the golden
matrices, relations, traces, and the infinite-image certificates."""
import math
from fractions import Fraction

import pytest

from tljhecke.exactnum import CycNumber, LaurentFraction
from tljhecke.matrix import ExactMatrix, char_poly
from tljhecke.recoupling import (
    TheoryParams,
    color_set,
    delta_at,
    theta_at,
    verlinde_dim,
)
from tljhecke.rep_genus2 import (
    INFINITE_ORDER_QUARTIC,
    coupling_a,
    coupling_a_at,
    coupling_a_bar,
    coupling_a_bar_at,
    enumerate_basis,
    genus2_rep,
    infinite_image_certificate,
    j_unitary,
    jtilde,
    minpoly_certificate,
    t_genus2,
    trace_galois_sweep,
    trace_jtjt,
    trace_params,
    verify_genus2_relations,
    _jtjt_matrix,
)


def sqrt5_in(N: int, e: int) -> CycNumber:
    z = CycNumber.zeta(N, e)
    return 1 + 2 * (z + z.conj())


# --------------------------------------------------------------------------
# basis enumeration

def test_basis_r3():
    b = enumerate_basis(3)
    assert b.triples == ((0, 0, 0), (0, 2, 2), (2, 0, 2), (2, 2, 0), (2, 2, 2))


def test_basis_r2_order():
    b = enumerate_basis(2)
    assert len(b) == 10
    assert b.triples[:3] == ((0, 0, 0), (0, 1, 1), (0, 2, 2))


def test_basis_r1():
    assert enumerate_basis(1).triples == ((0, 0, 0),)


def test_basis_sizes_match_verlinde():
    for r in range(1, 13):
        assert len(enumerate_basis(r)) == verlinde_dim(r, 2), r


def test_basis_strictly_increasing():
    for r in (2, 3, 4, 5, 6):
        t = enumerate_basis(r).triples
        assert list(t) == sorted(t)


# --------------------------------------------------------------------------
# coupling coefficients

def test_coupling_identity():
    P = TheoryParams(2)
    assert coupling_a(P, 0, 0, 0) == LaurentFraction.one()
    assert coupling_a_at(P, 0, 0, 0) == CycNumber.one(P.root_order)


def test_coupling_zero_strand_pattern():
    # i = 0: only l = 0 survives
    for r in (2, 3, 4):
        P = TheoryParams(r)
        for j in color_set(r):
            for l in color_set(r):
                v = coupling_a_at(P, 0, j, l)
                if l != 0:
                    assert v.is_zero(), (r, j, l)
                else:
                    assert not v.is_zero(), (r, j)


def test_coupling_bar_is_involution():
    for r in (2, 3, 4):
        P = TheoryParams(r)
        cs = color_set(r)
        for i in cs:
            for j in cs:
                for l in cs:
                    a = coupling_a(P, i, j, l)
                    assert coupling_a_bar(P, i, j, l).bar() == a


def test_coupling_bar_is_conjugate_at_unitary_root():
    P = TheoryParams(3)
    for (i, j, l) in ((2, 2, 0), (2, 2, 2), (0, 2, 0)):
        assert coupling_a_bar_at(P, i, j, l) == coupling_a_at(P, i, j, l).conj()


def test_coupling_generic_specializes_to_fast_path():
    from tljhecke.exactnum import specialize
    P = TheoryParams(3)
    for (i, j, l) in ((2, 2, 0), (2, 2, 2)):
        gen = specialize(coupling_a(P, i, j, l), P.root_order, P.root_exponent)
        assert gen == coupling_a_at(P, i, j, l)


# --------------------------------------------------------------------------
# J~ structure

def test_jtilde_first_row_is_theta():
    for r in (2, 3, 4):
        P = TheoryParams(r)
        jt = jtilde(P)
        basis = enumerate_basis(r)
        for m, tri in enumerate(basis.triples):
            assert jt[0, m] == theta_at(P, *tri), (r, tri)


def test_jtilde_symmetric():
    for r in (2, 3, 4, 5, 6):
        jt = jtilde(TheoryParams(r))
        assert jt == jt.transpose(), r


def test_jtilde_real_at_unitary_root():
    for r in (2, 3, 4, 5):
        jt = jtilde(TheoryParams(r))
        assert jt == jt.conj(), r


# --------------------------------------------------------------------------
# golden matrices

def golden_j2(N=16):
    z = CycNumber.zeta(N)
    s = (z ** 2 + z ** -2) / 4      # sqrt(2)/4
    q = CycNumber.from_rational(N, Fraction(1, 4))
    h = CycNumber.from_rational(N, Fraction(1, 2))
    o = CycNumber.zero(N)
    return [
        [q, s, q, s, s, s, s, q, s, q],
        [s, h, s, o, o, o, o, -s, -h, -s],
        [q, s, q, -s, -s, -s, -s, q, s, q],
        [s, o, -s, o, h, -h, o, -s, o, s],
        [s, o, -s, h, o, o, -h, s, o, -s],
        [s, o, -s, -h, o, o, h, s, o, -s],
        [s, o, -s, o, -h, h, o, -s, o, s],
        [q, -s, q, -s, s, s, -s, q, -s, q],
        [s, -h, s, o, o, o, o, -s, h, -s],
        [q, -s, q, s, -s, -s, s, q, -s, q],
    ]


def test_golden_j2_exact():
    rep = genus2_rep(TheoryParams(2))
    assert rep.positive
    exact = rep.junitary.to_exact()
    assert exact is not None, "all r=2 entries lie in Q(zeta_16)"
    golden = golden_j2()
    for i in range(10):
        for j in range(10):
            assert exact[i, j] == golden[i][j], (i, j)


def test_golden_t2_exact():
    rep = genus2_rep(TheoryParams(2))
    e78 = CycNumber.zeta(16, 7)    # e^(7 pi i/8)
    e34 = CycNumber.zeta(16, 6)    # e^(3 pi i/4)
    one = CycNumber.one(16)
    golden = [one, e78, -one, e78, -e34, -e34, -e78, -one, -e78, one]
    for i in range(10):
        assert rep.tdiag[i, i] == golden[i], i


def test_golden_j3_exact():
    rep = genus2_rep(TheoryParams(3))
    s5 = sqrt5_in(10, 2)
    a = (5 - s5) / 10
    b = s5 / 5
    c = (5 + s5) / 10
    d = (5 - s5) / 5
    sq_p = (10 * (1 + s5)) / 100    # square of sqrt(10(1+sqrt5))/10
    sq_m = (10 * (s5 - 1)) / 100    # square of sqrt(10(sqrt5-1))/10
    golden_sq = [
        [a * a, b * b, b * b, b * b, sq_p],
        [b * b, c * c, a * a, a * a, sq_m],
        [b * b, a * a, a * a, c * c, sq_m],
        [b * b, a * a, c * c, a * a, sq_m],
        [sq_p, sq_m, sq_m, sq_m, d * d],
    ]
    golden_sign = [
        [1, 1, 1, 1, 1],
        [1, 1, -1, -1, -1],
        [1, -1, -1, 1, -1],
        [1, -1, 1, -1, -1],
        [1, -1, -1, -1, 1],
    ]
    U = rep.junitary
    for i in range(5):
        for j in range(5):
            assert U.squares[i, j] == golden_sq[i][j], ("square", i, j)
            assert U.signs[i][j] == golden_sign[i][j], ("sign", i, j)


def test_golden_j3_corner_entries_leave_the_field():
    # sqrt(10(sqrt5 - 1))/10 is not in Q(zeta_10): entry stays a (square, sign) pair
    rep = genus2_rep(TheoryParams(3))
    assert rep.junitary.entry_exact(0, 0) is not None
    assert rep.junitary.entry_exact(1, 4) is None


def test_golden_t3_exact():
    rep = genus2_rep(TheoryParams(3))
    e45 = CycNumber.zeta(10, 4)     # e^(4 pi i/5)
    em25 = CycNumber.zeta(10, 8)    # e^(-2 pi i/5)
    one = CycNumber.one(10)
    golden = [one, e45, e45, em25, em25]
    for i in range(5):
        assert rep.tdiag[i, i] == golden[i], i


def test_t_genus2_identity_triple():
    for r in range(1, 8):
        assert t_genus2(TheoryParams(r))[0, 0] == 1


def test_first_row_law():
    # J_(000),mu = sqrt(prod Delta_mu)/D^2; squares checked exactly
    for r in range(2, 9):
        P = TheoryParams(r)
        rep = genus2_rep(P)
        d4_inv = (rep.constants.d_squared ** 2).inverse()
        for m, (i, j, k) in enumerate(rep.basis.triples):
            dprod = delta_at(P, i) * delta_at(P, j) * delta_at(P, k)
            assert rep.junitary.squares[0, m] == dprod * d4_inv, (r, m)


def test_first_row_entry_sqrt5_over_5():
    # r=3, mu=(0,2,2): entry is sqrt5/5
    rep = genus2_rep(TheoryParams(3))
    v = rep.junitary.entry_exact(0, 1)
    assert v is not None
    assert v * v * 25 == 5
    assert v.real_sign() > 0


# --------------------------------------------------------------------------
# relations

@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_relations_small_levels(r):
    rpt = verify_genus2_relations(TheoryParams(r))
    assert rpt.all_pass, f"r={r}\n{rpt}"


def test_relations_fail_with_minus_twist_exponent():
    # the i(i-2) variant breaks the defining relations: the golden matrices
    # pin i(i+2)
    rpt = verify_genus2_relations(TheoryParams(2, twist_exponent="minus"))
    assert not rpt.all_pass


def test_galois_equivariance_of_genus2_matrices():
    r = 3
    P = TheoryParams(r)
    m = 7
    assert math.gcd(m, P.root_order) == 1
    Pm = P.with_root(m * P.root_exponent)
    assert jtilde(Pm) == jtilde(P).galois(m)
    assert t_genus2(Pm) == t_genus2(P).galois(m)
    rpt = verify_genus2_relations(Pm)
    assert rpt.all_pass


def test_j_unitary_falls_back_when_not_positive():
    # at a Galois-conjugate root the loop values are not all positive and
    # the non-normalized matrix is produced
    P = TheoryParams(3)
    Pm = P.with_root(7 * P.root_exponent % P.root_order)
    rep = genus2_rep(Pm)
    assert not rep.positive
    assert rep.junitary is None
    assert isinstance(j_unitary(Pm), ExactMatrix)
    assert isinstance(j_unitary(P).squares, ExactMatrix)


# --------------------------------------------------------------------------
# traces

def test_trace_r3_value():
    # (3 + sqrt5 - 1) + ... = 4.2361 at the k=1 root; the double-sum and the
    # matrix trace agree inside trace_jtjt
    v = trace_jtjt(trace_params(3))
    z = v.embed()
    assert abs(z.imag) < 1e-12
    assert abs(z.real - 4.2361) < 5e-4


def test_trace_is_real_at_trace_root():
    for r in (3, 5, 7):
        v = trace_jtjt(trace_params(r))
        assert v.is_real(), r


def test_trace_r7_exceeds_dimension():
    v = trace_jtjt(trace_params(7))
    assert v.embed().real > verlinde_dim(7, 2)


def test_trace_params_rejects_even_levels():
    with pytest.raises(ValueError):
        trace_params(4)


# --------------------------------------------------------------------------
# infinite-image certificates

def test_quartic_certificate_r3():
    P = TheoryParams(3)
    fires, details = minpoly_certificate(P)
    assert fires, details
    M = _jtjt_matrix(P)
    cp = char_poly(M)
    # the quartic's Q(zeta_10)-factor has degree 2 and the quartic divides
    # the Galois norm of the characteristic polynomial
    from tljhecke.matrix import CycPoly, rational_poly_divides
    G = cp.gcd(CycPoly.from_int_poly(P.root_order, INFINITE_ORDER_QUARTIC))
    assert G.degree == 2
    assert rational_poly_divides(INFINITE_ORDER_QUARTIC, cp.galois_norm())


def test_certificate_eigenvalue_satisfies_quartic():
    # lambda = (3 - sqrt5 + i sqrt(2(1+3 sqrt5)))/4 is a root of the quartic
    # and lies on the unit circle without being a root of unity
    s5 = math.sqrt(5)
    lam = complex(3 - s5, math.sqrt(2 * (1 + 3 * s5))) / 4
    q = INFINITE_ORDER_QUARTIC
    val = sum(c * lam ** e for e, c in enumerate(q.coeffs))
    assert abs(val) < 1e-12
    assert abs(abs(lam) - 1) < 1e-12


def test_infinite_image_r3():
    rep = infinite_image_certificate(TheoryParams(3))
    assert rep.verdict == "infinite"
    assert rep.minpoly_fires


def test_infinite_image_r7_via_trace():
    rep = infinite_image_certificate(TheoryParams(7))
    assert rep.verdict == "infinite"
    assert rep.trace_fires


def test_infinite_image_r2_inconclusive():
    rep = infinite_image_certificate(TheoryParams(2))
    assert rep.verdict == "inconclusive"
    assert not rep.minpoly_fires and not rep.trace_fires


def test_r2_generators_have_finite_projective_order():
    """Supporting oracle for the inconclusive verdict: the tested elements
    have finite projective order at r=2 (full group enumeration is far out
    of desk scale, > 3*10^5 elements without closure)."""
    P = TheoryParams(2)
    M = _jtjt_matrix(P)
    X = M @ M
    X = X @ X
    X = X @ M          # M^5
    c = X.scalar_multiple_of_identity()
    assert c is not None and c == CycNumber.one(P.root_order)
    rep = genus2_rep(P)
    TJ = rep.tdiag @ rep.j_field
    Y = TJ @ TJ
    Y = Y @ Y
    Y = Y @ TJ         # (TJ)^5
    assert Y.scalar_multiple_of_identity() is not None


def test_trace_galois_sweep_r3():
    sweep = trace_galois_sweep(3)
    ks = [k for k, _ in sweep]
    assert ks == [1, 3, 7, 9]
    vals = {k: z for k, z in sweep}
    assert abs(vals[1].real - 4.2361) < 1e-3
