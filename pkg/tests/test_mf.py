import random
from fractions import Fraction

import pytest

from ellmf.mf import (
    BRANCH_POINTS, GradedMatrix, MatrixFactorization, PointP1, betti_of_mf,
    constants, lemma63_invariants, mf_cone, mf_kst, mf_linear,
    mf_Mp_reduced, phi_psi_maps, reduce_mf, verify_mf,
)
from ellmf.poly import BivariatePoly, X, Y, exact_div
from ellmf.qlambda import LAMBDA, ONE, Scalar
from ellmf.tables import rd_from_betti


def sample_points(count, seed=71):
    rng = random.Random(seed)
    pts = list(BRANCH_POINTS)
    while len(pts) < count:
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
        pts.append(PointP1(Scalar.of(a), ONE))
    return pts


def test_constants_identities():
    f, lin, fx, fy = constants()
    assert lin[0] * lin[1] * lin[2] * lin[3] == f
    assert X * fx + Y * fy == f
    exact_div(fy, X)        # X | f_y
    exact_div(fx, Y)        # Y | f_x
    assert f.is_homogeneous_of(4)


def test_mf_linear():
    for i in (1, 2, 3, 4):
        m = mf_linear(i)
        assert verify_mf(m).ok
        assert betti_of_mf(m).as_dict() == {(0, 0): 1, (1, 1): 1}
    f, lin, _, _ = constants()
    q = mf_linear(1).B.entry(0, 0)
    assert q == exact_div(f, lin[0])
    with pytest.raises(ValueError):
        mf_linear(5)


def test_mf_kst():
    m = mf_kst()
    assert verify_mf(m).ok
    assert m.A.entry(1, 0).is_homogeneous_of(3)
    assert betti_of_mf(m).as_dict() == {(0, 0): 1, (0, -2): 1, (1, 1): 2}
    r, d = rd_from_betti(betti_of_mf(m))
    assert d == 0


def test_phi_psi_chain_maps():
    base = mf_kst()
    for phi, psi in (phi_psi_maps()[:2], phi_psi_maps()[2:]):
        lhs = base.A.twist(2).compose(psi)
        rhs = phi.compose(base.B.twist(1))
        for i in range(2):
            for j in range(2):
                assert (lhs.entry(i, j) + rhs.entry(i, j)).is_zero()
        lhs = base.B.twist(2).compose(phi.twist(4))
        rhs = psi.compose(base.A.twist(5))
        for i in range(2):
            for j in range(2):
                assert (lhs.entry(i, j) + rhs.entry(i, j)).is_zero()


def test_cone_verifies_symbolically():
    for p in sample_points(6):
        m = mf_cone(p)
        assert verify_mf(m).ok
        assert sorted(m.A.col_twists) == [2, 2, 3, 3]
        assert sorted(m.A.row_twists) == [-1, 0, 1, 2]


def test_reduced_form():
    p = PointP1(Scalar.of(0), ONE)
    m = mf_Mp_reduced(p)
    assert verify_mf(m).ok
    assert m.A.entry(0, 0) == X
    assert m.A.entry(0, 1) == Y * Y
    p = PointP1(ONE, Scalar.of(0))
    m = mf_Mp_reduced(p)
    assert m.A.entry(0, 0) == Y
    assert m.A.entry(0, 1) == X * X
    assert verify_mf(m).ok
    assert betti_of_mf(m).as_dict() == {(0, 0): 1, (0, 1): 1,
                                        (1, 2): 1, (1, 3): 1}


def test_point_canonical_form():
    p = PointP1(Scalar.of(2), Scalar.of(4))
    assert p.p0 == Scalar.of(Fraction(1, 2)) and p.p1 == ONE
    with pytest.raises(ValueError):
        PointP1(Scalar.of(0), Scalar.of(0))


def test_verify_catches_defects():
    m = mf_kst()
    a = [list(row) for row in m.A.entries]
    a[1][0] = -a[1][0]
    bad = MatrixFactorization(
        GradedMatrix(tuple(tuple(r) for r in a), m.A.row_twists,
                     m.A.col_twists), m.B, m.f)
    cert = verify_mf(bad)
    assert not cert.ok
    assert any(w in ("A*B", "B*A") for w, _, _, _ in cert.failures)


def test_verify_catches_twist_and_homogeneity():
    m = mf_linear(1)
    bad = MatrixFactorization(m.A, GradedMatrix(m.B.entries, (1,), (5,)),
                              m.f)
    assert not verify_mf(bad).ok
    bad = MatrixFactorization(
        GradedMatrix(((X + X * X,),), (0,), (1,)), m.B, m.f)
    cert = verify_mf(bad)
    assert any(w == "A-homogeneity" for w, _, _, _ in cert.failures)


def test_reduce_cone_matches_reduced():
    for p in sample_points(20):
        red = reduce_mf(mf_cone(p))
        assert verify_mf(red).ok
        assert sorted(red.A.row_twists) == [0, 1]
        assert sorted(red.A.col_twists) == [2, 3]
        assert betti_of_mf(red) == betti_of_mf(mf_Mp_reduced(p))


def test_reduce_symbolic_point():
    p = PointP1(LAMBDA, ONE)
    red = reduce_mf(mf_cone(p))
    assert verify_mf(red).ok
    assert betti_of_mf(red) == betti_of_mf(mf_Mp_reduced(p))


def test_reduce_is_identity_on_minimal():
    m = mf_Mp_reduced(PointP1(ONE, ONE))
    red = reduce_mf(m)
    assert red.A.entries == m.A.entries and red.B.entries == m.B.entries


def test_reduce_strips_trivial_summand():
    f, lin, _, _ = constants()
    one = BivariatePoly.monomial(0, 0)
    z = BivariatePoly.zero()
    base = mf_linear(1)
    a = GradedMatrix(((base.A.entry(0, 0), z), (z, one)), (0, 0), (1, 0))
    b = GradedMatrix(((base.B.entry(0, 0), z), (z, f)), (1, 0), (4, 4))
    m = MatrixFactorization(a, b, f)
    assert verify_mf(m).ok
    red = reduce_mf(m)
    assert red.A.entries == base.A.entries
    assert red.A.row_twists == (0,) and red.A.col_twists == (1,)


def test_betti_requires_minimal():
    with pytest.raises(ValueError):
        betti_of_mf(mf_cone(PointP1(ONE, ONE)))


def test_reduce_rejects_broken_input():
    m = mf_kst()
    bad = MatrixFactorization(m.A, m.A.twist(1), m.f)
    with pytest.raises(ValueError):
        reduce_mf(bad)


def test_specialization_commutes():
    lam = Fraction(2)
    for build in (mf_kst, lambda: mf_linear(3),
                  lambda: mf_cone(PointP1(ONE, ONE)),
                  lambda: mf_Mp_reduced(PointP1(Scalar.of(3), ONE))):
        m = build()
        spec = m.specialize(lam)
        assert verify_mf(spec).ok
        assert spec.f == m.f.specialize(lam)


def test_lemma63_all_branches():
    for i in (1, 2, 3, 4):
        rep = lemma63_invariants(i)
        assert rep.mp_rd == (0, 2)
        assert rep.sub_rd == (0, 1)
        assert rep.quot_rd == (0, 1)
        assert rep.additive
