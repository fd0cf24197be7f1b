"""Graded matrix factorizations of the quartic X·Y·(X-Y)·(X-lambda·Y):
constructors, symbolic verification, reduction to minimal form and Betti
readout.  All arithmetic is exact over the lambda function field, so a
passing verification holds for every admissible parameter value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import BivariatePoly, X, Y, exact_div
from .qlambda import LAMBDA, ONE, Scalar
from .tables import BettiTable


def constants():
    """(f, (l1..l4), f_x, f_y) with f = X f_x + Y f_y and the four ordered
    linear factors."""
    l1, l2 = X, Y
    l3 = X - Y
    l4 = X - Y.scale(LAMBDA)
    f = l1 * l2 * l3 * l4
    quarter = Scalar.of(Fraction(1, 4))
    fx = BivariatePoly.from_dict({
        (2, 1): quarter * 3, (1, 2): quarter * (-2) * (ONE + LAMBDA),
        (0, 3): quarter * LAMBDA})
    fy = BivariatePoly.from_dict({
        (3, 0): quarter, (2, 1): quarter * (-2) * (ONE + LAMBDA),
        (1, 2): quarter * 3 * LAMBDA})
    return f, (l1, l2, l3, l4), fx, fy


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix over the bivariate ring with twist data: row i is the summand
    S(-u_i) of the target, column j the summand S(-v_j) of the source, so a
    nonzero entry (i, j) must be homogeneous of degree v_j - u_i."""

    entries: tuple[tuple[BivariatePoly, ...], ...]
    row_twists: tuple[int, ...]
    col_twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           tuple(tuple(row) for row in self.entries))
        object.__setattr__(self, "row_twists", tuple(self.row_twists))
        object.__setattr__(self, "col_twists", tuple(self.col_twists))
        if len(self.entries) != len(self.row_twists):
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != len(self.col_twists):
                raise ValueError("column count mismatch")

    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    def entry(self, i: int, j: int) -> BivariatePoly:
        return self.entries[i][j]

    def homogeneity_defects(self):
        """Cells whose entry is not homogeneous of the forced degree."""
        bad = []
        for i, u in enumerate(self.row_twists):
            for j, v in enumerate(self.col_twists):
                e = self.entries[i][j]
                if not e.is_zero() and not e.is_homogeneous_of(v - u):
                    bad.append((i, j))
        return bad

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.col_twists != other.row_twists:
            raise ValueError("twist mismatch in composition")
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = BivariatePoly.zero()
                for k in range(self.ncols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return GradedMatrix(tuple(rows), self.row_twists, other.col_twists)

    def twist(self, m: int) -> "GradedMatrix":
        """Tensor with S(-m): shifts both twist vectors by m."""
        return GradedMatrix(self.entries,
                            tuple(u + m for u in self.row_twists),
                            tuple(v + m for v in self.col_twists))

    def neg(self) -> "GradedMatrix":
        return GradedMatrix(tuple(tuple(-e for e in row)
                                  for row in self.entries),
                            self.row_twists, self.col_twists)

    def specialize(self, value) -> "GradedMatrix":
        return GradedMatrix(tuple(tuple(e.specialize(value) for e in row)
                                  for row in self.entries),
                            self.row_twists, self.col_twists)


def block_lower(top_left: GradedMatrix, bottom_left: GradedMatrix,
                bottom_right: GradedMatrix) -> GradedMatrix:
    """[[TL, 0], [BL, BR]] with the twist vectors concatenated."""
    if bottom_left.row_twists != bottom_right.row_twists:
        raise ValueError("bottom row twists disagree")
    if bottom_left.col_twists != top_left.col_twists:
        raise ValueError("left column twists disagree")
    z = BivariatePoly.zero()
    rows = [row + (z,) * bottom_right.ncols for row in top_left.entries]
    rows += [bl + br for bl, br in zip(bottom_left.entries,
                                       bottom_right.entries)]
    return GradedMatrix(tuple(rows),
                        top_left.row_twists + bottom_right.row_twists,
                        top_left.col_twists + bottom_right.col_twists)


@dataclass(frozen=True)
class MatrixFactorization:
    A: GradedMatrix
    B: GradedMatrix
    f: BivariatePoly

    def specialize(self, value) -> "MatrixFactorization":
        return MatrixFactorization(self.A.specialize(value),
                                   self.B.specialize(value),
                                   self.f.specialize(value))


@dataclass(frozen=True)
class PointP1:
    """Projective point [p0 : p1], stored in canonical form: p1 = 1, or
    (p0, p1) = (1, 0)."""

    p0: Scalar
    p1: Scalar

    def __post_init__(self):
        p0, p1 = Scalar.of(self.p0), Scalar.of(self.p1)
        if not p0 and not p1:
            raise ValueError("(0, 0) is not a projective point")
        if p1:
            p0, p1 = p0 / p1, ONE
        else:
            p0 = ONE
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)


@dataclass(frozen=True)
class Certificate:
    """Outcome of verify_mf; failures are (label, i, j, defect)."""

    ok: bool
    failures: tuple


def verify_mf(m: MatrixFactorization) -> Certificate:
    """Check both product identities, twist bookkeeping and homogeneity;
    collects every defect instead of raising."""
    fails = []
    A, B, f = m.A, m.B, m.f
    if A.col_twists != B.row_twists:
        fails.append(("twists", -1, -1, "A col twists != B row twists"))
    if B.col_twists != tuple(u + 4 for u in A.row_twists):
        fails.append(("twists", -1, -1,
                      "B col twists != A row twists + deg f"))
    for label, g in (("A", A), ("B", B)):
        for i, j in g.homogeneity_defects():
            fails.append((f"{label}-homogeneity", i, j, g.entry(i, j)))
    if not fails:
        # For B*A the source copy of the factorization is twisted one
        # period down, hence the shift by deg f.
        for label, prod in (("A*B", A.compose(B)),
                            ("B*A", B.compose(A.twist(4)))):
            for i in range(prod.nrows):
                for j in range(prod.ncols):
                    want = f if i == j else BivariatePoly.zero()
                    defect = prod.entry(i, j) - want
                    if not defect.is_zero():
                        fails.append((label, i, j, defect))
    return Certificate(not fails, tuple(fails))


def mf_linear(i: int) -> MatrixFactorization:
    """The 1x1 factorization (l_i, f/l_i) presenting the module cut out by
    the i-th linear factor."""
    f, lin, _, _ = constants()
    if i not in (1, 2, 3, 4):
        raise ValueError("index must be 1..4")
    li = lin[i - 1]
    A = GradedMatrix(((li,),), (0,), (1,))
    B = GradedMatrix(((exact_div(f, li),),), (1,), (4,))
    return MatrixFactorization(A, B, f)


def mf_kst() -> MatrixFactorization:
    """Factorization presenting the stable residue field, built from the
    quarter-derivatives via f = X f_x + Y f_y."""
    f, _, fx, fy = constants()
    A = GradedMatrix(((X, Y), (-fy, fx)), (0, -2), (1, 1))
    B = GradedMatrix(((fx, -Y), (fy, X)), (1, 1), (4, 2))
    return MatrixFactorization(A, B, f)


def phi_psi_maps():
    """The chain maps (phi0, psi0) and (phiinf, psiinf) from the suspension
    of the residue-field factorization to its twist, whose cones realize the
    degree-two skyscrapers."""
    _, _, fx, fy = constants()
    z = BivariatePoly.zero()
    one = BivariatePoly.monomial(0, 0)
    fy_over_x = exact_div(fy, X)
    fx_over_y = exact_div(fx, Y)
    phi0 = GradedMatrix(((z, one), (z, -fy_over_x)), (2, 0), (2, 2))
    psi0 = GradedMatrix(((-fy_over_x, -one), (z, z)), (3, 3), (5, 3))
    phiinf = GradedMatrix(((one, z), (fx_over_y, z)), (2, 0), (2, 2))
    psiinf = GradedMatrix(((z, z), (-fx_over_y, one)), (3, 3), (5, 3))
    return phi0, psi0, phiinf, psiinf


def _phi_psi_at(p: PointP1):
    phi0, psi0, phiinf, psiinf = phi_psi_maps()

    def comb(m0, minf):
        rows = tuple(tuple(a.scale(p.p1) + b.scale(p.p0)
                           for a, b in zip(r0, rinf))
                     for r0, rinf in zip(m0.entries, minf.entries))
        return GradedMatrix(rows, m0.row_twists, m0.col_twists)

    return comb(phi0, phiinf), comb(psi0, psiinf)


def mf_cone(p: PointP1) -> MatrixFactorization:
    """4x4 cone factorization over the point p, gluing the suspended
    residue-field factorization to its twist along phi_p."""
    base = mf_kst()
    f = base.f
    phi_p, psi_p = _phi_psi_at(p)
    src_a = base.A.twist(1)
    src_b = base.B.twist(1)
    tgt_a = base.A.twist(2)
    tgt_b = base.B.twist(2)
    c1 = block_lower(src_a, phi_p.neg(), tgt_a)
    c2 = block_lower(src_b, psi_p.neg(), tgt_b)
    return MatrixFactorization(c1, c2, f)


def mf_Mp_reduced(p: PointP1) -> MatrixFactorization:
    """Minimal 2x2 factorization of the degree-two skyscraper at p."""
    f, _, _, _ = constants()
    f_over_x = exact_div(f, X)
    f_over_y = exact_div(f, Y)
    if p.p1:
        ratio = p.p0 / p.p1
        f_over_xy = exact_div(f_over_x, Y)
        a00 = X - Y.scale(ratio)
        a01 = BivariatePoly.monomial(0, 2, ONE / p.p1)
        a10 = f_over_xy.scale(-p.p0)
        A = GradedMatrix(((a00, a01), (a10, f_over_x)), (1, 0), (2, 3))
        B = GradedMatrix(((f_over_x, -a01), (-a10, a00)),
                         (2, 3), (5, 4))
    else:
        xsq = BivariatePoly.monomial(2, 0)
        A = GradedMatrix(((Y, xsq), (BivariatePoly.zero(), f_over_y)),
                         (1, 0), (2, 3))
        B = GradedMatrix(((f_over_y, -xsq), (BivariatePoly.zero(), Y)),
                         (2, 3), (5, 4))
    return MatrixFactorization(A, B, f)


# --- reduction to minimal form -------------------------------------------

def _as_lists(g: GradedMatrix):
    return [list(row) for row in g.entries]


def _find_scalar(entries):
    for i, row in enumerate(entries):
        for j, e in enumerate(row):
            if e.is_scalar():
                return i, j
    return None


def _eliminate(m_ent, n_ent, i, j):
    """Clear row i / column j of M around the scalar pivot M[i][j],
    mirroring each elementary operation inversely on N so that both
    products M*N and N*M are preserved; then drop the pivot pair."""
    pivot = m_ent[i][j]
    inv = pivot.as_dict()[(0, 0)].inverse()
    ncols = len(m_ent[0])
    nrows = len(m_ent)
    for r in range(nrows):
        if r == i or m_ent[r][j].is_zero():
            continue
        coef = m_ent[r][j].scale(inv)
        m_ent[r] = [a - coef * b for a, b in zip(m_ent[r], m_ent[i])]
        for s in range(len(n_ent)):
            n_ent[s][i] = n_ent[s][i] + coef * n_ent[s][r]
    for t in range(ncols):
        if t == j or m_ent[i][t].is_zero():
            continue
        coef = m_ent[i][t].scale(inv)
        for r in range(nrows):
            m_ent[r][t] = m_ent[r][t] - coef * m_ent[r][j]
        n_ent[j] = [a + coef * b for a, b in zip(n_ent[j], n_ent[t])]
    del m_ent[i]
    for row in m_ent:
        del row[j]
    del n_ent[j]
    for row in n_ent:
        del row[i]


def reduce_mf(m: MatrixFactorization) -> MatrixFactorization:
    """Strip unit pivots until no scalar entries remain; the result is the
    minimal factorization in the same stable class."""
    cert = verify_mf(m)
    if not cert.ok:
        raise ValueError(f"input fails verification: {cert.failures[0]}")
    a_ent, b_ent = _as_lists(m.A), _as_lists(m.B)
    au, av = list(m.A.row_twists), list(m.A.col_twists)
    while True:
        hit = _find_scalar(a_ent)
        if hit is not None:
            i, j = hit
            _eliminate(a_ent, b_ent, i, j)
            del au[i], av[j]
            continue
        hit = _find_scalar(b_ent)
        if hit is not None:
            i, j = hit
            _eliminate(b_ent, a_ent, i, j)
            del av[i], au[j]
            continue
        break
    A = GradedMatrix(tuple(tuple(r) for r in a_ent), tuple(au), tuple(av))
    B = GradedMatrix(tuple(tuple(r) for r in b_ent), tuple(av),
                     tuple(u + 4 for u in au))
    return MatrixFactorization(A, B, m.f)


def is_minimal(m: MatrixFactorization) -> bool:
    return (_find_scalar(_as_lists(m.A)) is None
            and _find_scalar(_as_lists(m.B)) is None)


def betti_of_mf(m: MatrixFactorization) -> BettiTable:
    """Betti numbers of the presented module, read off the twist vectors of
    a minimal factorization."""
    if not is_minimal(m):
        raise ValueError("reduce first: factorization has unit entries")
    d: dict[tuple[int, int], int] = {}
    for u in m.A.row_twists:
        d[(0, u)] = d.get((0, u), 0) + 1
    for v in m.A.col_twists:
        d[(1, v)] = d.get((1, v), 0) + 1
    return BettiTable.from_dict(d)


BRANCH_POINTS = (PointP1(Scalar.of(0), ONE), PointP1(ONE, Scalar.of(0)),
                 PointP1(ONE, ONE), PointP1(LAMBDA, ONE))


@dataclass(frozen=True)
class BranchReport:
    index: int
    mp_rd: tuple[int, int]
    sub_rd: tuple[int, int]
    quot_rd: tuple[int, int]
    additive: bool


def lemma63_invariants(i: int) -> BranchReport:
    """(rank, degree) bookkeeping for the degree-two skyscraper at the i-th
    branch point against its two length-one pieces."""
    from .tables import rd_from_betti
    if i not in (1, 2, 3, 4):
        raise ValueError("index must be 1..4")
    f, lin, _, _ = constants()
    mp = betti_of_mf(mf_Mp_reduced(BRANCH_POINTS[i - 1]))
    li = lin[i - 1]
    sub = betti_of_mf(MatrixFactorization(
        GradedMatrix(((li,),), (1,), (2,)),
        GradedMatrix(((exact_div(f, li),),), (2,), (5,)), f))
    quot = betti_of_mf(MatrixFactorization(
        GradedMatrix(((exact_div(f, li),),), (0,), (3,)),
        GradedMatrix(((li,),), (3,), (4,)), f))
    mp_rd = rd_from_betti(mp)
    sub_rd = rd_from_betti(sub)
    quot_rd = rd_from_betti(quot)
    additive = (mp_rd[0] == sub_rd[0] + quot_rd[0]
                and mp_rd[1] == sub_rd[1] + quot_rd[1])
    return BranchReport(i, mp_rd, sub_rd, quot_rd, additive)
