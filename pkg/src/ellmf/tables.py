"""Closed-form cohomology tables, graded Betti tables and their
classification, rank/degree recovery and Hilbert-series data.

A cohomology table is the 4x2 array of section/obstruction dimensions of a
sheaf, its canonical twist and their degree-c twists; positionally it *is*
the Betti table of the presenting module, which is what betti_from_cohom
reads off.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .k0 import K0Class, chi, degree, rank, tensor_omega, twist_by_c
from .shift import Region, region


class NotReducedError(ValueError):
    """(r, d) outside the fundamental domain."""


class TableError(ValueError):
    """Malformed or unclassifiable table."""


@dataclass(frozen=True)
class CohomTable:
    """Rows: (h0 F, h0 Fw), (h0 F(c)w, h0 F(c)), (h1 Fw, h1 F),
    (h1 F(c), h1 F(c)w).  Both column sums agree."""

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != 4:
            raise TableError("need four rows")
        if any(v < 0 for row in rows for v in row):
            raise TableError("negative entry")
        if sum(r[0] for r in rows) != sum(r[1] for r in rows):
            raise TableError("column sums differ")

    def mirror(self) -> "CohomTable":
        """Swap columns: the table of the canonical twist."""
        return CohomTable(tuple((b, a) for a, b in self.rows))


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported (i, j) -> count with i in {0, 1}, representing the
    complete table modulo the period-(2, 4) repetition."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        items = []
        for (i, j), v in dict(self.entries).items():
            if v:
                if i not in (0, 1):
                    raise TableError("homological index must be 0 or 1")
                if v < 0:
                    raise TableError("negative Betti number")
                items.append(((int(i), int(j)), int(v)))
        items.sort()
        object.__setattr__(self, "entries", tuple(items))

    @classmethod
    def from_dict(cls, d) -> "BettiTable":
        return cls(tuple(d.items()))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def get(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def is_empty(self) -> bool:
        return not self.entries

    def is_balanced(self) -> bool:
        s0 = sum(v for (i, _), v in self.entries if i == 0)
        s1 = sum(v for (i, _), v in self.entries if i == 1)
        return s0 == s1

    def support(self) -> list[int]:
        return sorted({j for (_, j), _ in self.entries})

    def render_pairs(self) -> list[list[int]]:
        """The 4x2 pairing (b00 b12 / b01 b13 / b02 b14 / b03 b15)."""
        return [[self.get(0, j), self.get(1, j + 2)] for j in range(4)]

    def render_standard(self, j_min: int | None = None,
                        j_max: int | None = None) -> list[list[int]]:
        """Standard display: row j holds (b_{0,j}, b_{1,j+1})."""
        js = [j if i == 0 else j - 1 for (i, j), _ in self.entries] or [0]
        lo = min(js) if j_min is None else j_min
        hi = max(js) if j_max is None else j_max
        return [[self.get(0, j), self.get(1, j + 1)] for j in range(lo, hi + 1)]


def translate_betti(t: BettiTable, m: int) -> BettiTable:
    """Betti table of the internal shift by m: output(i, j) = input(i, j + m)."""
    return BettiTable.from_dict({(i, j - m): v for (i, j), v in t.entries})


def suspend_betti(t: BettiTable) -> BettiTable:
    """Betti table of the syzygy-type flip: output(0, j) = input(1, j) and
    output(1, j) = input(0, j - 4); squares to the internal shift by -4."""
    out: dict[tuple[int, int], int] = {}
    for (i, j), v in t.entries:
        if i == 1:
            out[(0, j)] = out.get((0, j), 0) + v
        else:
            out[(1, j + 4)] = out.get((1, j + 4), 0) + v
    return BettiTable.from_dict(out)


def betti_from_cohom(t: CohomTable) -> BettiTable:
    """Positional readout: row k of the table is (b_{0,k}, b_{1,k+2})."""
    d: dict[tuple[int, int], int] = {}
    for k, (left, right) in enumerate(t.rows):
        d[(0, k)] = left
        d[(1, k + 2)] = right
    return BettiTable.from_dict(d)


def cohom_rank_one(p: tuple[int, int]) -> CohomTable | None:
    """Table of the self-canonical indecomposables of type (r, d), which
    exist iff gcd(r, d) is even; None when the gcd is odd."""
    r, d = p
    reg = region(p)
    if reg is Region.OUTSIDE:
        raise NotReducedError(f"{p} is not in the fundamental domain")
    if gcd(abs(r), abs(d)) % 2 == 1:
        return None
    if reg is Region.R1:
        h = d // 2
        return CohomTable(((h, h), (h + r, h + r), (0, 0), (0, 0)))
    if reg is Region.R2:
        return CohomTable(((0, 0), (r, r), (0, 0), (0, 0)))
    h = -d // 2
    return CohomTable(((0, 0), (0, 0), (h, h), (h - r, h - r)))


def cohom_rank_two(p: tuple[int, int]) -> list[tuple[CohomTable, int, str]]:
    """All tables of indecomposables of type (r, d) not fixed by the
    canonical twist, with their multiplicities and a tube tag."""
    r, d = p
    reg = region(p)
    if reg is Region.OUTSIDE:
        raise NotReducedError(f"{p} is not in the fundamental domain")

    if reg is Region.R2:
        if r % 2 == 1:
            socle_o = CohomTable(((1, 0), (r - 1, r + 1), (1, 0), (0, 0)))
        else:
            socle_o = CohomTable(((1, 0), (r, r), (0, 1), (0, 0)))
        generic = CohomTable(((0, 0), (r, r), (0, 0), (0, 0)))
        return [(socle_o, 1, "socle-O"), (socle_o.mirror(), 1, "socle-omega"),
                (generic, 6, "generic")]

    def top_table(h0, h0w):
        if reg is Region.R1:
            return CohomTable(((h0, h0w), (h0w + r, h0 + r), (0, 0), (0, 0)))
        return CohomTable(((0, 0), (0, 0), (-h0, -h0w), (-h0w - r, -h0 - r)))

    if d % 2 == 1:
        plus = top_table((d + 1) // 2, (d - 1) // 2)
        return [(plus, 4, "chi+"), (plus.mirror(), 4, "chi-")]
    diag = top_table(d // 2, d // 2)
    if r % 2 == 1:
        plus = top_table(d // 2 + 1, d // 2 - 1)
        return [(plus, 1, "chi+"), (plus.mirror(), 1, "chi-"),
                (diag, 6, "generic")]
    return [(diag, 8, "generic")]


def cohom_via_euler(cl: K0Class) -> CohomTable:
    """Table of a root class from Euler characteristics alone, valid when the
    cohomology of one side vanishes for slope reasons (regions 1 and 3)."""
    p = (rank(cl), degree(cl))
    reg = region(p)
    if reg not in (Region.R1, Region.R3):
        raise NotReducedError(f"euler method inapplicable in region {reg.name}"
                              if reg is Region.R2 else
                              f"{p} is not in the fundamental domain")
    clw = tensor_omega(cl)
    clc = twist_by_c(cl)
    clcw = tensor_omega(clc)
    if reg is Region.R1:
        return CohomTable(((chi(cl), chi(clw)), (chi(clcw), chi(clc)),
                           (0, 0), (0, 0)))
    return CohomTable(((0, 0), (0, 0), (-chi(clw), -chi(cl)),
                       (-chi(clc), -chi(clcw))))


# --- Betti classification -------------------------------------------------

FIRST_KIND_ODD_A = "first-kind-odd-a"
FIRST_KIND_ODD_B = "first-kind-odd-b"
FIRST_KIND_EVEN_A = "first-kind-even-a"
FIRST_KIND_EVEN_B = "first-kind-even-b"
TYPE_I = "I"
TYPE_II = "II"
TYPE_III = "III"
TYPE_IV = "IV"
TYPE_V = "V"

GENERAL_TYPES = (TYPE_I, TYPE_II, TYPE_III, TYPE_IV, TYPE_V)
FIRST_KIND_TYPES = (FIRST_KIND_ODD_A, FIRST_KIND_ODD_B,
                    FIRST_KIND_EVEN_A, FIRST_KIND_EVEN_B)


@dataclass(frozen=True)
class BettiClass:
    kind: str
    params: tuple[int, ...]
    shift: int = 0

    def __str__(self) -> str:
        inner = ",".join(str(v) for v in self.params)
        return f"{self.kind}({inner})@{self.shift}"


def template_table(kind: str, params: tuple[int, ...]) -> BettiTable:
    """Unshifted catalog table for a classification kind."""
    if kind in GENERAL_TYPES:
        a, b = params
        if a < 0 or b < 0:
            raise TableError("parameters must be nonnegative")
        if kind == TYPE_I:
            if b == 0:
                raise TableError("type I requires b != 0")
            d = {(0, 0): a, (0, 1): b, (1, 2): a, (1, 3): b}
        elif kind == TYPE_II:
            d = {(0, 0): a + 1, (0, 1): b, (1, 2): a, (1, 3): b + 1}
        elif kind == TYPE_III:
            d = {(0, 0): a, (0, 1): b + 1, (1, 2): a + 1, (1, 3): b}
        elif kind == TYPE_IV:
            if (b - a) % 2 == 0:
                raise TableError("type IV requires b - a odd")
            d = {(0, 0): a + 2, (0, 1): b, (1, 2): a, (1, 3): b + 2}
        else:
            if (b - a) % 2 == 0:
                raise TableError("type V requires b - a odd")
            d = {(0, 0): a, (0, 1): b + 2, (1, 2): a + 2, (1, 3): b}
        return BettiTable.from_dict(d)
    (r,) = params
    if r <= 0:
        raise TableError("first-kind rank must be positive")
    if kind == FIRST_KIND_ODD_A:
        if r % 2 == 0:
            raise TableError("rank parity")
        d = {(0, 0): 1, (0, 1): r - 1, (0, 2): 1, (1, 3): r + 1}
    elif kind == FIRST_KIND_ODD_B:
        if r % 2 == 0:
            raise TableError("rank parity")
        d = {(0, 0): r + 1, (1, 1): 1, (1, 2): r - 1, (1, 3): 1}
    elif kind == FIRST_KIND_EVEN_A:
        if r % 2 == 1:
            raise TableError("rank parity")
        d = {(0, 0): 1, (0, 1): r, (1, 3): r, (1, 4): 1}
    elif kind == FIRST_KIND_EVEN_B:
        if r % 2 == 1:
            raise TableError("rank parity")
        # Suspension of the even-A shape; forced by rank/degree recovery.
        d = {(0, 0): r, (0, 1): 1, (1, 1): 1, (1, 2): r}
    else:
        raise TableError(f"unknown kind {kind!r}")
    return BettiTable.from_dict(d)


def _match_at(e: dict[tuple[int, int], int]):
    """Try every template against an already-shifted entry dict."""
    matches = []

    def attempt(kind, params):
        try:
            if template_table(kind, params).as_dict() == e:
                matches.append((kind, params))
        except TableError:
            pass

    attempt(TYPE_I, (e.get((0, 0), 0), e.get((0, 1), 0)))
    attempt(TYPE_II, (e.get((1, 2), 0), e.get((0, 1), 0)))
    attempt(TYPE_III, (e.get((0, 0), 0), e.get((1, 3), 0)))
    attempt(TYPE_IV, (e.get((1, 2), 0), e.get((0, 1), 0)))
    attempt(TYPE_V, (e.get((0, 0), 0), e.get((1, 3), 0)))
    attempt(FIRST_KIND_ODD_A, (e.get((1, 3), 0) - 1,))
    attempt(FIRST_KIND_ODD_B, (e.get((0, 0), 0) - 1,))
    attempt(FIRST_KIND_EVEN_A, (e.get((0, 1), 0),))
    attempt(FIRST_KIND_EVEN_B, (e.get((0, 0), 0),))
    return matches


def normalize_and_classify(t: BettiTable) -> BettiClass:
    """Shift-search over the support window and match against the nine
    catalog shapes; exactly one template may match."""
    if t.is_empty():
        raise TableError("empty table")
    if not t.is_balanced():
        raise TableError("column sums differ")
    js = t.support()
    matches = []
    for m in range(min(js) - 4, max(js) + 5):
        shifted = translate_betti(t, m).as_dict()
        for kind, params in _match_at(shifted):
            matches.append(BettiClass(kind, params, m))
    if not matches:
        raise TableError("not an indecomposable table")
    if len(matches) > 1:
        raise AssertionError(f"ambiguous classification: {matches}")
    return matches[0]


def _alternating_column_sums(t: BettiTable) -> list[int]:
    s = [0, 0, 0, 0]
    for (i, j), v in t.entries:
        s[j % 4] += v if i == 0 else -v
    return s


def rd_from_betti(t: BettiTable) -> tuple[int, int]:
    """Rank and degree from the alternating Betti sums, unfolded over one
    period of the complete resolution."""
    if not t.is_balanced():
        raise TableError("column sums differ")
    s = _alternating_column_sums(t)
    d = s[0] - s[2]
    twice_r = (s[1] + s[2]) - (s[0] + s[3])
    if twice_r % 2 != 0:
        raise TableError("inconsistent table: odd rank numerator")
    return twice_r // 2, d


@dataclass(frozen=True)
class IndecCount:
    """Finite(k) or a one-parameter family of a given level."""

    finite: int | None
    level: int | None = None
    base: str | None = None        # "full-line" | "line-minus-infinity"


def indec_count(c: BettiClass) -> IndecCount:
    """How many indecomposables share the table of a classification."""
    if c.kind in FIRST_KIND_TYPES:
        return IndecCount(finite=1)
    if c.kind in (TYPE_II, TYPE_III):
        return IndecCount(finite=4)
    if c.kind in (TYPE_IV, TYPE_V):
        return IndecCount(finite=1)
    a, b = c.params
    r, d = b - a, 2 * a
    if r % 2 == 1:
        return IndecCount(finite=6)
    if d != 0:
        return IndecCount(finite=None, level=gcd(abs(r), d) // 2,
                          base="full-line")
    return IndecCount(finite=None, level=r // 2, base="line-minus-infinity")


def hilbert(t: BettiTable):
    """(numerator Laurent polynomial, multiplicity, generator count, Ulrich?).

    The Hilbert series is numerator/(1 - t); the numerator is the
    alternating generator polynomial divided by one factor of (1 - t).
    """
    if not t.is_balanced():
        raise TableError("column sums differ")
    n: dict[int, int] = {}
    for (i, j), v in t.entries:
        n[j] = n.get(j, 0) + (v if i == 0 else -v)
    n = {j: v for j, v in n.items() if v}
    if not n:
        raise TableError("not an MCM table: zero numerator")
    if sum(n.values()) != 0:
        raise TableError("not an MCM table: (1 - t) does not divide")
    p: dict[int, int] = {}
    acc = 0
    for j in range(min(n), max(n) + 1):
        acc += n.get(j, 0)
        if acc:
            p[j] = acc
    e = sum(p.values())
    mu = sum(v for (i, _), v in t.entries if i == 0)
    if e <= 0:
        raise TableError("not an MCM table: nonpositive multiplicity")
    return p, e, mu, e == mu


def catalog(a_max: int, b_max: int, r_max: int):
    """Deterministic sweep of all catalog classes within parameter bounds."""
    out = []
    for kind in GENERAL_TYPES:
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                try:
                    table = template_table(kind, (a, b))
                except TableError:
                    continue
                out.append((BettiClass(kind, (a, b)), table))
    for kind in FIRST_KIND_TYPES:
        for r in range(1, r_max + 1):
            try:
                table = template_table(kind, (r,))
            except TableError:
                continue
            out.append((BettiClass(kind, (r,)), table))
    return out
