"""Tubular mutations on (rank, degree), slope words, and tube invariants.

The two elementary matrices generate a free semigroup action on positive
slopes with single generator 1; decomposing a slope into a word in that
action produces the change-of-tube matrix from slope infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .k0 import K0Class, euler_pairing
from .shift import mat_mul

R_MATRIX = ((1, 1), (0, 1))
S_MATRIX = ((1, 0), (1, 1))
_LETTER = {"R": R_MATRIX, "S": S_MATRIX}


def rs_matrices():
    return R_MATRIX, S_MATRIX


def _slope_R(q: Fraction) -> Fraction:
    return q / (q + 1)


def _slope_S(q: Fraction) -> Fraction:
    return q + 1


@dataclass(frozen=True)
class MutationWord:
    """Word in the letters R, S; rendered left-to-right outermost-first, so
    the rightmost letter acts first."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if any(ch not in "RS" for ch in self.letters):
            raise ValueError("letters must be R or S")

    def __str__(self) -> str:
        return "".join(self.letters)

    def matrix(self):
        out = ((1, 0), (0, 1))
        for ch in self.letters:
            out = mat_mul(out, _LETTER[ch])
        return out

    def apply_to_slope(self, q: Fraction) -> Fraction:
        for ch in reversed(self.letters):
            q = _slope_R(q) if ch == "R" else _slope_S(q)
        return q


def word_for_slope(q) -> MutationWord:
    """The unique word sending slope 1 to q > 0, by the reverse Euclidean
    walk: strip an outer S while q > 1 and an outer R while q < 1."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("slope must be positive")
    letters = []
    while q != 1:
        if q > 1:
            letters.append("S")
            q -= 1
        else:
            letters.append("R")
            q = q / (1 - q)
    return MutationWord(tuple(letters))


# Inverse of S, used to reach nonpositive slopes.
S_INVERSE = ((1, 0), (-1, 1))


def phi_from_infinity(q):
    """Unimodular matrix carrying the slope-infinity tube to slope q.

    For q > 0 this is the word matrix composed with the R-step from
    infinity; for q <= 0 compose with the minimal number of inverse
    S-steps.
    """
    q = Fraction(q)
    if q > 0:
        return mat_mul(word_for_slope(q).matrix(), R_MATRIX)
    m = 1
    while q + m <= 0:
        m += 1
    out = phi_from_infinity(q + m)
    for _ in range(m):
        out = mat_mul(S_INVERSE, out)
    return out


@dataclass(frozen=True)
class TubeInfo:
    g: int
    rank_one_exists: bool
    rank_one_length: int | None
    rank_two_length: int
    finitely_many: bool
    count_if_finite: int | None
    has_exceptional: bool


def tube_invariants(p: tuple[int, int]) -> TubeInfo:
    """Lengths and counts of indecomposables of type (r, d), from gcd parity."""
    r, d = p
    if (r, d) == (0, 0):
        raise ValueError("zero class")
    g = gcd(abs(r), abs(d))
    even = g % 2 == 0
    return TubeInfo(
        g=g,
        rank_one_exists=even,
        rank_one_length=g // 2 if even else None,
        rank_two_length=g,
        finitely_many=not even,
        count_if_finite=8 if not even else None,
        has_exceptional=g == 1,
    )


def mutate_pair_left(e: K0Class, f: K0Class) -> tuple[K0Class, K0Class]:
    """K0-level left mutation (E, F) -> (L_E F, E)."""
    return f - euler_pairing(e, f) * e, e


def mutate_pair_right(e: K0Class, f: K0Class) -> tuple[K0Class, K0Class]:
    """K0-level right mutation (E, F) -> (F, R_F E)."""
    return f, e - euler_pairing(e, f) * f
