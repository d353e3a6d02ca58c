"""Vogel parameter catalog and the universal dimension formula.

A simple Lie algebra (or basic classical superalgebra) corresponds to a
projective triple (alpha, beta, gamma), defined modulo permutation and a
common nonzero multiplier.  This module holds the tabulated triples in the
minimal normalization (highest root of squared length 2, so t = alpha +
beta + gamma is the dual Coxeter number), a canonical representative for
projective/permutation equality, and the dimension formula

    dim = (alpha - 2t)(beta - 2t)(gamma - 2t) / (alpha*beta*gamma).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exactalg import ScalarLike

CLASSICAL_FAMILIES = ("A", "B", "C", "D")
EXCEPTIONAL_FAMILIES = ("G2", "F4", "E6", "E7", "E8")
SUPER_FAMILIES = ("SL", "OSP")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class AlgebraId:
    """Identifier of a catalog entry.

    Classical families carry a rank, exceptional ones are rank-free labels,
    and the super families carry the (m, n) / (p, q) size pair.  Sizes that
    make the tabulated point degenerate (zero t or zero superdimension) are
    rejected here, so an AlgebraId always has a usable catalog row.
    """

    family: str
    rank: int | None = None
    m: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        fam = self.family
        if fam in CLASSICAL_FAMILIES:
            if self.rank is None or self.rank < _MIN_RANK[fam]:
                raise ValueError(
                    f"family {fam} needs rank >= {_MIN_RANK[fam]}, got {self.rank}")
            if self.m is not None or self.n is not None:
                raise ValueError("classical families take no (m, n) pair")
        elif fam in EXCEPTIONAL_FAMILIES:
            if self.rank is not None or self.m is not None or self.n is not None:
                raise ValueError(f"{fam} takes neither rank nor (m, n) pair")
        elif fam in SUPER_FAMILIES:
            if self.rank is not None:
                raise ValueError("super families take an (m, n) pair, not a rank")
            if self.m is None or self.n is None or self.m < 0 or self.n < 0:
                raise ValueError(f"{fam} needs a nonnegative (m, n) pair")
            d = self.m - self.n
            if fam == "SL" and d in (-1, 0, 1):
                raise ValueError(
                    f"SL({self.m},{self.n}) is excluded: m - n in {{-1, 0, 1}}")
            if fam == "OSP" and d in (0, 1, 2):
                raise ValueError(
                    f"OSP({self.m},{self.n}) is excluded: p - q in {{0, 1, 2}}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    @property
    def label(self) -> str:
        if self.family in CLASSICAL_FAMILIES:
            return f"{self.family}{self.rank}"
        if self.family in SUPER_FAMILIES:
            return f"{self.family}({self.m},{self.n})"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        s = text.strip().upper()
        if s in EXCEPTIONAL_FAMILIES:
            return cls(s)
        m = re.fullmatch(r"([ABCD])(\d+)", s)
        if m:
            return cls(m.group(1), rank=int(m.group(2)))
        m = re.fullmatch(r"(SL|OSP)\((\d+),(\d+)\)", s)
        if m:
            return cls(m.group(1), m=int(m.group(2)), n=int(m.group(3)))
        raise ValueError(f"cannot parse algebra label {text!r}")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class VogelPoint:
    """A point (alpha, beta, gamma) of the parameter plane."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha == self.beta == self.gamma == 0:
            raise ValueError("the zero triple is not a projective point")

    @property
    def params(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta + self.gamma

    def invariants(self) -> "SymmetricInvariants":
        a, b, c = self.params
        return SymmetricInvariants(
            t=a + b + c,
            t2=a * a + b * b + c * c,
            t3=a**3 + b**3 + c**3,
            s=a * b + b * c + a * c,
            p=a * b * c,
        )

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta},{self.gamma})"


@dataclass(frozen=True)
class SymmetricInvariants:
    """Power sums and elementary symmetric values of a parameter triple.

    Construction re-checks the Newton identities tying the two families
    together, which guards against building one from mismatched pieces.
    """

    t: Fraction
    t2: Fraction
    t3: Fraction
    s: Fraction
    p: Fraction

    def __post_init__(self) -> None:
        if self.t * self.t != self.t2 + 2 * self.s:
            raise ValueError("Newton identity t^2 = t2 + 2s violated")
        if self.t3 != self.t**3 - 3 * self.t * self.s + 3 * self.p:
            raise ValueError("Newton identity for t3 violated")


def vogel_point(a: ScalarLike, b: ScalarLike, c: ScalarLike) -> VogelPoint:
    return VogelPoint(Fraction(a), Fraction(b), Fraction(c))


def canonicalize(v: VogelPoint) -> VogelPoint:
    """Unique representative of the projective + permutation orbit.

    Denominators are cleared to a primitive integer triple, the overall sign
    is fixed so that t > 0 (for t = 0 the lexicographically larger sorted
    triple is taken), and the entries are sorted ascending.
    """
    den = lcm(*(x.denominator for x in v.params))
    ints = [int(x * den) for x in v.params]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    t = sum(ints)
    if t < 0:
        ints = [-x for x in ints]
    elif t == 0:
        ints = max(sorted(ints), sorted(-x for x in ints))
    a, b, c = sorted(ints)
    return VogelPoint(Fraction(a), Fraction(b), Fraction(c))


def equivalent(a: VogelPoint, b: VogelPoint) -> bool:
    """Whether two triples name the same point of the quotient plane."""
    return canonicalize(a) == canonicalize(b)


def dimension(v: VogelPoint) -> Fraction:
    """(Super)dimension of the algebra at v via the universal formula."""
    a, b, c = v.params
    if a * b * c == 0:
        raise ValueError(f"dimension formula has a pole at {v}: a zero parameter")
    t = v.t
    return (a - 2 * t) * (b - 2 * t) * (c - 2 * t) / (a * b * c)


def lookup(algebra: AlgebraId) -> VogelPoint:
    """Catalog row for an algebra, in the minimal normalization (t = h-dual)."""
    fam = algebra.family
    r = algebra.rank
    if fam == "A":
        return vogel_point(-2, 2, r + 1)
    if fam == "B":
        return vogel_point(-2, 4, 2 * r - 3)
    if fam == "C":
        return vogel_point(-2, 1, r + 2)
    if fam == "D":
        return vogel_point(-2, 4, 2 * r - 4)
    if fam == "G2":
        return vogel_point(-2, Fraction(10, 3), Fraction(8, 3))
    if fam == "F4":
        return vogel_point(-2, 5, 6)
    if fam == "E6":
        return vogel_point(-2, 6, 8)
    if fam == "E7":
        return vogel_point(-2, 8, 12)
    if fam == "E8":
        return vogel_point(-2, 12, 20)
    if fam == "SL":
        return vogel_point(-2, 2, algebra.m - algebra.n)
    if fam == "OSP":
        return vogel_point(-2, 4, algebra.m - algebra.n - 4)
    raise ValueError(f"unknown family {fam!r}")


# Family rows of the two catalog tables, for presentation.  Classical rows
# keep their rank symbolic; the dimension column comes from evaluating the
# universal formula on the row.
SIMPLE_TABLE_ROWS = (
    {"family": "A_n", "alpha": "-2", "beta": "2", "gamma": "n+1", "t": "n+1", "dim": "n(n+2)"},
    {"family": "B_n", "alpha": "-2", "beta": "4", "gamma": "2n-3", "t": "2n-1", "dim": "n(2n+1)"},
    {"family": "C_n", "alpha": "-2", "beta": "1", "gamma": "n+2", "t": "n+1", "dim": "n(2n+1)"},
    {"family": "D_n", "alpha": "-2", "beta": "4", "gamma": "2n-4", "t": "2n-2", "dim": "n(2n-1)"},
    {"family": "G2", "alpha": "-2", "beta": "10/3", "gamma": "8/3", "t": "4", "dim": "14"},
    {"family": "F4", "alpha": "-2", "beta": "5", "gamma": "6", "t": "9", "dim": "52"},
    {"family": "E6", "alpha": "-2", "beta": "6", "gamma": "8", "t": "12", "dim": "78"},
    {"family": "E7", "alpha": "-2", "beta": "8", "gamma": "12", "t": "18", "dim": "133"},
    {"family": "E8", "alpha": "-2", "beta": "12", "gamma": "20", "t": "30", "dim": "248"},
)

# f_4 and g_3 appear for completeness but are aliases of sl_3 and sl_2 as
# points of the parameter plane; D_{2,1,lambda} has t = 0 and is excluded
# from evaluation.
SUPER_TABLE_ROWS = (
    {"family": "sl_{m,n}", "alpha": "-2", "beta": "2", "gamma": "m-n", "t": "m-n",
     "note": "excluded when m-n in {-1,0,1}"},
    {"family": "osp_{p,q}", "alpha": "-2", "beta": "4", "gamma": "p-q-4", "t": "p-q-2",
     "note": "excluded when p-q in {0,1,2}"},
    {"family": "f_4", "alpha": "-2", "beta": "2", "gamma": "3", "t": "3",
     "note": "alias of sl_3"},
    {"family": "g_3", "alpha": "-2", "beta": "2", "gamma": "2", "t": "2",
     "note": "alias of sl_2"},
    {"family": "D_{2,1,lambda}", "alpha": "l1", "beta": "l2", "gamma": "l3", "t": "0",
     "note": "excluded: t = 0"},
)
