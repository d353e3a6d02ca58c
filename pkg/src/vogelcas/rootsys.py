"""Explicit root systems for the nine simple types, in exact coordinates.

Realizations follow the standard coordinate tables: A_n lives in (n+1)-space
as {e_i - e_j}, B_n/C_n/D_n in n-space, G2 in the sum-zero slice of 3-space,
F4 and E8 in 4- and 8-space with their half-integer roots, and E7/E6 are cut
out of the E8 root set as the integer span of the first seven (six) simple
roots.  Positivity is decided by expanding each root in the simple basis,
which also certifies the expected integrality of the coefficients.

The bilinear form B is the ambient dot product rescaled so that the highest
root theta satisfies B(theta, theta) = 2; with that normalization
1 + B(rho, theta) is the dual Coxeter number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .vogel import AlgebraId

Vector = tuple[Fraction, ...]

_HALF = Fraction(1, 2)


def dot(x: Vector, y: Vector) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _vec(entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def _basis(dim: int, i: int, value=1) -> Vector:
    v = [Fraction(0)] * dim
    v[i] = Fraction(value)
    return tuple(v)


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def _scaled(x: Vector, c: Fraction) -> Vector:
    return tuple(c * a for a in x)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a small nonsingular matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    algebra: AlgebraId
    ambient_dim: int
    roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    theta: Vector
    rho: Vector
    scale: Fraction

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def b_form(self, x: Vector, y: Vector) -> Fraction:
        """Minimal invariant form: rescaled dot product with B(theta, theta) = 2."""
        return self.scale * dot(x, y)

    def dual_coxeter(self) -> Fraction:
        return 1 + self.b_form(self.rho, self.theta)

    def weyl_adjoint_dim(self) -> Fraction:
        """Weyl dimension product for the highest weight theta."""
        acc = Fraction(1)
        shifted = _add(self.theta, self.rho)
        for mu in self.positive_roots:
            acc *= self.b_form(shifted, mu) / self.b_form(self.rho, mu)
        return acc


def _roots_a(rank: int) -> tuple[int, list[Vector], list[Vector]]:
    dim = rank + 1
    roots = [_sub(_basis(dim, i), _basis(dim, j))
             for i in range(dim) for j in range(dim) if i != j]
    simple = [_sub(_basis(dim, i), _basis(dim, i + 1)) for i in range(rank)]
    return dim, roots, simple


def _roots_b(rank: int) -> tuple[int, list[Vector], list[Vector]]:
    dim = rank
    roots = [_scaled(_basis(dim, i), Fraction(s)) for i in range(dim) for s in (1, -1)]
    for i, j in combinations(range(dim), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(_add(_scaled(_basis(dim, i), Fraction(si)),
                              _scaled(_basis(dim, j), Fraction(sj))))
    simple = [_sub(_basis(dim, i), _basis(dim, i + 1)) for i in range(rank - 1)]
    simple.append(_basis(dim, rank - 1))
    return dim, roots, simple


def _roots_c(rank: int) -> tuple[int, list[Vector], list[Vector]]:
    dim = rank
    roots = [_scaled(_basis(dim, i), Fraction(2 * s)) for i in range(dim) for s in (1, -1)]
    for i, j in combinations(range(dim), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(_add(_scaled(_basis(dim, i), Fraction(si)),
                              _scaled(_basis(dim, j), Fraction(sj))))
    simple = [_sub(_basis(dim, i), _basis(dim, i + 1)) for i in range(rank - 1)]
    simple.append(_basis(dim, rank - 1, 2))
    return dim, roots, simple


def _roots_d(rank: int) -> tuple[int, list[Vector], list[Vector]]:
    dim = rank
    roots = []
    for i, j in combinations(range(dim), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(_add(_scaled(_basis(dim, i), Fraction(si)),
                              _scaled(_basis(dim, j), Fraction(sj))))
    simple = [_sub(_basis(dim, i), _basis(dim, i + 1)) for i in range(rank - 1)]
    simple.append(_add(_basis(dim, rank - 2), _basis(dim, rank - 1)))
    return dim, roots, simple


def _roots_g2() -> tuple[int, list[Vector], list[Vector]]:
    roots = []
    for i, j in combinations(range(3), 2):
        v = _sub(_basis(3, i), _basis(3, j))
        roots += [v, _neg(v)]
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        v = _sub(_scaled(_basis(3, i), Fraction(2)), _add(_basis(3, j), _basis(3, k)))
        roots += [v, _neg(v)]
    simple = [_vec((1, -1, 0)), _vec((-2, 1, 1))]
    return 3, roots, simple


def _roots_f4() -> tuple[int, list[Vector], list[Vector]]:
    roots = [_scaled(_basis(4, i), Fraction(s)) for i in range(4) for s in (1, -1)]
    for i, j in combinations(range(4), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(_add(_scaled(_basis(4, i), Fraction(si)),
                              _scaled(_basis(4, j), Fraction(sj))))
    for signs in product((1, -1), repeat=4):
        roots.append(tuple(_HALF * s for s in signs))
    simple = [
        _vec((0, 1, -1, 0)),
        _vec((0, 0, 1, -1)),
        _vec((0, 0, 0, 1)),
        _vec((_HALF, -_HALF, -_HALF, -_HALF)),
    ]
    return 4, roots, simple


def _roots_e8() -> tuple[int, list[Vector], list[Vector]]:
    roots = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            roots.append(_add(_scaled(_basis(8, i), Fraction(si)),
                              _scaled(_basis(8, j), Fraction(sj))))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(_HALF * s for s in signs))
    simple = [
        _vec((_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF)),
        _vec((1, 1, 0, 0, 0, 0, 0, 0)),
        _vec((-1, 1, 0, 0, 0, 0, 0, 0)),
        _vec((0, -1, 1, 0, 0, 0, 0, 0)),
        _vec((0, 0, -1, 1, 0, 0, 0, 0)),
        _vec((0, 0, 0, -1, 1, 0, 0, 0)),
        _vec((0, 0, 0, 0, -1, 1, 0, 0)),
        _vec((0, 0, 0, 0, 0, -1, 1, 0)),
    ]
    return 8, roots, simple


def _simple_coords(simple: list[Vector], root: Vector,
                   gram_inv: list[list[Fraction]]) -> list[Fraction] | None:
    """Coefficients of root in the simple basis, or None if outside the span."""
    rhs = [dot(root, s) for s in simple]
    coeffs = [sum((row[k] * rhs[k] for k in range(len(rhs))), Fraction(0))
              for row in gram_inv]
    recon = tuple(Fraction(0) for _ in root)
    for c, s in zip(coeffs, simple):
        recon = _add(recon, _scaled(s, c))
    return coeffs if recon == root else None


def build(algebra: AlgebraId) -> RootSystem:
    """Construct the root system with positive roots, theta, rho and scale."""
    fam = algebra.family
    if fam == "A":
        ambient, roots, simple = _roots_a(algebra.rank)
    elif fam == "B":
        ambient, roots, simple = _roots_b(algebra.rank)
    elif fam == "C":
        ambient, roots, simple = _roots_c(algebra.rank)
    elif fam == "D":
        ambient, roots, simple = _roots_d(algebra.rank)
    elif fam == "G2":
        ambient, roots, simple = _roots_g2()
    elif fam == "F4":
        ambient, roots, simple = _roots_f4()
    elif fam in ("E6", "E7", "E8"):
        ambient, roots, simple = _roots_e8()
        keep = {"E6": 6, "E7": 7, "E8": 8}[fam]
        simple = simple[:keep]
    else:
        raise ValueError(f"no root system for family {fam!r}")

    gram = [[dot(si, sj) for sj in simple] for si in simple]
    gram_inv = _invert(gram)

    positive: list[Vector] = []
    heights: dict[Vector, Fraction] = {}
    kept: list[Vector] = []
    for root in roots:
        coeffs = _simple_coords(simple, root, gram_inv)
        if coeffs is None:
            continue  # E8 root outside the E7/E6 slice
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError(f"root {root} is not an integer combination of simple roots")
        if all(c >= 0 for c in coeffs):
            positive.append(root)
            heights[root] = sum(coeffs)
        elif not all(c <= 0 for c in coeffs):
            raise ValueError(f"root {root} has mixed-sign simple coordinates")
        kept.append(root)

    if 2 * len(positive) != len(kept):
        raise ValueError("positive roots do not split the root set in half")
    top = max(heights.values())
    candidates = [r for r, h in heights.items() if h == top]
    if len(candidates) != 1:
        raise ValueError("highest root is not unique")
    theta = candidates[0]

    rho = tuple(Fraction(0) for _ in range(ambient))
    for mu in positive:
        rho = _add(rho, mu)
    rho = _scaled(rho, _HALF)

    scale = 2 / max(dot(mu, mu) for mu in kept)

    return RootSystem(
        algebra=algebra,
        ambient_dim=ambient,
        roots=tuple(sorted(kept)),
        positive_roots=tuple(sorted(positive)),
        simple_roots=tuple(simple),
        theta=theta,
        rho=rho,
        scale=scale,
    )
