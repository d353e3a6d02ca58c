"""Exact univariate polynomials and rational functions over the rationals.

Every generating function downstream is a ratio of small dense polynomials,
so the representation is deliberately plain: a polynomial is a tuple of
Fractions indexed by power of z, and a rational function is a fully
cancelled num/den pair whose denominator is monic.  That canonical form
makes equality of rational functions a structural comparison.  All values
are immutable and every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int]


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of z^i.

    Trailing zero coefficients are trimmed, so the zero polynomial is the
    empty tuple and ``coeffs[-1]`` is nonzero otherwise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: ScalarLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: object) -> "Poly":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Poly":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Poly":
        other = _as_poly_or_none(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        inv = 1 / self.lead
        return Poly(c * inv for c in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def scale_arg(self, factor: ScalarLike) -> "Poly":
        """Substitute z -> factor*z."""
        f = Fraction(factor)
        return Poly(c * f**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"


#: the polynomial z, handy for building expressions
Z = Poly((0, 1))


def _as_poly_or_none(value: object) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return None


def _as_poly(value: object) -> Poly:
    p = _as_poly_or_none(value)
    if p is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of a by b over the rationals."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    quo = [Fraction(0)] * max(len(rem) - len(b.coeffs) + 1, 0)
    inv = 1 / b.lead
    for shift in range(len(rem) - len(b.coeffs), -1, -1):
        q = rem[shift + b.degree] * inv
        if q == 0:
            continue
        quo[shift] = q
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= q * c
    return Poly(quo), Poly(rem)


def _div_exact(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise ValueError("inexact polynomial division")
    return q


def _primitive_ints(p: Poly) -> list[int]:
    """Integer coefficient list of p scaled to be primitive (content 1)."""
    den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [v // g for v in ints] if g else ints


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # repeatedly scale by lc(b) so elimination stays in the integers
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and any(r):
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        shift = len(r) - len(b)
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= lead * c
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals.

    Uses a primitive pseudo-remainder sequence on integer coefficients so the
    intermediate values never grow rational denominators.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    x, y = _primitive_ints(a), _primitive_ints(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_pseudo_rem(x, y)
        if r:
            g = 0
            for v in r:
                g = gcd(g, abs(v))
            r = [v // g for v in r]
        x, y = y, r
    return Poly(x).monic()


class RatFun:
    """Rational function in canonical form: cancelled, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: object, den: object = 1):
        n, d = _as_poly(num), _as_poly(den)
        if d.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero:
            self.num = Poly()
            self.den = Poly((1,))
            return
        g = poly_gcd(n, d)
        if g.degree > 0:
            n = _div_exact(n, g)
            d = _div_exact(d, g)
        inv = 1 / d.lead
        self.num = n * inv
        self.den = d * inv

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other: object) -> bool:
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __add__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: object) -> "RatFun":
        other = _as_ratfun_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def series(self, order: int) -> tuple[Fraction, ...]:
        """Maclaurin coefficients of z^0 .. z^order, computed exactly.

        The recursion inverts the Cauchy product num = den * series, so no
        factorization is needed; requires den(0) != 0.
        """
        if order < 0:
            raise ValueError("series order must be nonnegative")
        d0 = self.den(0)
        if d0 == 0:
            raise ValueError("pole at z = 0, no Maclaurin expansion")
        n, d = self.num.coeffs, self.den.coeffs
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = n[k] if k < len(n) else Fraction(0)
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d0)
        return tuple(out)

    def limit_at_infinity(self) -> Fraction:
        """Limit as z -> oo: 0 for proper fractions, lead ratio when degrees tie."""
        if self.is_zero:
            return Fraction(0)
        if self.num.degree > self.den.degree:
            raise ValueError("rational function diverges at infinity")
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lead / self.den.lead

    def scale_arg(self, factor: ScalarLike) -> "RatFun":
        """Substitute z -> factor*z."""
        return RatFun(self.num.scale_arg(factor), self.den.scale_arg(factor))

    def __call__(self, x: ScalarLike) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at z = {x}")
        return self.num(x) / d

    def __str__(self) -> str:
        if self.den == Poly((1,)):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFun({self.num.coeffs!r}, {self.den.coeffs!r})"


def _as_ratfun_or_none(value: object) -> RatFun | None:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (Poly, int, Fraction)):
        return RatFun(value)
    return None


def z_dlog(f: RatFun) -> RatFun:
    """The logarithmic derivative z * f'(z)/f(z), as a rational function."""
    if f.is_zero:
        raise ValueError("logarithmic derivative of zero")
    n, d = f.num, f.den
    return RatFun(Z * (n.derivative() * d - n * d.derivative()), n * d)
