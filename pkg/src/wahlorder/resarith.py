"""Residue arithmetic for cyclic quotient singularities 1/r(1,a).

Every construction in this package is indexed by a coprime pair (r, a) with
0 < a < r, together with the inverse b of a modulo r.  This module provides
the canonical representative [x] in [0, r), the labelling homomorphism
gamma(i, j) = [j - b*i] on the integer lattice, its kernel sublattice of
"orange" points, the gap function m(j) that controls products, and
Hirzebruch-Jung continued fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class InvalidParamsError(ValueError):
    """Raised for parameter triples that do not define a singularity."""


def bracket(x: int, r: int) -> int:
    """Canonical representative of x modulo r, in [0, r)."""
    if r <= 0:
        raise InvalidParamsError(f"modulus must be positive, got {r}")
    return x % r


def inverse_mod(a: int, r: int) -> int:
    """The inverse b of a modulo r with 0 < b < r; requires gcd(a, r) = 1."""
    if r <= 0:
        raise InvalidParamsError(f"modulus must be positive, got {r}")
    if gcd(a, r) != 1:
        raise InvalidParamsError(f"{a} is not invertible modulo {r}")
    if r == 1:
        return 0
    return pow(a, -1, r)


@dataclass(frozen=True)
class SingularityParams:
    """The triple (r, a, b) with a*b = 1 mod r and 0 < a < r.

    r = 1 (a smooth point) is rejected: all constructions here assume a
    genuine singularity.
    """

    r: int
    a: int

    def __post_init__(self):
        if self.r < 2:
            raise InvalidParamsError(f"need r >= 2, got r={self.r}")
        if not 0 < self.a < self.r:
            raise InvalidParamsError(f"need 0 < a < r, got a={self.a}, r={self.r}")
        if gcd(self.a, self.r) != 1:
            raise InvalidParamsError(f"a={self.a} and r={self.r} are not coprime")

    @property
    def b(self) -> int:
        return inverse_mod(self.a, self.r)

    def __str__(self):
        return f"1/{self.r}({1},{self.a})"


@dataclass(frozen=True)
class WahlParams:
    """Coprime 0 < q < n, n >= 2; indexes the singularity 1/n^2(1, nq-1)."""

    n: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParamsError(f"need n >= 2, got n={self.n}")
        if not 0 < self.q < self.n:
            raise InvalidParamsError(f"need 0 < q < n, got q={self.q}")
        if gcd(self.n, self.q) != 1:
            raise InvalidParamsError(f"n={self.n}, q={self.q} are not coprime")

    @property
    def params(self) -> SingularityParams:
        return SingularityParams(self.n * self.n, self.n * self.q - 1)


LatticePoint = tuple  # (x, y) in Z^2


def gamma(p: LatticePoint, params: SingularityParams) -> int:
    """Label of the lattice point p = (x, y): [y - b*x] in Z_r.

    gamma is a group homomorphism Z^2 -> Z_r; its kernel is the index-r
    sublattice of orange points.
    """
    x, y = p
    return bracket(y - params.b * x, params.r)


def is_orange(p: LatticePoint, params: SingularityParams) -> bool:
    return gamma(p, params) == 0


def m_of(j: int, params: SingularityParams) -> int:
    """Gap function: min of [k*b] over k = 1..[-a*j] for j != 0, and r for j = 0.

    The product w_j * w_i is nonzero exactly when m(j) > [i].
    """
    r = params.r
    j = bracket(j, r)
    if j == 0:
        return r
    lim = bracket(-params.a * j, r)
    b = params.b
    return min(bracket(k * b, r) for k in range(1, lim + 1))


def hj_fraction(r: int, d: int) -> list[int]:
    """Hirzebruch-Jung expansion r/d = b_1 - 1/(b_2 - 1/(... - 1/b_t)), b_i >= 2."""
    if not 0 < d < r:
        raise InvalidParamsError(f"need 0 < d < r, got d={d}, r={r}")
    out = []
    num, den = r, d
    while den > 0:
        b = -(-num // den)  # ceil
        out.append(b)
        num, den = den, b * den - num
    return out


def hj_evaluate(coeffs: list[int]) -> Fraction:
    """Evaluate b_1 - 1/(b_2 - 1/(...)) exactly; oracle for hj_fraction."""
    val = Fraction(coeffs[-1])
    for b in reversed(coeffs[:-1]):
        val = b - 1 / val
    return val
