"""Rational generating functions in z with polynomial-in-x coefficients.

A ``RationalGF`` is numerator / (divisor * denominator) where numerator and
denominator are polynomials in z over Z[x] and the denominator has constant
term 1. ``series_expand`` reads off coefficients by the linear recurrence the
denominator defines, so everything stays exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import UniPoly, XPoly
from .families import L_poly, b_polys, e_poly, o_poly

ZERO_X = UniPoly((), "x")
X = UniPoly([0, 1], "x")


def zpoly(*coeffs) -> XPoly:
    """Polynomial in z from coefficients that are ints or x-polynomials."""
    return XPoly(
        [c if isinstance(c, UniPoly) else UniPoly([c], "x") for c in coeffs], ZERO_X, "z"
    )


def zconst(f: UniPoly) -> XPoly:
    """Integer polynomial in z (any tag) as a z-polynomial over Z[x]."""
    return zpoly(*f.coeffs)


Z = zpoly(0, 1)
ONE = zpoly(1)


def zmono(m: int, c=1) -> XPoly:
    return zpoly(*([0] * m + [c]))


@dataclass(frozen=True)
class RationalGF:
    numerator: XPoly
    denominator: XPoly
    divisor: int = 1

    def __post_init__(self):
        if self.numerator.var != "z" or self.denominator.var != "z":
            raise ValueError("generating functions are polynomials in z")
        if self.denominator[0] != UniPoly([1], "x"):
            raise ValueError(
                f"denominator constant term must be 1, got {self.denominator[0]}"
            )
        if self.divisor < 1:
            raise ValueError("divisor must be a positive integer")

    def __add__(self, other: RationalGF) -> RationalGF:
        num = (
            self.numerator * other.denominator * other.divisor
            + other.numerator * self.denominator * self.divisor
        )
        return RationalGF(
            num, self.denominator * other.denominator, self.divisor * other.divisor
        )

    def __sub__(self, other: RationalGF) -> RationalGF:
        return self + RationalGF(-other.numerator, other.denominator, other.divisor)

    def halved(self) -> RationalGF:
        return RationalGF(self.numerator, self.denominator, self.divisor * 2)


def series_expand(gf: RationalGF, N: int) -> list[UniPoly]:
    """Coefficients c_0..c_N of the power series of ``gf`` in z."""
    if N < 0:
        raise ValueError("N must be non-negative")
    den = gf.denominator
    out: list[UniPoly] = []
    for n in range(N + 1):
        c = gf.numerator[n]
        for i in range(1, min(n, den.degree) + 1):
            if den[i]:
                c = c - den[i] * out[n - i]
        out.append(c)
    if gf.divisor != 1:
        out = [c.exact_div(gf.divisor) for c in out]
    return out


def geometric(base: XPoly, power: int = 1) -> RationalGF:
    """1 / (1 - base * z^power)."""
    return RationalGF(ONE, ONE - base * zmono(power))


def _neg_z(f: UniPoly) -> XPoly:
    """f(-z) for an integer polynomial f."""
    return zconst(f(UniPoly([0, -1], "z")))


# Bivariate generating functions of whole polynomial families


def gf_e() -> RationalGF:
    num = zpoly(1, -X, -(1 - X * X))
    den = zpoly(1, -(1 + X)) * zpoly(1, 0, -(1 - X * X))
    return RationalGF(num, den)


def gf_e_halves() -> RationalGF:
    return (
        geometric(zpoly(1 + X))
        + RationalGF(zpoly(1, 1 - X), zpoly(1, 0, -(1 - X * X)))
    ).halved()


def gf_o() -> RationalGF:
    den = zpoly(1, -(1 + X)) * zpoly(1, 0, -(1 - X * X))
    return RationalGF(zpoly(0, X), den)


def gf_o_halves() -> RationalGF:
    return (
        geometric(zpoly(1 + X))
        - RationalGF(zpoly(1, 1 - X), zpoly(1, 0, -(1 - X * X)))
    ).halved()


def gf_e_star() -> RationalGF:
    num = zpoly(1, -1, -(X * X - 1))
    den = zpoly(1, -(1 + X)) * zpoly(1, 0, 1 - X * X)
    return RationalGF(num, den)


def gf_e_star_halves() -> RationalGF:
    return (
        geometric(zpoly(1 + X))
        + RationalGF(zpoly(1, X - 1), zpoly(1, 0, -(X * X - 1)))
    ).halved()


def gf_L() -> RationalGF:
    num = zpoly(1, 0, -(1 + X + X * X))
    den = zpoly(1, -(1 + X)) * zpoly(1, 0, -(1 + X * X))
    return RationalGF(num, den)


def gf_L_halves() -> RationalGF:
    return (
        geometric(zpoly(1 + X))
        + RationalGF(zpoly(1, 1 + X), zpoly(1, 0, -(1 + X * X)))
    ).halved()


# Single-column generating functions (integer coefficients)


def gf_e_even_column(k: int) -> RationalGF:
    """sum_n e(n, 2k) z^n."""
    a = RationalGF(zmono(2 * k), zpoly(1, -1) ** (2 * k + 1))
    b = RationalGF(zmono(2 * k) * zpoly(1, 1) * (-1) ** k, zpoly(1, 0, -1) ** (k + 1))
    return (a + b).halved()


def gf_e_odd_column(k: int) -> RationalGF:
    """sum_n e(n, 2k+1) z^n."""
    a = RationalGF(zmono(2 * k + 1), zpoly(1, -1) ** (2 * k + 2))
    b = RationalGF(zmono(2 * k + 1) * (-1) ** (k + 1), zpoly(1, 0, -1) ** (k + 1))
    return (a + b).halved()


def gf_e_column(k: int) -> RationalGF:
    """sum_n e(n, k) z^n = z^k a_k(z) / ((1+z)^k (1-z)^(k+1)), a = e or o by k mod 4."""
    a = e_poly(k) if k % 4 in (0, 3) else o_poly(k)
    den = zpoly(1, 1) ** k * zpoly(1, -1) ** (k + 1)
    return RationalGF(zmono(k) * zconst(a), den)


def gf_L_column(k: int) -> RationalGF:
    """sum_n L(n, k) z^n = z^k e_k(z) / ((1-z)^(k+1) (1+z)^k)."""
    den = zpoly(1, -1) ** (k + 1) * zpoly(1, 1) ** k
    return RationalGF(zmono(k) * zconst(e_poly(k)), den)


def gf_e_codiagonal(k: int) -> RationalGF:
    """sum_n e(n, n-k) z^n, with the (1-z) exponent split by the parity of k."""
    m = k // 2
    top = L_poly(k + 2)
    ones_exp = 2 * m + 1 if k % 2 == 0 else 2 * m + 3
    den = zpoly(1, -1) ** ones_exp * zpoly(1, 0, 1) ** (m + 1)
    return RationalGF(zmono(k) * _neg_z(top), den)


def gf_e_codiagonal_printed(k: int) -> RationalGF:
    """The compact single-formula variant with exponents floor((k+1)/2)+1, floor(k/2)+1."""
    den = zpoly(1, -1) ** ((k + 1) // 2 + 1) * zpoly(1, 0, 1) ** (k // 2 + 1)
    return RationalGF(zmono(k) * _neg_z(L_poly(k + 2)), den)


def gf_general_e(p: int) -> RationalGF:
    """sum_n e_n(x, p) z^n built from the correction polynomials b_i."""
    b = b_polys(p)
    part1 = geometric(zpoly(1 + X))
    part2 = RationalGF(zpoly(*b), ONE - zpoly(1 + X ** p) * zmono(p))
    s = part1 + part2
    return RationalGF(s.numerator, s.denominator, p)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    build: Callable[..., RationalGF]
    params: tuple[str, ...] = ()


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("2.5", "sum e_n(x) z^n, single fraction", gf_e),
        CatalogEntry("2.5h", "sum e_n(x) z^n, half-sum form", gf_e_halves),
        CatalogEntry("2.6", "sum o_n(x) z^n, single fraction", gf_o),
        CatalogEntry("2.6h", "sum o_n(x) z^n, half-sum form", gf_o_halves),
        CatalogEntry("2.7", "sum x^n e_n(1/x) z^n, single fraction", gf_e_star),
        CatalogEntry("2.7h", "sum x^n e_n(1/x) z^n, half-sum form", gf_e_star_halves),
        CatalogEntry("3.11", "sum L_n(x) z^n, single fraction", gf_L),
        CatalogEntry("3.11h", "sum L_n(x) z^n, half-sum form", gf_L_halves),
        CatalogEntry("2.11", "sum_n e(n, 2k) z^n", gf_e_even_column, ("k",)),
        CatalogEntry("2.12", "sum_n e(n, 2k+1) z^n", gf_e_odd_column, ("k",)),
        CatalogEntry("2.13", "sum_n e(n, k) z^n via e_k or o_k", gf_e_column, ("k",)),
        CatalogEntry("3.12", "sum_n L(n, k) z^n", gf_L_column, ("k",)),
        CatalogEntry("3.13", "sum_n e(n, n-k) z^n, parity-split exponents", gf_e_codiagonal, ("k",)),
        CatalogEntry(
            "3.13c",
            "sum_n e(n, n-k) z^n, compact printed exponents",
            gf_e_codiagonal_printed,
            ("k",),
        ),
        CatalogEntry("4.29", "sum_n e_n(x, p) z^n for an odd prime p", gf_general_e, ("p",)),
    ]
}


def catalog_gf(name: str, k: int = 0, p: int = 3) -> RationalGF:
    if name not in CATALOG:
        raise KeyError(f"unknown generating function {name!r}")
    entry = CATALOG[name]
    kwargs = {"k": k, "p": p}
    return entry.build(*(kwargs[a] for a in entry.params))
