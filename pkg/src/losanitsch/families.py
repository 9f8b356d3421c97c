"""Polynomial families in closed form and by recursion.

Integer polynomials in x: even/odd subset polynomials e_n, o_n, the
Losanitsch polynomials L_n, Lbar_n, and the mod-p zero-residue polynomials
e_n(x, p) with their correction terms b_i(x).

Polynomials with exact q-coefficients: Rogers-Szego r_n(x, q), the q-Newton
product p_n(x, q), q-Fibonacci F_n(s, q) and the alternating sums f(n)
whose coefficients run through Euler's pentagonal number series.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import (
    ResiduePoly,
    UniPoly,
    XPoly,
    binomial,
    is_prime,
    q_binomial,
    residue_reduce,
)
from .triangles import L_tables, epsilon_table

X = UniPoly([0, 1], "x")
ONE_X = UniPoly([1], "x")
Q0 = UniPoly((), "q")


def _nonneg(n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")


def e_poly(n: int) -> UniPoly:
    """Generating polynomial of even-sum k-subsets of {1..n}."""
    _nonneg(n)
    m, odd = divmod(n, 2)
    tail = (1 - X) * (1 - X * X) ** m if odd else (1 - X * X) ** m
    return ((1 + X) ** n + tail).exact_div(2)


def o_poly(n: int) -> UniPoly:
    return (1 + X) ** n - e_poly(n)


def L_poly(n: int) -> UniPoly:
    _nonneg(n)
    m, odd = divmod(n, 2)
    tail = (1 + X) * (1 + X * X) ** m if odd else (1 + X * X) ** m
    return ((1 + X) ** n + tail).exact_div(2)


def Lbar_poly(n: int) -> UniPoly:
    return (1 + X) ** n - L_poly(n)


def e_star_poly(n: int) -> UniPoly:
    """Reversed even polynomial x^n e_n(1/x)."""
    return e_poly(n).reflect(n)


def e_poly_factored(n: int) -> UniPoly:
    """(1+x)^floor(n/2) times the even part of (1+x)^floor((n+1)/2)."""
    up = (n + 1) // 2
    even_part = UniPoly(
        [binomial(up, i) if i % 2 == 0 else 0 for i in range(up + 1)], "x"
    )
    return (1 + X) ** (n // 2) * even_part


def rogers_szego(n: int) -> XPoly:
    """r_n(x, q) = sum_k [n k]_q x^k with exact q-polynomial coefficients."""
    _nonneg(n)
    return XPoly([q_binomial(n, k) for k in range(n + 1)], Q0, "x")


def q_newton(n: int) -> XPoly:
    """p_n(x, q) = prod_{j=1..n} (1 + q^j x), multiplied out."""
    _nonneg(n)
    result = XPoly([UniPoly([1], "q")], Q0, "x")
    for j in range(1, n + 1):
        result = result * XPoly([UniPoly([1], "q"), UniPoly.monomial(j, "q")], Q0, "x")
    return result


def residue_x(f: UniPoly, p: int) -> XPoly:
    """Integer x-polynomial embedded in the residue ring mod q^p - 1."""
    return XPoly.from_int_poly(f, ResiduePoly.zero(p))


def epsilon_poly(n: int, p: int = 2) -> XPoly:
    """sum_k eps(n, k) x^k from the residue table."""
    return XPoly(epsilon_table(n, p).row(n), ResiduePoly.zero(p), "x")


def lambda_poly(n: int, p: int = 2) -> XPoly:
    return rogers_szego(n).reduce_mod(p)


# q-Fibonacci polynomials, variable s


def _s_poly(coeffs) -> XPoly:
    return XPoly(coeffs, Q0, "s")


def q_fibonacci_sum(n: int) -> XPoly:
    """F_n(s, q) = sum_k q^(k(k-1)) [n-1-k, k]_q s^k."""
    _nonneg(n)
    return _s_poly(
        [q_binomial(n - 1 - k, k).shift(k * (k - 1)) for k in range((n - 1) // 2 + 1)]
    )


@lru_cache(maxsize=None)
def q_fibonacci(n: int) -> XPoly:
    """F_n(s, q) by F_n = F_{n-1} + q^(n-3) s F_{n-2}, seeded from the sum for n <= 2."""
    _nonneg(n)
    if n <= 2:
        return q_fibonacci_sum(n)
    prev2 = q_fibonacci(n - 2)
    shifted = _s_poly([Q0] + [a.shift(n - 3) for a in prev2.coeffs])
    return q_fibonacci(n - 1) + shifted


def fibonacci_poly(n: int) -> UniPoly:
    """Ordinary Fibonacci polynomial F_n(s) = sum_k C(n-1-k, k) s^k."""
    _nonneg(n)
    return UniPoly([binomial(n - 1 - k, k) for k in range((n - 1) // 2 + 1)], "s")


def losanitsch_fib(n: int) -> UniPoly:
    """f_n(s) = sum_k L(n-1-k, k) s^k, the q^0 part of F_n(s, q) mod q^2 - 1."""
    _nonneg(n)
    if n == 0:
        return UniPoly((), "s")
    L, _ = L_tables(n - 1)
    return UniPoly([L[n - 1 - k, k] for k in range((n - 1) // 2 + 1)], "s")


# Alternating q-sums and the pentagonal number series


def pentagonal_f_sum(n: int) -> UniPoly:
    """f(n) = sum_k (-1)^k q^C(k+1,2) [n-1-k, k]_q."""
    _nonneg(n)
    total = Q0
    for k in range(n + 1):
        term = q_binomial(n - 1 - k, k)
        if term:
            total = total + term.shift(binomial(k + 1, 2)) * (-1) ** k
    return total


@lru_cache(maxsize=None)
def pentagonal_f(n: int) -> UniPoly:
    """f(n) = f(n-1) - q^(n-2) f(n-3) + q^(n-2) f(n-4), seeded from the sum for n <= 3."""
    _nonneg(n)
    if n <= 3:
        return pentagonal_f_sum(n)
    return pentagonal_f(n - 1) + (pentagonal_f(n - 4) - pentagonal_f(n - 3)).shift(n - 2)


def pentagonal_phi(n: int) -> ResiduePoly:
    return residue_reduce(pentagonal_f(n), 2)


def euler_product(degree: int) -> UniPoly:
    """prod_{m>=1} (1 - q^m) truncated after q^degree, by direct multiplication."""
    coeffs = [1] + [0] * degree
    for m in range(1, degree + 1):
        for i in range(degree, m - 1, -1):
            coeffs[i] -= coeffs[i - m]
    return UniPoly(coeffs, "q")


# Residues modulo an odd prime


def _odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def residue_class_poly(n: int, j: int, p: int) -> UniPoly:
    """e_n(j, x, p) = sum_k e(n, k, j, p) x^k."""
    if not 0 <= j < p:
        raise ValueError(f"j={j} outside 0..{p - 1}")
    return UniPoly([a[j] for a in epsilon_table(n, p).row(n)], "x")


def general_e_poly(n: int, p: int) -> UniPoly:
    """e_n(x, p): k-subsets of {1..n} with sum divisible by p, by size."""
    return residue_class_poly(n, 0, p)


def b_polys(p: int) -> tuple[UniPoly, ...]:
    """b_i(x) = p e_i(x, p) - (1+x)^i for 0 <= i < p."""
    _odd_prime(p)
    return tuple(general_e_poly(i, p) * p - (1 + X) ** i for i in range(p))


def general_e_closed(m: int, p: int) -> UniPoly:
    """e_m(x, p) = ((1+x)^m + b_i(x) (1+x^p)^n) / p where m = pn + i."""
    n, i = divmod(m, p)
    b = b_polys(p)[i]
    return ((1 + X) ** m + b * (1 + X ** p) ** n).exact_div(p)
