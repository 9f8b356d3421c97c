"""Bounded-range verification of the identity catalog.

Every check is a generator of ``(where, lhs, rhs)`` comparisons; the runner
stops at the first mismatch and records it as the counterexample. Checks
touching the brute-force oracle use ``max_n``; purely algebraic checks use
``deep_n``; single-column generating functions use ``gf_n`` terms and
columns up to ``gf_k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from . import oracle
from .algebra import (
    ResiduePoly,
    UniPoly,
    XPoly,
    binomial,
    cyclotomic_reduce,
    eval_int,
    is_prime,
    q_binomial,
    residue_reduce,
)
from .families import (
    L_poly,
    Lbar_poly,
    b_polys,
    e_poly,
    e_poly_factored,
    e_star_poly,
    epsilon_poly,
    euler_product,
    fibonacci_poly,
    general_e_closed,
    general_e_poly,
    losanitsch_fib,
    o_poly,
    pentagonal_f,
    pentagonal_f_sum,
    pentagonal_phi,
    q_fibonacci,
    q_fibonacci_sum,
    q_newton,
    residue_class_poly,
    residue_x,
    rogers_szego,
)
from .series import catalog_gf, series_expand
from .triangles import (
    L_closed,
    L_tables,
    Lbar_closed,
    column_composition,
    e_closed,
    e_o_tables,
    epsilon_direct,
    epsilon_table,
    lambda_direct,
    lambda_table,
    qbinom_at_minus1,
)

X = UniPoly([0, 1], "x")
S = UniPoly([0, 1], "s")

FIB_PREFIX = (0, 1, 1, 2, 2, 4, 5, 9, 12)
PHI_PREFIX = ((0, 0), (1, 0), (1, 0), (1, -1), (0, -1), (0, -1),
              (0, 0), (0, 1), (0, 1), (-1, 1), (-1, 0), (-1, 0))
# q^0 parts of the phi prefix; the printed list drops one of the zeros
ALT_E_PREFIX = (0, 1, 1, 1, 0, 0, 0, 0, 0, -1, -1, -1)
ALT_E_PRINTED = (0, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1)

Comparison = tuple[str, object, object]


@dataclass(frozen=True)
class CheckReport:
    identity: str
    title: str
    range: str
    passed: bool
    counterexample: tuple[str, str, str] | None = None
    note: str = ""

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    @property
    def detail(self) -> str:
        if self.passed:
            text = self.title
        else:
            where, lhs, rhs = self.counterexample
            text = f"first mismatch at {where}: {lhs} != {rhs}"
        if self.note:
            text += f" [note: {self.note}]"
        return text

    def line(self) -> str:
        verdict = "pass" if self.passed else "fail"
        return f"{self.identity}\t{self.range}\t{verdict}\t{self.detail}"


@dataclass
class Context:
    max_n: int = 14
    primes: tuple[int, ...] = (3, 5, 7)
    deep_n: int = 30
    gf_n: int = 40
    gf_k: int = 8
    notes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.max_n > oracle.MAX_N:
            raise ValueError(f"max_n={self.max_n} exceeds the oracle bound {oracle.MAX_N}")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.size = max(2 * self.deep_n, self.gf_n, 48, self.max_n)

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p in self.primes if p > 2)

    @property
    def residue_primes(self) -> tuple[int, ...]:
        return (2,) + self.odd_primes

    @property
    def eo(self):
        return e_o_tables(self.size)

    @property
    def L(self):
        return L_tables(self.size)


@lru_cache(maxsize=None)
def _subset_counts(n, k, p):
    return oracle.subset_residue_counts(n, k, p)


@lru_cache(maxsize=None)
def _inv_counts(n, k, p):
    return oracle.inv_residue_counts(n, k, p)


@lru_cache(maxsize=None)
def _reversal(n, k):
    return oracle.reversal_classes(n, k)


def _row(T, n) -> UniPoly:
    return UniPoly(T.row(n), "x")


def _pairs(n_max):
    for n in range(n_max + 1):
        for k in range(n + 1):
            yield n, k


# Section: subset parity


def c_sum_law(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for n, k in _pairs(c.deep_n):
        yield f"n={n},k={k}", e[n, k] + o[n, k], binomial(n, k)
    for n, k in _pairs(c.max_n):
        yield f"oracle n={n},k={k}", sum(_subset_counts(n, k, 2)), binomial(n, k)


def c_lemma_1_1(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for n, k in _pairs(c.deep_n):
        if n >= 2:
            C = binomial(n - 2, k - 1)
            yield f"e n={n},k={k}", e[n, k], e[n - 2, k] + C + o[n - 2, k - 2]
            yield f"o n={n},k={k}", o[n, k], o[n - 2, k] + C + e[n - 2, k - 2]


def c_lemma_1_2(c: Context) -> Iterator[Comparison]:
    for n in range(c.max_n + 1):
        for k in range(n + 1):
            for s in combinations(range(1, n + 1), k):
                rhs = binomial(k + 1, 2) + oracle.inv(oracle.star_word(s, n))
                yield f"n={n},S={set(s) or '{}'}", sum(s), rhs


def c_2_1(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for n, k in _pairs(c.max_n):
        yield f"n={n},k={k}", (e[n, k], o[n, k]), _subset_counts(n, k, 2)


def c_2_2(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for name, T in (("e", e), ("o", o)):
        for n in range(2, c.deep_n + 1):
            rhs = (1 - X * X) * _row(T, n - 2) + X * (1 + X) ** (n - 1)
            yield f"{name}_{n}", _row(T, n), rhs


def c_2_3(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for name, T in (("e", e), ("o", o)):
        for n in range(3, c.deep_n + 1):
            rhs = (
                (1 + X) * _row(T, n - 1)
                + (1 - X * X) * _row(T, n - 2)
                - (1 + X) * (1 - X * X) * _row(T, n - 3)
            )
            yield f"{name}_{n}", _row(T, n), rhs


def c_2_4(c: Context) -> Iterator[Comparison]:
    e, o = c.eo
    for n in range(c.deep_n + 1):
        yield f"e_{n}", e_poly(n), _row(e, n)
        yield f"o_{n}", o_poly(n), _row(o, n)


def c_e_palindromic(c: Context) -> Iterator[Comparison]:
    for n in range(c.deep_n + 1):
        f = e_poly(n)
        yield f"n={n}", f.reflect(n) == f, n % 4 in (0, 3)


def _series_check(name: str, family: Callable[[int], UniPoly], N: int):
    for form in (name, name + "h"):
        coeffs = series_expand(catalog_gf(form), N)
        for n, cn in enumerate(coeffs):
            yield f"{form} n={n}", cn, family(n)


def c_2_5(c: Context):
    yield from _series_check("2.5", e_poly, c.deep_n)


def c_2_6(c: Context):
    yield from _series_check("2.6", o_poly, c.deep_n)


def c_2_7(c: Context):
    e, _ = c.eo
    yield from _series_check("2.7", e_star_poly, c.deep_n)
    for n in range(c.deep_n + 1):
        yield f"reversed row n={n}", e_star_poly(n), UniPoly(reversed(e.row(n)), "x")


def c_2_8(c: Context):
    for n in range(c.deep_n + 1):
        yield f"n={n}", e_poly_factored(n), e_poly(n)


def c_2_9(c: Context):
    e, _ = c.eo
    for n, k in _pairs(c.deep_n):
        yield f"n={n},k={k}", e_closed(n, k), e[n, k]


def c_2_10(c: Context):
    e, _ = c.eo
    for n in range(c.deep_n + 1):
        yield f"n={n}", e[2 * n, n], sum(binomial(n, 2 * k) ** 2 for k in range(n + 1))


def _column_series(name: str, k: int, N: int, column) -> Iterator[Comparison]:
    coeffs = series_expand(catalog_gf(name, k=k), N)
    for n, cn in enumerate(coeffs):
        yield f"k={k},n={n}", cn, UniPoly([column[n]], "x")


def c_2_11(c: Context):
    e, _ = c.eo
    for k in range(c.gf_k + 1):
        yield from _column_series("2.11", k, c.gf_n, e.column(2 * k))


def c_2_12(c: Context):
    e, _ = c.eo
    for k in range(c.gf_k + 1):
        yield from _column_series("2.12", k, c.gf_n, e.column(2 * k + 1))


def c_2_13(c: Context):
    e, _ = c.eo
    for k in range(c.gf_k + 1):
        yield from _column_series("2.13", k, c.gf_n, e.column(k))


# Section: Losanitsch triangle


def c_3_2(c: Context):
    for name, f in (("L", L_poly), ("Lbar", Lbar_poly)):
        for n in range(2, c.deep_n + 1):
            rhs = (1 + X * X) * f(n - 2) + X * (1 + X) ** (n - 2)
            yield f"{name}_{n}", f(n), rhs


def c_3_3(c: Context):
    for name, f in (("L", L_poly), ("Lbar", Lbar_poly)):
        for n in range(3, c.deep_n + 1):
            rhs = (
                (1 + X) * f(n - 1)
                + (1 + X * X) * f(n - 2)
                - (1 + X) * (1 + X * X) * f(n - 3)
            )
            yield f"{name}_{n}", f(n), rhs


def c_3_4(c: Context):
    L, _ = c.L
    for n, k in _pairs(c.max_n):
        yield f"oracle n={n},k={k}", L[n, k], _inv_counts(n, k, 2)[0]
    for n, k in _pairs(c.deep_n):
        if n >= 2:
            yield f"n={n},k={k}", L[n, k], L[n - 2, k] + binomial(n - 2, k - 1) + L[n - 2, k - 2]


def c_3_5(c: Context):
    e, o = c.eo
    L, _ = c.L
    src = {"e": e, "o": o}
    for k in range(c.deep_n + 1):
        yield f"column {k}", L.column(k), src[column_composition(k)].column(k)


def c_prop_3_1(c: Context):
    e, o = c.eo
    L, _ = c.L
    for k in range(c.deep_n + 1):
        candidates = [T for T in (e, o) if T[k, k] == 1]
        yield f"k={k} diagonal-one candidates", len(candidates), 1
        yield f"k={k} column", L.column(k), candidates[0].column(k)


def c_3_6(c: Context):
    L, Lbar = c.L
    for n in range(c.deep_n + 1):
        yield f"L_{n}", L_poly(n), _row(L, n)
        yield f"Lbar_{n}", Lbar_poly(n), _row(Lbar, n)


def c_3_7(c: Context):
    for n in range(c.deep_n // 2 + 1):
        yield f"n={n}", L_poly(2 * n + 1), (1 + X) * L_poly(2 * n)


def c_3_8(c: Context):
    L, _ = c.L
    for n in range(c.deep_n + 1):
        yield f"L_{n} palindromic", L_poly(n).reflect(n), L_poly(n)
    for n, k in _pairs(c.deep_n):
        yield f"n={n},k={k}", L[n, n - k], L[n, k]


def c_3_10(c: Context):
    L, Lbar = c.L
    for n, k in _pairs(c.deep_n):
        yield f"L n={n},k={k}", L_closed(n, k), L[n, k]
        yield f"Lbar n={n},k={k}", Lbar_closed(n, k), Lbar[n, k]


def c_3_11(c: Context):
    yield from _series_check("3.11", L_poly, c.deep_n)


def c_3_12(c: Context):
    L, _ = c.L
    for k in range(c.gf_k + 1):
        yield from _column_series("3.12", k, c.gf_n, L.column(k))
        codiag = [L[n, n - k] if n >= k else 0 for n in range(c.gf_n + 1)]
        yield from _column_series("3.12", k, c.gf_n, codiag)


def c_3_13(c: Context):
    e, _ = c.eo
    bad = []
    for k in range(c.gf_k + 1):
        codiag = [e[n, n - k] if n >= k else 0 for n in range(c.gf_n + 1)]
        yield from _column_series("3.13", k, c.gf_n, codiag)
        compact = series_expand(catalog_gf("3.13c", k=k), c.gf_n)
        if [a[0] for a in compact] != codiag:
            bad.append(k)
    if bad:
        c.notes["3.13"] = (
            "compact exponent floor((k+1)/2)+1 on (1-z) disagrees for k in "
            f"{bad}; checked with the parity-split exponents 2k+1 / 2k+3"
        )


def c_3_14(c: Context):
    L, Lbar = c.L
    for n, k in _pairs(c.max_n):
        yield f"n={n},k={k}", _reversal(n, k), (L[n, k], L[n, k] - Lbar[n, k])


def c_thm_3_2(c: Context):
    L, Lbar = c.L
    for n, k in _pairs(c.max_n):
        yield f"n={n},k={k}", _inv_counts(n, k, 2), (L[n, k], Lbar[n, k])
        shift = binomial(k + 1, 2)
        sub = _subset_counts(n, k, 2)
        yield f"parity shift n={n},k={k}", _inv_counts(n, k, 2), (sub[shift % 2], sub[(shift + 1) % 2])


def c_bracelet(c: Context):
    L, _ = c.L
    for m in range(c.max_n + 1):
        for k in range(m + 1):
            yield f"n={m - k},k={k}", oracle.bracelet_count(m - k, k), L[m, k]


# Section: residues mod q^2 - 1


def c_4_1(c: Context):
    e, o = c.eo
    L, Lbar = c.L
    eps, lam = epsilon_table(c.deep_n, 2), lambda_table(c.deep_n, 2)
    for n, k in _pairs(c.deep_n):
        yield f"eps n={n},k={k}", epsilon_direct(n, k, 2), ResiduePoly([e[n, k], o[n, k]])
        yield f"eps table n={n},k={k}", eps[n, k], ResiduePoly([e[n, k], o[n, k]])
        yield f"lam n={n},k={k}", lambda_direct(n, k, 2), ResiduePoly([L[n, k], Lbar[n, k]])
        yield f"lam table n={n},k={k}", lam[n, k], ResiduePoly([L[n, k], Lbar[n, k]])


def _newton_sequence(N: int):
    zero = UniPoly((), "q")
    acc = XPoly([UniPoly([1], "q")], zero, "x")
    yield 0, acc
    for j in range(1, N + 1):
        acc = acc * XPoly([UniPoly([1], "q"), UniPoly.monomial(j, "q")], zero, "x")
        yield j, acc


def c_4_2(c: Context):
    for n, pn in _newton_sequence(c.deep_n):
        for k in range(n + 1):
            yield f"n={n},k={k}", pn[k], q_binomial(n, k).shift(binomial(k + 1, 2))


def c_4_3(c: Context):
    for n in range(c.deep_n + 1):
        rhs = XPoly.from_components([L_poly(n), Lbar_poly(n)], 2)
        yield f"n={n}", rogers_szego(n).reduce_mod(2), rhs


def c_4_4(c: Context):
    for n, pn in _newton_sequence(c.deep_n):
        rhs = XPoly.from_components([e_poly(n), o_poly(n)], 2)
        yield f"n={n}", pn.reduce_mod(2), rhs


ONE_MINUS_Q = ResiduePoly([1, -1])


def c_4_5(c: Context):
    for n in range(c.deep_n + 1):
        lhs = epsilon_poly(n, 2) * ONE_MINUS_Q
        rhs = residue_x((1 - X) ** ((n + 1) // 2) * (1 + X) ** (n // 2), 2) * ONE_MINUS_Q
        yield f"n={n}", lhs, rhs


def c_4_6(c: Context):
    for n in range(c.deep_n // 2 + 1):
        lam_even = rogers_szego(2 * n).reduce_mod(2)
        yield f"even n={n}", lam_even * ONE_MINUS_Q, residue_x((1 + X * X) ** n, 2) * ONE_MINUS_Q
        yield f"odd n={n}", rogers_szego(2 * n + 1).reduce_mod(2), lam_even * (1 + X)


def c_4_4a(c: Context):
    for n in range(1, c.deep_n // 2 + 1):
        lhs = L_poly(2 * n)
        first = (X + 1) * L_poly(2 * n - 1) + X * Lbar_poly(2 * n - 2) - X * L_poly(2 * n - 2)
        second = (X + 1) * L_poly(2 * n - 1) - 2 * X * L_poly(2 * n - 2) + X * (1 + X) ** (2 * n - 2)
        yield f"n={n} with Lbar", lhs, first
        yield f"n={n} with binomial", lhs, second
        lam = [rogers_szego(m).reduce_mod(2) for m in (2 * n - 2, 2 * n - 1, 2 * n)]
        rhs = lam[1] * (X + 1) + lam[0] * residue_x(X, 2) * ResiduePoly([-1, 1])
        yield f"n={n} residue", lam[2], rhs


def c_4_7(c: Context):
    q1 = UniPoly([1], "q")
    for n in range(2, c.deep_n + 1):
        factor = UniPoly.monomial(n - 1, "q") - q1
        rhs = rogers_szego(n - 1) * (X + 1) + rogers_szego(n - 2) * X * factor
        yield f"n={n}", rogers_szego(n), rhs


def c_4_8(c: Context):
    for n, k in _pairs(c.max_n):
        yield f"n={n},k={k}", q_binomial(n, k).coeffs, oracle.inv_distribution(n, k)


def c_4_9(c: Context):
    L, _ = c.L
    for n, k in _pairs(c.deep_n):
        qb = q_binomial(n, k)
        yield f"n={n},k={k}", 2 * L[n, k], eval_int(qb, 1) + eval_int(qb, -1)


def c_4_10(c: Context):
    for n, k in _pairs(c.deep_n):
        yield f"n={n},k={k}", eval_int(q_binomial(n, k), -1), qbinom_at_minus1(n, k)


def c_4_11(c: Context):
    for n, k in _pairs(c.max_n):
        yield f"n={n},k={k}", _reversal(n, k)[1], eval_int(q_binomial(n, k), -1)


def c_4_12(c: Context):
    for n in range(c.deep_n + 1):
        m = n // 2
        rhs = (1 + X * X) ** m * ((1 + X) if n % 2 else 1)
        yield f"n={n}", rogers_szego(n).at_q(-1), rhs


def _residue_recursions(p: int, N: int):
    for n, k in _pairs(N):
        if n == 0 or k == 0:
            continue
        eps = (epsilon_direct(n - 1, k, p) + epsilon_direct(n - 1, k - 1, p)).shift(k)
        lam = lambda_direct(n - 1, k, p).shift(k) + lambda_direct(n - 1, k - 1, p)
        yield n, k, eps, lam


def c_4_13(c: Context):
    eps = epsilon_table(c.deep_n, 2)
    for n, k, rec, _ in _residue_recursions(2, c.deep_n):
        yield f"n={n},k={k}", epsilon_direct(n, k, 2), rec
    for n, k in _pairs(c.deep_n):
        yield f"table n={n},k={k}", eps[n, k], epsilon_direct(n, k, 2)


def c_4_14(c: Context):
    lam = lambda_table(c.deep_n, 2)
    for n, k, _, rec in _residue_recursions(2, c.deep_n):
        yield f"n={n},k={k}", lambda_direct(n, k, 2), rec
    for n, k in _pairs(c.deep_n):
        yield f"table n={n},k={k}", lam[n, k], lambda_direct(n, k, 2)


def c_4_15(c: Context):
    L, Lbar = c.L
    for n in range(1, c.deep_n + 1):
        for k in range(0, n + 1, 2):
            yield f"even n={n},k={k}", L[n, k], L[n - 1, k] + L[n - 1, k - 1]
        for k in range(1, n + 1, 2):
            yield f"odd n={n},k={k}", L[n, k], Lbar[n - 1, k] + L[n - 1, k - 1]


def c_4_16(c: Context):
    L, Lbar = c.L
    for n in range(c.deep_n + 1):
        total = sum(
            L[n, 2 * k] ** 2 + Lbar[n, 2 * k] ** 2 + 2 * L[n, 2 * k + 1] * Lbar[n, 2 * k + 1]
            for k in range(n // 2 + 1)
        )
        yield f"n={n}", total, L[2 * n, n]
    for n in range(min(c.deep_n, 20) + 1):
        lhs = sum((q_binomial(n, k) ** 2 * UniPoly.monomial(k * k, "q") for k in range(n + 1)), UniPoly((), "q"))
        yield f"q-form n={n}", lhs, q_binomial(2 * n, n)
        lam = [lambda_direct(n, k, 2) for k in range(n + 1)]
        even = sum((a * a for a in lam[0::2]), ResiduePoly.zero(2))
        odd = sum((a * a for a in lam[1::2]), ResiduePoly.zero(2))
        yield f"residue form n={n}", even + odd.shift(1), lambda_direct(2 * n, n, 2)


# Section: q-Fibonacci and pentagonal sums


def c_4_4d(c: Context):
    fib = [0, 1]
    for _ in range(c.deep_n):
        fib.append(fib[-1] + fib[-2])
    for n in range(c.deep_n + 1):
        yield f"sum vs recursion n={n}", q_fibonacci(n), q_fibonacci_sum(n)
        yield f"q=1 n={n}", q_fibonacci(n).at_q(1), fibonacci_poly(n)
        yield f"F_{n}(1)", fibonacci_poly(n)(1), fib[n]


def c_4_17(c: Context):
    for n in range(c.deep_n // 2 + 1):
        Fn2 = fibonacci_poly(n).substitute_power(2)
        yield f"2n, n={n}", q_fibonacci(2 * n).at_q(-1), Fn2
        rhs = fibonacci_poly(n + 1).substitute_power(2) + S * Fn2
        yield f"2n+1, n={n}", q_fibonacci(2 * n + 1).at_q(-1), rhs


def _phi(n: int) -> XPoly:
    return q_fibonacci(n).reduce_mod(2)


def c_4_18(c: Context):
    zero = ResiduePoly.zero(2)
    lam = lambda_table(c.deep_n, 2)
    for n in range(c.deep_n + 1):
        phi = _phi(n)
        yield f"q^0 part n={n}", phi.component(0), losanitsch_fib(n)
        via_lambda = XPoly([lam[n - 1 - k, k] for k in range((n - 1) // 2 + 1)], zero, "s")
        yield f"lambda sum n={n}", phi, via_lambda
        if n >= 3:
            shifted = XPoly([zero] + [a.shift(n - 3) for a in _phi(n - 2).coeffs], zero, "s")
            yield f"residue recursion n={n}", phi, _phi(n - 1) + shifted


def c_4_19(c: Context):
    f = losanitsch_fib
    for n in range(1, c.deep_n // 2 + 1):
        F = fibonacci_poly
        yield f"f_2n n={n}", 2 * f(2 * n), F(2 * n) + F(n).substitute_power(2)
        rhs = F(2 * n + 1) + F(n + 1).substitute_power(2) + S * F(n).substitute_power(2)
        yield f"f_2n+1 n={n}", 2 * f(2 * n + 1), rhs
        yield f"odd step n={n}", f(2 * n + 1), f(2 * n) + S * f(2 * n - 1)
        if n >= 1:
            fbar = _phi(2 * n - 2).component(1)
            yield f"even step n={n}", f(2 * n), f(2 * n - 1) + S * fbar


def c_4_20(c: Context):
    L, _ = c.L
    vals = [losanitsch_fib(n)(1) for n in range(c.deep_n + 1)]
    yield "prefix", tuple(vals[: len(FIB_PREFIX)]), FIB_PREFIX
    for n in range(c.deep_n + 1):
        direct = sum(L[n - 1 - k, k] for k in range((n - 1) // 2 + 1)) if n else 0
        yield f"n={n}", vals[n], direct
    fib = [fibonacci_poly(n)(1) for n in range(c.deep_n + 3)]
    for n in range(1, (c.deep_n - 1) // 2 + 1):
        yield f"2n n={n}", 2 * vals[2 * n], fib[2 * n] + fib[n]
        yield f"2n+1 n={n}", 2 * vals[2 * n + 1], fib[2 * n + 1] + fib[n + 2]


def c_4_4e(c: Context):
    for n in range(c.deep_n + 1):
        f = pentagonal_f(n)
        yield f"recursion vs sum n={n}", f, pentagonal_f_sum(n)
        if n:
            yield f"Euler partial sum n={n}", f, euler_product(f.degree)
    for n in range(36 + 1):
        yield f"period n={n}", pentagonal_phi(n + 12), pentagonal_phi(n)
    for n, (a, b) in enumerate(PHI_PREFIX):
        yield f"phi({n})", pentagonal_phi(n), ResiduePoly([a, b])


def c_prop_4_4(c: Context):
    e, _ = c.eo

    def s(n):
        return sum((-1) ** k * e[n - 1 - k, k] for k in range((n - 1) // 2 + 1)) if n else 0

    yield "prefix", tuple(s(n) for n in range(12)), ALT_E_PREFIX
    for n in range(36 + 1):
        yield f"n={n}", s(n + 12), s(n)
    c.notes["prop4.4"] = (
        f"printed prefix {list(ALT_E_PRINTED)} has 11 values; "
        f"the period-12 prefix is {list(ALT_E_PREFIX)}"
    )


# Section: residues modulo a prime p


def c_4_21(c: Context):
    for p in c.residue_primes:
        eps = epsilon_table(c.deep_n, p)
        for n, k in _pairs(c.max_n):
            yield f"oracle p={p},n={n},k={k}", eps[n, k].coeffs, _subset_counts(n, k, p)
        for n, k in _pairs(c.deep_n):
            yield f"p={p},n={n},k={k}", eps[n, k], epsilon_direct(n, k, p)


def c_4_23(c: Context):
    for p in c.residue_primes:
        for n, k, rec, _ in _residue_recursions(p, c.deep_n):
            yield f"p={p},n={n},k={k}", epsilon_direct(n, k, p), rec


def _sum_term(p: int, n: int) -> UniPoly:
    acc = sum((X ** i * binomial(p, i) for i in range(1, p)), UniPoly((), "x"))
    return (acc * (1 + X) ** (n - p)).exact_div(p)


def c_4_24(c: Context):
    for p in c.odd_primes:
        for n in range(p, c.deep_n + 1):
            for j in range(p):
                rhs = (1 + X ** p) * residue_class_poly(n - p, j, p) + _sum_term(p, n)
                yield f"p={p},n={n},j={j}", residue_class_poly(n, j, p), rhs


def c_4_25(c: Context):
    for p in c.odd_primes:
        for n in range(p + 1, c.deep_n + 1):
            for j in range(p):
                def r(m):
                    return residue_class_poly(m, j, p)

                lhs = r(n) - (1 + X) * r(n - 1) - (1 + X ** p) * r(n - p) + (1 + X) * (1 + X ** p) * r(n - p - 1)
                yield f"p={p},n={n},j={j}", lhs, UniPoly((), "x")


def c_4_26(c: Context):
    for p in c.odd_primes:
        eps = epsilon_table(c.deep_n, p)
        for n in range(p, c.deep_n + 1):
            for k in range(n + 1):
                total = sum(binomial(p, l) * binomial(n - p, k - l) for l in range(1, p))
                if total % p:
                    yield f"p={p},n={n},k={k} divisibility", total % p, 0
                lhs = eps[n, k] - eps[n - p, k] - eps[n - p, k - p]
                yield f"p={p},n={n},k={k}", lhs, ResiduePoly.ones(p) * (total // p)


def c_4_27(c: Context):
    for p in c.odd_primes:
        eps = epsilon_table(c.max_n, p)
        for n in range(p, c.max_n + 1):
            for k in range(n + 1):
                rhs = cyclotomic_reduce(eps[n - p, k] + eps[n - p, k - p])
                yield f"p={p},n={n},k={k}", cyclotomic_reduce(eps[n, k]), rhs


def c_4_28(c: Context):
    for p in c.odd_primes:
        for i, b in enumerate(b_polys(p)):
            yield f"p={p} deg b_{i}", b.degree, i
        for m in range(max(3 * p, c.deep_n) + 1):
            yield f"p={p},m={m}", general_e_closed(m, p), general_e_poly(m, p)


def c_4_29(c: Context):
    for p in c.odd_primes:
        N = max(12, c.deep_n)
        coeffs = series_expand(catalog_gf("4.29", p=p), N)
        for n, cn in enumerate(coeffs):
            yield f"p={p},n={n}", cn, general_e_poly(n, p)


def c_4_31(c: Context):
    for p in c.residue_primes:
        lam = lambda_table(c.deep_n, p)
        for n, k in _pairs(c.max_n):
            yield f"oracle p={p},n={n},k={k}", lam[n, k].coeffs, _inv_counts(n, k, p)
        for n, k in _pairs(c.deep_n):
            yield f"p={p},n={n},k={k}", lam[n, k], lambda_direct(n, k, p)


def c_4_32(c: Context):
    for p in c.residue_primes:
        for n, k, _, rec in _residue_recursions(p, c.deep_n):
            yield f"p={p},n={n},k={k}", lambda_direct(n, k, p), rec


def c_L_column_shift(c: Context):
    for p in c.residue_primes:
        lam, eps = lambda_table(c.deep_n, p), epsilon_table(c.deep_n, p)
        for n, k in _pairs(c.deep_n):
            for j in range(p):
                yield f"p={p},n={n},k={k},j={j}", lam[n, k][j], eps[n, k][(j + binomial(k + 1, 2)) % p]


def c_pL_palindromic(c: Context):
    for p in c.residue_primes:
        lam = lambda_table(c.deep_n, p)
        for n, k in _pairs(c.deep_n):
            yield f"p={p},n={n},k={k}", lam[n, n - k], lam[n, k]


def c_prop_5_2(c: Context):
    for p in c.residue_primes:
        lam, eps = lambda_table(c.deep_n, p), epsilon_table(c.deep_n, p)
        for k in range(c.deep_n + 1):
            ones = [i for i in range(p) if eps[k, k][i] == 1]
            yield f"p={p},k={k} diagonal-one residues", len(ones), 1
            col = [lam[n, k][0] for n in range(c.deep_n + 1)]
            yield f"p={p},k={k} column", col, [eps[n, k][ones[0]] for n in range(c.deep_n + 1)]


def c_thm_5_3(c: Context):
    for p in c.residue_primes:
        lam = lambda_table(c.max_n, p)
        for n, k in _pairs(c.max_n):
            yield f"p={p},n={n},k={k}", lam[n, k][0], _inv_counts(n, k, p)[0]


def c_losert(c: Context):
    for p in c.odd_primes:
        if p > c.max_n:
            continue
        for k in range(1, p):
            for j in range(p):
                yield f"p={p},k={k},j={j}", _subset_counts(p, k, p)[j] * p, binomial(p, k)


@dataclass(frozen=True)
class Check:
    identity: str
    title: str
    run: Callable[[Context], Iterator[Comparison]]
    scope: str  # "oracle", "deep", "gf", "fixed"
    note: str = ""


_PLUS_NOTE = "printed recursion lacks the '+' before the trailing term; checked with it"

CHECKS: tuple[Check, ...] = (
    Check("1.1", "e + o equals the binomial coefficient", c_sum_law, "deep"),
    Check("1.2", "two-step parity recursion for e and o", c_lemma_1_1, "deep"),
    Check("lemma1.2", "element sum = C(k+1,2) + inv of the starred word", c_lemma_1_2, "oracle"),
    Check("2.1", "recursion-built e/o tables equal subset enumeration", c_2_1, "oracle"),
    Check("2.2", "inhomogeneous polynomial recursion for e_n, o_n", c_2_2, "deep"),
    Check("2.3", "homogeneous third-order recursion for e_n, o_n", c_2_3, "deep"),
    Check("2.4", "closed forms of e_n, o_n equal the table rows", c_2_4, "deep"),
    Check("2.4p", "e_n palindromic exactly when n = 0, 3 mod 4", c_e_palindromic, "deep"),
    Check("2.5", "generating function of e_n (both forms)", c_2_5, "deep"),
    Check("2.6", "generating function of o_n (both forms)", c_2_6, "deep"),
    Check("2.7", "generating function of reversed e_n (both forms)", c_2_7, "deep"),
    Check("2.8", "factored form of e_n", c_2_8, "deep"),
    Check("2.9", "double binomial sum for e(n,k)", c_2_9, "deep"),
    Check("2.10", "e(2n,n) = sum C(n,2k)^2", c_2_10, "deep"),
    Check("2.11", "column generating functions of e, even columns", c_2_11, "gf"),
    Check("2.12", "column generating functions of e, odd columns", c_2_12, "gf"),
    Check("2.13", "column generating functions of e via e_k / o_k", c_2_13, "gf"),
    Check("3.2", "inhomogeneous polynomial recursion for L_n, Lbar_n", c_3_2, "deep", _PLUS_NOTE),
    Check("3.3", "homogeneous third-order recursion for L_n, Lbar_n", c_3_3, "deep"),
    Check("3.4", "three-term Losanitsch recursion and even-inversion count", c_3_4, "oracle", _PLUS_NOTE),
    Check("3.5", "columns of L alternate e, o, o, e", c_3_5, "deep"),
    Check("prop3.1", "L is the e/o column matrix with unit diagonal", c_prop_3_1, "deep"),
    Check("3.6", "closed forms of L_n, Lbar_n equal the table rows", c_3_6, "deep"),
    Check("3.7", "L_{2n+1} = (1+x) L_{2n}", c_3_7, "deep"),
    Check("3.8", "L_n palindromic, L(n,n-k) = L(n,k)", c_3_8, "deep"),
    Check("3.10", "closed forms of L(n,k), Lbar(n,k)", c_3_10, "deep"),
    Check("3.11", "generating function of L_n (both forms)", c_3_11, "deep"),
    Check("3.12", "column and codiagonal generating functions of L", c_3_12, "gf"),
    Check("3.13", "codiagonal generating functions of e", c_3_13, "gf"),
    Check("3.14", "reversal classes = L, palindromes = L - Lbar", c_3_14, "oracle"),
    Check("thm3.2", "L counts words with evenly many inversions", c_thm_3_2, "oracle"),
    Check("bracelet", "bracelets with one blue bead number L(n+k,k)", c_bracelet, "oracle"),
    Check("4.1", "e + o q and L + Lbar q as q-binomial residues mod q^2-1", c_4_1, "deep"),
    Check("4.2", "q-Newton product expands to q^C(k+1,2) [n k]", c_4_2, "deep"),
    Check("4.3", "Rogers-Szego mod q^2-1 is L_n + q Lbar_n", c_4_3, "deep"),
    Check("4.4", "q-Newton mod q^2-1 is e_n + q o_n", c_4_4, "deep"),
    Check("4.5", "(1-q) eps_n(x) factorization", c_4_5, "deep"),
    Check("4.6", "(1-q) lambda_{2n}(x) and lambda_{2n+1} = (1+x) lambda_{2n}", c_4_6, "deep"),
    Check("4.4a", "L_{2n} recurrence through L_{2n-1}, L_{2n-2}", c_4_4a, "deep"),
    Check("4.7", "Rogers-Szego three-term recurrence", c_4_7, "deep"),
    Check("4.8", "q-binomial is the inversion generating function", c_4_8, "oracle"),
    Check("4.9", "2L = [n k] at q=1 plus at q=-1", c_4_9, "deep"),
    Check("4.10", "q-binomial at q=-1 closed form", c_4_10, "deep"),
    Check("4.11", "palindromic words counted by [n k] at q=-1", c_4_11, "oracle"),
    Check("4.12", "Rogers-Szego at q=-1", c_4_12, "deep"),
    Check("4.13", "one-step recursion for eps mod q^2-1", c_4_13, "deep"),
    Check("4.14", "one-step recursion for lambda mod q^2-1", c_4_14, "deep"),
    Check("4.15", "column-parity recursions for L", c_4_15, "deep"),
    Check(
        "4.16",
        "sum of squares identity for L(2n,n) and its q-form",
        c_4_16,
        "deep",
        "the q-form needs squared q-binomials: sum q^(k^2) [n k]^2 = [2n n]",
    ),
    Check("4.4d", "q-Fibonacci sum = recursion; q=1 Fibonacci", c_4_4d, "deep"),
    Check("4.17", "q-Fibonacci at q=-1", c_4_17, "deep"),
    Check("4.18", "q^0 part of F_n mod q^2-1 is sum L(n-1-k,k) s^k", c_4_18, "deep"),
    Check("4.19", "f_n through ordinary Fibonacci polynomials", c_4_19, "deep"),
    Check("4.20", "f_n(1) sequence", c_4_20, "deep"),
    Check("4.4e", "alternating q-sums are Euler pentagonal partial sums, period 12 mod q^2-1", c_4_4e, "deep"),
    Check("prop4.4", "sum (-1)^k e(n-1-k,k) has period 12", c_prop_4_4, "fixed"),
    Check("4.21", "eps mod q^p-1 counts subset sums by residue", c_4_21, "oracle"),
    Check("4.23", "one-step recursion for eps mod q^p-1", c_4_23, "deep"),
    Check("4.24", "p-step recursion for e_n(j,x,p)", c_4_24, "deep"),
    Check("4.25", "homogeneous recursion for e_n(j,x,p)", c_4_25, "deep"),
    Check("4.26", "inhomogeneous p-step recursion for eps", c_4_26, "deep"),
    Check("4.27", "p-step recursion at a primitive p-th root of unity", c_4_27, "oracle"),
    Check("4.28", "closed form of e_n(x,p) with b_i of degree i", c_4_28, "deep"),
    Check("4.29", "generating function of e_n(x,p)", c_4_29, "deep"),
    Check("4.31", "lambda mod q^p-1 counts inversions by residue", c_4_31, "oracle"),
    Check("4.32", "one-step recursion for lambda mod q^p-1", c_4_32, "deep"),
    Check("Lshift", "L(n,k,j,p) = e(n,k,j+C(k+1,2),p)", c_L_column_shift, "deep"),
    Check("Lpal", "p-Losanitsch polynomials are palindromic", c_pL_palindromic, "deep"),
    Check("prop5.2", "L(.,.,0,p) is the residue-column matrix with unit diagonal", c_prop_5_2, "deep"),
    Check("thm5.3", "L(n,k,0,p) counts words with inv divisible by p", c_thm_5_3, "oracle"),
    Check("losert", "e(p,k,j,p) = C(p,k)/p for 0 < k < p", c_losert, "oracle"),
)

ALIASES = {
    "thm3.5": "3.14",
    "4.22": "4.21",
    "4.30": "4.31",
    "3.9": "3.8",
    "prop5.1": "4.24",
    "thm4.1": "4.1",
}

CHECK_IDS = tuple(ch.identity for ch in CHECKS)
_BY_ID = {ch.identity: ch for ch in CHECKS}


def resolve(identity: str) -> Check:
    key = ALIASES.get(identity, identity)
    if key not in _BY_ID:
        raise KeyError(f"unknown identity {identity!r}")
    return _BY_ID[key]


def _range(check: Check, c: Context) -> str:
    primes = ",".join(map(str, c.residue_primes))
    return {
        "oracle": f"n<={c.max_n};p in {primes}",
        "deep": f"n<={c.deep_n};p in {primes}",
        "gf": f"k<={c.gf_k};n<={c.gf_n}",
        "fixed": "n<=48",
    }[check.scope]


def run_check(identity: str, context: Context | None = None, **kwargs) -> CheckReport:
    c = context or Context(**kwargs)
    check = resolve(identity)
    mismatch = None
    for where, lhs, rhs in check.run(c):
        if lhs != rhs:
            mismatch = (where, str(lhs), str(rhs))
            break
    notes = [n for n in (check.note, c.notes.get(check.identity, "")) if n]
    return CheckReport(
        check.identity,
        check.title,
        _range(check, c),
        mismatch is None,
        mismatch,
        "; ".join(notes),
    )


def identity_battery(
    max_n: int = 14,
    primes=(3, 5, 7),
    ids=None,
    deep_n: int = 30,
    gf_n: int = 40,
    gf_k: int = 8,
) -> list[CheckReport]:
    """Run the catalog (or the selected ``ids``) and return one report per check."""
    c = Context(max_n=max_n, primes=tuple(primes), deep_n=deep_n, gf_n=gf_n, gf_k=gf_k)
    selected = CHECK_IDS if ids is None else [resolve(i).identity for i in ids]
    return [run_check(i, c) for i in selected]


def format_report(reports) -> str:
    return "".join(r.line() + "\n" for r in reports)
