"""Number triangles built by recursion and by closed form.

Integer families: even/odd subset-sum counts ``e``/``o``, the Losanitsch
triangle ``L`` and its complement ``Lbar`` against Pascal, and the
q = -1 specialization of the Gaussian binomials. Residue families: the
mod q^p - 1 classes ``epsilon`` (subset sums) and ``lambda`` (inversions).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .algebra import ResiduePoly, binomial, q_binomial, residue_reduce


@dataclass(frozen=True)
class Triangle:
    """Rows 0..N of a lower-triangular table; row n holds entries k = 0..n."""

    name: str
    rows: tuple[tuple[Any, ...], ...]
    zero: Any = 0
    rule: str = ""

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} of {self.name} has {len(row)} entries")

    @property
    def size(self) -> int:
        """Index N of the last row."""
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} not built (rows 0..{self.size})")
        if 0 <= k <= n:
            return self.rows[n][k]
        return self.zero

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def column(self, k: int) -> list:
        """Entries (n, k) for n = 0..N, zeros above the diagonal included."""
        return [self[n, k] for n in range(len(self.rows))]

    def read_by_rows(self) -> list:
        return [a for row in self.rows for a in row]

    def coefficient(self, j: int) -> Triangle:
        """Integer triangle of q^j coefficients of a residue triangle."""
        if not isinstance(self.zero, ResiduePoly):
            raise TypeError(f"{self.name} has integer entries")
        if not 0 <= j < self.zero.p:
            raise ValueError(f"j={j} outside 0..{self.zero.p - 1}")
        rows = tuple(tuple(a[j] for a in row) for row in self.rows)
        return Triangle(f"{self.name}[q^{j}]", rows, 0, self.rule)

    def as_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


def _check_n(N: int) -> None:
    if N < 0:
        raise ValueError("N must be non-negative")


@lru_cache(maxsize=None)
def e_o_tables(N: int) -> tuple[Triangle, Triangle]:
    """Even- and odd-sum subset counts, each from its own same-parity recursion.

    a(n, k) = a(n-2, k) + C(n-1, k-1) - a(n-2, k-2), seeded by rows 0 and 1.
    """
    _check_n(N)
    seeds = {"e": ((1,), (1, 0)), "o": ((0,), (0, 1))}
    out = []
    for name, (r0, r1) in seeds.items():
        rows = [r0, r1][: N + 1]
        for n in range(2, N + 1):
            prev = rows[n - 2]

            def a(k):
                return prev[k] if 0 <= k <= n - 2 else 0

            rows.append(
                tuple(a(k) + binomial(n - 1, k - 1) - a(k - 2) for k in range(n + 1))
            )
        out.append(Triangle(name, tuple(rows), 0, "same-parity recursion"))
    e, o = out
    for n in range(N + 1):
        for k in range(n + 1):
            if e[n, k] + o[n, k] != binomial(n, k):
                raise ArithmeticError(f"e + o != C({n},{k})")
    return e, o


def e_closed(n: int, k: int) -> int:
    """e(n, k) as a double binomial sum from the factored polynomial."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    up, lo = (n + 1) // 2, n // 2
    return sum(binomial(up, 2 * j) * binomial(lo, k - 2 * j) for j in range(k // 2 + 1))


@lru_cache(maxsize=None)
def L_tables(N: int) -> tuple[Triangle, Triangle]:
    """Losanitsch triangle and its complement against Pascal's triangle.

    L(n, k) = L(n-2, k) + C(n-2, k-1) + L(n-2, k-2) with L(0, k) = [k = 0]
    and L(1, k) = [k <= 1].
    """
    _check_n(N)
    rows = [(1,), (1, 1)][: N + 1]
    for n in range(2, N + 1):
        prev = rows[n - 2]

        def a(k):
            return prev[k] if 0 <= k <= n - 2 else 0

        rows.append(
            tuple(a(k) + binomial(n - 2, k - 1) + a(k - 2) for k in range(n + 1))
        )
    L = Triangle("L", tuple(rows), 0, "three-term recursion")
    Lbar = Triangle(
        "Lbar",
        tuple(
            tuple(binomial(n, k) - L[n, k] for k in range(n + 1)) for n in range(N + 1)
        ),
        0,
        "Pascal minus L",
    )
    return L, Lbar


def _half(value: int) -> int:
    if value % 2:
        raise ArithmeticError(f"{value} is odd, halving is not exact")
    return value // 2


def L_closed(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    if n % 2 == 0 and k % 2 == 1:
        return _half(binomial(n, k))
    return _half(binomial(n, k) + binomial(n // 2, k // 2))


def Lbar_closed(n: int, k: int) -> int:
    return binomial(n, k) - L_closed(n, k)


def qbinom_at_minus1(n: int, k: int) -> int:
    """Gaussian binomial at q = -1: zero for even n and odd k, else C(n//2, k//2)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return binomial(n // 2, k // 2)


@lru_cache(maxsize=None)
def qbinom_minus1_table(N: int) -> Triangle:
    _check_n(N)
    rows = tuple(tuple(qbinom_at_minus1(n, k) for k in range(n + 1)) for n in range(N + 1))
    return Triangle("qbinom_minus1", rows, 0, "closed form")


def column_composition(k: int) -> str:
    """Which of e/o supplies column k of L: 'e' for k = 0, 3 mod 4, else 'o'."""
    return "e" if k % 4 in (0, 3) else "o"


def column_composition_check(N: int) -> bool:
    e, o = e_o_tables(N)
    L, _ = L_tables(N)
    source = {"e": e, "o": o}
    return all(
        L.column(k) == source[column_composition(k)].column(k) for k in range(N + 1)
    )


def _residue_table(name: str, N: int, p: int, both_shifted: bool) -> Triangle:
    _check_n(N)
    if p < 2:
        raise ValueError("p must be at least 2")
    zero, one = ResiduePoly.zero(p), ResiduePoly.one(p)
    rows = [(one,)]
    for n in range(1, N + 1):
        prev = rows[-1]

        def a(k):
            return prev[k] if 0 <= k <= n - 1 else zero

        row = [one]
        for k in range(1, n + 1):
            if both_shifted:
                row.append((a(k) + a(k - 1)).shift(k))
            else:
                row.append(a(k).shift(k) + a(k - 1))
        rows.append(tuple(row))
    return Triangle(name, tuple(rows), zero, "one-step residue recursion")


@lru_cache(maxsize=None)
def epsilon_table(N: int, p: int) -> Triangle:
    """Subset-sum residue classes: eps(n, k) = q^k (eps(n-1, k) + eps(n-1, k-1))."""
    return _residue_table(f"epsilon(p={p})", N, p, both_shifted=True)


@lru_cache(maxsize=None)
def lambda_table(N: int, p: int) -> Triangle:
    """Inversion residue classes: lam(n, k) = q^k lam(n-1, k) + lam(n-1, k-1)."""
    return _residue_table(f"lambda(p={p})", N, p, both_shifted=False)


def epsilon_direct(n: int, k: int, p: int) -> ResiduePoly:
    """q^C(k+1,2) [n k]_q folded mod q^p - 1 (no table involved)."""
    return residue_reduce(q_binomial(n, k).shift(binomial(k + 1, 2)), p)


def lambda_direct(n: int, k: int, p: int) -> ResiduePoly:
    return residue_reduce(q_binomial(n, k), p)


def _check_j(j: int, p: int) -> None:
    if not 0 <= j < p:
        raise ValueError(f"j={j} outside 0..{p - 1}")


def e_residue(n: int, k: int, j: int, p: int) -> int:
    """Number of k-subsets of {1..n} with sum congruent to j mod p."""
    _check_j(j, p)
    if not 0 <= k <= n:
        return 0
    return epsilon_table(n, p)[n, k][j]


def L_residue(n: int, k: int, j: int, p: int) -> int:
    """p-Losanitsch number: words in W(n, k) with inversion number j mod p."""
    _check_j(j, p)
    if not 0 <= k <= n:
        return 0
    return lambda_table(n, p)[n, k][j]


INTEGER_TRIANGLES = ("e", "o", "L", "Lbar", "qbinom_minus1")
RESIDUE_TRIANGLES = ("epsilon", "lambda")
COEFFICIENT_TRIANGLES = ("e_mod_p", "L_mod_p")
TRIANGLE_NAMES = INTEGER_TRIANGLES + RESIDUE_TRIANGLES + COEFFICIENT_TRIANGLES


def build(name: str, N: int, p: int | None = None, j: int | None = None) -> Triangle:
    """Look a triangle family up by name."""
    if name not in TRIANGLE_NAMES:
        raise ValueError(f"unknown triangle {name!r}; choose from {', '.join(TRIANGLE_NAMES)}")
    if name in INTEGER_TRIANGLES:
        if name in ("e", "o"):
            return e_o_tables(N)["eo".index(name)]
        if name in ("L", "Lbar"):
            return L_tables(N)[0 if name == "L" else 1]
        return qbinom_minus1_table(N)
    if p is None:
        raise ValueError(f"triangle {name!r} needs a modulus p")
    if p < 2:
        raise ValueError("p must be at least 2")
    table = epsilon_table(N, p) if name in ("epsilon", "e_mod_p") else lambda_table(N, p)
    if name in COEFFICIENT_TRIANGLES:
        return table.coefficient(0 if j is None else j)
    if j is not None:
        return table.coefficient(j)
    return table
