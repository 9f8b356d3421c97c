"""Exact polynomial arithmetic over the integers.

Three value types live here:

* ``UniPoly``: dense univariate polynomial with int coefficients, tagged with
  a variable name (``x``, ``z``, ``q`` or ``s``).
* ``ResiduePoly``: an element of Z[q]/(q^p - 1), always stored as exactly
  ``p`` coefficients.
* ``XPoly``: a polynomial in x (or s, or z) whose coefficients are
  themselves ring elements, either ``UniPoly`` in q or ``ResiduePoly``.

All values are immutable; Python ints give arbitrary precision for free.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

VARIABLES = ("x", "z", "q", "s")


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _term(c: int, power: int, var: str) -> str:
    if power == 0:
        return str(c)
    mono = var if power == 1 else f"{var}^{power}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}{mono}"


def render(coeffs: Sequence[int], var: str) -> str:
    """Ascending-power rendering with explicit signs, e.g. ``1+2q-q^3``."""
    out = ""
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        t = _term(c, i, var)
        if out and not t.startswith("-"):
            out += "+"
        out += t
    return out or "0"


class UniPoly:
    """Dense univariate integer polynomial in canonical (trimmed) form."""

    __slots__ = ("_c", "_var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "x"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        self._c = tuple(_trim([int(a) for a in coeffs]))
        self._var = var

    @classmethod
    def monomial(cls, power: int, var: str = "x", coeff: int = 1) -> UniPoly:
        if power < 0:
            raise ValueError("negative exponent")
        return cls([0] * power + [coeff], var)

    @classmethod
    def constant(cls, c: int, var: str = "x") -> UniPoly:
        return cls([c], var)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def var(self) -> str:
        return self._var

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __iter__(self):
        return iter(self._c)

    def _coerce(self, other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            if other._var != self._var:
                raise ValueError(
                    f"variable mismatch: {self._var!r} vs {other._var!r}"
                )
            return other
        if isinstance(other, int):
            return UniPoly([other], self._var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return UniPoly([self[i] + o[i] for i in range(n)], self._var)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-a for a in self._c], self._var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([a * other for a in self._c], self._var)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return UniPoly((), self._var)
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return UniPoly(out, self._var)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> UniPoly:
        if m < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self._var)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == UniPoly([other])._c
        if isinstance(other, UniPoly):
            return self._c == other._c and self._var == other._var
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._c, self._var))

    def __call__(self, t):
        """Horner evaluation; ``t`` may be an int or any ring element."""
        acc = 0
        for a in reversed(self._c):
            acc = acc * t + a
        return acc

    def shift(self, m: int) -> UniPoly:
        """Multiply by var^m."""
        if not self._c:
            return self
        return UniPoly([0] * m + list(self._c), self._var)

    def substitute_power(self, m: int) -> UniPoly:
        """p(v) -> p(v^m)."""
        if m < 1:
            raise ValueError("power must be positive")
        out = [0] * (m * max(len(self._c) - 1, 0) + 1)
        for i, a in enumerate(self._c):
            out[i * m] = a
        return UniPoly(out, self._var)

    def reflect(self, n: int) -> UniPoly:
        """var^n * p(1/var); requires degree <= n."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        padded = list(self._c) + [0] * (n + 1 - len(self._c))
        return UniPoly(reversed(padded), self._var)

    def is_palindromic(self, n: int | None = None) -> bool:
        return self.reflect(self.degree if n is None else n) == self

    def exact_div(self, d: int) -> UniPoly:
        """Divide every coefficient by ``d``, failing loudly on a remainder."""
        out = []
        for a in self._c:
            quot, rem = divmod(a, d)
            if rem:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            out.append(quot)
        return UniPoly(out, self._var)

    def with_var(self, var: str) -> UniPoly:
        return UniPoly(self._c, var)

    def __repr__(self) -> str:
        return f"UniPoly({list(self._c)}, var={self._var!r})"

    def __str__(self) -> str:
        return render(self._c, self._var)


def poly_add(a: UniPoly, b: UniPoly) -> UniPoly:
    return a + b


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    return a * b


def poly_pow(a: UniPoly, m: int) -> UniPoly:
    return a ** m


def eval_int(a: UniPoly, t: int) -> int:
    return a(t)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _qbinom_row(n: int) -> tuple[UniPoly, ...]:
    # [n k] = q^k [n-1 k] + [n-1 k-1]; additive, so no division is needed
    one = UniPoly([1], "q")
    if n == 0:
        return (one,)
    prev = _qbinom_row(n - 1)
    zero = UniPoly((), "q")
    row = []
    for k in range(n + 1):
        upper = prev[k].shift(k) if k < n else zero
        lower = prev[k - 1] if k > 0 else zero
        row.append(upper + lower)
    return tuple(row)


def q_binomial(n: int, k: int) -> UniPoly:
    """Gaussian binomial coefficient as an exact polynomial in q."""
    if n < 0 or k < 0 or k > n:
        return UniPoly((), "q")
    for m in range(0, n, 64):
        _qbinom_row(m)  # warm the cache so recursion depth stays shallow
    return _qbinom_row(n)[k]


class ResiduePoly:
    """Element of Z[q]/(q^p - 1), stored as exactly p coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], p: int | None = None):
        c = tuple(int(a) for a in coeffs)
        if p is not None and len(c) != p:
            raise ValueError(f"expected {p} coefficients, got {len(c)}")
        if len(c) < 2:
            raise ValueError("modulus degree p must be at least 2")
        self._c = c

    @classmethod
    def reduce(cls, coeffs: Iterable[int], p: int) -> ResiduePoly:
        """Fold an arbitrary coefficient sequence: q^m -> q^(m mod p)."""
        if p < 2:
            raise ValueError("modulus degree p must be at least 2")
        out = [0] * p
        for m, a in enumerate(coeffs):
            out[m % p] += a
        return cls(out)

    @classmethod
    def zero(cls, p: int) -> ResiduePoly:
        return cls([0] * p)

    @classmethod
    def one(cls, p: int) -> ResiduePoly:
        return cls.monomial(0, p)

    @classmethod
    def monomial(cls, m: int, p: int, coeff: int = 1) -> ResiduePoly:
        out = [0] * p
        out[m % p] = coeff
        return cls(out)

    @classmethod
    def ones(cls, p: int) -> ResiduePoly:
        """1 + q + ... + q^(p-1)."""
        return cls([1] * p)

    @property
    def p(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, j: int) -> int:
        return self._c[j]

    def __iter__(self):
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return any(self._c)

    def _coerce(self, other) -> ResiduePoly | None:
        if isinstance(other, ResiduePoly):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return ResiduePoly.monomial(0, self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResiduePoly([a + b for a, b in zip(self._c, o._c)])

    __radd__ = __add__

    def __neg__(self) -> ResiduePoly:
        return ResiduePoly([-a for a in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResiduePoly([a - b for a, b in zip(self._c, o._c)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            return ResiduePoly([a * other for a in self._c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        out = [0] * p
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[(i + j) % p] += a * b
        return ResiduePoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> ResiduePoly:
        result = ResiduePoly.one(self.p)
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ResiduePoly.monomial(0, self.p, other)._c
        if isinstance(other, ResiduePoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("residue", self._c))

    def shift(self, m: int) -> ResiduePoly:
        """Multiply by q^m (a cyclic rotation of the coefficients)."""
        p = self.p
        m %= p
        return ResiduePoly(self._c[p - m:] + self._c[: p - m])

    def lift(self) -> UniPoly:
        return UniPoly(self._c, "q")

    def at_one(self) -> int:
        return sum(self._c)

    def at_minus_one(self) -> int:
        if self.p % 2:
            raise ValueError("q = -1 is only well defined for even p")
        return sum(a if j % 2 == 0 else -a for j, a in enumerate(self._c))

    def __repr__(self) -> str:
        return f"ResiduePoly({list(self._c)})"

    def __str__(self) -> str:
        return render(self._c, "q")


def residue_reduce(a: UniPoly, p: int) -> ResiduePoly:
    return ResiduePoly.reduce(a.coeffs, p)


def residue_add(a: ResiduePoly, b: ResiduePoly) -> ResiduePoly:
    return a + b


def residue_mul(a: ResiduePoly, b: ResiduePoly) -> ResiduePoly:
    return a * b


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def cyclotomic_reduce(a: ResiduePoly) -> UniPoly:
    """Representative of ``a`` modulo 1 + q + ... + q^(p-1), degree < p - 1.

    Two residues agree at every primitive p-th root of unity exactly when
    their reductions are equal.
    """
    p = a.p
    if not is_prime(p):
        raise ValueError(f"cyclotomic reduction needs a prime modulus, got {p}")
    top = a[p - 1]
    return UniPoly([a[j] - top for j in range(p - 1)], "q")


class XPoly:
    """Polynomial in one outer variable with ring-valued coefficients.

    Coefficients are either all ``UniPoly`` in q or all ``ResiduePoly`` with a
    common modulus. ``zero`` fixes the coefficient ring when ``coeffs`` is
    empty.
    """

    __slots__ = ("_c", "_var", "_zero")

    def __init__(self, coeffs: Iterable, zero, var: str = "x"):
        c = list(coeffs)
        for a in c:
            if type(a) is not type(zero):
                raise TypeError(f"coefficient {a!r} does not match ring of {zero!r}")
            if isinstance(zero, ResiduePoly) and a.p != zero.p:
                raise ValueError("coefficients must share one modulus degree")
        self._c = tuple(_trim(c))
        self._zero = zero
        self._var = var

    @classmethod
    def from_int_poly(cls, f: UniPoly, zero) -> XPoly:
        """Embed an integer polynomial (constants times the ring's one)."""
        one = zero + 1
        return cls([one * a for a in f.coeffs], zero, f.var)

    @classmethod
    def from_components(cls, parts: Sequence[UniPoly], p: int) -> XPoly:
        """parts[j] is the coefficient polynomial of q^j; result lives mod q^p - 1."""
        if len(parts) > p:
            raise ValueError("more components than the modulus degree")
        var = parts[0].var if parts else "x"
        n = max((len(f) for f in parts), default=0)
        coeffs = [
            ResiduePoly.reduce([f[i] for f in parts], p) for i in range(n)
        ]
        return cls(coeffs, ResiduePoly.zero(p), var)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def var(self) -> str:
        return self._var

    @property
    def zero(self):
        return self._zero

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, i: int):
        if 0 <= i < len(self._c):
            return self._c[i]
        return self._zero

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def _same(self, c) -> XPoly:
        return XPoly(c, self._zero, self._var)

    def _coerce(self, other) -> XPoly | None:
        if isinstance(other, XPoly):
            if other._var != self._var:
                raise ValueError(
                    f"variable mismatch: {self._var!r} vs {other._var!r}"
                )
            return other
        if isinstance(other, UniPoly) and other.var == self._var:
            return XPoly.from_int_poly(other, self._zero)
        if isinstance(other, int):
            return self._same([self._zero + other])
        if type(other) is type(self._zero):
            return self._same([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return self._same([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return self._same([-a for a in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._same([a * other for a in self._c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return self._same([])
        out = [self._zero] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] = out[i + j] + a * b
        return self._same(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> XPoly:
        result = self._same([self._zero + 1])
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, XPoly) else other
        if o is None:
            return NotImplemented
        return self._c == o._c and self._var == o._var

    def __hash__(self) -> int:
        return hash((self._c, self._var))

    def map(self, fn, zero) -> XPoly:
        """Apply ``fn`` to every coefficient, landing in the ring of ``zero``."""
        return XPoly([fn(a) for a in self._c], zero, self._var)

    def reduce_mod(self, p: int) -> XPoly:
        """Fold every q-polynomial coefficient modulo q^p - 1."""
        return self.map(lambda a: residue_reduce(a, p), ResiduePoly.zero(p))

    def component(self, j: int) -> UniPoly:
        """Integer polynomial collecting the q^j coefficient of residue entries."""
        if not isinstance(self._zero, ResiduePoly):
            raise TypeError("component() needs residue coefficients")
        return UniPoly([a[j] for a in self._c], self._var)

    def at_q(self, t: int) -> UniPoly:
        """Evaluate every q-polynomial coefficient at q = t."""
        if not isinstance(self._zero, UniPoly):
            raise TypeError("at_q() needs exact q-polynomial coefficients")
        return UniPoly([a(t) for a in self._c], self._var)

    def __repr__(self) -> str:
        return f"XPoly({list(self._c)!r}, var={self._var!r})"

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self._c):
            if not a:
                continue
            mono = "" if i == 0 else (self._var if i == 1 else f"{self._var}^{i}")
            terms.append(f"({a}){mono}" if mono else f"({a})")
        return "+".join(terms) or "0"
