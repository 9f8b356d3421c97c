import cmath
import math

import pytest
from hypothesis import given, strategies as st

from losanitsch.algebra import (
    ResiduePoly,
    UniPoly,
    XPoly,
    binomial,
    cyclotomic_reduce,
    eval_int,
    is_prime,
    poly_add,
    poly_mul,
    poly_pow,
    q_binomial,
    render,
    residue_reduce,
)
from losanitsch.oracle import inv_distribution

ints = st.integers(-20, 20)
coeff_lists = st.lists(ints, max_size=8)
polys = coeff_lists.map(lambda c: UniPoly(c, "q"))


def residues(p):
    return st.lists(ints, min_size=p, max_size=p).map(lambda c: ResiduePoly(c))


def test_render_ascending_with_signs():
    assert render([1, 2, 0, -1], "q") == "1+2q-q^3"
    assert render([], "x") == "0"
    assert render([0, -1], "x") == "-x"
    assert str(UniPoly([0, 0, 3], "s")) == "3s^2"


def test_trimming_and_degree():
    f = UniPoly([1, 2, 0, 0])
    assert f.coeffs == (1, 2)
    assert f.degree == 1
    assert UniPoly().degree == -1
    assert f[10] == 0


def test_examples_from_contract():
    x = UniPoly([0, 1])
    assert poly_pow(1 + x, 3) == UniPoly([1, 3, 3, 1])
    assert poly_mul(1 + x, 1 - x) == UniPoly([1, 0, -1])
    assert poly_add(x, -x) == 0
    assert eval_int(UniPoly([1, 1]) ** 5, 1) == 32


def test_variable_mismatch_is_an_error():
    with pytest.raises(ValueError):
        UniPoly([1], "x") + UniPoly([1], "q")
    with pytest.raises(ValueError):
        UniPoly([1], "w")


def test_exact_division():
    assert UniPoly([2, 4]).exact_div(2) == UniPoly([1, 2])
    with pytest.raises(ArithmeticError):
        UniPoly([2, 3]).exact_div(2)


def test_reflect_and_palindromes():
    f = UniPoly([1, 2, 3])
    assert f.reflect(2) == UniPoly([3, 2, 1])
    assert f.reflect(4) == UniPoly([0, 0, 3, 2, 1])
    assert UniPoly([1, 3, 3, 1]).is_palindromic()
    assert not f.is_palindromic()


def test_binomial_against_pascal_rows():
    row = [1]
    for n in range(1, 31):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    assert row[15] == binomial(30, 15) == 155117520
    assert binomial(5, -1) == binomial(5, 6) == 0


def test_q_binomial_small_cases():
    assert q_binomial(4, 2) == UniPoly([1, 1, 2, 1, 1], "q")
    assert q_binomial(3, 0) == 1
    assert q_binomial(3, 4) == 0
    assert q_binomial(-1, 0) == 0


@pytest.mark.parametrize("n", range(0, 11))
def test_q_binomial_is_inversion_generating_function(n):
    for k in range(n + 1):
        assert q_binomial(n, k).coeffs == inv_distribution(n, k)


@given(st.integers(0, 25), st.integers(0, 25))
def test_q_binomial_symmetry_and_value_at_one(n, k):
    g = q_binomial(n, k)
    assert g == q_binomial(n, n - k)
    assert g(1) == binomial(n, k)
    if 0 <= k <= n:
        assert g.is_palindromic(k * (n - k))


@given(polys, polys, polys)
def test_unipoly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a * b == b * a
    assert a - a == 0


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, t):
    assert (a * b)(t) == a(t) * b(t)
    assert (a + b)(t) == a(t) + b(t)


@given(st.integers(2, 7).flatmap(lambda p: st.tuples(st.just(p), polys, polys)))
def test_residue_reduction_is_a_ring_homomorphism(args):
    p, a, b = args
    assert residue_reduce(a * b, p) == residue_reduce(a, p) * residue_reduce(b, p)
    assert residue_reduce(a + b, p) == residue_reduce(a, p) + residue_reduce(b, p)
    assert residue_reduce(a, p).at_one() == a(1)


def test_residue_examples():
    assert residue_reduce(UniPoly([1, 1, 1, 1], "q"), 2) == ResiduePoly([2, 2])
    assert ResiduePoly([0, 1]) * ResiduePoly([0, 1]) == ResiduePoly.one(2)
    assert ResiduePoly.ones(3).shift(1) == ResiduePoly.ones(3)
    assert str(ResiduePoly([1, 2, 1])) == "1+2q+q^2"
    assert str(ResiduePoly.zero(3)) == "0"
    with pytest.raises(ValueError):
        ResiduePoly([1, 2]) + ResiduePoly([1, 2, 3])


@given(st.sampled_from([3, 5, 7]).flatmap(lambda p: residues(p)))
def test_cyclotomic_reduction_matches_root_of_unity(a):
    p = a.p
    zeta = cmath.exp(2j * math.pi / p)
    direct = sum(c * zeta**j for j, c in enumerate(a.coeffs))
    reduced = cyclotomic_reduce(a)
    via = sum(c * zeta**j for j, c in enumerate(reduced.coeffs))
    assert abs(direct - via) < 1e-9
    assert reduced.degree < p - 1


def test_cyclotomic_reduction_needs_prime():
    assert cyclotomic_reduce(ResiduePoly.ones(5)) == 0
    with pytest.raises(ValueError):
        cyclotomic_reduce(ResiduePoly([1, 0, 0, 0]))


def test_at_minus_one():
    assert ResiduePoly([3, 1]).at_minus_one() == 2
    with pytest.raises(ValueError):
        ResiduePoly([1, 1, 1]).at_minus_one()


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_xpoly_arithmetic_and_components():
    zero = ResiduePoly.zero(2)
    f = XPoly([ResiduePoly([1, 0]), ResiduePoly([0, 1])], zero)
    g = f * f
    assert g[0] == ResiduePoly([1, 0])
    assert g[1] == ResiduePoly([0, 2])
    assert g[2] == ResiduePoly([1, 0])
    assert g.component(0) == UniPoly([1, 0, 1])
    assert g.component(1) == UniPoly([0, 2])
    assert XPoly.from_components([g.component(0), g.component(1)], 2) == g


def test_xpoly_reduce_and_specialize():
    r = XPoly([q_binomial(3, k) for k in range(4)], UniPoly((), "q"))
    assert r.at_q(1) == UniPoly([1, 3, 3, 1])
    assert r.reduce_mod(2)[1] == ResiduePoly([2, 1])
