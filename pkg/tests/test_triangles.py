from math import comb

import pytest
from hypothesis import given, strategies as st

import printed_tables as printed
from losanitsch import triangles
from losanitsch.algebra import ResiduePoly
from losanitsch.oracle import inv_residue_counts, reversal_classes, subset_residue_counts


def square(T, size):
    return [[T[n, k] for k in range(size)] for n in range(size)]


def square_str(T, size):
    return [[str(T[n, k]) for k in range(size)] for n in range(size)]


@pytest.mark.parametrize(
    "name,expected",
    [("e", printed.E), ("o", printed.O), ("L", printed.L), ("Lbar", printed.LBAR),
     ("qbinom_minus1", printed.QBINOM_MINUS1)],
)
def test_printed_integer_tables(name, expected):
    size = len(expected)
    assert square(triangles.build(name, size - 1), size) == expected


@pytest.mark.parametrize(
    "name,p,expected",
    [("epsilon", 2, printed.EPS2), ("lambda", 2, printed.LAM2),
     ("epsilon", 3, printed.EPS3), ("lambda", 3, printed.LAM3)],
)
def test_printed_residue_tables(name, p, expected):
    size = len(expected)
    assert square_str(triangles.build(name, size - 1, p), size) == expected


def test_triangle_access():
    L, _ = triangles.L_tables(5)
    assert L.size == 5
    assert L[5, 7] == 0 and L[5, -1] == 0
    with pytest.raises(IndexError):
        L[6, 0]
    assert L.column(2) == [0, 0, 1, 2, 4, 6]
    assert len(L.read_by_rows()) == 21
    with pytest.raises(ValueError):
        triangles.Triangle("bad", ((1,), (1,)))


def test_build_errors():
    with pytest.raises(ValueError):
        triangles.build("nope", 3)
    with pytest.raises(ValueError):
        triangles.build("epsilon", 3)
    with pytest.raises(ValueError):
        triangles.build("L_mod_p", 3, p=3, j=3)
    with pytest.raises(TypeError):
        triangles.build("L", 3).coefficient(0)


def test_coefficient_triangles():
    T = triangles.build("L_mod_p", 6, p=3, j=1)
    assert T[4, 2] == 2
    assert triangles.build("e_mod_p", 4, p=2)[4, 2] == 2


@pytest.mark.parametrize("n", range(0, 13))
def test_recursions_agree_with_enumeration(n):
    e, o = triangles.e_o_tables(n)
    L, Lbar = triangles.L_tables(n)
    for k in range(n + 1):
        even, odd = subset_residue_counts(n, k, 2)
        assert (e[n, k], o[n, k]) == (even, odd)
        assert e[n, k] == triangles.e_closed(n, k)
        assert L[n, k] == inv_residue_counts(n, k, 2)[0]
        assert L[n, k] == triangles.L_closed(n, k)
        assert Lbar[n, k] == triangles.Lbar_closed(n, k)
        classes, pal = reversal_classes(n, k)
        assert (classes, pal) == (L[n, k], L[n, k] - Lbar[n, k])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_residue_tables_against_enumeration_and_direct(p):
    N = 10
    eps, lam = triangles.epsilon_table(N, p), triangles.lambda_table(N, p)
    for n in range(N + 1):
        for k in range(n + 1):
            assert eps[n, k].coeffs == subset_residue_counts(n, k, p)
            assert lam[n, k].coeffs == inv_residue_counts(n, k, p)
            assert eps[n, k] == triangles.epsilon_direct(n, k, p)
            assert lam[n, k] == triangles.lambda_direct(n, k, p)


def test_residue_lookups():
    assert triangles.e_residue(5, 2, 0, 3) == 4  # sums 3,6,6,9 among the ten 2-subsets
    assert triangles.e_residue(5, 7, 0, 3) == 0
    with pytest.raises(ValueError):
        triangles.L_residue(5, 2, 3, 3)


def test_column_composition():
    assert [triangles.column_composition(k) for k in range(8)] == list("eooeeooe")
    assert triangles.column_composition_check(30)


@given(st.integers(0, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_row_identities(nk):
    n, k = nk
    e, o = triangles.e_o_tables(40)
    L, Lbar = triangles.L_tables(40)
    assert e[n, k] + o[n, k] == comb(n, k)
    assert L[n, k] + Lbar[n, k] == comb(n, k)
    assert L[n, k] == L[n, n - k]
    assert L[n, k] - Lbar[n, k] == triangles.qbinom_at_minus1(n, k)


def test_closed_form_domain():
    with pytest.raises(ValueError):
        triangles.L_closed(3, 4)
    with pytest.raises(ValueError):
        triangles.e_closed(3, -1)


def test_residue_entries_are_residue_polys():
    T = triangles.build("lambda", 3, p=5)
    assert isinstance(T.zero, ResiduePoly) and T.zero.p == 5
