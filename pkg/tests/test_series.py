import pytest

from losanitsch import families as F
from losanitsch import series as S
from losanitsch import triangles
from losanitsch.algebra import UniPoly

X = UniPoly([0, 1])


def test_geometric():
    assert S.series_expand(S.geometric(S.zpoly(1 + X)), 5) == [(1 + X) ** n for n in range(6)]


def test_small_catalog_examples():
    assert [str(c) for c in S.series_expand(S.catalog_gf("3.11"), 4)] == [
        "1", "1+x", "1+x+x^2", "1+2x+2x^2+x^3", "1+2x+4x^2+2x^3+x^4",
    ]
    assert [str(c) for c in S.series_expand(S.catalog_gf("2.5"), 2)] == ["1", "1", "1+x"]
    assert S.series_expand(S.catalog_gf("2.11", k=0), 3) == [1, 1, 1, 1]


@pytest.mark.parametrize(
    "name,family",
    [("2.5", F.e_poly), ("2.5h", F.e_poly), ("2.6", F.o_poly), ("2.6h", F.o_poly),
     ("2.7", F.e_star_poly), ("2.7h", F.e_star_poly), ("3.11", F.L_poly), ("3.11h", F.L_poly)],
)
def test_family_generating_functions(name, family):
    assert S.series_expand(S.catalog_gf(name), 30) == [family(n) for n in range(31)]


@pytest.mark.parametrize("k", range(0, 9))
def test_column_generating_functions(k):
    e, _ = triangles.e_o_tables(40)
    L, _ = triangles.L_tables(40)

    def col(T, j):
        return [UniPoly([T[n, j]]) for n in range(41)]

    assert S.series_expand(S.catalog_gf("2.13", k=k), 40) == col(e, k)
    assert S.series_expand(S.catalog_gf("3.12", k=k), 40) == col(L, k)
    assert S.series_expand(S.catalog_gf("2.11", k=k), 40) == col(e, 2 * k)
    assert S.series_expand(S.catalog_gf("2.12", k=k), 40) == col(e, 2 * k + 1)
    codiag = [UniPoly([e[n, n - k]]) if n >= k else UniPoly() for n in range(41)]
    assert S.series_expand(S.catalog_gf("3.13", k=k), 40) == codiag


def test_compact_codiagonal_form_differs_beyond_k0():
    e, _ = triangles.e_o_tables(40)
    for k in range(0, 9):
        codiag = [UniPoly([e[n, n - k]]) if n >= k else UniPoly() for n in range(41)]
        same = S.series_expand(S.catalog_gf("3.13c", k=k), 40) == codiag
        assert same == (k == 0)


@pytest.mark.parametrize("p", [3, 5])
def test_general_e_generating_function(p):
    assert S.series_expand(S.catalog_gf("4.29", p=p), 12) == [F.general_e_poly(n, p) for n in range(13)]


def test_rational_gf_validation():
    with pytest.raises(ValueError):
        S.RationalGF(S.ONE, S.zpoly(2, 1))
    with pytest.raises(ValueError):
        S.RationalGF(S.ONE, S.ONE, 0)
    with pytest.raises(KeyError):
        S.catalog_gf("9.99")
    with pytest.raises(ValueError):
        S.series_expand(S.geometric(S.ONE), -1)


def test_inexact_divisor_is_detected():
    with pytest.raises(ArithmeticError):
        S.series_expand(S.RationalGF(S.ONE, S.ONE, 2), 0)
