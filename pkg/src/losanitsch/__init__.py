"""Exact computation of the Losanitsch triangle, subset-sum parity counts and
q-binomial coefficients modulo q^p - 1, with brute-force oracles, an identity
battery and OEIS b-file tools."""

from .algebra import (
    ResiduePoly,
    UniPoly,
    XPoly,
    binomial,
    cyclotomic_reduce,
    q_binomial,
    residue_reduce,
)
from .identities import CheckReport, format_report, identity_battery, run_check
from .oeis import BFile, SequenceView, compare, format_bfile, parse_bfile
from .series import RationalGF, catalog_gf, series_expand
from .triangles import Triangle, build

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "CheckReport",
    "RationalGF",
    "ResiduePoly",
    "SequenceView",
    "Triangle",
    "UniPoly",
    "XPoly",
    "binomial",
    "build",
    "catalog_gf",
    "compare",
    "cyclotomic_reduce",
    "format_bfile",
    "format_report",
    "identity_battery",
    "parse_bfile",
    "q_binomial",
    "residue_reduce",
    "run_check",
    "series_expand",
]
