"""Command line front end.

Exit status: 0 on success or when every check passes, 1 on a failed check,
a mismatch or an unreachable b-file, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import identities, oeis, series, triangles
from .algebra import is_prime

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _primes(text: str) -> tuple[int, ...]:
    try:
        ps = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated prime list: {text!r}")
    if not ps or any(not is_prime(p) for p in ps):
        raise argparse.ArgumentTypeError(f"not a comma-separated prime list: {text!r}")
    return ps


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def render_matrix(T: triangles.Triangle, sep: str = " ", pad: bool = True) -> str:
    """Square matrix with zeros above the diagonal, as the tables are usually printed."""
    N = T.size
    cells = [[str(T[n, k]) for k in range(N + 1)] for n in range(N + 1)]
    if pad:
        widths = [max(len(cells[n][k]) for n in range(N + 1)) for k in range(N + 1)]
        cells = [[c.rjust(w) for c, w in zip(row, widths)] for row in cells]
    return "".join(sep.join(row) + "\n" for row in cells)


def cmd_triangle(args) -> int:
    T = triangles.build(args.name, args.rows, args.p, args.j)
    if args.format == "table":
        sys.stdout.write(render_matrix(T))
    elif args.format == "csv":
        sys.stdout.write(render_matrix(T, ",", pad=False))
    else:
        if not isinstance(T.zero, int):
            raise UsageError(f"{args.name} has residue entries; choose a coefficient with --j")
        entries = tuple(enumerate(T.read_by_rows()))
        header = (f"# {T.name} read by rows, rows 0..{T.size}",)
        sys.stdout.write(oeis.format_bfile(oeis.BFile("", entries, header)))
    return OK


def cmd_verify(args) -> int:
    ids = None if args.ids == ["all"] else args.ids
    if ids is not None:
        for i in ids:
            try:
                identities.resolve(i)
            except KeyError:
                raise UsageError(f"unknown identity {i!r}; known: {', '.join(identities.CHECK_IDS)}")
    reports = identities.identity_battery(
        max_n=args.max_n,
        primes=tuple(p for p in args.primes if p != 2),
        ids=ids,
        deep_n=args.deep_n,
        gf_n=args.gf_n,
        gf_k=args.gf_k,
    )
    sys.stdout.write(identities.format_report(reports))
    failed = [r.identity for r in reports if not r.passed]
    print(f"# {len(reports)} checks, {len(failed)} failed" + (f": {' '.join(failed)}" if failed else ""))
    return FAILED if failed else OK


def cmd_series(args) -> int:
    try:
        gf = series.catalog_gf(args.name, k=args.k, p=args.p)
    except KeyError:
        raise UsageError(f"unknown generating function {args.name!r}; known: {', '.join(series.CATALOG)}")
    for c in series.series_expand(gf, args.terms):
        print(c)
    return OK


def _view(args) -> oeis.SequenceView:
    return oeis.SequenceView(
        args.source, args.by, args.k, args.first_row, args.first_col, args.p, args.j
    )


def cmd_oeis(args) -> int:
    view = _view(args)
    if args.action == "export":
        seq_id = oeis.check_id(args.id) if args.id else ""
        bf = oeis.to_bfile(view, args.rows, seq_id, args.offset)
        sys.stdout.write(oeis.format_bfile(bf))
        return OK
    seq_id = oeis.check_id(args.id)
    if args.file:
        try:
            ref = oeis.read_bfile(args.file, seq_id)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}")
        origin = str(args.file)
    else:
        try:
            ref, origin = oeis.fetch_bfile(seq_id, args.cache_dir, offline=args.offline)
        except oeis.FetchError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return FAILED
    result = oeis.compare(view.values(args.rows), ref)
    print(f"# reference {origin}")
    print(result.describe(seq_id))
    return OK if result.matched else FAILED


def _add_view_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", help="triangle name or scalar sequence (" + ", ".join(oeis.SCALAR_SOURCES) + ")")
    p.add_argument("--rows", type=_nonneg, default=40, help="last row (or last term) used")
    p.add_argument("--by", choices=oeis.RULES, default="rows", help="linearization")
    p.add_argument("--k", type=_nonneg, default=0, help="column or diagonal index")
    p.add_argument("--first-row", type=_nonneg, default=0)
    p.add_argument("--first-col", type=_nonneg, default=0)
    p.add_argument("--p", type=int)
    p.add_argument("--j", type=_nonneg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="losanitsch",
        description="Losanitsch triangle, subset-sum parity and q-binomials mod q^p-1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("triangle", help="print a number triangle")
    t.add_argument("name", choices=triangles.TRIANGLE_NAMES)
    t.add_argument("--rows", type=_nonneg, default=6, help="last row index")
    t.add_argument("--p", type=int, help="modulus for residue triangles")
    t.add_argument("--j", type=_nonneg, help="pick the q^j coefficient")
    t.add_argument("--format", choices=("table", "csv", "bfile"), default="table")
    t.set_defaults(func=cmd_triangle)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("ids", nargs="+", metavar="ID", help="identity ids or 'all'")
    v.add_argument("--max-n", type=_nonneg, default=14, help="bound for oracle checks")
    v.add_argument("--primes", type=_primes, default=(3, 5, 7), help="e.g. 3,5,7")
    v.add_argument("--deep-n", type=_nonneg, default=30, help="bound for recursion-only checks")
    v.add_argument("--gf-n", type=_nonneg, default=40, help="series terms for column checks")
    v.add_argument("--gf-k", type=_nonneg, default=8, help="largest column index")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="expand a generating function")
    s.add_argument("name", help="catalog name: " + ", ".join(series.CATALOG))
    s.add_argument("--terms", type=_nonneg, default=10, help="last coefficient index")
    s.add_argument("--k", type=_nonneg, default=0)
    s.add_argument("--p", type=int, default=3)
    s.set_defaults(func=cmd_series)

    o = sub.add_parser("oeis", help="export or compare OEIS b-files")
    osub = o.add_subparsers(dest="action", required=True)
    ex = osub.add_parser("export", help="write a view as b-file text")
    _add_view_args(ex)
    ex.add_argument("--id", help="sequence id for the header")
    ex.add_argument("--offset", type=int, default=0, help="index of the first term")
    ex.set_defaults(func=cmd_oeis)
    cmp_ = osub.add_parser("compare", help="compare a view with an OEIS b-file")
    cmp_.add_argument("id", help="sequence id, e.g. A034851")
    _add_view_args(cmp_)
    src = cmp_.add_mutually_exclusive_group()
    src.add_argument("--fetch", action="store_true", help="download (default), falling back to the cache")
    src.add_argument("--file", type=Path, help="read a local b-file instead")
    cmp_.add_argument("--cache-dir", type=Path, help=f"default: ${oeis.CACHE_ENV} or ~/.cache/losanitsch/oeis")
    cmp_.add_argument("--offline", action="store_true", help="never touch the network")
    cmp_.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
