"""OEIS b-files: parsing, export, cached download and offset-tolerant comparison."""
from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from . import triangles
from .families import losanitsch_fib, fibonacci_poly

CACHE_ENV = "LOSANITSCH_OEIS_CACHE"
URL = "https://oeis.org/{id}/b{digits}.txt"
SHIFTS = range(-4, 5)
MIN_OVERLAP = 10

_ID = re.compile(r"^A(\d{6})$")
_DATA = re.compile(r"^(-?\d+) (-?\d+)$")


class BFileError(ValueError):
    pass


class FetchError(RuntimeError):
    pass


@dataclass(frozen=True)
class BFile:
    seq_id: str
    entries: tuple[tuple[int, int], ...]
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        for (i, _), (j, _) in zip(self.entries, self.entries[1:]):
            if j != i + 1:
                raise BFileError(f"indices not consecutive: {i} then {j}")

    @property
    def offset(self) -> int:
        return self.entries[0][0] if self.entries else 0

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def check_id(seq_id: str) -> str:
    if not _ID.match(seq_id):
        raise BFileError(f"not an OEIS id: {seq_id!r}")
    return seq_id


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    entries, comments = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            comments.append(line)
            continue
        if not line.strip():
            continue  # real b-files occasionally end with blank lines
        m = _DATA.match(line)
        if not m:
            raise BFileError(f"line {lineno}: malformed b-file line {raw!r}")
        entries.append((int(m.group(1)), int(m.group(2))))
    return BFile(seq_id, tuple(entries), tuple(comments))


def format_bfile(bfile: BFile) -> str:
    lines = list(bfile.comments)
    lines += [f"{i} {v}" for i, v in bfile.entries]
    return "".join(line + "\n" for line in lines)


def _alt_e(n: int) -> int:
    if n == 0:
        return 0
    e, _ = triangles.e_o_tables(n)
    return sum((-1) ** k * e[n - 1 - k, k] for k in range((n - 1) // 2 + 1))


SCALAR_SOURCES = {
    "f1": lambda n: losanitsch_fib(n)(1),
    "fib": lambda n: fibonacci_poly(n)(1),
    "alt_e": _alt_e,
    "e_central": lambda n: triangles.e_o_tables(2 * n)[0][2 * n, n],
    "L_central": lambda n: triangles.L_tables(2 * n)[0][2 * n, n],
}

RULES = ("rows", "column", "diagonal")


@dataclass(frozen=True)
class SequenceView:
    """How a triangle or family is flattened into a single integer sequence.

    ``rows`` reads row by row from ``first_row`` on, each row from column
    ``first_col``; ``column`` gives T(n, k) for n >= k; ``diagonal`` gives
    T(n + k, n) for n >= 0 (k = 0 is the main diagonal). Scalar sources
    ignore the rule.
    """

    source: str
    rule: str = "rows"
    k: int = 0
    first_row: int = 0
    first_col: int = 0
    p: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.source not in SCALAR_SOURCES and self.source not in triangles.TRIANGLE_NAMES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    @property
    def is_scalar(self) -> bool:
        return self.source in SCALAR_SOURCES

    def values(self, n: int) -> list[int]:
        """Terms drawn from rows 0..n (or terms 0..n of a scalar sequence)."""
        if self.is_scalar:
            f = SCALAR_SOURCES[self.source]
            return [f(i) for i in range(n + 1)]
        T = triangles.build(self.source, n, self.p, self.j)
        if not isinstance(T.zero, int):
            raise ValueError(f"{self.source} has residue entries; pass j to pick a coefficient")
        if self.rule == "rows":
            return [
                T[r, c]
                for r in range(self.first_row, n + 1)
                for c in range(self.first_col, r + 1)
            ]
        if self.rule == "column":
            return [T[r, self.k] for r in range(self.k, n + 1)]
        return [T[r + self.k, r] for r in range(n - self.k + 1)]


def to_bfile(view: SequenceView, n: int, seq_id: str = "", offset: int = 0) -> BFile:
    vals = view.values(n)
    return BFile(seq_id, tuple((offset + i, v) for i, v in enumerate(vals)))


@dataclass(frozen=True)
class Comparison:
    matched: bool
    shift: int | None
    overlap: int
    mismatch: tuple[int, int, int] | None = None  # (reference index, local, reference)

    def describe(self, seq_id: str = "") -> str:
        if self.matched:
            return (
                f"{seq_id} match: {self.overlap} terms agree "
                f"(local index i aligned with reference index i{self.shift:+d})"
            )
        if self.mismatch is None:
            return f"{seq_id} no shift in [{SHIFTS[0]}, {SHIFTS[-1]}] gives {MIN_OVERLAP} overlapping terms"
        idx, mine, ref = self.mismatch
        return f"{seq_id} mismatch at reference index {idx}: local {mine}, reference {ref}"


def compare(local: list[int], reference: BFile, shifts=SHIFTS, min_overlap: int = MIN_OVERLAP) -> Comparison:
    """Align local term i with reference index i + shift, trying small shifts first.

    A shift matches when every overlapping term agrees and the overlap is at
    least ``min_overlap`` (or the whole of the shorter sequence).
    """
    ref = reference.as_dict()
    need = min(min_overlap, len(local), len(ref))
    first_bad = None
    for s in sorted(shifts, key=lambda t: (abs(t), t)):
        overlap, bad = 0, None
        for i, v in enumerate(local):
            if i + s in ref:
                overlap += 1
                if ref[i + s] != v and bad is None:
                    bad = (i + s, v, ref[i + s])
        if overlap >= need and overlap and bad is None:
            return Comparison(True, s, overlap)
        if s == 0 and bad is not None:
            first_bad = bad
        elif first_bad is None and bad is not None:
            first_bad = bad
    return Comparison(False, None, 0, first_bad)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "losanitsch" / "oeis"


def cache_path(seq_id: str, cache_dir: Path) -> Path:
    return Path(cache_dir) / f"b{check_id(seq_id)[1:]}.txt"


def _write_atomic(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fetch_bfile(
    seq_id: str,
    cache_dir: Path | None = None,
    offline: bool = False,
    timeout: float = 20.0,
    opener=urllib.request.urlopen,
) -> tuple[BFile, str]:
    """Download a b-file (falling back to the cache) and return it with its origin."""
    path = cache_path(seq_id, cache_dir or default_cache_dir())
    if not offline:
        url = URL.format(id=seq_id, digits=seq_id[1:])
        try:
            with opener(url, timeout=timeout) as resp:
                data = resp.read()
        except (urllib.error.URLError, OSError) as exc:
            if not path.exists():
                raise FetchError(f"could not fetch {url}: {exc}") from exc
        else:
            _write_atomic(path, data)
            return parse_bfile(data.decode("utf-8"), seq_id), url
    if not path.exists():
        raise FetchError(f"{seq_id} is not cached in {path.parent} and network use is off")
    return parse_bfile(path.read_text(encoding="utf-8"), seq_id), str(path)


def read_bfile(path, seq_id: str = "") -> BFile:
    return parse_bfile(Path(path).read_text(encoding="utf-8"), seq_id)
