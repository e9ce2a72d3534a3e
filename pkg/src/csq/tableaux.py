"""Partitions, compositions and standard Young tableaux (French convention).

A tableau is stored column by column, each column read bottom to top, so
cell ``(i, j)`` (column ``i``, row ``j``, both 1-based) holds
``columns[i-1][j-1]``.  The bottom-left cell is ``(1, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


class ShapeError(ValueError):
    """A box cannot be placed where requested."""


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for tail in compositions(n - first):
            out.append((first,) + tail)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(x) for x in text.split(","))
    if not is_partition(parts):
        raise ValueError("%r is not a partition" % text)
    return parts


@dataclass(frozen=True, order=True)
class Tableau:
    columns: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Build from rows listed bottom row first."""
        rows = [list(r) for r in rows if len(r)]
        width = len(rows[0]) if rows else 0
        cols = tuple(
            tuple(r[i] for r in rows if len(r) > i) for i in range(width)
        )
        return cls(cols)

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Inverse of ``str``: ``"1 2 3 6/4 5"`` (bottom row first)."""
        text = text.strip()
        if not text or text == "∅":
            return cls()
        rows = [[int(x) for x in row.split()] for row in text.split("/")]
        t = cls.from_rows(rows)
        if not t.is_standard() or t.rows() != tuple(tuple(r) for r in rows):
            raise ValueError("%r is not a standard Young tableau" % text)
        return t

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def heights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    def height(self, i: int) -> int:
        """Height of column ``i`` (1-based); zero past the last column."""
        return len(self.columns[i - 1]) if 1 <= i <= len(self.columns) else 0

    def top(self, i: int) -> Optional[int]:
        """Label of the top box of column ``i``, or None if empty."""
        if 1 <= i <= len(self.columns):
            return self.columns[i - 1][-1]
        return None

    def rows(self) -> tuple[tuple[int, ...], ...]:
        if not self.columns:
            return ()
        return tuple(
            tuple(c[j] for c in self.columns if len(c) > j)
            for j in range(len(self.columns[0]))
        )

    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows())

    def position(self, label: int) -> tuple[int, int]:
        """1-based ``(column, row)`` of ``label``."""
        for i, col in enumerate(self.columns):
            for j, x in enumerate(col):
                if x == label:
                    return i + 1, j + 1
        raise KeyError(label)

    def is_standard(self) -> bool:
        cols = self.columns
        if any(len(c) == 0 for c in cols):
            return False
        if any(len(cols[i]) < len(cols[i + 1]) for i in range(len(cols) - 1)):
            return False
        labels = sorted(x for c in cols for x in c)
        if labels != list(range(1, len(labels) + 1)):
            return False
        for i, c in enumerate(cols):
            if any(c[j] >= c[j + 1] for j in range(len(c) - 1)):
                return False
            if i + 1 < len(cols):
                nxt = cols[i + 1]
                if any(c[j] >= nxt[j] for j in range(len(nxt))):
                    return False
        return True

    def __str__(self) -> str:
        return "/".join(" ".join(str(x) for x in r) for r in self.rows())

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows()]


EMPTY = Tableau()


def shape(t: Tableau) -> Partition:
    return t.shape()


def add_box(t: Tableau, c: int) -> Tableau:
    """Put a box labeled ``size+1`` on top of column ``c``."""
    h = t.height(c)
    ncols = len(t.columns)
    if c < 1 or c > ncols + 1:
        raise ShapeError("column %d out of range for %d columns" % (c, ncols))
    if c > 1 and t.height(c - 1) <= h:
        raise ShapeError(
            "column %d (height %d) is not taller than column %d (height %d)"
            % (c - 1, t.height(c - 1), c, h)
        )
    label = t.size + 1
    cols = list(t.columns)
    if c == ncols + 1:
        cols.append((label,))
    else:
        cols[c - 1] = cols[c - 1] + (label,)
    return Tableau(tuple(cols))


def truncate(t: Tableau, i: int) -> Tableau:
    """Keep only the boxes with labels ``<= i``."""
    if not 0 <= i <= t.size:
        raise ValueError("truncation index %d out of range" % i)
    cols = []
    for c in t.columns:
        kept = tuple(x for x in c if x <= i)
        if not kept:
            break
        cols.append(kept)
    return Tableau(tuple(cols))


def tau(t: Tableau, m: int) -> Optional[Tableau]:
    """Swap labels ``m`` and ``m+1``; None when the swap is not standard."""
    if not 1 <= m < t.size:
        raise ValueError("tau index %d out of range for size %d" % (m, t.size))
    (c1, r1), (c2, r2) = t.position(m), t.position(m + 1)
    if c1 == c2 or r1 == r2:
        return None
    swap = {m: m + 1, m + 1: m}
    out = Tableau(tuple(tuple(swap.get(x, x) for x in c) for c in t.columns))
    return out if out.is_standard() else None


@lru_cache(maxsize=None)
def _syt_of_shape(lam: Partition) -> tuple[Tableau, ...]:
    n = sum(lam)
    if n == 0:
        return (EMPTY,)
    out = []
    # remove the box holding n from each outer corner
    for j in range(len(lam)):
        below = lam[j + 1] if j + 1 < len(lam) else 0
        if lam[j] > below:
            smaller = list(lam)
            smaller[j] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            col = lam[j]
            for t in _syt_of_shape(tuple(smaller)):
                out.append(add_box(t, col))
    out.sort(key=lambda t: t.rows())
    return tuple(out)


def enumerate_syt(lam: Sequence[int]) -> list[Tableau]:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError("%r is not a partition" % (lam,))
    return list(_syt_of_shape(lam))


def enumerate_syt_n(n: int) -> list[Tableau]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for lam in partitions(n):
        out.extend(_syt_of_shape(lam))
    out.sort(key=lambda t: t.rows())
    return out
