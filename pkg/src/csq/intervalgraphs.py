"""Area sequences, Hessenberg functions and unit interval graphs.

Sequences are stored as 0-based tuples but every public index (pivots,
vertices, ``h(i)``) is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

AreaSequence = tuple[int, ...]
HessenbergFunction = tuple[int, ...]


class DomainError(ValueError):
    pass


def is_area_sequence(e: Sequence[int]) -> bool:
    return all(0 <= x < i + 1 for i, x in enumerate(e)) and all(
        e[i] <= e[i + 1] for i in range(len(e) - 1)
    )


def is_hessenberg(h: Sequence[int]) -> bool:
    n = len(h)
    return all(i + 1 <= x <= n for i, x in enumerate(h)) and all(
        h[i] <= h[i + 1] for i in range(n - 1)
    )


def check_area(e: Sequence[int]) -> AreaSequence:
    e = tuple(int(x) for x in e)
    if not is_area_sequence(e):
        raise DomainError("%s is not an area sequence" % format_area(e))
    return e


def parse_area(text: str) -> AreaSequence:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError("cannot parse %r as an area sequence" % text) from None
    return check_area(values)


def format_area(e: Sequence[int]) -> str:
    return ",".join(str(x) for x in e)


def to_hessenberg(e: Sequence[int]) -> HessenbergFunction:
    e = check_area(e)
    n = len(e)
    return tuple(n - e[n - i] for i in range(1, n + 1))


def to_area(h: Sequence[int]) -> AreaSequence:
    h = tuple(h)
    if not is_hessenberg(h):
        raise DomainError("%r is not a Hessenberg function" % (h,))
    n = len(h)
    return tuple(n - h[n - i] for i in range(1, n + 1))


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def neighbors_below(self, v: int) -> list[int]:
        """Vertices ``u < v`` joined to ``v``."""
        return sorted(u for (u, w) in self.edges if w == v)


def graph_of(e: Sequence[int]) -> OrientedGraph:
    h = to_hessenberg(e)
    edges = frozenset(
        (i, j) for i in range(1, len(h) + 1) for j in range(i + 1, h[i - 1] + 1)
    )
    return OrientedGraph(len(h), edges)


def union(e1: Sequence[int], e2: Sequence[int]) -> AreaSequence:
    """Area sequence of the disjoint union of the two graphs."""
    n = len(e1)
    return tuple(e1) + tuple(n + x for x in e2)


def e_of_composition(mu: Sequence[int]) -> AreaSequence:
    out: AreaSequence = ()
    for part in mu:
        if part < 1:
            raise DomainError("composition parts must be positive")
        out = union(out, (0,) * part)
    return out


def abs_e(e: Sequence[int]) -> int:
    return sum(e)


def abs_e_lambda(lam: Sequence[int]) -> int:
    total = 0
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            total += lam[i] * lam[j]
    return total


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[AreaSequence, ...]:
    out = []

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        for x in range(lo, i + 1 if i else 1):
            prefix.append(x)
            extend(prefix)
            prefix.pop()

    extend([])
    return tuple(out)


def enumerate_E(n: int) -> list[AreaSequence]:
    """All area sequences of length ``n`` in lexicographic order."""
    if n < 1:
        raise DomainError("n must be positive")
    return list(_enumerate(n))


class ModularTriple(NamedTuple):
    e: AreaSequence
    e_plus: AreaSequence  # the e' of the law, |e'| = |e| + 1
    e_minus: AreaSequence  # the e'' of the law, |e''| = |e| - 1
    kind: str  # "i" or "ii"
    pivot: int  # 1-based


def _triples_of(e: AreaSequence) -> list[ModularTriple]:
    n = len(e)

    def val(i: int) -> int:
        # e(i) with the boundary convention e(n+1) = n-1
        return n - 1 if i == n + 1 else e[i - 1]

    out = []
    for i in range(2, n + 1):
        if val(i - 1) < val(i) < val(i + 1) and val(val(i)) == val(val(i) + 1):
            plus, minus = list(e), list(e)
            plus[i - 1] += 1
            minus[i - 1] -= 1
            out.append(ModularTriple(e, tuple(plus), tuple(minus), "i", i))
    for i in range(1, n):
        if e[i] == e[i - 1] + 1 and i not in e:
            plus, minus = list(e), list(e)
            plus[i - 1] = plus[i] = e[i]
            minus[i - 1] = minus[i] = e[i - 1]
            out.append(ModularTriple(e, tuple(plus), tuple(minus), "ii", i))
    for t in out:
        assert is_area_sequence(t.e_plus) and is_area_sequence(t.e_minus), t
    return out


def modular_triples(n: int) -> list[ModularTriple]:
    """All triples of both kinds on which the modular law is imposed."""
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    seen = set()
    for e in _enumerate(n):
        for t in _triples_of(e):
            key = (t.e, t.pivot, t.kind)
            if key not in seen:
                seen.add(key)
                out.append(t)
    return out
