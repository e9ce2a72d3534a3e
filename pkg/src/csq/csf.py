"""Chromatic quasisymmetric functions by brute force.

Proper colorings of a unit interval graph are enumerated by backtracking
with ``n`` colors (enough for a degree-``n`` symmetric function), tallied by
exponent vector, and the monomial coefficients are then converted to the
elementary basis by exact integer elimination.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Optional, Sequence

from .parallel import pmap
from .intervalgraphs import AreaSequence, OrientedGraph, check_area, graph_of
from .qalg import ZERO_POLY, QPoly, format_poly, parse_poly
from .tableaux import Partition, format_partition, parse_partition, partitions


class ConsistencyError(ArithmeticError):
    """An exact computation produced something that cannot be right."""


class ColoringError(ValueError):
    pass


@dataclass
class ExpansionTable:
    """Coefficients of a degree-``n`` symmetric function in one basis.

    ``basis`` is ``"m"`` (monomial) or ``"e"`` (elementary).  Missing keys
    mean a zero coefficient.
    """

    n: int
    basis: str
    coefficients: dict[Partition, QPoly] = field(default_factory=dict)

    def __getitem__(self, lam: Sequence[int]) -> QPoly:
        return self.coefficients.get(tuple(lam), ZERO_POLY)

    def nonzero(self) -> dict[Partition, QPoly]:
        return {
            lam: self.coefficients[lam]
            for lam in partitions(self.n)
            if not self[lam].is_zero()
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "coefficients": {
                format_partition(lam): format_poly(c)
                for lam, c in self.nonzero().items()
            },
        }

    @classmethod
    def from_json(cls, data) -> "ExpansionTable":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = {
            parse_partition(k): parse_poly(v) for k, v in data["coefficients"].items()
        }
        return cls(int(data["n"]), data["basis"], coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpansionTable):
            return NotImplemented
        return (self.n, self.basis, self.nonzero()) == (
            other.n,
            other.basis,
            other.nonzero(),
        )


def asc(graph: OrientedGraph, coloring: Sequence[int]) -> int:
    """Number of edges ``u -> v`` with ``coloring[u] < coloring[v]``."""
    total = 0
    for u, v in graph.edges:
        cu, cv = coloring[u - 1], coloring[v - 1]
        if cu == cv:
            raise ColoringError("coloring is not proper on edge %d->%d" % (u, v))
        if cu < cv:
            total += 1
    return total


def _colorings(graph: OrientedGraph, ncolors: int, first: Optional[int] = None):
    """Yield ``(coloring, ascents)`` for proper colorings, vertex by vertex.

    ``first`` pins the color of vertex 1 so work can be split by it.
    """
    n = graph.n
    below = [graph.neighbors_below(v) for v in range(1, n + 1)]
    kappa = [0] * n

    def rec(v: int, ascents: int):
        if v == n:
            yield kappa, ascents
            return
        choices = range(1, ncolors + 1)
        if v == 0 and first is not None:
            choices = (first,)
        for c in choices:
            gain = 0
            for u in below[v]:
                cu = kappa[u - 1]
                if cu == c:
                    break
                if cu < c:
                    gain += 1
            else:
                kappa[v] = c
                yield from rec(v + 1, ascents + gain)

    yield from rec(0, 0)


def count_colorings(graph: OrientedGraph, k: int) -> int:
    return sum(1 for _ in _colorings(graph, k))


def _tally_part(e: AreaSequence, first: Optional[int]) -> dict[tuple[int, ...], list[int]]:
    graph = graph_of(e)
    n = graph.n
    width = len(graph.edges) + 1
    out: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0] * width)
    for kappa, a in _colorings(graph, n, first):
        content = [0] * n
        for c in kappa:
            content[c - 1] += 1
        out[tuple(content)][a] += 1
    return dict(out)


def exponent_tallies(
    e: Sequence[int], threads: int = 1
) -> dict[tuple[int, ...], QPoly]:
    """Sum of ``q**asc`` over proper colorings, keyed by exponent vector.

    The work is split by the color of vertex 1; merging is by addition so
    the result does not depend on ``threads``.
    """
    e = check_area(e)
    n = len(e)
    parts = pmap(_tally_part, [(e, c) for c in range(1, n + 1)], threads)
    merged: dict[tuple[int, ...], list[int]] = {}
    for part in parts:
        for key, counts in part.items():
            acc = merged.setdefault(key, [0] * len(counts))
            for i, x in enumerate(counts):
                acc[i] += x
    return {k: QPoly(v) for k, v in sorted(merged.items())}


def monomial_expansion_from_tallies(
    n: int, tallies: dict[tuple[int, ...], QPoly]
) -> ExpansionTable:
    coeffs = {}
    for lam in partitions(n):
        key = tuple(lam) + (0,) * (n - len(lam))
        coeffs[lam] = tallies.get(key, ZERO_POLY)
    return ExpansionTable(n, "m", coeffs)


@lru_cache(maxsize=None)
def _monomial_expansion(e: AreaSequence, threads: int) -> ExpansionTable:
    return monomial_expansion_from_tallies(len(e), exponent_tallies(e, threads))


def monomial_expansion(e: Sequence[int], threads: int = 1) -> ExpansionTable:
    """Coefficients of ``m_lambda`` in the chromatic quasisymmetric function."""
    t = _monomial_expansion(check_area(e), threads)
    return ExpansionTable(t.n, t.basis, dict(t.coefficients))


def symmetry_defects(
    n: int, tallies: dict[tuple[int, ...], QPoly]
) -> list[tuple[tuple[int, ...], QPoly, QPoly]]:
    """Exponent vectors whose tally differs from their sorted rearrangement."""
    bad = []
    for key in tallies:
        if sum(key) != n:
            bad.append((key, tallies[key], ZERO_POLY))
    for lam in partitions(n):
        base = tuple(lam) + (0,) * (n - len(lam))
        ref = tallies.get(base, ZERO_POLY)
        for key in set(permutations(base)):
            got = tallies.get(key, ZERO_POLY)
            if got != ref:
                bad.append((key, got, ref))
    return bad


# -- elementary basis --------------------------------------------------------


def _elementary_poly(k: int, nvars: int) -> dict[tuple[int, ...], int]:
    out = {}

    def rec(start: int, left: int, vec: list[int]) -> None:
        if left == 0:
            out[tuple(vec)] = 1
            return
        for i in range(start, nvars - left + 1):
            vec[i] = 1
            rec(i + 1, left - 1, vec)
            vec[i] = 0

    rec(0, k, [0] * nvars)
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for ka, va in a.items():
        for kb, vb in b.items():
            out[tuple(x + y for x, y in zip(ka, kb))] += va * vb
    return dict(out)


@lru_cache(maxsize=None)
def transition_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """``M[i][j]`` = coefficient of ``m_{mu_i}`` in ``e_{lambda_j}``.

    Rows and columns both follow ``partitions(n)``; computed by expanding
    each product of elementary polynomials in ``n`` variables.
    """
    parts = partitions(n)
    cols = []
    for lam in parts:
        poly = {(0,) * n: 1}
        for k in lam:
            poly = _poly_mul(poly, _elementary_poly(k, n))
        cols.append(
            [poly.get(tuple(mu) + (0,) * (n - len(mu)), 0) for mu in parts]
        )
    return tuple(tuple(cols[j][i] for j in range(len(parts))) for i in range(len(parts)))


def solve_integer_system(
    matrix: Sequence[Sequence[int]], rhs: Sequence[QPoly]
) -> list[QPoly]:
    """Solve ``matrix @ x = rhs`` for ``x`` in Z[q] by Bareiss elimination.

    Raises ``ConsistencyError`` when the matrix is singular or the solution
    has non-integral coefficients.
    """
    size = len(matrix)
    a = [list(row) for row in matrix]
    b = list(rhs)
    prev = 1
    for k in range(size):
        piv = next((i for i in range(k, size) if a[i][k] != 0), None)
        if piv is None:
            raise ConsistencyError("singular transition matrix")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            b[k], b[piv] = b[piv], b[k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            b[i] = (b[i] * a[k][k] - b[k] * a[i][k]).divide_int(prev)
            a[i][k] = 0
        prev = a[k][k]
    x: list[QPoly] = [ZERO_POLY] * size
    for i in range(size - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, size):
            if a[i][j]:
                acc = acc - x[j] * a[i][j]
        try:
            x[i] = acc.divide_int(a[i][i])
        except ArithmeticError:
            raise ConsistencyError("e-expansion coefficient is not in Z[q]") from None
    return x


def e_expansion(table: ExpansionTable) -> ExpansionTable:
    """Convert a monomial-basis table to elementary-basis coefficients."""
    if table.basis != "m":
        raise ValueError("expected a monomial-basis table")
    n = table.n
    parts = partitions(n)
    sol = solve_integer_system(transition_matrix(n), [table[mu] for mu in parts])
    return ExpansionTable(n, "e", dict(zip(parts, sol)))


def to_monomial(table: ExpansionTable) -> ExpansionTable:
    """Expand an elementary-basis table back into the monomial basis."""
    if table.basis != "e":
        raise ValueError("expected an elementary-basis table")
    n = table.n
    parts = partitions(n)
    mat = transition_matrix(n)
    out = {}
    for i, mu in enumerate(parts):
        acc = ZERO_POLY
        for j, lam in enumerate(parts):
            if mat[i][j]:
                acc = acc + table[lam] * mat[i][j]
        out[mu] = acc
    return ExpansionTable(n, "m", out)


@lru_cache(maxsize=None)
def _c_table(e: AreaSequence) -> ExpansionTable:
    return e_expansion(_monomial_expansion(e, 1))


def c_table(e: Sequence[int]) -> ExpansionTable:
    """Elementary-basis coefficients ``c_lambda(e; q)``, memoized per ``e``."""
    t = _c_table(check_area(e))
    return ExpansionTable(t.n, t.basis, dict(t.coefficients))


def coloring_count_check(e: Sequence[int], k: int) -> bool:
    """Compare the e-expansion at ``q=1`` on ``k`` variables with a direct count."""
    e = check_area(e)
    n = len(e)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    c = c_table(e)
    predicted = 0
    for lam in partitions(n):
        prod = 1
        for part in lam:
            prod *= comb(k, part)
        predicted += c[lam](1) * prod
    return predicted == count_colorings(graph_of(e), k)


def is_coefficientwise_nonnegative(p: QPoly) -> bool:
    return all(x >= 0 for x in p.coeffs)

