"""Growth process on standard Young tableaux.

A tableau of size ``n`` grows by one box labeled ``n+1``.  Given a threshold
``r``, the boxes with labels above ``r`` are "red"; the 0/1 color sequence of
the column tops decides which columns may receive the new box and with what
weight ``phi_k`` in Q(q).  Iterating along an area sequence ``e`` gives a
Q(q)-weighted distribution on tableaux whose mass on each shape recovers the
normalized e-expansion coefficient of the chromatic quasisymmetric function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .intervalgraphs import AreaSequence, abs_e, abs_e_lambda, check_area, format_area
from .qalg import ONE, ONE_POLY, ZERO, QPoly, QRat, Scalar, format_rat, qfact, qint, qrat
from .tableaux import EMPTY, Partition, Tableau, add_box, format_partition, partitions, truncate


class ProcessError(ValueError):
    """Invalid threshold, transition index or color sequence."""


@dataclass(frozen=True)
class ColorSequence:
    """Bits ``delta_1..delta_{n+1}``; the last one is always 0.

    The run form is ``(1^b0, 0^a1, 1^b1, ..., 0^al, 1^bl, 0^a_{l+1})`` with
    ``a_i, b_i > 0`` for ``1 <= i <= l``.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or self.bits[-1] != 0 or any(b not in (0, 1) for b in self.bits):
            raise ProcessError("color sequence must be 0/1 and end in 0: %r" % (self.bits,))

    @classmethod
    def from_runs(cls, b0: int, a: Sequence[int], b: Sequence[int], a_last: int) -> "ColorSequence":
        if len(a) != len(b) or b0 < 0 or a_last < 1 or any(x < 1 for x in list(a) + list(b)):
            raise ProcessError("bad run form")
        bits = [1] * b0
        for x, y in zip(a, b):
            bits += [0] * x + [1] * y
        bits += [0] * a_last
        return cls(tuple(bits))

    def runs(self) -> tuple[int, tuple[int, ...], tuple[int, ...], int]:
        """``(b0, (a1..al), (b1..bl), a_{l+1})``."""
        lengths = []
        bits = self.bits
        i = 0
        while i < len(bits):
            j = i
            while j < len(bits) and bits[j] == bits[i]:
                j += 1
            lengths.append((bits[i], j - i))
            i = j
        b0 = 0
        if lengths[0][0] == 1:
            b0 = lengths.pop(0)[1]
        zeros = [n for bit, n in lengths if bit == 0]
        ones = [n for bit, n in lengths if bit == 1]
        return b0, tuple(zeros[:-1]), tuple(ones), zeros[-1]

    @property
    def l(self) -> int:
        return len(self.runs()[1])

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def color_sequence(t: Tableau, r: int) -> ColorSequence:
    """``delta_i = 1`` iff column ``i`` is nonempty with top label above ``r``."""
    n = t.size
    if not 0 <= r <= n:
        raise ProcessError("threshold r=%d outside 0..%d" % (r, n))
    bits = []
    for i in range(1, n + 2):
        top = t.top(i)
        bits.append(1 if top is not None and top > r else 0)
    return ColorSequence(tuple(bits))


def positions(delta: ColorSequence) -> list[int]:
    """Columns ``c_0 < ... < c_l`` that may receive the new box."""
    b0, a, b, _ = delta.runs()
    out = [b0 + 1]
    for x, y in zip(a, b):
        out.append(out[-1] + x + y)
    return out


@lru_cache(maxsize=None)
def _phi_runs(a: tuple[int, ...], b: tuple[int, ...], k: int) -> QRat:
    # a, b hold a_1..a_l and b_1..b_l at 0-based positions
    l = len(a)
    num = QPoly.monomial(sum(a[:k]))
    den = ONE_POLY
    for i in range(k):
        num = num * qint(sum(a[i + 1:k]) + sum(b[i:k]))
        den = den * qint(sum(a[i:k]) + sum(b[i:k]))
    for i in range(k, l):
        num = num * qint(sum(a[k:i + 1]) + sum(b[k:i]))
        den = den * qint(sum(a[k:i + 1]) + sum(b[k:i + 1]))
    return QRat(num, den)


def phi(delta: ColorSequence, k: int) -> QRat:
    """Weight of putting the new box at column ``positions(delta)[k]``."""
    _, a, b, _ = delta.runs()
    if not 0 <= k <= len(a):
        raise ProcessError("transition index k=%d outside 0..%d" % (k, len(a)))
    return _phi_runs(a, b, k)


def transitions(t: Tableau, r: int) -> list[tuple[Tableau, QRat]]:
    """``[(f_k(t), phi_k), ...]`` for ``k = 0..l``."""
    delta = color_sequence(t, r)
    return [(add_box(t, c), phi(delta, k)) for k, c in enumerate(positions(delta))]


def f(t: Tableau, r: int, k: int) -> Tableau:
    cols = positions(color_sequence(t, r))
    if not 0 <= k < len(cols):
        raise ProcessError("transition index k=%d outside 0..%d" % (k, len(cols) - 1))
    return add_box(t, cols[k])


class TableauDistribution:
    """Finite Q(q)-linear combination of tableaux of one size."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Tableau, Scalar]] = None):
        self.n = n
        self.terms: dict[Tableau, QRat] = {}
        if terms:
            for t, c in terms.items():
                if t.size != n:
                    raise ProcessError("tableau %s has size %d, expected %d" % (t, t.size, n))
                c = qrat(c)
                if c:
                    self.terms[t] = c

    @classmethod
    def point(cls, t: Tableau) -> "TableauDistribution":
        return cls(t.size, {t: ONE})

    def coefficient(self, t: Tableau) -> QRat:
        """The coefficient ``[S : T]``; zero for absent tableaux."""
        return self.terms.get(t, ZERO)

    __getitem__ = coefficient

    def items(self) -> Iterator[tuple[Tableau, QRat]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].rows()))

    def support(self) -> list[Tableau]:
        return sorted(self.terms, key=lambda t: t.rows())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TableauDistribution") -> None:
        if other.n != self.n:
            raise ProcessError("sizes differ: %d vs %d" % (self.n, other.n))

    def __add__(self, other: "TableauDistribution") -> "TableauDistribution":
        self._check(other)
        out = TableauDistribution(self.n)
        out.terms = dict(self.terms)
        _accumulate(out.terms, other.terms.items())
        return out

    def __neg__(self) -> "TableauDistribution":
        out = TableauDistribution(self.n)
        out.terms = {t: -c for t, c in self.terms.items()}
        return out

    def __sub__(self, other: "TableauDistribution") -> "TableauDistribution":
        return self + (-other)

    def __rmul__(self, scalar: Scalar) -> "TableauDistribution":
        s = qrat(scalar)
        out = TableauDistribution(self.n)
        if s:
            out.terms = {t: s * c for t, c in self.terms.items()}
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TableauDistribution):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def total(self) -> QRat:
        acc = ZERO
        for c in self.terms.values():
            acc = acc + c
        return acc

    def project(self, lam: Sequence[int]) -> QRat:
        """Total coefficient on tableaux of shape ``lam``."""
        lam = tuple(lam)
        acc = ZERO
        for t, c in self.terms.items():
            if t.shape() == lam:
                acc = acc + c
        return acc

    def to_json(self) -> dict[str, str]:
        return {str(t): format_rat(c) for t, c in self.items()}

    def __repr__(self) -> str:
        body = ", ".join("%s: %s" % (t, format_rat(c)) for t, c in self.items())
        return "TableauDistribution(%d, {%s})" % (self.n, body)


def _accumulate(terms: dict, items: Iterable[tuple[Tableau, QRat]]) -> None:
    for t, c in items:
        s = terms.get(t)
        s = c if s is None else s + c
        if s:
            terms[t] = s
        else:
            terms.pop(t, None)


@lru_cache(maxsize=None)
def _omega_point(t: Tableau, r: int) -> tuple[tuple[Tableau, QRat], ...]:
    return tuple(transitions(t, r))


def omega(s: TableauDistribution, r: int) -> TableauDistribution:
    """Apply the linear growth operator with threshold ``r``."""
    if not 0 <= r <= s.n:
        raise ProcessError("threshold r=%d outside 0..%d" % (r, s.n))
    out = TableauDistribution(s.n + 1)
    for t, c in s.terms.items():
        _accumulate(out.terms, ((u, c * w) for u, w in _omega_point(t, r)))
    return out


def omega_seq(s: TableauDistribution, rs: Iterable[int]) -> TableauDistribution:
    for r in rs:
        s = omega(s, r)
    return s


@lru_cache(maxsize=None)
def _omega_e(e: AreaSequence) -> TableauDistribution:
    if not e:
        return TableauDistribution.point(EMPTY)
    return omega(_omega_e(e[:-1]), e[-1])


def omega_e(e: Sequence[int]) -> TableauDistribution:
    """The distribution obtained from the empty tableau by following ``e``."""
    return _omega_e(check_area(e))


def p_T_chain(e: Sequence[int], t: Tableau) -> QRat:
    """Product of transition weights along the truncation chain of ``t``."""
    e = check_area(e)
    if t.size != len(e):
        raise ProcessError("tableau size %d does not match len(e)=%d" % (t.size, len(e)))
    acc = ONE
    for i in range(1, len(e) + 1):
        prev = truncate(t, i - 1)
        col = t.position(i)[0]
        delta = color_sequence(prev, e[i - 1])
        cols = positions(delta)
        if col not in cols:
            return ZERO
        acc = acc * phi(delta, cols.index(col))
    return acc


def p_T(e: Sequence[int], t: Tableau, route: str = "chain") -> QRat:
    """Probability of ``t`` under ``e``; ``route`` is ``"chain"`` or ``"omega"``."""
    if route == "chain":
        return p_T_chain(e, t)
    if route == "omega":
        e = check_area(e)
        if t.size != len(e):
            raise ProcessError("tableau size %d does not match len(e)=%d" % (t.size, len(e)))
        return omega_e(e).coefficient(t)
    raise ValueError("unknown route %r" % route)


def chi_table(e: Sequence[int]) -> dict[Partition, QRat]:
    """Shape marginals of ``omega_e(e)`` for every partition of ``len(e)``."""
    dist = omega_e(e)
    out = {lam: ZERO for lam in partitions(dist.n)}
    for t, c in dist.terms.items():
        lam = t.shape()
        out[lam] = out[lam] + c
    return out


def p_lambda_rhs(e: Sequence[int], lam: Sequence[int]) -> QRat:
    e = check_area(e)
    lam = tuple(lam)
    if sum(lam) != len(e):
        raise ProcessError("partition %s is not of size %d" % (format_partition(lam), len(e)))
    return omega_e(e).project(lam)


def p_lambda_lhs(e: Sequence[int], lam: Sequence[int], c=None) -> QRat:
    """``q^(|e| - |e_lam|) * c_lam / prod [lam_i]_q!`` from the e-expansion."""
    e = check_area(e)
    lam = tuple(lam)
    if c is None:
        from .csf import c_table

        c = c_table(e)
    coeff = c[lam]
    denom = ONE_POLY
    for part in lam:
        denom = denom * qfact(part)
    shift = abs_e(e) - abs_e_lambda(lam)
    value = QRat(coeff, denom)
    if shift >= 0:
        return value * QPoly.monomial(shift)
    return value / QPoly.monomial(-shift)


def ptable(e: Sequence[int]) -> dict:
    """JSON-ready probability table: per tableau, per shape and the total."""
    e = check_area(e)
    dist = omega_e(e)
    chi = chi_table(e)
    return {
        "e": format_area(e),
        "by_tableau": dist.to_json(),
        "by_partition": {
            format_partition(lam): format_rat(v) for lam, v in chi.items() if v
        },
        "sum": format_rat(dist.total()),
    }


def clear_caches() -> None:
    """Drop memoized transitions and distributions."""
    for fn in (_phi_runs, _omega_point, _omega_e):
        if hasattr(fn, "cache_clear"):
            fn.cache_clear()
