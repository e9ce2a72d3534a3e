"""Executable checks of the growth-process formula and its supporting lemmas.

Every suite returns a ``VerificationReport``.  Membership of a vector in a
spanned subspace of the tableau space is decided by exact elimination over
Q(q); no check relies on evaluating at sample points except the explicit
positivity checks.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import csf, growth
from .growth import TableauDistribution, omega
from .intervalgraphs import (
    e_of_composition,
    enumerate_E,
    format_area,
    modular_triples,
)
from .parallel import pmap
from .qalg import ONE, ONE_POLY, Q, ZERO, ZERO_POLY, QRat, eval_at, format_poly, format_rat, qfact, qint
from .tableaux import (
    Tableau,
    add_box,
    compositions,
    enumerate_syt_n,
    format_partition,
    partitions,
    tau,
)

SAMPLE_POINTS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
DEFAULT_SEED = 0


@dataclass
class VerificationReport:
    suite: str
    n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, checked: int, failures: Iterable[dict]) -> None:
        self.checked += checked
        self.failures.extend(failures)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checked": self.checked,
            "failed": self.failed,
            "failures": self.failures,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return "%s %s n=%d checked=%d failed=%d" % (
            status,
            self.suite,
            self.n,
            self.checked,
            self.failed,
        )


def dumps(reports) -> str:
    if isinstance(reports, VerificationReport):
        return json.dumps(reports.to_json(), sort_keys=False)
    return json.dumps([r.to_json() for r in reports])


# -- subspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceSpec:
    """``kind`` "M" (spanned by the R_m vectors) or "K" (spanned by T - tau_m T)
    inside the span of tableaux of size ``n``."""

    kind: str
    m: int
    n: int

    def generators(self) -> list[TableauDistribution]:
        return list(_generators(self.kind, self.m, self.n))


def r_vector(t: Tableau, m: int) -> Optional[TableauDistribution]:
    """``T + q[L-1]/[L+1] tau_m(T)`` when ``m`` and ``m+1`` top columns
    ``c`` and ``c+L`` with ``L >= 1``; None when ``t`` is not eligible."""
    (c1, r1), (c2, r2) = t.position(m), t.position(m + 1)
    if t.height(c1) != r1 or t.height(c2) != r2 or c2 <= c1:
        return None
    gap = c2 - c1
    if gap == 1:
        return TableauDistribution.point(t)
    swapped = tau(t, m)
    assert swapped is not None, (str(t), m)
    weight = QRat(Q * qint(gap - 1), qint(gap + 1))
    return TableauDistribution(t.size, {t: ONE, swapped: weight})


@lru_cache(maxsize=None)
def _generators(kind: str, m: int, n: int) -> tuple[TableauDistribution, ...]:
    if not 1 <= m < n:
        raise ValueError("subspace index m=%d needs 1 <= m < n=%d" % (m, n))
    out = []
    for t in enumerate_syt_n(n):
        if kind == "M":
            v = r_vector(t, m)
            if v is not None:
                out.append(v)
        elif kind == "K":
            s = tau(t, m)
            if s is not None and t < s:
                out.append(TableauDistribution(n, {t: ONE, s: -ONE}))
        else:
            raise ValueError("unknown subspace kind %r" % kind)
    return tuple(out)


class _Echelon:
    """Rows keyed by pivot tableau; each row's pivot is its smallest key and
    carries coefficient 1."""

    def __init__(self):
        self.rows: dict[Tableau, dict[Tableau, QRat]] = {}

    def reduce(self, vec: dict[Tableau, QRat]) -> dict[Tableau, QRat]:
        v = dict(vec)
        while True:
            hits = [t for t in v if t in self.rows]
            if not hits:
                return v
            p = min(hits)
            c = v[p]
            for t, x in self.rows[p].items():
                y = v.get(t, ZERO) - c * x
                if y:
                    v[t] = y
                else:
                    v.pop(t, None)

    def insert(self, vec: dict[Tableau, QRat]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        self.rows[p] = {t: x * inv for t, x in v.items()}
        return True


@lru_cache(maxsize=None)
def _echelon(spec: SubspaceSpec) -> _Echelon:
    ech = _Echelon()
    for g in spec.generators():
        ech.insert(g.terms)
    return ech


def member(s: TableauDistribution, spec: SubspaceSpec) -> bool:
    """Exact membership of ``s`` in the subspace described by ``spec``."""
    if s.n != spec.n:
        raise ValueError("vector of size %d, subspace of size %d" % (s.n, spec.n))
    if s.is_zero():
        return True
    return not _echelon(spec).reduce(s.terms)


def k_member_closed_form(s: TableauDistribution, m: int) -> bool:
    """K-membership by pairing: coefficients of ``T`` and ``tau_m T`` cancel,
    and tableaux without a swap partner carry zero."""
    for t, c in s.terms.items():
        partner = tau(t, m)
        if partner is None:
            return False
        if c + s.coefficient(partner):
            return False
    return True


# -- suites ------------------------------------------------------------------


def _main_instance(e) -> tuple[int, list[dict]]:
    n = len(e)
    c = csf.c_table(e)
    chi = growth.chi_table(e)
    failures = []
    checked = 0
    for lam in partitions(n):
        checked += 1
        lhs = growth.p_lambda_lhs(e, lam, c)
        rhs = chi[lam]
        where = {"e": format_area(e), "lambda": format_partition(lam)}
        if lhs != rhs:
            failures.append(
                dict(where, check="p_lambda", lhs=format_rat(lhs), rhs=format_rat(rhs))
            )
        if c[lam](1) < 0:
            failures.append(dict(where, check="c_at_1", value=str(c[lam](1))))
        if not csf.is_coefficientwise_nonnegative(c[lam]):
            failures.append(dict(where, check="c_coefficients", value=format_poly(c[lam])))
    return checked, failures


def _check_n(n: int, lo: int = 1) -> None:
    if n < lo:
        raise ValueError("n must be at least %d" % lo)


def verify_main(n: int, threads: int = 1) -> VerificationReport:
    """Compare the e-expansion side with the tableau side for every e and shape."""
    _check_n(n)
    report = VerificationReport("main", n)
    for checked, fails in pmap(_main_instance, [(e,) for e in enumerate_E(n)], threads):
        report.merge(checked, fails)
    return report


# The three-term laws, as (1+q) * f(e) == rhs(f(e'), f(e'')).
MODULAR_LAWS: dict[str, Callable[[QRat, QRat], QRat]] = {
    "chi": lambda plus, minus: Q * plus + minus,
    "p": lambda plus, minus: plus + Q * minus,
}


def _values(target: str, e) -> dict:
    if target == "chi":
        c = csf.c_table(e)
        return {lam: QRat(c[lam]) for lam in partitions(len(e))}
    return growth.chi_table(e)


def _modular_instance(target: str, triple) -> tuple[int, list[dict]]:
    n = len(triple.e)
    law = MODULAR_LAWS[target]
    base, plus, minus = (_values(target, x) for x in triple[:3])
    failures = []
    for lam in partitions(n):
        lhs = (1 + Q) * base[lam]
        rhs = law(plus[lam], minus[lam])
        if lhs != rhs:
            failures.append(
                {
                    "triple": [format_area(x) for x in triple[:3]],
                    "kind": triple.kind,
                    "pivot": triple.pivot,
                    "lambda": format_partition(lam),
                    "lhs": format_rat(lhs),
                    "rhs": format_rat(rhs),
                }
            )
    return len(partitions(n)), failures


def verify_modular(n: int, target: str, threads: int = 1) -> VerificationReport:
    """Check the modular law for ``target`` "chi" (c_lambda) or "p" (tableau side)."""
    _check_n(n)
    if target not in MODULAR_LAWS:
        raise ValueError("target must be 'chi' or 'p'")
    report = VerificationReport("modular-" + target, n)
    args = [(target, t) for t in modular_triples(n)]
    for checked, fails in pmap(_modular_instance, args, threads):
        report.merge(checked, fails)
    return report


def _normalization_instance(mu) -> tuple[int, list[dict]]:
    n = sum(mu)
    e = e_of_composition(mu)
    chi = growth.chi_table(e)
    c = csf.c_table(e)
    sorted_mu = tuple(sorted(mu, reverse=True))
    failures = []
    for lam in partitions(n):
        hit = lam == sorted_mu
        want_chi = ONE if hit else ZERO
        want_c = ONE_POLY if hit else ZERO_POLY
        if hit:
            for part in lam:
                want_c = want_c * qfact(part)
        where = {"mu": format_partition(mu), "e": format_area(e), "lambda": format_partition(lam)}
        if chi[lam] != want_chi:
            failures.append(dict(where, check="chi", got=format_rat(chi[lam]), want=format_rat(want_chi)))
        if c[lam] != want_c:
            failures.append(dict(where, check="c", got=format_poly(c[lam]), want=format_poly(want_c)))
    return len(partitions(n)), failures



def verify_normalization(n: int, threads: int = 1) -> VerificationReport:
    """Disjoint unions of cliques: the tableau side is an indicator of the
    sorted composition and the e-expansion is a product of q-factorials."""
    _check_n(n)
    report = VerificationReport("normalization", n)
    for checked, fails in pmap(_normalization_instance, [(mu,) for mu in compositions(n)], threads):
        report.merge(checked, fails)
    return report


def verify_lemma_omega0(n: int) -> VerificationReport:
    """With threshold 0 the new box always lands at the end of the bottom row."""
    _check_n(n, 0)
    report = VerificationReport("lemma-omega0", n)
    for t in enumerate_syt_n(n):
        got = omega(TableauDistribution.point(t), 0)
        width = len(t.columns)
        want = TableauDistribution.point(add_box(t, width + 1))
        report.checked += 1
        if got != want:
            report.failures.append({"T": str(t), "got": repr(got), "want": repr(want)})
    return report


# Structural lemma instances are tuples (lemma, T, r, m); m is unused (0)
# where the lemma has no separate label index.


def _structural_instances(n: int) -> list[tuple[str, Tableau, int, int]]:
    out = []
    syt = enumerate_syt_n(n)
    for t in syt:
        for r in range(0, n + 1):
            out.append(("omega_r_squared", t, r, 0))
    for m in range(2, n):
        for g in _generators("M", m, n):
            t = min(g.terms)
            for r in range(1, m):
                out.append(("omega_preserves_M", t, r, m))
    for m in range(1, n):
        for g in _generators("K", m, n):
            t = min(g.terms)
            for r in range(1, n + 1):
                if r != m:
                    out.append(("omega_preserves_K", t, r, m))
    for r in range(1, n):
        for g in _generators("M", r, n):
            t = min(g.terms)
            out.append(("three_term_M_to_K", t, r, r))
    for t in syt:
        for r in range(1, n):
            out.append(("two_step_to_K", t, r, 0))
    return out


def _m_generator(t: Tableau, m: int) -> TableauDistribution:
    v = r_vector(t, m)
    assert v is not None
    return v


def _k_generator(t: Tableau, m: int) -> TableauDistribution:
    s = tau(t, m)
    assert s is not None
    return TableauDistribution(t.size, {t: ONE, s: -ONE})


def check_structural(lemma: str, t: Tableau, r: int, m: int) -> bool:
    n = t.size
    point = TableauDistribution.point(t)
    two = QRat(qint(2))
    if lemma == "omega_r_squared":
        s = omega(omega(point, r), r)
        return member(s, SubspaceSpec("M", n + 1, n + 2))
    if lemma == "omega_preserves_M":
        s = omega(_m_generator(t, m), r)
        return member(s, SubspaceSpec("M", m, n + 1))
    if lemma == "omega_preserves_K":
        s = omega(_k_generator(t, m), r)
        return member(s, SubspaceSpec("K", m, n + 1))
    if lemma == "three_term_M_to_K":
        g = _m_generator(t, r)
        s = two * omega(g, r) - omega(g, r + 1) - Q * omega(g, r - 1)
        return member(s, SubspaceSpec("K", r, n + 1))
    if lemma == "two_step_to_K":
        a = omega(omega(point, r), r + 1)
        b = omega(omega(point, r + 1), r + 1)
        c = omega(omega(point, r), r)
        s = two * a - b - Q * c
        return member(s, SubspaceSpec("K", n + 1, n + 2))
    raise ValueError("unknown lemma %r" % lemma)


def _structural_chunk(items) -> list[dict]:
    failures = []
    for lemma, t, r, m in items:
        if not check_structural(lemma, t, r, m):
            failures.append({"lemma": lemma, "T": str(t), "r": r, "m": m})
    return failures


def verify_lemma_structural(
    n: int,
    samples: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerificationReport:
    """Subspace memberships of the growth operators, for every tableau of size
    ``n`` and every admissible threshold and label index.

    ``samples=None`` means exhaustive up to ``n = 4`` and 100 seeded random
    instances beyond that; an explicit ``samples`` always samples.
    """
    _check_n(n)
    instances = _structural_instances(n)
    if samples is None and n > 4:
        samples = 100
    if samples is not None and samples < len(instances):
        rng = random.Random(seed)
        instances = rng.sample(instances, samples)
    report = VerificationReport("lemmas-structural", n)
    chunks = [instances[i::max(threads, 1)] for i in range(max(threads, 1))]
    # chunks are interleaved; sort failures back into instance order
    order = {(lem, str(t), r, m): i for i, (lem, t, r, m) in enumerate(instances)}
    fails = [f for part in pmap(_structural_chunk, [(c,) for c in chunks], threads) for f in part]
    fails.sort(key=lambda f: order[(f["lemma"], f["T"], f["r"], f["m"])])
    report.merge(len(instances), fails)
    return report


def _prob_instance(e) -> tuple[int, list[dict]]:
    n = len(e)
    dist = growth.omega_e(e)
    failures = []
    checked = 0
    total = dist.total()
    checked += 1
    if total != ONE:
        failures.append({"e": format_area(e), "check": "total", "got": format_rat(total)})
    for t in enumerate_syt_n(n):
        checked += 1
        chain = growth.p_T_chain(e, t)
        coef = dist.coefficient(t)
        if chain != coef:
            failures.append(
                {"e": format_area(e), "T": str(t), "check": "routes",
                 "chain": format_rat(chain), "omega": format_rat(coef)}
            )
        for x in SAMPLE_POINTS:
            if eval_at(coef, x) < 0:
                failures.append(
                    {"e": format_area(e), "T": str(t), "check": "positivity", "q": str(x)}
                )
    return checked, failures


def _phi_instance(t: Tableau, r: int) -> list[dict]:
    delta = growth.color_sequence(t, r)
    ws = [growth.phi(delta, k) for k in range(delta.l + 1)]
    failures = []
    total = ZERO
    for w in ws:
        total = total + w
    if total != ONE:
        failures.append({"T": str(t), "r": r, "check": "phi_sum", "got": format_rat(total)})
    for k, w in enumerate(ws):
        for x in SAMPLE_POINTS:
            if eval_at(w, x) <= 0:
                failures.append({"T": str(t), "r": r, "k": k, "check": "phi_positive", "q": str(x)})
    return failures


def verify_prob(n: int, threads: int = 1) -> VerificationReport:
    """Probability axioms: transition weights sum to one and are positive,
    tableau probabilities sum to one and are nonnegative, and the chain
    product agrees with the coefficient of the composed operator."""
    _check_n(n)
    report = VerificationReport("prob", n)
    for checked, fails in pmap(_prob_instance, [(e,) for e in enumerate_E(n)], threads):
        report.merge(checked, fails)
    for size in range(0, n + 1):
        for t in enumerate_syt_n(size):
            for r in range(0, size + 1):
                report.merge(1, _phi_instance(t, r))
    return report


SUITES = ("main", "modular-p", "modular-chi", "normalization", "lemmas", "prob")


def run_suite(
    name: str, n: int, seed: int = DEFAULT_SEED, threads: int = 1
) -> list[VerificationReport]:
    if name == "main":
        return [verify_main(n, threads)]
    if name == "modular-p":
        return [verify_modular(n, "p", threads)]
    if name == "modular-chi":
        return [verify_modular(n, "chi", threads)]
    if name == "normalization":
        return [verify_normalization(n, threads)]
    if name == "lemmas":
        return [verify_lemma_omega0(n), verify_lemma_structural(n, seed=seed, threads=threads)]
    if name == "prob":
        return [verify_prob(n, threads)]
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, n, seed, threads))
        return out
    raise ValueError("unknown suite %r" % name)
