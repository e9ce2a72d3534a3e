"""Acceptance criteria 1-10, one test each.

Every test records one ``ACCEPTANCE <k> PASS|FAIL`` line; the lines are
printed in a section after the pytest run and also echoed as they happen
under ``pytest -s``.
"""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from csq import csf, growth, verifier
from csq.growth import ColorSequence, TableauDistribution, phi
from csq.intervalgraphs import e_of_composition, enumerate_E, modular_triples
from csq.qalg import ONE, Q, QPoly, QRat, ZERO, eval_at, qfact, qint
from csq.tableaux import compositions, enumerate_syt_n, partitions, tau
from csq.verifier import SAMPLE_POINTS, SubspaceSpec, k_member_closed_form, member

_details = []


def note(text):
    _details.append(text)


@contextmanager
def criterion(k, title, budget=None):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        if status == "PASS" and budget is not None and elapsed > budget:
            status = "FAIL"
        line = "ACCEPTANCE %2d %s  %s (%.1fs)" % (k, status, title, elapsed)
        for text in [line] + _details:
            ACCEPTANCE_LINES.append(text)
            print(text)
        _details.clear()
    assert budget is None or elapsed <= budget, "over the %ss budget" % budget


def test_1_worked_example_weights():
    with criterion(1, "transition weights of the worked example", budget=5):
        delta = ColorSequence((0, 1, 0, 1, 0, 0, 0))
        two, three, four = qint(2), qint(3), qint(4)
        want = [QRat(three, two * four), QRat(Q, two * two), QRat(Q * Q * three, two * four)]
        got = [phi(delta, k) for k in range(3)]
        assert got == want
        assert sum(got, ZERO) == ONE


def test_2_main_identity():
    with criterion(2, "main identity, every e and shape, n <= 6", budget=600):
        for n in range(1, 7):
            start = time.perf_counter()
            r = verifier.verify_main(n)
            assert r.passed, r.failures[:3]
            assert r.checked == len(enumerate_E(n)) * len(partitions(n))
            if n == 5:
                assert time.perf_counter() - start < 30


def test_3_nonnegativity():
    with criterion(3, "c(e;1) >= 0 and coefficientwise nonnegative, n <= 6"):
        for n in range(1, 7):
            bad = 0
            total = 0
            for e in enumerate_E(n):
                c = csf.c_table(e)
                for lam in partitions(n):
                    total += 1
                    if c[lam](1) < 0 or not csf.is_coefficientwise_nonnegative(c[lam]):
                        bad += 1
            note("  n=%d: %d coefficients, %d negative" % (n, total, bad))
            assert bad == 0


def test_4_complete_graph():
    with criterion(4, "complete graph expansion is [n]!, n <= 6"):
        for n in range(1, 7):
            assert csf.c_table((0,) * n).nonzero() == {(n,): qfact(n)}


def test_5_normalization():
    with criterion(5, "shape indicator on disjoint cliques, n <= 6"):
        for n in range(1, 7):
            for mu in compositions(n):
                chi = growth.chi_table(e_of_composition(mu))
                target = tuple(sorted(mu, reverse=True))
                for lam in partitions(n):
                    assert chi[lam] == (ONE if lam == target else ZERO), (mu, lam)
            assert verifier.verify_normalization(n).passed


def test_6_modular_laws():
    with criterion(6, "both modular laws on all triples, n <= 6"):
        for n in range(1, 7):
            for target in ("chi", "p"):
                r = verifier.verify_modular(n, target)
                assert r.passed, r.failures[:3]
                assert r.checked == len(modular_triples(n)) * len(partitions(n))


def test_7_probability_axioms():
    with criterion(7, "tableau probabilities sum to 1 and are >= 0, n <= 6"):
        for n in range(1, 7):
            for e in enumerate_E(n):
                dist = growth.omega_e(e)
                assert dist.total() == ONE
                for t, c in dist.terms.items():
                    assert all(eval_at(c, x) >= 0 for x in SAMPLE_POINTS), (e, str(t))


def test_8_structural_lemmas():
    with criterion(8, "subspace lemmas, exhaustive n <= 4, 100 seeded at n = 5", budget=300):
        for n in range(1, 5):
            r = verifier.verify_lemma_omega0(n)
            assert r.passed
            r = verifier.verify_lemma_structural(n)
            assert r.passed, r.failures[:3]
            assert r.checked == len(verifier._structural_instances(n))
        assert verifier.verify_lemma_omega0(5).passed
        r = verifier.verify_lemma_structural(5, seed=verifier.DEFAULT_SEED)
        assert r.passed and r.checked == 100


def _random_k_vector(rng, n, m):
    tabs = enumerate_syt_n(n)
    terms = {}
    if rng.random() < 0.5:
        for t in rng.sample(tabs, min(3, len(tabs))):
            s = tau(t, m)
            if s is not None:
                c = QRat(QPoly([rng.randint(-3, 3), 1]), QPoly([1, rng.randint(0, 2)]))
                terms[t] = terms.get(t, ZERO) + c
                terms[s] = terms.get(s, ZERO) - c
    else:
        for t in rng.sample(tabs, min(2, len(tabs))):
            terms[t] = QRat(rng.randint(1, 3))
    return TableauDistribution(n, terms)


def test_9_oracle_agreement():
    with criterion(9, "chain vs operator route n <= 6; two K deciders on 100 vectors"):
        for n in range(1, 7):
            for e in enumerate_E(n):
                dist = growth.omega_e(e)
                for t in enumerate_syt_n(n):
                    assert growth.p_T_chain(e, t) == dist[t], (e, str(t))
        rng = random.Random(verifier.DEFAULT_SEED)
        for _ in range(100):
            n = rng.randint(2, 5)
            m = rng.randint(1, n - 1)
            v = _random_k_vector(rng, n, m)
            assert member(v, SubspaceSpec("K", m, n)) == k_member_closed_form(v, m)


def _failing(max_n=4):
    out = set()
    for n in range(1, max_n + 1):
        out.update(r.suite for r in verifier.run_suite("all", n) if r.failed)
    return out


def test_10_fault_injection(monkeypatch):
    with criterion(10, "three mutations are each caught at n <= 4"):
        base = growth._phi_runs
        monkeypatch.setattr(
            growth, "_phi_runs", lambda a, b, k: base(a, b, k) * QPoly.monomial(sum(a[:k]))
        )
        growth.clear_caches()
        caught_phi = _failing()
        monkeypatch.undo()

        def weak_rule(t, r):
            return ColorSequence(tuple(
                1 if t.top(i) is not None and t.top(i) >= r else 0 for i in range(1, t.size + 2)
            ))

        monkeypatch.setattr(growth, "color_sequence", weak_rule)
        growth.clear_caches()
        caught_bits = _failing()
        monkeypatch.undo()
        growth.clear_caches()

        monkeypatch.setitem(verifier.MODULAR_LAWS, "p", lambda plus, minus: Q * plus + minus)
        caught_law = _failing()
        monkeypatch.undo()

        note("  phi exponent: %s" % sorted(caught_phi))
        note("  bit rule:     %s" % sorted(caught_bits))
        note("  q placement:  %s" % sorted(caught_law))
        assert caught_phi and caught_bits and caught_law
        assert not _failing()
