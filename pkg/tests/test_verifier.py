import json
import random

import pytest

from csq import growth, verifier
from csq.growth import ColorSequence, TableauDistribution, omega
from csq.qalg import ONE, Q, QPoly, QRat, qint
from csq.tableaux import Tableau, enumerate_syt_n, tau
from csq.verifier import (
    SubspaceSpec,
    VerificationReport,
    check_structural,
    k_member_closed_form,
    member,
    run_suite,
    verify_lemma_omega0,
    verify_lemma_structural,
    verify_main,
    verify_modular,
    verify_normalization,
    verify_prob,
)


def point(text):
    return TableauDistribution.point(Tableau.parse(text))


# -- membership ---------------------------------------------------------------


def test_member_examples():
    for kind in "MK":
        for n in range(2, 5):
            for m in range(1, n):
                assert member(TableauDistribution(n), SubspaceSpec(kind, m, n))
    t = Tableau.parse("1 2/3")
    s = tau(t, 2)
    diff = TableauDistribution(3, {t: 1, s: -1})
    assert member(diff, SubspaceSpec("K", 2, 3))
    assert not member(point("1 2/3"), SubspaceSpec("K", 2, 3))
    assert not member(TableauDistribution(3, {t: 1, s: 1}), SubspaceSpec("K", 2, 3))


def test_subspaces_are_proper():
    for n in range(3, 6):
        for m in range(1, n):
            for kind in "MK":
                spec = SubspaceSpec(kind, m, n)
                gens = spec.generators()
                assert all(member(g, spec) for g in gens)
                outside = [t for t in enumerate_syt_n(n) if not member(TableauDistribution.point(t), spec)]
                assert outside, spec


def test_r_vector_weight():
    # 3 atop column 1, 4 atop column 3: gap L = 2
    t = Tableau.parse("1 2 4/3")
    v = verifier.r_vector(t, 3)
    assert v[t] == ONE
    assert v[tau(t, 3)] == QRat(Q * qint(1), qint(3))
    # adjacent columns: R_m(T) = T
    assert verifier.r_vector(Tableau.parse("1 3/2"), 2) == point("1 3/2")
    # m+1 left of m: not a spanning vector
    assert verifier.r_vector(Tableau.parse("1 2/3"), 2) is None
    assert verifier.r_vector(Tableau.parse("1 2 3"), 1) == point("1 2 3")


def random_vector(rng, n, m):
    tabs = enumerate_syt_n(n)
    kind = rng.random()
    terms = {}
    if kind < 0.5:
        # built to lie in K, so both answers are exercised
        for t in rng.sample(tabs, min(3, len(tabs))):
            s = tau(t, m)
            if s is not None:
                c = QRat(QPoly([rng.randint(-3, 3), rng.randint(-3, 3)]), QPoly([1, rng.randint(0, 2)]))
                terms[t] = terms.get(t, 0) + c
                terms[s] = terms.get(s, 0) - c
    else:
        for t in rng.sample(tabs, min(3, len(tabs))):
            terms[t] = QRat(QPoly([rng.randint(-2, 2), rng.randint(-2, 2)]), QPoly([1, 1]))
    return TableauDistribution(n, terms)


def test_k_deciders_agree():
    rng = random.Random(11)
    answers = []
    for _ in range(100):
        n = rng.randint(2, 5)
        m = rng.randint(1, n - 1)
        v = random_vector(rng, n, m)
        a = member(v, SubspaceSpec("K", m, n))
        assert a == k_member_closed_form(v, m), (repr(v), m)
        answers.append(a)
    assert True in answers and False in answers


# -- suites -------------------------------------------------------------------


def test_report_json():
    r = verify_main(4)
    assert r.to_json() == {"suite": "main", "n": 4, "checked": 70, "failed": 0, "failures": []}
    assert json.loads(verifier.dumps(r)) == r.to_json()
    assert str(r) == "PASS main n=4 checked=70 failed=0"


def test_main_examples():
    r = verify_main(3)
    assert r.passed and r.checked == 15
    r = verify_main(1)
    assert r.passed and r.checked == 1
    with pytest.raises(ValueError):
        verify_main(0)


def test_modular_examples():
    from csq.growth import p_lambda_rhs

    # the type (ii) triple at n = 3 forces p_(2,1)((0,1,1)) = 1
    assert p_lambda_rhs((0, 1, 1), (2, 1)) == ONE
    assert p_lambda_rhs((0, 0, 0), (2, 1)) == 0
    assert verify_modular(3, "p").passed
    r = verify_modular(2, "p")
    assert r.passed and r.checked == 0
    assert verify_modular(4, "chi").passed
    with pytest.raises(ValueError):
        verify_modular(3, "x")


def test_normalization_examples():
    from csq.csf import c_table
    from csq.growth import chi_table
    from csq.intervalgraphs import e_of_composition
    from csq.qalg import qfact

    e21, e12, e3 = (e_of_composition(mu) for mu in [(2, 1), (1, 2), (3,)])
    assert chi_table(e21)[(2, 1)] == ONE
    assert c_table(e21)[(2, 1)] == qfact(2)
    assert chi_table(e12)[(2, 1)] == ONE
    assert chi_table(e3)[(2, 1)] == 0
    assert verify_normalization(3).passed


def test_omega0_examples():
    assert omega(point("1 2"), 0) == point("1 2 3")
    assert omega(point("1 2 3 6/4 5"), 0) == point("1 2 3 6 7/4 5")
    assert omega(TableauDistribution.point(Tableau()), 0) == point("1")
    for n in range(0, 6):
        assert verify_lemma_omega0(n).passed


def test_structural_examples():
    for r in range(3):
        assert check_structural("omega_r_squared", Tableau.parse("1 2"), r, 0)
    assert check_structural("two_step_to_K", Tableau.parse("1 2 3"), 1, 0)
    r = verify_lemma_structural(1)
    assert r.passed
    inst = verifier._structural_instances(1)
    assert all(lem != "three_term_M_to_K" for lem, *_ in inst)


@pytest.mark.parametrize("n", range(1, 5))
def test_structural_exhaustive(n):
    r = verify_lemma_structural(n)
    assert r.passed and r.checked == len(verifier._structural_instances(n))


def test_structural_sampled_is_seeded():
    a = verify_lemma_structural(4, samples=10, seed=5)
    b = verify_lemma_structural(4, samples=10, seed=5)
    assert a.checked == b.checked == 10 and a.passed and b.passed


def test_structural_memberships_can_fail():
    # one step of the operator alone does not land in K
    t = Tableau.parse("1 2/3")
    one_step = omega(TableauDistribution.point(t), 1)
    assert not member(one_step, SubspaceSpec("K", 3, 4))


@pytest.mark.parametrize("n", range(1, 6))
def test_all_suites_pass(n):
    for r in run_suite("all", n):
        assert r.passed, str(r) + " " + json.dumps(r.failures[:3])


def test_prob_suite_counts():
    r = verify_prob(3)
    assert r.passed and r.checked > 0


def test_threads_give_identical_reports():
    a = verifier.dumps(run_suite("all", 4, threads=1))
    b = verifier.dumps(run_suite("all", 4, threads=3))
    assert a == b


def test_report_merge_and_failure_flag():
    r = VerificationReport("x", 2)
    r.merge(3, [{"e": "0,0"}])
    assert r.failed and not r.passed and r.checked == 3
    assert str(r).startswith("FAIL x n=2")


# -- fault injection ----------------------------------------------------------


def failing_suites(max_n=4):
    out = set()
    for n in range(1, max_n + 1):
        for r in run_suite("all", n):
            if r.failed:
                out.add(r.suite)
    return out


def _q_squared(p):
    out = [0] * (2 * len(p.coeffs))
    for i, c in enumerate(p.coeffs):
        out[2 * i] = c
    return QPoly(out)


def mutated_phi(which):
    """The weight product with one factor evaluated at q**2 instead of q."""

    def phi_runs(a, b, k):
        l = len(a)
        power = QPoly.monomial(sum(a[:k]))
        num, den = (_q_squared(power) if which == "power" else power), QPoly([1])
        for i in range(k):
            top = qint(sum(a[i + 1:k]) + sum(b[i:k]))
            bot = qint(sum(a[i:k]) + sum(b[i:k]))
            num = num * (_q_squared(top) if which == "left-num" and i == 0 else top)
            den = den * (_q_squared(bot) if which == "left-den" and i == 0 else bot)
        for i in range(k, l):
            top = qint(sum(a[k:i + 1]) + sum(b[k:i]))
            bot = qint(sum(a[k:i + 1]) + sum(b[k:i + 1]))
            num = num * (_q_squared(top) if which == "right-num" and i == k else top)
            den = den * (_q_squared(bot) if which == "right-den" and i == k else bot)
        return QRat(num, den)

    return phi_runs


def test_unmutated_rebuild_matches_library():
    rebuilt = mutated_phi(None)
    for a, b in [((1, 1), (1, 1)), ((2,), (3,)), ((), ()), ((1, 2, 1), (2, 1, 1))]:
        for k in range(len(a) + 1):
            assert rebuilt(a, b, k) == growth._phi_runs(a, b, k)


@pytest.mark.parametrize("which", ["power", "left-num", "left-den", "right-num", "right-den"])
def test_fault_phi_factor(monkeypatch, fresh_caches, which):
    monkeypatch.setattr(growth, "_phi_runs", mutated_phi(which))
    growth.clear_caches()
    assert failing_suites() & {"main", "prob", "modular-p", "lemmas-structural"}


def test_fault_color_bit_rule(monkeypatch, fresh_caches):
    def weak_rule(t, r):
        bits = []
        for i in range(1, t.size + 2):
            top = t.top(i)
            bits.append(1 if top is not None and top >= r else 0)
        return ColorSequence(tuple(bits))

    monkeypatch.setattr(growth, "color_sequence", weak_rule)
    growth.clear_caches()
    assert "main" in failing_suites()


def test_fault_modular_q_placement(monkeypatch):
    monkeypatch.setitem(verifier.MODULAR_LAWS, "p", lambda plus, minus: Q * plus + minus)
    assert "modular-p" in failing_suites()
    monkeypatch.setitem(verifier.MODULAR_LAWS, "chi", lambda plus, minus: plus + Q * minus)
    assert "modular-chi" in failing_suites()
