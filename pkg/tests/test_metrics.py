import random
from fractions import Fraction

import numpy as np
import pytest

from georack import (
    Placement,
    Srg,
    SrgCatalog,
    ValidationError,
    delay_matrix,
    disconnection_matrix,
    enumerate_single_failure_srgs,
    evaluate,
    latency,
    survivability,
)
from georack.metrics import Candidate, objective_value
from conftest import line_topology, random_topology, triangle_topology


def _two_site_setup():
    """Two gateway sites; explicit node-only SRGs so each failure kills
    exactly one site."""
    t = line_topology(gateway_at=0, n=2)
    t = type(t)(
        sites=[type(s)(id=s.id, name=s.name, lat=s.lat, lon=s.lon, gateway=True)
               for s in t.sites],
        links=t.links)
    cat = SrgCatalog([Srg(id=0, node_members=frozenset({0})),
                      Srg(id=1, node_members=frozenset({1}))])
    m = disconnection_matrix(t, cat)
    d = delay_matrix(t)
    return t, cat, m, d


class TestSurvivability:
    def test_all_racks_on_one_failing_site(self, line3):
        cat = enumerate_single_failure_srgs(line3)
        m = disconnection_matrix(line3, cat)
        s, worst = survivability(Placement((0, 0, 4)), m, 4)
        assert s == 0

    def test_even_split_over_two_sites(self):
        _, _, m, _ = _two_site_setup()
        s, worst = survivability(Placement((512, 512)), m, 1024)
        assert s == Fraction(1, 2)
        assert worst == 0  # tie between the two SRGs resolves to id 0

    def test_empty_catalog_is_one(self):
        m = np.zeros((0, 3), dtype=np.int64)
        s, worst = survivability(Placement((1, 1, 1)), m, 3)
        assert s == 1
        assert worst is None

    def test_zero_racks_rejected(self):
        m = np.zeros((1, 2), dtype=np.int64)
        with pytest.raises(ValidationError):
            survivability(Placement((0, 0)), m, 0)

    def test_exact_rational_value(self, line3):
        cat = enumerate_single_failure_srgs(line3)
        m = disconnection_matrix(line3, cat)
        s, _ = survivability(Placement((1, 1, 1)), m, 3)
        assert isinstance(s, Fraction)
        # failing the gateway site disconnects everything
        assert s == 0

    def test_scaling_invariance(self):
        _, _, m, _ = _two_site_setup()
        s1, _ = survivability(Placement((1, 3)), m, 4)
        s2, _ = survivability(Placement((10, 30)), m, 40)
        assert s1 == s2

    def test_own_failure_bound(self):
        # per-site SRGs imply s <= 1 - max_i(x_i)/R
        for seed in range(6):
            rng = random.Random(seed)
            t = random_topology(rng, max_sites=6)
            cat = enumerate_single_failure_srgs(t)
            m = disconnection_matrix(t, cat)
            x = [rng.randint(0, 3) for _ in range(t.n_sites)]
            if sum(x) == 0:
                x[0] = 1
            r = sum(x)
            s, _ = survivability(Placement(tuple(x)), m, r)
            assert s <= 1 - Fraction(max(x), r)


class TestLatency:
    def test_single_active_site(self, line3):
        d = delay_matrix(line3)
        lat, pair = latency(Placement((0, 5, 0)), d)
        assert lat == 0.0
        assert pair is None

    def test_two_active_sites(self, line3):
        d = delay_matrix(line3)
        lat, pair = latency(Placement((1, 0, 1)), d)
        assert lat == pytest.approx(d.delays[0, 2], abs=1e-12)
        assert pair == (0, 2)

    def test_triangle_all_active(self, triangle):
        d = delay_matrix(triangle, 2e8)
        lat, _ = latency(Placement((1, 1, 1)), d)
        assert lat == pytest.approx(10.0, abs=1e-9)

    def test_no_active_site_rejected(self, line3):
        d = delay_matrix(line3)
        with pytest.raises(ValidationError):
            latency(Placement((0, 0, 0)), d)

    def test_invariant_under_rack_permutation_same_support(self, line3):
        d = delay_matrix(line3)
        l1, _ = latency(Placement((3, 0, 1)), d)
        l2, _ = latency(Placement((1, 0, 3)), d)
        assert l1 == l2


class TestEvaluate:
    def test_single_site_topology(self):
        t = line_topology(n=1)
        cat = enumerate_single_failure_srgs(t)
        m = disconnection_matrix(t, cat)
        d = delay_matrix(t)
        rep = evaluate(Placement((4,)), m, d, 4)
        assert rep.latency_ms == 0.0
        assert rep.normalized_latency == 0.0
        assert rep.survivability == 0.0  # the site's own failure

    def test_removing_worst_srg_never_lowers_s(self):
        for seed in range(6):
            rng = random.Random(50 + seed)
            t = random_topology(rng, max_sites=6)
            cat = enumerate_single_failure_srgs(t)
            m = disconnection_matrix(t, cat)
            d = delay_matrix(t)
            x = [1] * t.n_sites
            rep = evaluate(Placement(tuple(x)), m, d, t.n_sites)
            if rep.worst_srg is None:
                continue
            m2 = np.delete(m, rep.worst_srg, axis=0)
            s2, _ = survivability(Placement(tuple(x)), m2, t.n_sites)
            assert s2 >= rep.survivability_exact

    def test_normalized_latency_in_unit_interval(self):
        for seed in range(6):
            rng = random.Random(80 + seed)
            t = random_topology(rng, max_sites=6)
            cat = enumerate_single_failure_srgs(t)
            m = disconnection_matrix(t, cat)
            d = delay_matrix(t)
            x = [rng.randint(0, 2) for _ in range(t.n_sites)]
            if sum(x) == 0:
                x[-1] = 1
            rep = evaluate(Placement(tuple(x)), m, d, sum(x))
            assert 0.0 <= rep.survivability <= 1.0
            assert 0.0 <= rep.normalized_latency <= 1.0


class TestCandidateOrdering:
    def test_objective_dominates(self):
        a = Candidate(x=(1, 0), s=Fraction(1), latency_ms=0.0,
                      objective=0.9, n_active=1)
        b = Candidate(x=(0, 1), s=Fraction(0), latency_ms=5.0,
                      objective=0.5, n_active=1)
        assert a.beats(b) and not b.beats(a)

    def test_tie_break_chain(self):
        base = dict(objective=0.5, s=Fraction(1, 2), latency_ms=1.0, n_active=2)
        ref = Candidate(x=(1, 1), **base)
        higher_s = Candidate(x=(2, 0), objective=0.5, s=Fraction(3, 4),
                             latency_ms=1.0, n_active=2)
        lower_l = Candidate(x=(2, 0), objective=0.5, s=Fraction(1, 2),
                            latency_ms=0.5, n_active=2)
        fewer = Candidate(x=(2, 0), objective=0.5, s=Fraction(1, 2),
                          latency_ms=1.0, n_active=1)
        lex = Candidate(x=(0, 2), **base)
        assert higher_s.beats(ref)
        assert lower_l.beats(ref)
        assert fewer.beats(ref)
        assert lex.beats(ref) and not ref.beats(lex)

    def test_beats_none(self):
        a = Candidate(x=(1,), s=Fraction(0), latency_ms=0.0,
                      objective=0.0, n_active=1)
        assert a.beats(None)


class TestObjective:
    def test_degenerate_l_max(self):
        assert objective_value(Fraction(1, 2), 0.0, 0.4, 0.0) == pytest.approx(0.3)

    def test_weighted_sum(self):
        v = objective_value(Fraction(3, 4), 5.0, 0.2, 10.0)
        assert v == pytest.approx(0.8 * 0.75 - 0.2 * 0.5, abs=1e-12)
