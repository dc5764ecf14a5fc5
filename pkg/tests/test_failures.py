import random
from collections import deque
from importlib.resources import files

import numpy as np
import pytest

from georack import (
    Link,
    Site,
    Srg,
    SrgCatalog,
    Topology,
    ValidationError,
    accessible_subnetworks,
    catalog_for,
    disconnection_matrix,
    enumerate_single_failure_srgs,
    load_topology,
)
from georack.failures import parse_srg_catalog
from conftest import line_topology, random_topology


def _bfs_alive(t, dead_nodes, dead_links):
    """Reference reachability: sites connected to a surviving gateway,
    written independently of the package's graph code."""
    adj = {i: set() for i in range(t.n_sites)}
    for k, ln in enumerate(t.links):
        if k in dead_links:
            continue
        if ln.a in dead_nodes or ln.b in dead_nodes:
            continue
        adj[ln.a].add(ln.b)
        adj[ln.b].add(ln.a)
    alive = set()
    seen = set()
    for start in range(t.n_sites):
        if start in dead_nodes or not t.sites[start].gateway or start in seen:
            continue
        q = deque([start])
        comp = set()
        while q:
            v = q.popleft()
            if v in comp or v in dead_nodes:
                continue
            comp.add(v)
            q.extend(adj[v])
        seen |= comp
        alive |= comp
    return alive


class TestEnumeration:
    def test_count_formula(self):
        t = random_topology(random.Random(0), max_sites=5, max_links=6)
        cat = enumerate_single_failure_srgs(t)
        assert len(cat) == t.n_sites + len(t.links)

    def test_no_links(self):
        t = Topology(
            sites=[Site(id=i, name=f"s{i}", lat=0, lon=i, gateway=True)
                   for i in range(3)],
            links=[])
        assert len(enumerate_single_failure_srgs(t)) == 3

    def test_rnp_scale(self):
        t = load_topology(files("georack").joinpath("data/rnp.json"))
        assert (t.n_sites, len(t.links)) == (27, 33)
        assert len(enumerate_single_failure_srgs(t)) == 60

    def test_ordering_nodes_then_links(self):
        t = line_topology(n=3)
        cat = enumerate_single_failure_srgs(t)
        assert [s.node_members for s in cat][:3] == [
            frozenset({0}), frozenset({1}), frozenset({2})]
        assert [s.link_members for s in cat][3:] == [
            frozenset({0}), frozenset({1})]


class TestAccessibleSubnetworks:
    def test_link_failure_splits_line(self, line3):
        # g - a - b with gateway at g; cutting (a, b) strands b
        comps = accessible_subnetworks(line3, Srg(id=0, link_members=frozenset({1})))
        assert (frozenset({0, 1}), True) in comps.components
        assert (frozenset({2}), False) in comps.components

    def test_only_gateway_fails(self, line3):
        comps = accessible_subnetworks(line3, Srg(id=0, node_members=frozenset({0})))
        assert all(not ok for _, ok in comps.components)
        assert comps.accessible_sites() == frozenset()

    def test_ring_survives_link_cut(self):
        sites = [Site(id=i, name=f"s{i}", lat=0, lon=i, gateway=(i == 0))
                 for i in range(4)]
        links = [Link(a=i, b=(i + 1) % 4) for i in range(4)]
        t = Topology(sites=sites, links=links)
        comps = accessible_subnetworks(t, Srg(id=0, link_members=frozenset({0})))
        assert len(comps.components) == 1
        assert comps.components[0][1]

    def test_unknown_member_rejected(self, line3):
        with pytest.raises(ValidationError):
            accessible_subnetworks(line3, Srg(id=0, node_members=frozenset({9})))


class TestDisconnectionMatrix:
    def test_node_failure_row(self, line3):
        cat = SrgCatalog([Srg(id=0, node_members=frozenset({1}))])
        m = disconnection_matrix(line3, cat)
        assert m.tolist() == [[1, 0, 0]]

    def test_link_failure_row(self, line3):
        cat = SrgCatalog([Srg(id=0, link_members=frozenset({0}))])
        m = disconnection_matrix(line3, cat)
        assert m.tolist() == [[1, 0, 0]]

    def test_member_sites_always_disconnected(self):
        for seed in range(6):
            t = random_topology(random.Random(seed), max_sites=8)
            cat = enumerate_single_failure_srgs(t)
            m = disconnection_matrix(t, cat)
            for f in cat:
                for i in f.node_members:
                    assert m[f.id, i] == 0

    def test_empty_srg_gives_all_ones(self, line3):
        cat = SrgCatalog([Srg(id=0)])
        m = disconnection_matrix(line3, cat)
        assert m.tolist() == [[1, 1, 1]]

    def test_redundant_ring_with_two_gateways(self):
        sites = [Site(id=i, name=f"s{i}", lat=0, lon=i,
                      gateway=i in (0, 2)) for i in range(4)]
        links = [Link(a=i, b=(i + 1) % 4) for i in range(4)]
        t = Topology(sites=sites, links=links)
        cat = SrgCatalog([Srg(id=0, link_members=frozenset({0}))])
        assert disconnection_matrix(t, cat).tolist() == [[1, 1, 1, 1]]

    def test_matches_reference_bfs(self):
        for seed in range(12):
            t = random_topology(random.Random(200 + seed), max_sites=12,
                                max_links=18)
            cat = enumerate_single_failure_srgs(t)
            m = disconnection_matrix(t, cat)
            for f in cat:
                alive = _bfs_alive(t, f.node_members, f.link_members)
                for i in range(t.n_sites):
                    assert m[f.id, i] == (1 if i in alive else 0), (seed, f.id, i)

    def test_adding_link_is_monotone_for_node_srgs(self):
        for seed in range(8):
            rng = random.Random(300 + seed)
            t = random_topology(rng, max_sites=7, max_links=8)
            existing = {ln.pair for ln in t.links}
            candidates = [(i, j) for i in range(t.n_sites)
                          for j in range(i + 1, t.n_sites)
                          if (i, j) not in existing]
            if not candidates:
                continue
            extra = rng.choice(candidates)
            t2 = Topology(sites=t.sites, links=t.links + [Link(*extra)])
            cat = SrgCatalog([Srg(id=i, node_members=frozenset({i}))
                              for i in range(t.n_sites)])
            m1 = disconnection_matrix(t, cat)
            m2 = disconnection_matrix(t2, cat)
            assert (m2 >= m1).all()


class TestExplicitCatalog:
    def test_parse_block(self, line3):
        raw = [{"nodes": [1]}, {"links": [0, 1]}, {"nodes": [0], "links": [0]}]
        cat = parse_srg_catalog(line3, raw)
        assert len(cat) == 3
        assert cat.srgs[1].link_members == frozenset({0, 1})

    def test_empty_entry_rejected(self, line3):
        with pytest.raises(ValidationError):
            parse_srg_catalog(line3, [{}])

    def test_unknown_key_rejected(self, line3):
        with pytest.raises(ValidationError):
            parse_srg_catalog(line3, [{"nodes": [0], "probability": 0.1}])

    def test_catalog_for_prefers_explicit_srgs(self):
        doc = {
            "sites": [
                {"id": 0, "name": "g", "lat": 0.0, "lon": 0.0, "gateway": True},
                {"id": 1, "name": "a", "lat": 0.0, "lon": 5.0, "gateway": False},
            ],
            "links": [{"a": 0, "b": 1}],
            "srgs": [{"nodes": [0, 1]}],
        }
        from georack import parse_topology
        t = parse_topology(doc)
        cat = catalog_for(t)
        assert len(cat) == 1
        assert cat.srgs[0].node_members == frozenset({0, 1})

    def test_multi_element_srg(self, line3):
        # both links failing together isolates everything but the gateway
        cat = SrgCatalog([Srg(id=0, link_members=frozenset({0, 1}))])
        m = disconnection_matrix(line3, cat)
        assert m.tolist() == [[1, 0, 0]]
