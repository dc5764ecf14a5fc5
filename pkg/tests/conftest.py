import random

import pytest

from georack import Link, Site, Topology, build_instance


def line_topology(gateway_at=0, n=3, spacing_deg=5.0):
    """n collinear sites on the equator joined in a path."""
    sites = [
        Site(id=i, name=f"s{i}", lat=0.0, lon=i * spacing_deg,
             gateway=(i == gateway_at))
        for i in range(n)
    ]
    links = [Link(a=i, b=i + 1) for i in range(n - 1)]
    return Topology(sites=sites, links=links)


def triangle_topology(all_gateways=True, ab_km=1000.0, bc_km=1000.0, ac_km=3000.0):
    sites = [
        Site(id=i, name=n, lat=0.0, lon=float(i), gateway=all_gateways or i == 0)
        for i, n in enumerate("ABC")
    ]
    links = [
        Link(a=0, b=1, length_km=ab_km),
        Link(a=1, b=2, length_km=bc_km),
        Link(a=0, b=2, length_km=ac_km),
    ]
    return Topology(sites=sites, links=links)


def random_topology(rng: random.Random, max_sites=7, max_links=12):
    """Random connected topology with at least one gateway; every site
    reaches a gateway by construction (spanning tree first)."""
    n = rng.randint(2, max_sites)
    sites = [
        Site(id=i, name=f"s{i}",
             lat=rng.uniform(-60, 60), lon=rng.uniform(-60, 60),
             gateway=False)
        for i in range(n)
    ]
    n_gw = rng.randint(1, max(1, n // 2))
    gw_ids = rng.sample(range(n), n_gw)
    sites = [
        Site(id=s.id, name=s.name, lat=s.lat, lon=s.lon, gateway=s.id in gw_ids)
        for s in sites
    ]
    pairs = []
    for i in range(1, n):
        pairs.append((rng.randint(0, i - 1), i))  # spanning tree
    extra = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (i, j) not in pairs]
    rng.shuffle(extra)
    budget = min(max_links - len(pairs), len(extra))
    if budget > 0:
        pairs += extra[:rng.randint(0, budget)]
    links = [Link(a=a, b=b) for a, b in pairs]
    return Topology(sites=sites, links=links)


def random_instance(seed: int, max_sites=7, max_links=12, max_racks=6):
    """Seeded tiny instance with uniform capacity covering the rack total."""
    rng = random.Random(seed)
    t = random_topology(rng, max_sites=max_sites, max_links=max_links)
    racks = rng.randint(1, max_racks)
    cap_choices = [z for z in (1, 2, 3, 6) if z * t.n_sites >= racks]
    cap = rng.choice(cap_choices)
    return build_instance(t, racks=racks, capacity=cap)


@pytest.fixture
def line3():
    return line_topology()


@pytest.fixture
def triangle():
    return triangle_topology()
